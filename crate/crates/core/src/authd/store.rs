use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use super::{AuthdError, UserRecord};

/// Users in registration order, optionally backed by an append-only
/// JSON-lines log (one [`UserRecord`] per line).
#[derive(Debug, Default)]
pub struct Store {
    path: Option<PathBuf>,
    records: Vec<UserRecord>,
    index: HashMap<String, usize>,
}

impl Store {
    pub fn in_memory() -> Self {
        Store::default()
    }

    /// Replays the log at `path` (a missing file is an empty store); later
    /// inserts are appended to it.
    pub fn open(path: impl Into<PathBuf>) -> Result<Self, AuthdError> {
        let path = path.into();
        let mut store = if path.exists() { Store::load(&path)? } else { Store::default() };
        store.path = Some(path);
        Ok(store)
    }

    /// Reads a log without attaching to it.
    pub fn load(path: &Path) -> Result<Self, AuthdError> {
        let file = File::open(path).map_err(|e| AuthdError::Io(e.to_string()))?;
        let mut store = Store::default();
        for (n, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| AuthdError::Io(e.to_string()))?;
            if line.trim().is_empty() {
                continue;
            }
            let corrupt = |msg: String| AuthdError::Store { line: n + 1, msg };
            let rec: UserRecord = serde_json::from_str(&line).map_err(|e| corrupt(e.to_string()))?;
            if rec.rounds.is_empty() {
                return Err(corrupt("record has no rounds".into()));
            }
            if store.index.contains_key(&rec.user_id) {
                return Err(corrupt(format!("user `{}` appears twice", rec.user_id)));
            }
            store.push(rec);
        }
        Ok(store)
    }

    /// Writes every record to `path`, replacing its contents.
    pub fn save(&self, path: &Path) -> Result<(), AuthdError> {
        fs::write(path, self.to_log()).map_err(|e| AuthdError::Io(e.to_string()))
    }

    pub fn to_log(&self) -> String {
        self.records.iter().map(|r| serde_json::to_string(r).expect("records serialize") + "\n").collect()
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, user_id: &str) -> Option<&UserRecord> {
        self.index.get(user_id).map(|&i| &self.records[i])
    }

    pub fn records(&self) -> &[UserRecord] {
        &self.records
    }

    /// Appends to the log first, so a failed write leaves memory unchanged.
    pub fn insert(&mut self, rec: UserRecord) -> Result<(), AuthdError> {
        if self.index.contains_key(&rec.user_id) {
            return Err(AuthdError::Conflict(rec.user_id));
        }
        if let Some(path) = &self.path {
            let line = serde_json::to_string(&rec).expect("records serialize") + "\n";
            let mut f =
                OpenOptions::new().create(true).append(true).open(path).map_err(|e| AuthdError::Io(e.to_string()))?;
            f.write_all(line.as_bytes()).map_err(|e| AuthdError::Io(e.to_string()))?;
        }
        self.push(rec);
        Ok(())
    }

    fn push(&mut self, rec: UserRecord) {
        self.index.insert(rec.user_id.clone(), self.records.len());
        self.records.push(rec);
    }
}
