//! Multi-round authentication: users register a sequence of locks, open a
//! session, and submit one key per round.
//!
//! Per-session state changes are serialised by a mutex on each session; the
//! user store has a single writer and many readers.

mod http;
mod store;

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, RwLock};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    canonical_code, graph_matrix, parse_graph_text, CanonicalCode, Graph, GraphMatrix, Rule, TopsnutGpw,
};
use crate::keylock::{authenticate, validate_lock, AuthRule, KeyLockPair};

pub use http::{router, serve};
pub use store::Store;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuthdError {
    #[error("user `{0}` already exists")]
    Conflict(String),
    #[error("no user `{0}`")]
    UnknownUser(String),
    #[error("no session `{0}`")]
    UnknownSession(String),
    #[error("session `{0}` is closed")]
    SessionClosed(String),
    #[error("{0}")]
    Validation(String),
    #[error("store line {line}: {msg}")]
    Store { line: usize, msg: String },
    #[error("store i/o: {0}")]
    Io(String),
}

/// One stored round: the lock as its matrix, and how a key must open it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoredRound {
    pub lock: Vec<Vec<i64>>,
    pub rule: AuthRule,
}

impl StoredRound {
    pub fn new(lock: &TopsnutGpw, rule: AuthRule) -> Self {
        StoredRound { lock: graph_matrix(lock).rows(), rule }
    }

    pub fn lock(&self) -> Result<TopsnutGpw, AuthdError> {
        let m = GraphMatrix::from_rows(self.lock.clone()).map_err(|e| AuthdError::Validation(e.to_string()))?;
        m.to_gpw().map_err(|e| AuthdError::Validation(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UserRecord {
    pub user_id: String,
    pub rounds: Vec<StoredRound>,
    /// Seconds since the Unix epoch.
    pub created_at: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SessionState {
    Active,
    Accepted,
    Rejected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Session {
    pub session_id: String,
    pub user_id: String,
    /// 1-based.
    pub current_round: usize,
    pub total_rounds: usize,
    pub state: SessionState,
    pub attempts: u32,
}

/// What the user is shown for a round: optionally an unlabelled topology to
/// label, drawn in turn from the configured template pool.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Challenge {
    pub round: usize,
    pub template: Option<Graph>,
    /// Position in the template rotation this challenge used.
    pub rotation: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RoundOutcome {
    Continue(Challenge),
    Accepted,
    Rejected,
}

pub struct Authd {
    store: RwLock<Store>,
    sessions: Mutex<HashMap<String, Arc<Mutex<Session>>>>,
    templates: Vec<(CanonicalCode, Graph)>,
    rotation: AtomicUsize,
}

fn topology_code(g: &Graph) -> Result<CanonicalCode, AuthdError> {
    canonical_code(&TopsnutGpw::unlabelled(g.clone())).map_err(|e| AuthdError::Validation(e.to_string()))
}

/// Template pool file: graph-format blocks separated by `---` lines.
pub fn parse_template_pool(text: &str) -> Result<Vec<Graph>, AuthdError> {
    text.split("\n---")
        .map(|b| b.trim_start_matches("---"))
        .filter(|b| b.lines().any(|l| !l.trim().is_empty() && !l.trim().starts_with('#')))
        .map(|b| {
            parse_graph_text(b, Rule::Free).map(|g| g.into_parts().0).map_err(|e| AuthdError::Validation(e.to_string()))
        })
        .collect()
}

impl Authd {
    pub fn new(store: Store, templates: Vec<Graph>) -> Result<Self, AuthdError> {
        let templates =
            templates.into_iter().map(|g| Ok((topology_code(&g)?, g))).collect::<Result<_, AuthdError>>()?;
        Ok(Authd {
            store: RwLock::new(store),
            sessions: Mutex::new(HashMap::new()),
            templates,
            rotation: AtomicUsize::new(0),
        })
    }

    pub fn user_count(&self) -> usize {
        self.store.read().unwrap().len()
    }

    pub fn user(&self, user_id: &str) -> Option<UserRecord> {
        self.store.read().unwrap().get(user_id).cloned()
    }

    pub fn register(&self, user_id: &str, rounds: &[(TopsnutGpw, AuthRule)]) -> Result<UserRecord, AuthdError> {
        if user_id.is_empty() {
            return Err(AuthdError::Validation("user id is empty".into()));
        }
        if rounds.is_empty() {
            return Err(AuthdError::Validation("at least one round is required".into()));
        }
        for (i, (lock, rule)) in rounds.iter().enumerate() {
            validate_lock(lock, *rule).map_err(|e| AuthdError::Validation(format!("round {}: {e}", i + 1)))?;
        }
        let created_at = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
        let rec = UserRecord {
            user_id: user_id.to_string(),
            rounds: rounds.iter().map(|(l, r)| StoredRound::new(l, *r)).collect(),
            created_at,
        };
        self.store.write().unwrap().insert(rec.clone())?;
        Ok(rec)
    }

    fn challenge(&self, round: usize, lock: &TopsnutGpw) -> Result<Challenge, AuthdError> {
        let rotation = self.rotation.fetch_add(1, Ordering::SeqCst);
        let code = topology_code(lock.graph())?;
        let pool: Vec<&Graph> = self.templates.iter().filter(|(c, _)| *c == code).map(|(_, g)| g).collect();
        let template = (!pool.is_empty()).then(|| pool[rotation % pool.len()].clone());
        Ok(Challenge { round, template, rotation })
    }

    fn round(&self, user_id: &str, round: usize) -> Result<StoredRound, AuthdError> {
        let store = self.store.read().unwrap();
        let rec = store.get(user_id).ok_or_else(|| AuthdError::UnknownUser(user_id.into()))?;
        Ok(rec.rounds[round - 1].clone())
    }

    pub fn start_session(&self, user_id: &str) -> Result<(Session, Challenge), AuthdError> {
        let total_rounds = {
            let store = self.store.read().unwrap();
            let rec = store.get(user_id).ok_or_else(|| AuthdError::UnknownUser(user_id.into()))?;
            rec.rounds.len()
        };
        let first = self.round(user_id, 1)?;
        let challenge = self.challenge(1, &first.lock()?)?;
        let session = Session {
            session_id: format!("{:032x}", rand::random::<u128>()),
            user_id: user_id.to_string(),
            current_round: 1,
            total_rounds,
            state: SessionState::Active,
            attempts: 0,
        };
        self.sessions.lock().unwrap().insert(session.session_id.clone(), Arc::new(Mutex::new(session.clone())));
        Ok((session, challenge))
    }

    pub fn session(&self, session_id: &str) -> Option<Session> {
        let s = self.sessions.lock().unwrap().get(session_id).cloned()?;
        let s = s.lock().unwrap().clone();
        Some(s)
    }

    /// Checks `key` against the current round. A key that cannot be
    /// evaluated at all is a validation error and leaves the session as it
    /// was.
    pub fn submit_round(&self, session_id: &str, key: &TopsnutGpw) -> Result<(Session, RoundOutcome), AuthdError> {
        let cell = self
            .sessions
            .lock()
            .unwrap()
            .get(session_id)
            .cloned()
            .ok_or_else(|| AuthdError::UnknownSession(session_id.into()))?;
        let mut s = cell.lock().unwrap();
        if s.state != SessionState::Active {
            return Err(AuthdError::SessionClosed(session_id.into()));
        }
        let stored = self.round(&s.user_id, s.current_round)?;
        canonical_code(key).map_err(|e| AuthdError::Validation(e.to_string()))?;
        if stored.rule != AuthRule::MatrixEquality && key.vertex_labels().is_none() {
            return Err(AuthdError::Validation("key must label every vertex".into()));
        }
        s.attempts += 1;
        let pair = KeyLockPair { key: key.clone(), lock: stored.lock()?, rule: stored.rule };
        let outcome = if !authenticate(&pair).unwrap_or(false) {
            s.state = SessionState::Rejected;
            RoundOutcome::Rejected
        } else if s.current_round == s.total_rounds {
            s.state = SessionState::Accepted;
            RoundOutcome::Accepted
        } else {
            s.current_round += 1;
            let next = self.round(&s.user_id, s.current_round)?;
            RoundOutcome::Continue(self.challenge(s.current_round, &next.lock()?)?)
        };
        Ok((s.clone(), outcome))
    }
}
