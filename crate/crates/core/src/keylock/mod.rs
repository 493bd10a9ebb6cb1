//! Keys and locks: twin odd-graceful pairs, lock enumeration, the
//! authentication rules, walk-derived alphanumeric passwords, chains of
//! labelled graphs and set-matrices.

mod chain;
mod setmatrix;
mod walk;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{canonical_code, gpw_equal, Graph, GraphError, Rule, TopsnutGpw, Vertex};
use crate::labelling::{dual_labelling, LabelError};
use crate::planar::PlanarError;

pub use chain::{build_chain, ChainElement, ChainKind, ChainSeed, ChainSpec, ChainStep};
pub use setmatrix::{set_matrix, SetMatrix, SetRule};
pub use walk::derive_alphanumeric;

/// Largest candidate order [`enumerate_locks`] accepts.
pub const LOCK_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KeyLockError {
    #[error("key has {key} edges but lock has {lock}")]
    EdgeCountMismatch { key: usize, lock: usize },
    #[error("unknown authentication rule `{0}`")]
    UnknownRule(String),
    #[error("key does not satisfy its half of the twin conditions")]
    KeyNotTwin,
    #[error("lock does not satisfy its half of the twin conditions")]
    LockNotTwin,
    #[error("candidate of order {order} exceeds the cap of {cap}")]
    Capacity { order: usize, cap: usize },
    #[error("walk is empty")]
    EmptyWalk,
    #[error("walk step {0}-{1} is not an edge")]
    NotAWalk(Vertex, Vertex),
    #[error("embedding and labelled graph differ")]
    GraphMismatch,
    #[error("chain step {step} cannot be applied: {reason}")]
    Step { step: String, reason: String },
    #[error("chain length must be at least 1")]
    EmptyChain,
    #[error("vertex {0} has no set")]
    MissingSet(Vertex),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Planar(#[from] PlanarError),
}

/// How a key opens a lock.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuthRule {
    /// Key and lock together form a twin odd-graceful labelling.
    TwinOddGraceful,
    /// The key equals the stored graph (same canonical matrix).
    MatrixEquality,
    /// The lock is the dual labelling of the key.
    DualPair,
}

impl AuthRule {
    pub const ALL: [AuthRule; 3] = [AuthRule::TwinOddGraceful, AuthRule::MatrixEquality, AuthRule::DualPair];

    pub fn as_str(self) -> &'static str {
        match self {
            AuthRule::TwinOddGraceful => "twin-odd-graceful",
            AuthRule::MatrixEquality => "matrix-equality",
            AuthRule::DualPair => "dual-pair",
        }
    }
}

impl fmt::Display for AuthRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AuthRule {
    type Err = KeyLockError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AuthRule::ALL
            .into_iter()
            .find(|r| r.as_str() == s.trim())
            .ok_or_else(|| KeyLockError::UnknownRule(s.trim().to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyLockPair {
    pub key: TopsnutGpw,
    pub lock: TopsnutGpw,
    pub rule: AuthRule,
}

fn total_labels(gpw: &TopsnutGpw) -> Result<Vec<u64>, KeyLockError> {
    gpw.vertex_labels().ok_or_else(|| {
        let v = gpw.graph().vertices().find(|&v| gpw.vertex_label(v).is_none()).unwrap_or(0);
        KeyLockError::Label(LabelError::UndefinedLabel(v))
    })
}

/// One graph's half of the twin conditions: labels distinct within
/// `[0, 2q]` and induced edge labels exactly `{1, 3, ..., 2q - 1}`.
fn twin_half(g: &Graph, labels: &[u64], q: usize) -> bool {
    let top = 2 * q as u64;
    let mut seen = vec![false; 2 * q + 1];
    for &x in labels {
        if x > top || seen[x as usize] {
            return false;
        }
        seen[x as usize] = true;
    }
    let mut odd = vec![false; 2 * q];
    for e in g.edges() {
        let (u, v) = e.ends();
        let d = labels[u].abs_diff(labels[v]);
        if d.is_multiple_of(2) || d >= top || odd[d as usize] {
            return false;
        }
        odd[d as usize] = true;
    }
    g.size() == q
}

/// Both graphs have `q` edges and (a) each labels its vertices injectively
/// within `[0, 2q]`, (b) together they use every label of `[0, 2q]`, and
/// (c) each has edge labels exactly `{1, 3, ..., 2q - 1}`.
pub fn verify_twin_odd_graceful(key: &TopsnutGpw, lock: &TopsnutGpw) -> Result<bool, KeyLockError> {
    let q = key.graph().size();
    if lock.graph().size() != q {
        return Err(KeyLockError::EdgeCountMismatch { key: q, lock: lock.graph().size() });
    }
    if q == 0 {
        return Err(LabelError::NoEdges.into());
    }
    let (kl, ll) = (total_labels(key)?, total_labels(lock)?);
    if !twin_half(key.graph(), &kl, q) || !twin_half(lock.graph(), &ll, q) {
        return Ok(false);
    }
    let mut covered = vec![false; 2 * q + 1];
    for &x in kl.iter().chain(&ll) {
        covered[x as usize] = true;
    }
    Ok(covered.into_iter().all(|c| c))
}

pub fn authenticate(pair: &KeyLockPair) -> Result<bool, KeyLockError> {
    match pair.rule {
        AuthRule::TwinOddGraceful => verify_twin_odd_graceful(&pair.key, &pair.lock),
        AuthRule::MatrixEquality => Ok(gpw_equal(&pair.key, &pair.lock)?),
        AuthRule::DualPair => {
            let dual = dual_labelling(&pair.key)?;
            Ok(canonical_code(&dual)? == canonical_code(&pair.lock)?)
        }
    }
}

/// Checks that `lock` can be stored under `rule`: within the canonical-code
/// cap, and for the labelled rules fully labelled (and for twins, a valid
/// half on its own).
pub fn validate_lock(lock: &TopsnutGpw, rule: AuthRule) -> Result<(), KeyLockError> {
    canonical_code(lock)?;
    if rule == AuthRule::MatrixEquality {
        return Ok(());
    }
    let labels = total_labels(lock)?;
    let q = lock.graph().size();
    if rule == AuthRule::TwinOddGraceful && (q == 0 || !twin_half(lock.graph(), &labels, q)) {
        return Err(KeyLockError::LockNotTwin);
    }
    Ok(())
}

struct LockSearch<'a> {
    g: &'a Graph,
    q: usize,
    order: Vec<Vertex>,
    /// Labels the key leaves uncovered.
    must: Vec<bool>,
    must_left: usize,
    labels: Vec<u64>,
    used: Vec<bool>,
    odd_used: Vec<bool>,
    out: Vec<Vec<u64>>,
}

impl LockSearch<'_> {
    fn run(&mut self, k: usize) {
        if self.must_left > self.order.len() - k {
            return;
        }
        if k == self.order.len() {
            self.out.push(self.labels.clone());
            return;
        }
        let v = self.order[k];
        let placed: Vec<Vertex> = self.order[..k].iter().copied().filter(|&w| self.g.has_edge(v, w)).collect();
        let top = 2 * self.q as u64;
        for x in 0..=top {
            if self.used[x as usize] {
                continue;
            }
            let mut diffs = Vec::with_capacity(placed.len());
            let ok = placed.iter().all(|&w| {
                let d = x.abs_diff(self.labels[w]);
                let fine = d % 2 == 1 && d < top && !self.odd_used[d as usize] && !diffs.contains(&d);
                diffs.push(d);
                fine
            });
            if !ok {
                continue;
            }
            self.labels[v] = x;
            self.used[x as usize] = true;
            let covers = self.must[x as usize];
            if covers {
                self.must_left -= 1;
            }
            for &d in &diffs {
                self.odd_used[d as usize] = true;
            }
            self.run(k + 1);
            for &d in &diffs {
                self.odd_used[d as usize] = false;
            }
            if covers {
                self.must_left += 1;
            }
            self.used[x as usize] = false;
        }
    }
}

/// Breadth-first order from the highest-degree vertex of each component, so
/// each new vertex meets already-labelled neighbours early.
fn search_order(g: &Graph) -> Vec<Vertex> {
    let mut seen = vec![false; g.order()];
    let mut order = Vec::with_capacity(g.order());
    let mut by_degree: Vec<Vertex> = g.vertices().collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for s in by_degree {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push(s);
        let mut i = start;
        while i < order.len() {
            let u = order[i];
            i += 1;
            let mut nbrs: Vec<Vertex> = g.neighbors(u).filter(|&w| !seen[w]).collect();
            nbrs.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
            for w in nbrs {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    order
}

/// Every labelling of every candidate graph that completes `key` to a twin
/// odd-graceful pair. Candidates with a different edge count contribute
/// nothing. Output is grouped by candidate, each group in lexicographic order
/// of the label vector.
pub fn enumerate_locks(key: &TopsnutGpw, candidates: &[Graph]) -> Result<Vec<TopsnutGpw>, KeyLockError> {
    let q = key.graph().size();
    let kl = total_labels(key)?;
    if q == 0 || !twin_half(key.graph(), &kl, q) {
        return Err(KeyLockError::KeyNotTwin);
    }
    let mut must = vec![true; 2 * q + 1];
    for &x in &kl {
        must[x as usize] = false;
    }
    let must_left = must.iter().filter(|&&m| m).count();
    let mut locks = Vec::new();
    for g in candidates {
        if g.order() > LOCK_CAP {
            return Err(KeyLockError::Capacity { order: g.order(), cap: LOCK_CAP });
        }
        if g.size() != q {
            continue;
        }
        let mut s = LockSearch {
            g,
            q,
            order: search_order(g),
            must: must.clone(),
            must_left,
            labels: vec![0; g.order()],
            used: vec![false; 2 * q + 1],
            odd_used: vec![false; 2 * q],
            out: Vec::new(),
        };
        s.run(0);
        s.out.sort();
        for labels in s.out {
            locks.push(TopsnutGpw::from_vertex_labels(g.clone(), &labels, Rule::TwinOddGraceful)?);
        }
    }
    Ok(locks)
}
