//! Graceful, odd-graceful and set-ordered graceful labellings: verification,
//! exhaustive search, counting, duals and the perfect-labelling-graph test.

mod perfect;
mod search;

use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, Rule, TopsnutGpw, Vertex};

pub use perfect::{is_perfect_labelling_graph, PERFECT_CAP};
pub use search::{count_labellings, find_labelling, for_each_labelling, search_labellings, COUNT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("vertex {0} has no label")]
    UndefinedLabel(Vertex),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("label {label} on vertex {vertex} exceeds {bound}")]
    LabelOutOfRange { vertex: Vertex, label: u64, bound: u64 },
    #[error("graph of size {size} exceeds the cap of {cap}")]
    Capacity { size: usize, cap: usize },
    #[error("search budget must be positive")]
    InvalidBudget,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LabellingKind {
    Graceful,
    OddGraceful,
    SetOrderedGraceful,
}

impl LabellingKind {
    pub fn rule(self) -> Rule {
        match self {
            LabellingKind::Graceful => Rule::Graceful,
            LabellingKind::OddGraceful => Rule::OddGraceful,
            LabellingKind::SetOrderedGraceful => Rule::SetOrderedGraceful,
        }
    }

    pub fn from_rule(rule: Rule) -> Option<Self> {
        match rule {
            Rule::Graceful => Some(LabellingKind::Graceful),
            Rule::OddGraceful => Some(LabellingKind::OddGraceful),
            Rule::SetOrderedGraceful => Some(LabellingKind::SetOrderedGraceful),
            _ => None,
        }
    }

    /// Largest vertex label allowed on a graph with `q` edges.
    pub fn max_label(self, q: usize) -> u64 {
        match self {
            LabellingKind::Graceful | LabellingKind::SetOrderedGraceful => q as u64,
            LabellingKind::OddGraceful => (2 * q as u64).saturating_sub(1),
        }
    }

    /// Whether `d` may appear as an induced edge label when there are `q` edges.
    pub fn edge_label_allowed(self, d: u64, q: usize) -> bool {
        match self {
            LabellingKind::Graceful | LabellingKind::SetOrderedGraceful => (1..=q as u64).contains(&d),
            LabellingKind::OddGraceful => d % 2 == 1 && d < 2 * q as u64,
        }
    }
}

impl std::str::FromStr for LabellingKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let r = s.parse::<Rule>()?;
        LabellingKind::from_rule(r).ok_or_else(|| format!("`{s}` is not a searchable labelling kind"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Stop after this many solutions; `None` for all of them.
    pub max_solutions: Option<usize>,
    /// Backtracking nodes allowed before the search gives up.
    pub node_limit: u64,
}

impl SearchBudget {
    pub const UNLIMITED: SearchBudget = SearchBudget { max_solutions: None, node_limit: u64::MAX };

    pub fn solutions(n: usize) -> Self {
        SearchBudget { max_solutions: Some(n), ..Self::UNLIMITED }
    }

    pub(crate) fn check(&self) -> Result<(), LabelError> {
        if self.max_solutions == Some(0) || self.node_limit == 0 {
            return Err(LabelError::InvalidBudget);
        }
        Ok(())
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::UNLIMITED
    }
}

/// Results of a bounded search. `complete` is false when the node budget ran
/// out before the search space was exhausted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome<T> {
    pub found: Vec<T>,
    pub complete: bool,
    pub nodes: u64,
}

/// `|f(u) - f(v)|`.
pub fn induced_edge_label(gpw: &TopsnutGpw, u: Vertex, v: Vertex) -> Result<u64, LabelError> {
    let fu = gpw.vertex_label(u).ok_or(LabelError::UndefinedLabel(u))?;
    let fv = gpw.vertex_label(v).ok_or(LabelError::UndefinedLabel(v))?;
    Ok(fu.abs_diff(fv))
}

fn total_labels(gpw: &TopsnutGpw) -> Result<Vec<u64>, LabelError> {
    gpw.graph().vertices().map(|v| gpw.vertex_label(v).ok_or(LabelError::UndefinedLabel(v))).collect()
}

/// Checks a total vertex labelling against `kind`. Explicit edge labels, when
/// present, must agree with the induced ones.
pub fn verify_labelling(gpw: &TopsnutGpw, kind: LabellingKind) -> Result<bool, LabelError> {
    let labels = total_labels(gpw)?;
    if gpw.graph().size() == 0 {
        return Err(LabelError::NoEdges);
    }
    for e in gpw.graph().edges() {
        if let Some(x) = gpw.edge_label(e) {
            if x != labels[e.ends().0].abs_diff(labels[e.ends().1]) {
                return Ok(false);
            }
        }
    }
    verify_vertex_labels(gpw.graph(), &labels, kind)
}

/// Same as [`verify_labelling`] for a bare label vector indexed by vertex.
pub fn verify_vertex_labels(g: &Graph, labels: &[u64], kind: LabellingKind) -> Result<bool, LabelError> {
    let q = g.size();
    if q == 0 {
        return Err(LabelError::NoEdges);
    }
    let sides = if kind == LabellingKind::SetOrderedGraceful {
        Some(g.bipartition().ok_or(LabelError::NotBipartite)?)
    } else {
        None
    };
    let max = kind.max_label(q);
    let mut seen = vec![false; max as usize + 1];
    for &x in labels {
        if x > max || std::mem::replace(&mut seen[x as usize], true) {
            return Ok(false);
        }
    }
    let mut edge_seen = vec![false; 2 * q + 1];
    for e in g.edges() {
        let (u, v) = e.ends();
        let d = labels[u].abs_diff(labels[v]);
        if !kind.edge_label_allowed(d, q) || std::mem::replace(&mut edge_seen[d as usize], true) {
            return Ok(false);
        }
    }
    if sides.is_some() {
        return Ok(set_ordered(g, labels));
    }
    Ok(true)
}

/// Some threshold `t` puts one end of every edge at or below `t` and the
/// other above it, i.e. `max f(X) < min f(Y)` for a bipartition `(X, Y)`.
fn set_ordered(g: &Graph, labels: &[u64]) -> bool {
    let lo = g.edges().map(|e| labels[e.ends().0].min(labels[e.ends().1])).max();
    let hi = g.edges().map(|e| labels[e.ends().0].max(labels[e.ends().1])).min();
    matches!((lo, hi), (Some(lo), Some(hi)) if lo < hi)
}

/// Complement of a total vertex labelling, `f'(v) = c - f(v)`.
///
/// For twin odd-graceful halves `c = 2q`, the top of the shared label range,
/// so a key and its lock are complemented consistently; otherwise
/// `c = max f + min f`. Edge labels are re-induced. Graceful-type rule tags are
/// kept only when the dual still verifies.
pub fn dual_labelling(gpw: &TopsnutGpw) -> Result<TopsnutGpw, LabelError> {
    let labels = total_labels(gpw)?;
    let c = match gpw.rule() {
        Rule::TwinOddGraceful => 2 * gpw.graph().size() as u64,
        _ => labels.iter().max().copied().unwrap_or(0) + labels.iter().min().copied().unwrap_or(0),
    };
    if let Some((vertex, &label)) = labels.iter().enumerate().find(|(_, &x)| x > c) {
        return Err(LabelError::LabelOutOfRange { vertex, label, bound: c });
    }
    let dual: Vec<u64> = labels.iter().map(|&x| c - x).collect();
    let mut rule = gpw.rule();
    if let Some(kind) = LabellingKind::from_rule(rule) {
        let holds = gpw.graph().size() > 0 && verify_vertex_labels(gpw.graph(), &dual, kind).unwrap_or(false);
        if !holds {
            rule = Rule::Free;
        }
    }
    Ok(TopsnutGpw::from_vertex_labels(gpw.graph().clone(), &dual, rule)?)
}

/// Edge labels of a total vertex labelling, in edge order.
pub fn induced_edge_labels(g: &Graph, labels: &[u64]) -> Vec<(Edge, u64)> {
    g.edges().map(|e| (e, labels[e.ends().0].abs_diff(labels[e.ends().1]))).collect()
}
