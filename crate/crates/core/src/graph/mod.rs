//! Simple undirected graphs and the labelled-graph model every other module
//! builds on.
//!
//! Vertices are dense integers `0..p`. A [`TopsnutGpw`] pairs a [`Graph`] with
//! a partial [`Labelling`] of its vertices and edges.

mod canon;
mod io;
mod matrix;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use canon::{canonical_code, canonical_form, gpw_equal, CanonicalCode, CanonicalForm, DEFAULT_CANON_CAP};
pub use io::{parse_graph_text, to_graph_text, ParseError};
pub use matrix::{graph_matrix, GraphMatrix, NO_EDGE, UNLABELLED, UNLABELLED_EDGE};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    OutOfRange { vertex: Vertex, order: usize },
    #[error("label refers to a missing edge {0}")]
    MissingEdge(Edge),
    #[error("graph order {order} exceeds the cap of {cap}")]
    Capacity { order: usize, cap: usize },
    #[error("malformed matrix: {0}")]
    Matrix(String),
}

/// An undirected edge stored with its smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn ends(self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint opposite `v`. `v` must be an endpoint.
    pub fn other(self, v: Vertex) -> Vertex {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<Vertex>>,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Graph { adj: vec![BTreeSet::new(); order], edges: BTreeSet::new() }
    }

    /// Builds a graph on `0..order`, rejecting loops, repeated pairs and
    /// out-of-range endpoints.
    pub fn new<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(order);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Graph::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                g.insert_edge(u, v).expect("complete graph edges are distinct");
            }
        }
        g
    }

    pub fn path(order: usize) -> Self {
        Graph::new(order, (1..order).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3, "cycles need at least three vertices");
        Graph::new(order, (0..order).map(|v| (v, (v + 1) % order))).expect("cycle edges are valid")
    }

    /// `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are valid")
    }

    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        let order = self.order();
        for w in [u, v] {
            if w >= order {
                return Err(GraphError::OutOfRange { vertex: w, order });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let e = Edge::new(u, v);
        if !self.edges.insert(e) {
            return Err(GraphError::DuplicateEdge(e));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// `p = |V(G)|`.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// `q = |E(G)|`.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adj[u].contains(&v)
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        v < self.order()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }

    /// Two-colouring of the vertices (`false`/`true` sides), or `None` when
    /// the graph has an odd cycle. Each component's smallest vertex sits on
    /// the `false` side.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.order()];
        for s in self.vertices() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// Subgraph induced on `keep`; vertex `keep[i]` becomes `i`.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(keep.len());
        for e in self.edges() {
            let (a, b) = e.ends();
            if index[a] != usize::MAX && index[b] != usize::MAX {
                g.insert_edge(index[a], index[b]).expect("induced edges are valid");
            }
        }
        g
    }

    /// Graph spanned by a subset of edges, keeping only their endpoints.
    /// Returns the subgraph and the original id of each new vertex.
    pub fn edge_subgraph(&self, edges: &[Edge]) -> (Graph, Vec<Vertex>) {
        let mut used: Vec<Vertex> = edges.iter().flat_map(|e| [e.0, e.1]).collect();
        used.sort_unstable();
        used.dedup();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in used.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(used.len());
        for e in edges {
            g.insert_edge(index[e.0], index[e.1]).expect("subgraph edges are valid");
        }
        (g, used)
    }

    /// Merges `v` into `u`, dropping the loop and any parallel edges.
    /// The last vertex is renumbered into `v`'s slot.
    pub fn contract(&self, u: Vertex, v: Vertex) -> Graph {
        let p = self.order();
        let last = p - 1;
        let rename = |w: Vertex| -> Vertex {
            let w = if w == v { u } else { w };
            if w == last && v != last {
                v
            } else {
                w
            }
        };
        let mut g = Graph::empty(p - 1);
        for e in self.edges() {
            let (a, b) = (rename(e.0), rename(e.1));
            if a != b && !g.has_edge(a, b) {
                g.insert_edge(a, b).expect("contracted edges are in range");
            }
        }
        g
    }
}

/// The rule a labelling claims to follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Graceful,
    OddGraceful,
    SetOrderedGraceful,
    TwinOddGraceful,
    #[default]
    Free,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Graceful => "graceful",
            Rule::OddGraceful => "odd-graceful",
            Rule::SetOrderedGraceful => "set-ordered-graceful",
            Rule::TwinOddGraceful => "twin-odd-graceful",
            Rule::Free => "free",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "graceful" => Rule::Graceful,
            "odd-graceful" => Rule::OddGraceful,
            "set-ordered-graceful" => Rule::SetOrderedGraceful,
            "twin-odd-graceful" => Rule::TwinOddGraceful,
            "free" => Rule::Free,
            other => return Err(format!("unknown labelling rule `{other}`")),
        })
    }
}

/// A partial assignment of non-negative integers to vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Labelling {
    vertex: BTreeMap<Vertex, u64>,
    edge: BTreeMap<Edge, u64>,
    rule: Rule,
}

impl Labelling {
    pub fn new(rule: Rule) -> Self {
        Labelling { rule, ..Default::default() }
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    pub fn with_rule(mut self, rule: Rule) -> Self {
        self.rule = rule;
        self
    }

    pub fn set_vertex(&mut self, v: Vertex, label: u64) {
        self.vertex.insert(v, label);
    }

    pub fn set_edge(&mut self, e: Edge, label: u64) {
        self.edge.insert(e, label);
    }

    pub fn vertex(&self, v: Vertex) -> Option<u64> {
        self.vertex.get(&v).copied()
    }

    pub fn edge(&self, e: Edge) -> Option<u64> {
        self.edge.get(&e).copied()
    }

    pub fn vertex_labels(&self) -> impl Iterator<Item = (Vertex, u64)> + '_ {
        self.vertex.iter().map(|(&v, &l)| (v, l))
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = (Edge, u64)> + '_ {
        self.edge.iter().map(|(&e, &l)| (e, l))
    }
}

/// A graph together with a labelling of (some of) its elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopsnutGpw {
    graph: Graph,
    labelling: Labelling,
}

impl TopsnutGpw {
    pub fn new(graph: Graph, labelling: Labelling) -> Result<Self, GraphError> {
        for (v, _) in labelling.vertex_labels() {
            if v >= graph.order() {
                return Err(GraphError::OutOfRange { vertex: v, order: graph.order() });
            }
        }
        for (e, _) in labelling.edge_labels() {
            if !graph.has_edge(e.0, e.1) {
                return Err(GraphError::MissingEdge(e));
            }
        }
        Ok(TopsnutGpw { graph, labelling })
    }

    pub fn unlabelled(graph: Graph) -> Self {
        TopsnutGpw { graph, labelling: Labelling::default() }
    }

    /// Labels every vertex from `labels` and every edge with the induced
    /// value `|f(u) - f(v)|`.
    pub fn from_vertex_labels(graph: Graph, labels: &[u64], rule: Rule) -> Result<Self, GraphError> {
        if labels.len() != graph.order() {
            return Err(GraphError::OutOfRange { vertex: labels.len(), order: graph.order() });
        }
        let mut l = Labelling::new(rule);
        for (v, &x) in labels.iter().enumerate() {
            l.set_vertex(v, x);
        }
        for e in graph.edges() {
            l.set_edge(e, labels[e.0].abs_diff(labels[e.1]));
        }
        Ok(TopsnutGpw { graph, labelling: l })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labelling(&self) -> &Labelling {
        &self.labelling
    }

    pub fn rule(&self) -> Rule {
        self.labelling.rule
    }

    pub fn vertex_label(&self, v: Vertex) -> Option<u64> {
        self.labelling.vertex(v)
    }

    pub fn edge_label(&self, e: Edge) -> Option<u64> {
        self.labelling.edge(e)
    }

    /// All vertex labels in id order, if every vertex carries one.
    pub fn vertex_labels(&self) -> Option<Vec<u64>> {
        self.graph.vertices().map(|v| self.vertex_label(v)).collect()
    }

    pub fn with_rule(mut self, rule: Rule) -> Self {
        self.labelling.rule = rule;
        self
    }

    /// Same topology, no labels.
    pub fn topology(&self) -> TopsnutGpw {
        TopsnutGpw::unlabelled(self.graph.clone())
    }

    pub fn into_parts(self) -> (Graph, Labelling) {
        (self.graph, self.labelling)
    }
}
