use std::fmt;

use super::{Edge, Graph, GraphError, Labelling, TopsnutGpw, Vertex};

/// Diagonal entry of an unlabelled vertex.
pub const UNLABELLED: i64 = -1;
/// Off-diagonal entry of a non-adjacent pair.
pub const NO_EDGE: i64 = -1;
/// Off-diagonal entry of an edge that carries no label.
pub const UNLABELLED_EDGE: i64 = -2;

/// Square matrix form of a labelled graph: vertex labels on the diagonal,
/// edge labels off it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphMatrix {
    order: usize,
    entries: Vec<i64>,
}

impl GraphMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, GraphError> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(GraphError::Matrix("matrix is not square".into()));
        }
        let m = GraphMatrix { order, entries: rows.into_iter().flatten().collect() };
        if !m.is_symmetric() {
            return Err(GraphError::Matrix("matrix is not symmetric".into()));
        }
        Ok(m)
    }

    pub(crate) fn from_fn(order: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        GraphMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.order.max(1)).take(self.order).map(<[i64]>::to_vec).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> GraphMatrix {
        GraphMatrix::from_fn(self.order, |i, j| self.get(j, i))
    }

    /// Rebuilds the labelled graph the matrix encodes, with rule `free`.
    pub fn to_gpw(&self) -> Result<TopsnutGpw, GraphError> {
        let mut g = Graph::empty(self.order);
        let mut l = Labelling::default();
        for i in 0..self.order {
            match self.get(i, i) {
                UNLABELLED => {}
                x if x >= 0 => l.set_vertex(i, x as u64),
                x => return Err(GraphError::Matrix(format!("bad diagonal entry {x} at {i}"))),
            }
            for j in i + 1..self.order {
                match self.get(i, j) {
                    NO_EDGE => {}
                    UNLABELLED_EDGE => g.insert_edge(i, j)?,
                    x if x >= 0 => {
                        g.insert_edge(i, j)?;
                        l.set_edge(Edge::new(i, j), x as u64);
                    }
                    x => return Err(GraphError::Matrix(format!("bad entry {x} at ({i},{j})"))),
                }
            }
        }
        TopsnutGpw::new(g, l)
    }

    /// Row-major text, comma separated, one row per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(i64::to_string).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self, GraphError> {
        let mut rows = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| GraphError::Matrix(format!("line {}: {e}", n + 1)))?;
            rows.push(row);
        }
        GraphMatrix::from_rows(rows)
    }
}

impl fmt::Display for GraphMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub(crate) fn entry(gpw: &TopsnutGpw, i: Vertex, j: Vertex) -> i64 {
    if i == j {
        return gpw.vertex_label(i).map_or(UNLABELLED, |x| x as i64);
    }
    if !gpw.graph().has_edge(i, j) {
        return NO_EDGE;
    }
    gpw.edge_label(Edge::new(i, j)).map_or(UNLABELLED_EDGE, |x| x as i64)
}

/// Matrix of `gpw` in vertex-id order.
pub fn graph_matrix(gpw: &TopsnutGpw) -> GraphMatrix {
    GraphMatrix::from_fn(gpw.graph().order(), |i, j| entry(gpw, i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Rule;

    #[test]
    fn k2_matrix() {
        let gpw = TopsnutGpw::from_vertex_labels(Graph::complete(2), &[0, 1], Rule::Graceful).unwrap();
        assert_eq!(graph_matrix(&gpw).rows(), vec![vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn edge_order_does_not_matter() {
        let a = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::new(4, [(3, 2), (2, 1), (1, 0)]).unwrap();
        let ga = TopsnutGpw::from_vertex_labels(a, &[0, 3, 1, 2], Rule::Graceful).unwrap();
        let gb = TopsnutGpw::from_vertex_labels(b, &[0, 3, 1, 2], Rule::Graceful).unwrap();
        assert_eq!(graph_matrix(&ga), graph_matrix(&gb));
    }

    #[test]
    fn unlabelled_triangle() {
        let m = graph_matrix(&TopsnutGpw::unlabelled(Graph::complete(3)));
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { UNLABELLED } else { UNLABELLED_EDGE };
                assert_eq!(m.get(i, j), want);
            }
        }
        assert_eq!(m.to_gpw().unwrap().graph(), &Graph::complete(3));
    }

    #[test]
    fn text_round_trip() {
        let gpw = TopsnutGpw::from_vertex_labels(Graph::path(3), &[0, 2, 1], Rule::Graceful).unwrap();
        let m = graph_matrix(&gpw);
        assert_eq!(m.to_text(), "0,2,-1\n2,2,1\n-1,1,1\n");
        assert_eq!(GraphMatrix::parse_text(&m.to_text()).unwrap(), m);
        assert!(GraphMatrix::parse_text("0,1\n2,0\n").is_err());
    }
}
