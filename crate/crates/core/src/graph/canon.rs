//! Canonical vertex orderings for small labelled graphs.
//!
//! The canonical matrix is the lexicographically least matrix, read in
//! lower-triangular row order (`m[k][k], m[k][0], .., m[k][k-1]` for each `k`),
//! over the vertex orderings that list refinement colour classes in increasing
//! order. Colour refinement prunes the orderings; interchangeable "twin"
//! vertices are branched on once.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::matrix::entry;
use super::{GraphError, GraphMatrix, TopsnutGpw, Vertex};

pub const DEFAULT_CANON_CAP: usize = 16;

/// Byte encoding equal for exactly the label-preserving isomorphic GPWs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

#[derive(Debug, Clone)]
pub struct CanonicalForm {
    /// `order[k]` is the original vertex placed at canonical position `k`.
    pub order: Vec<Vertex>,
    pub matrix: GraphMatrix,
}

impl CanonicalForm {
    pub fn code(&self) -> CanonicalCode {
        CanonicalCode(self.matrix.to_text().into_bytes())
    }
}

pub fn canonical_code(gpw: &TopsnutGpw) -> Result<CanonicalCode, GraphError> {
    canonical_form(gpw, DEFAULT_CANON_CAP).map(|f| f.code())
}

pub fn gpw_equal(a: &TopsnutGpw, b: &TopsnutGpw) -> Result<bool, GraphError> {
    if a.graph().order() != b.graph().order() || a.graph().size() != b.graph().size() {
        // still enforce the cap so oversized inputs are reported consistently
        canonical_form(a, DEFAULT_CANON_CAP)?;
        canonical_form(b, DEFAULT_CANON_CAP)?;
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

pub fn canonical_form(gpw: &TopsnutGpw, cap: usize) -> Result<CanonicalForm, GraphError> {
    let p = gpw.graph().order();
    if p > cap {
        return Err(GraphError::Capacity { order: p, cap });
    }
    let m: Vec<Vec<i64>> = (0..p).map(|i| (0..p).map(|j| entry(gpw, i, j)).collect()).collect();
    let colour = refine(&m);
    let twin = twin_classes(&m);

    // cell[k] = colour required at position k
    let mut cell: Vec<usize> = colour.clone();
    cell.sort_unstable();

    let mut search = Search {
        m: &m,
        colour: &colour,
        twin: &twin,
        cell: &cell,
        order: Vec::with_capacity(p),
        placed: vec![false; p],
        code: Vec::new(),
        best: None,
    };
    search.descend();
    let order = search.best.map(|(o, _)| o).unwrap_or_default();
    let matrix = GraphMatrix::from_fn(p, |i, j| m[order[i]][order[j]]);
    Ok(CanonicalForm { order, matrix })
}

/// Iterated colour refinement; colours are ranks of isomorphism-invariant
/// signatures, so equal graphs get equal colourings up to the vertex map.
fn refine(m: &[Vec<i64>]) -> Vec<usize> {
    let p = m.len();
    let mut colour = rank((0..p).map(|v| vec![m[v][v]]).collect());
    loop {
        let sigs: Vec<Vec<i64>> = (0..p)
            .map(|v| {
                let mut nb: Vec<(i64, i64)> = (0..p)
                    .filter(|&w| w != v && m[v][w] != super::NO_EDGE)
                    .map(|w| (m[v][w], colour[w] as i64))
                    .collect();
                nb.sort_unstable();
                let mut s = vec![colour[v] as i64, nb.len() as i64];
                s.extend(nb.into_iter().flat_map(|(a, b)| [a, b]));
                s
            })
            .collect();
        let next = rank(sigs);
        let before = colour.iter().max().map_or(0, |c| c + 1);
        let after = next.iter().max().map_or(0, |c| c + 1);
        colour = next;
        if after == before {
            return colour;
        }
    }
}

fn rank(sigs: Vec<Vec<i64>>) -> Vec<usize> {
    let distinct: BTreeMap<&Vec<i64>, usize> = {
        let mut keys: Vec<&Vec<i64>> = sigs.iter().collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect()
    };
    sigs.iter().map(|s| distinct[s]).collect()
}

/// Representative of each vertex's twin class: `u` and `v` are twins when
/// swapping them is an automorphism fixing every other vertex.
fn twin_classes(m: &[Vec<i64>]) -> Vec<Vertex> {
    let p = m.len();
    let mut rep: Vec<Vertex> = (0..p).collect();
    for v in 0..p {
        for u in 0..v {
            if rep[u] != u {
                continue;
            }
            let twins = m[u][u] == m[v][v] && (0..p).all(|w| w == u || w == v || m[u][w] == m[v][w]);
            if twins {
                rep[v] = u;
                break;
            }
        }
    }
    rep
}

struct Search<'a> {
    m: &'a [Vec<i64>],
    colour: &'a [usize],
    twin: &'a [Vertex],
    cell: &'a [usize],
    order: Vec<Vertex>,
    placed: Vec<bool>,
    code: Vec<i64>,
    best: Option<(Vec<Vertex>, Vec<i64>)>,
}

impl Search<'_> {
    fn segment(&self, v: Vertex) -> Vec<i64> {
        let mut s = Vec::with_capacity(self.order.len() + 1);
        s.push(self.m[v][v]);
        s.extend(self.order.iter().map(|&w| self.m[v][w]));
        s
    }

    fn descend(&mut self) {
        let k = self.order.len();
        if k == self.m.len() {
            if self.best.as_ref().is_none_or(|(_, best)| self.code < *best) {
                self.best = Some((self.order.clone(), self.code.clone()));
            }
            return;
        }
        let want = self.cell[k];
        let mut seen_twin = vec![false; self.m.len()];
        let mut candidates: Vec<(Vec<i64>, Vertex)> = Vec::new();
        for v in 0..self.m.len() {
            if self.placed[v] || self.colour[v] != want || seen_twin[self.twin[v]] {
                continue;
            }
            seen_twin[self.twin[v]] = true;
            candidates.push((self.segment(v), v));
        }
        let Some(min) = candidates.iter().map(|(s, _)| s).min().cloned() else {
            return;
        };
        let start = self.code.len();
        for (seg, v) in candidates {
            if seg != min {
                continue;
            }
            if let Some((_, best)) = &self.best {
                // the best code may have been replaced by an earlier sibling
                let prefix = self.code.iter().chain(&seg);
                if prefix.cmp(best[..start + seg.len()].iter()) == Ordering::Greater {
                    return;
                }
            }
            self.order.push(v);
            self.placed[v] = true;
            self.code.extend_from_slice(&seg);
            self.descend();
            self.code.truncate(start);
            self.placed[v] = false;
            self.order.pop();
        }
    }
}
