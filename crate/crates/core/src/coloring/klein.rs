use std::collections::BTreeMap;

use super::{ColorError, VertexColoring};
use crate::graph::{Edge, Graph};

/// Klein four-group element of a colour: 1↔(0,0), 2↔(0,1), 3↔(1,0), 4↔(1,1),
/// packed as the two-bit integer `c - 1`.
pub fn klein_element(c: u8) -> u8 {
    debug_assert!((1..=4).contains(&c));
    c - 1
}

/// Edge colouring with colours 1, 2, 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring3 {
    colors: BTreeMap<Edge, u8>,
}

impl EdgeColoring3 {
    pub(crate) fn from_map(colors: BTreeMap<Edge, u8>) -> Self {
        EdgeColoring3 { colors }
    }

    pub fn color(&self, e: Edge) -> Option<u8> {
        self.colors.get(&e).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, u8)> + '_ {
        self.colors.iter().map(|(&e, &c)| (e, c))
    }

    /// Edges sharing an endpoint have different colours.
    pub fn is_proper(&self, g: &Graph) -> bool {
        g.vertices().all(|v| {
            let mut seen = [false; 4];
            g.neighbors(v).all(|w| match self.colors.get(&Edge::new(v, w)) {
                Some(&c) if !seen[c as usize] => {
                    seen[c as usize] = true;
                    true
                }
                _ => false,
            })
        })
    }
}

/// Each edge gets the group sum (bitwise xor) of its endpoint elements. A proper
/// colouring never produces the identity, so every value lies in 1..=3.
pub fn klein_edge_coloring(g: &Graph, c: &VertexColoring) -> Result<EdgeColoring3, ColorError> {
    let c = VertexColoring::new(g, c.colors().to_vec(), 4)?;
    let colors = g
        .edges()
        .map(|e| {
            let (u, v) = e.ends();
            (e, klein_element(c.color(u)) ^ klein_element(c.color(v)))
        })
        .collect();
    Ok(EdgeColoring3 { colors })
}

/// Edge labels in {1, 2, 3}, with 0 represented by 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mod3EdgeLabelling {
    labels: BTreeMap<Edge, u8>,
}

impl Mod3EdgeLabelling {
    pub fn new(labels: BTreeMap<Edge, u8>) -> Result<Self, ColorError> {
        if let Some(&x) = labels.values().find(|&&x| !(1..=3).contains(&x)) {
            return Err(ColorError::BadMod3Label(x));
        }
        Ok(Mod3EdgeLabelling { labels })
    }

    pub fn label(&self, e: Edge) -> Option<u8> {
        self.labels.get(&e).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, u8)> + '_ {
        self.labels.iter().map(|(&e, &x)| (e, x))
    }
}

impl From<&EdgeColoring3> for Mod3EdgeLabelling {
    fn from(c: &EdgeColoring3) -> Self {
        Mod3EdgeLabelling { labels: c.colors.clone() }
    }
}

/// Adds one to every label modulo 3: 1→2, 2→3, 3→1.
pub fn shift_mod3(h: &Mod3EdgeLabelling) -> Mod3EdgeLabelling {
    Mod3EdgeLabelling { labels: h.labels.iter().map(|(&e, &x)| (e, x % 3 + 1)).collect() }
}

fn rep3(x: i64) -> usize {
    match x.rem_euclid(3) {
        0 => 3,
        r => r as usize,
    }
}

/// Checks `f_i(uv) + f_j(uv) - f_k(uv) ≡ f_{i+j-k}(uv) (mod 3)` for every edge
/// and all 27 index triples, indices taken in {1, 2, 3}.
pub fn verify_mod3_group(
    h1: &Mod3EdgeLabelling,
    h2: &Mod3EdgeLabelling,
    h3: &Mod3EdgeLabelling,
) -> Result<bool, ColorError> {
    let same = |a: &Mod3EdgeLabelling, b: &Mod3EdgeLabelling| a.labels.keys().eq(b.labels.keys());
    if !same(h1, h2) || !same(h1, h3) {
        return Err(ColorError::EdgeSetMismatch);
    }
    let hs = [h1, h2, h3];
    for e in h1.labels.keys() {
        let f = |i: usize| hs[i - 1].labels[e] as i64;
        for i in 1..=3 {
            for j in 1..=3 {
                for k in 1..=3 {
                    let lhs = f(i) + f(j) - f(k);
                    let rhs = f(rep3((i + j) as i64 - k as i64));
                    if (lhs - rhs).rem_euclid(3) != 0 {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
