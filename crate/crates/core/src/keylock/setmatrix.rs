use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use super::KeyLockError;
use crate::graph::{Graph, Vertex};

/// How an edge's set is formed from its endpoint sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetRule {
    Union,
    SymmetricDifference,
}

impl FromStr for SetRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "union" => Ok(SetRule::Union),
            "symmetric-difference" => Ok(SetRule::SymmetricDifference),
            _ => Err(format!("unknown set rule `{s}`")),
        }
    }
}

/// Square matrix whose entries are finite sets of integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetMatrix {
    order: usize,
    entries: Vec<BTreeSet<u64>>,
}

impl SetMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BTreeSet<u64> {
        &self.entries[i * self.order + j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// One row per line, entries like `{1,2}` separated by spaces.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|j| {
                    let items: Vec<String> = self.get(i, j).iter().map(|x| x.to_string()).collect();
                    format!("{{{}}}", items.join(","))
                })
                .collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Diagonal entries are the vertex sets, edge entries combine the endpoint
/// sets by `rule`, and non-adjacent pairs get the empty set.
pub fn set_matrix(g: &Graph, sets: &BTreeMap<Vertex, BTreeSet<u64>>, rule: SetRule) -> Result<SetMatrix, KeyLockError> {
    let p = g.order();
    if let Some(v) = g.vertices().find(|v| !sets.contains_key(v)) {
        return Err(KeyLockError::MissingSet(v));
    }
    let mut entries = vec![BTreeSet::new(); p * p];
    for v in g.vertices() {
        entries[v * p + v] = sets[&v].clone();
    }
    for e in g.edges() {
        let (u, v) = e.ends();
        let s: BTreeSet<u64> = match rule {
            SetRule::Union => sets[&u].union(&sets[&v]).copied().collect(),
            SetRule::SymmetricDifference => sets[&u].symmetric_difference(&sets[&v]).copied().collect(),
        };
        entries[u * p + v] = s.clone();
        entries[v * p + u] = s;
    }
    Ok(SetMatrix { order: p, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(items: &[&[u64]]) -> BTreeMap<Vertex, BTreeSet<u64>> {
        items.iter().enumerate().map(|(v, s)| (v, s.iter().copied().collect())).collect()
    }

    #[test]
    fn k2_union_and_difference() {
        let g = Graph::path(2);
        let m = set_matrix(&g, &sets(&[&[1], &[2]]), SetRule::Union).unwrap();
        assert_eq!(m.get(0, 1), &BTreeSet::from([1, 2]));
        assert_eq!(m.to_text(), "{1} {1,2}\n{1,2} {2}\n");
        let m = set_matrix(&g, &sets(&[&[3, 4], &[3, 4]]), SetRule::SymmetricDifference).unwrap();
        assert!(m.get(0, 1).is_empty());
        assert!(m.is_symmetric());
    }

    #[test]
    fn missing_set() {
        let g = Graph::path(3);
        assert_eq!(set_matrix(&g, &sets(&[&[1], &[2]]), SetRule::Union), Err(KeyLockError::MissingSet(2)));
    }
}
