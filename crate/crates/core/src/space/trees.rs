use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::SpaceError;
use crate::graph::Graph;

/// Largest order [`enumerate_trees`] accepts.
pub const TREE_CAP: usize = 16;

/// Streams one tree per isomorphism class on `p` vertices.
///
/// Trees are generated as canonical level sequences rooted at a centre; a
/// sequence is skipped unless its root really is the (first) centre.
pub fn enumerate_trees(p: usize) -> Result<FreeTrees, SpaceError> {
    if p == 0 || p > TREE_CAP {
        return Err(SpaceError::Capacity { p, cap: TREE_CAP });
    }
    let layout = if p == 1 { vec![0] } else { (0..=p / 2).chain(1..=(p - 1) / 2).collect() };
    Ok(FreeTrees { next: Some(layout) })
}

#[derive(Debug, Clone)]
pub struct FreeTrees {
    next: Option<Vec<usize>>,
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let candidate = self.next.take()?;
        if candidate.len() == 1 {
            return Some(Graph::empty(1));
        }
        let layout = valid_tree(candidate)?;
        self.next = next_rooted(&layout, None);
        Some(layout_graph(&layout))
    }
}

/// Vertex `i` hangs off the last earlier vertex one level up.
fn layout_graph(layout: &[usize]) -> Graph {
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::new();
    for (i, &lvl) in layout.iter().enumerate() {
        stack.truncate(lvl);
        if let Some(&parent) = stack.last() {
            edges.push((parent, i));
        }
        stack.push(i);
    }
    Graph::new(layout.len(), edges).expect("level sequence yields a tree")
}

/// Beyer-Hedetniemi successor, optionally from position `p`.
fn next_rooted(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits off the first subtree of the root: (that subtree re-levelled, the rest).
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout.iter().enumerate().skip(2).find(|&(_, &l)| l == 1).map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

/// Advances `candidate` to the first sequence at or after it whose root is a
/// centre with the canonical tie-break.
fn valid_tree(mut candidate: Vec<usize>) -> Option<Vec<usize>> {
    loop {
        let (left, rest) = split(&candidate);
        let lh = *left.iter().max().unwrap();
        let rh = *rest.iter().max().unwrap();
        let ok = rh > lh || (rh == lh && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
        if ok {
            return Some(candidate);
        }
        let p = left.len();
        let mut next = next_rooted(&candidate, Some(p))?;
        if candidate[p] > 2 {
            let (new_left, _) = split(&next);
            let h = new_left.iter().max().unwrap() + 2;
            let n = next.len();
            for (k, lvl) in (1..h).enumerate() {
                next[n - (h - 1) + k] = lvl;
            }
        }
        candidate = next;
    }
}

/// Number of rooted trees on `p` unlabelled vertices (0 for `p = 0`).
pub fn count_rooted_trees(p: usize) -> BigUint {
    rooted_tree_counts(p).pop().unwrap()
}

/// `a[0..=n]` with `a[n]` the number of rooted trees on `n` vertices, from
/// `n a(n+1) = sum_k (sum_{d|k} d a(d)) a(n-k+1)`.
pub(crate) fn rooted_tree_counts(n: usize) -> Vec<BigUint> {
    let mut a = vec![BigUint::zero(); n.max(1) + 1];
    a[1] = BigUint::one();
    let mut s = vec![BigUint::zero(); n.max(1) + 1];
    for k in 1..n {
        s[k] = (1..=k).filter(|d| k % d == 0).map(|d| &a[d] * d).sum();
        let total: BigUint = (1..=k).map(|j| &s[j] * &a[k - j + 1]).sum();
        a[k + 1] = total / k;
    }
    a.truncate(n + 1);
    a
}
