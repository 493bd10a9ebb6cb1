//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use topsnut::graph::{canonical_code, Edge, Graph, Rule, TopsnutGpw};

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap(n, &mut cur, &mut out);
    out
}

fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    heap(k - 1, a, out);
    for i in 0..k - 1 {
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
        heap(k - 1, a, out);
    }
}

/// Unlabelled graphs on `p` vertices, by the least adjacency bitmask over
/// all relabellings.
pub fn count_graphs(p: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..p).flat_map(|i| (i + 1..p).map(move |j| (i, j))).collect();
    let index = |i: usize, j: usize| {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        pairs.iter().position(|&x| x == (a, b)).unwrap()
    };
    let perms = permutations(p);
    let maps: Vec<Vec<usize>> = perms.iter().map(|s| pairs.iter().map(|&(i, j)| index(s[i], s[j])).collect()).collect();
    let mut seen = BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let least = maps
            .iter()
            .map(|m| m.iter().enumerate().filter(|&(b, _)| mask >> b & 1 == 1).fold(0u64, |acc, (_, &t)| acc | 1 << t))
            .min()
            .unwrap();
        seen.insert(least);
    }
    seen.len()
}

/// `(all, weakly connected)` unlabelled digraphs on `p` vertices.
pub fn count_digraphs(p: usize) -> (usize, usize) {
    let arcs: Vec<(usize, usize)> = (0..p).flat_map(|i| (0..p).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let index = |i: usize, j: usize| arcs.iter().position(|&x| x == (i, j)).unwrap();
    let maps: Vec<Vec<usize>> =
        permutations(p).iter().map(|s| arcs.iter().map(|&(i, j)| index(s[i], s[j])).collect()).collect();
    let mut all = BTreeSet::new();
    let mut connected = BTreeSet::new();
    for mask in 0u64..(1 << arcs.len()) {
        let least = maps
            .iter()
            .map(|m| m.iter().enumerate().filter(|&(b, _)| mask >> b & 1 == 1).fold(0u64, |acc, (_, &t)| acc | 1 << t))
            .min()
            .unwrap();
        if all.insert(least) {
            let und: Vec<(usize, usize)> = arcs
                .iter()
                .enumerate()
                .filter(|&(b, _)| mask >> b & 1 == 1)
                .map(|(_, &(i, j))| (i.min(j), i.max(j)))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            if Graph::new(p, und).unwrap().is_connected() {
                connected.insert(least);
            }
        }
    }
    (all.len(), connected.len())
}

pub fn prufer_tree(code: &[usize]) -> Graph {
    let n = code.len() + 2;
    let mut degree = vec![1; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::new();
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}

/// Isomorphism classes of trees on `p >= 2` vertices, from all Prüfer codes.
pub fn count_trees_by_prufer(p: usize) -> usize {
    let mut classes = BTreeSet::new();
    let total = p.pow((p - 2) as u32);
    for mut x in 0..total {
        let mut code = Vec::with_capacity(p - 2);
        for _ in 0..p - 2 {
            code.push(x % p);
            x /= p;
        }
        classes.insert(canonical_code(&TopsnutGpw::unlabelled(prufer_tree(&code))).unwrap());
    }
    classes.len()
}

pub fn random_tree(rng: &mut impl Rng, p: usize) -> Graph {
    if p == 1 {
        return Graph::empty(1);
    }
    let code: Vec<usize> = (0..p - 2).map(|_| rng.gen_range(0..p)).collect();
    prufer_tree(&code)
}

pub fn random_graph(rng: &mut impl Rng, p: usize, density: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..p).flat_map(|i| (i + 1..p).map(move |j| (i, j))).filter(|_| rng.gen_bool(density)).collect();
    Graph::new(p, edges).unwrap()
}

/// Leaves of `g` restricted to `keep`.
fn strip_leaves(g: &Graph, keep: &[usize]) -> Vec<usize> {
    keep.iter().copied().filter(|&v| g.neighbors(v).filter(|w| keep.contains(w)).count() > 1).collect()
}

fn is_path_like(g: &Graph, keep: &[usize]) -> bool {
    if keep.len() <= 1 {
        return true;
    }
    let sub = g.induced(keep);
    sub.is_connected() && sub.vertices().all(|v| sub.degree(v) <= 2) && sub.size() == keep.len() - 1
}

/// Removing the leaves leaves a path.
pub fn is_caterpillar(t: &Graph) -> bool {
    let all: Vec<usize> = t.vertices().collect();
    t.is_tree() && is_path_like(t, &strip_leaves(t, &all))
}

/// Removing the leaves twice leaves a path.
pub fn is_lobster(t: &Graph) -> bool {
    let all: Vec<usize> = t.vertices().collect();
    let once = strip_leaves(t, &all);
    t.is_tree() && is_path_like(t, &strip_leaves(t, &once))
}

/// Number of edge sets on the labels `0..=q` whose differences are exactly
/// `1..=q`, by trying every `q`-subset of pairs.
pub fn graceful_census(q: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..=q).flat_map(|i| (i + 1..=q).map(move |j| (i, j))).collect();
    let mut count = 0;
    let mut pick = Vec::new();
    fn rec(pairs: &[(usize, usize)], start: usize, q: usize, pick: &mut Vec<usize>, count: &mut u64) {
        if pick.len() == q {
            let diffs: BTreeSet<usize> = pick.iter().map(|&i| pairs[i].1 - pairs[i].0).collect();
            if diffs.len() == q {
                *count += 1;
            }
            return;
        }
        for i in start..pairs.len() {
            pick.push(i);
            rec(pairs, i + 1, q, pick, count);
            pick.pop();
        }
    }
    rec(&pairs, 0, q, &mut pick, &mut count);
    count
}

/// Every injective labelling of `g` into `0..=top`.
pub fn all_injective_labellings(p: usize, top: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(p: usize, top: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for x in 0..=top {
            if !cur.contains(&x) {
                cur.push(x);
                rec(p, top, cur, out);
                cur.pop();
            }
        }
    }
    rec(p, top, &mut cur, &mut out);
    out
}

/// Twin half by definition: injective in `[0, 2q]`, edge labels exactly odd.
pub fn is_twin_half(g: &Graph, labels: &[u64]) -> bool {
    let q = g.size() as u64;
    let set: BTreeSet<u64> = labels.iter().copied().collect();
    if set.len() != labels.len() || labels.iter().any(|&x| x > 2 * q) {
        return false;
    }
    let mut diffs: Vec<u64> = g
        .edges()
        .map(|e| {
            let (u, v) = e.ends();
            labels[u].abs_diff(labels[v])
        })
        .collect();
    diffs.sort_unstable();
    diffs == (0..q).map(|i| 2 * i + 1).collect::<Vec<_>>()
}

/// Graphs with `q` edges and no isolated vertex, one per class.
pub fn graphs_with_edges(q: usize) -> Vec<Graph> {
    graphs_with_edges_upto(q, 2 * q)
}

pub fn graphs_with_edges_upto(q: usize, max_p: usize) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in 2..=max_p.min(2 * q) {
        let pairs: Vec<(usize, usize)> = (0..p).flat_map(|i| (i + 1..p).map(move |j| (i, j))).collect();
        let mut pick = Vec::new();
        fn rec(
            pairs: &[(usize, usize)],
            start: usize,
            q: usize,
            pick: &mut Vec<(usize, usize)>,
            found: &mut Vec<Vec<(usize, usize)>>,
        ) {
            if pick.len() == q {
                found.push(pick.clone());
                return;
            }
            for i in start..pairs.len() {
                pick.push(pairs[i]);
                rec(pairs, i + 1, q, pick, found);
                pick.pop();
            }
        }
        let mut found = Vec::new();
        rec(&pairs, 0, q, &mut pick, &mut found);
        for edges in found {
            let g = Graph::new(p, edges).unwrap();
            if g.vertices().any(|v| g.degree(v) == 0) {
                continue;
            }
            if seen.insert(canonical_code(&TopsnutGpw::unlabelled(g.clone())).unwrap()) {
                out.push(g);
            }
        }
    }
    out
}

pub fn shuffled_copy(rng: &mut impl Rng, gpw: &TopsnutGpw) -> TopsnutGpw {
    let p = gpw.graph().order();
    let mut perm: Vec<usize> = (0..p).collect();
    perm.shuffle(rng);
    let edges: Vec<(usize, usize)> = gpw.graph().edges().map(|e| (perm[e.ends().0], perm[e.ends().1])).collect();
    let g = Graph::new(p, edges).unwrap();
    let mut labels = vec![0; p];
    for v in 0..p {
        labels[perm[v]] = gpw.vertex_label(v).unwrap();
    }
    TopsnutGpw::from_vertex_labels(g, &labels, gpw.rule()).unwrap()
}

pub fn edge(u: usize, v: usize) -> Edge {
    Edge::new(u, v)
}

pub fn labelled(g: Graph, labels: &[u64], rule: Rule) -> TopsnutGpw {
    TopsnutGpw::from_vertex_labels(g, labels, rule).unwrap()
}
