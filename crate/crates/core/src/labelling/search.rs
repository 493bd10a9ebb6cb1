use std::ops::ControlFlow;

use super::{LabelError, LabellingKind, SearchBudget, SearchOutcome};
use crate::graph::{Graph, Labelling, TopsnutGpw, Vertex};

/// Largest order [`count_labellings`] accepts.
pub const COUNT_CAP: usize = 12;

/// Placement order: the highest-degree vertex first, then repeatedly the
/// unplaced vertex with the most placed neighbours, ties broken by degree
/// (descending) and id (ascending). Keeps each new vertex constrained by as
/// many edges as possible.
fn placement_order(g: &Graph) -> Vec<Vertex> {
    let p = g.order();
    let mut placed = vec![false; p];
    let mut back = vec![0usize; p];
    let mut order = Vec::with_capacity(p);
    for _ in 0..p {
        let v = (0..p)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| (back[a], g.degree(a)).cmp(&(back[b], g.degree(b))).then(b.cmp(&a)))
            .expect("an unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            back[w] += 1;
        }
    }
    order
}

struct Backtrack<'a, F> {
    kind: LabellingKind,
    q: usize,
    max: u64,
    order: Vec<Vertex>,
    earlier: Vec<Vec<Vertex>>,
    labels: Vec<u64>,
    vertex_used: Vec<bool>,
    edge_used: Vec<bool>,
    nodes: u64,
    node_limit: u64,
    out_of_budget: bool,
    visit: F,
    _g: &'a Graph,
}

impl<F: FnMut(&[u64]) -> ControlFlow<()>> Backtrack<'_, F> {
    fn run(&mut self, k: usize) -> ControlFlow<()> {
        if k == self.order.len() {
            return (self.visit)(&self.labels);
        }
        let v = self.order[k];
        let mut diffs: Vec<u64> = Vec::with_capacity(self.earlier[k].len());
        for x in 0..=self.max {
            if self.vertex_used[x as usize] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.node_limit {
                self.out_of_budget = true;
                return ControlFlow::Break(());
            }
            diffs.clear();
            let mut ok = true;
            for &w in &self.earlier[k] {
                let d = x.abs_diff(self.labels[w]);
                if !self.kind.edge_label_allowed(d, self.q) || self.edge_used[d as usize] || diffs.contains(&d) {
                    ok = false;
                    break;
                }
                diffs.push(d);
            }
            if !ok {
                continue;
            }
            self.labels[v] = x;
            self.vertex_used[x as usize] = true;
            for &d in &diffs {
                self.edge_used[d as usize] = true;
            }
            let flow = self.run(k + 1);
            for &d in &diffs {
                self.edge_used[d as usize] = false;
            }
            self.vertex_used[x as usize] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Depth-first enumeration of the labellings of `g` of the given kind, in a
/// fixed deterministic order. `visit` sees the vertex labels indexed by vertex
/// and may stop the search. Returns `(nodes, completed)`, where `completed` is
/// false if the node budget ran out.
pub fn for_each_labelling<F>(
    g: &Graph,
    kind: LabellingKind,
    node_limit: u64,
    visit: F,
) -> Result<(u64, bool), LabelError>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    let q = g.size();
    if q == 0 {
        return Err(LabelError::NoEdges);
    }
    let sides = g.bipartition();
    if kind == LabellingKind::SetOrderedGraceful && sides.is_none() {
        return Err(LabelError::NotBipartite);
    }
    let max = kind.max_label(q);
    if (max as usize + 1) < g.order() {
        return Ok((0, true));
    }
    let order = placement_order(g);
    let mut pos = vec![0; g.order()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let earlier = order.iter().enumerate().map(|(i, &v)| g.neighbors(v).filter(|&w| pos[w] < i).collect()).collect();

    let mut visit = visit;
    let filtered = |labels: &[u64]| {
        if kind == LabellingKind::SetOrderedGraceful && !super::set_ordered(g, labels) {
            return ControlFlow::Continue(());
        }
        visit(labels)
    };
    let mut bt = Backtrack {
        kind,
        q,
        max,
        order,
        earlier,
        labels: vec![0; g.order()],
        vertex_used: vec![false; max as usize + 1],
        edge_used: vec![false; max as usize + 1],
        nodes: 0,
        node_limit,
        out_of_budget: false,
        visit: filtered,
        _g: g,
    };
    let _ = bt.run(0);
    Ok((bt.nodes, !bt.out_of_budget))
}

/// Labellings of `g` of the given kind, up to the budget. Each carries the
/// induced edge labels and the kind's rule tag.
pub fn search_labellings(
    g: &Graph,
    kind: LabellingKind,
    budget: SearchBudget,
) -> Result<SearchOutcome<Labelling>, LabelError> {
    budget.check()?;
    let mut found = Vec::new();
    let (nodes, complete) = for_each_labelling(g, kind, budget.node_limit, |labels| {
        let gpw = TopsnutGpw::from_vertex_labels(g.clone(), labels, kind.rule()).expect("labels cover every vertex");
        found.push(gpw.into_parts().1);
        match budget.max_solutions {
            Some(n) if found.len() >= n => ControlFlow::Break(()),
            _ => ControlFlow::Continue(()),
        }
    })?;
    Ok(SearchOutcome { found, complete, nodes })
}

/// First labelling in search order, if one exists.
pub fn find_labelling(g: &Graph, kind: LabellingKind) -> Result<Option<Vec<u64>>, LabelError> {
    let mut first = None;
    for_each_labelling(g, kind, u64::MAX, |labels| {
        first = Some(labels.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(first)
}

/// Number of distinct labellings of `g` (as vertex-label vectors).
pub fn count_labellings(g: &Graph, kind: LabellingKind) -> Result<u64, LabelError> {
    if g.order() > COUNT_CAP {
        return Err(LabelError::Capacity { size: g.order(), cap: COUNT_CAP });
    }
    let mut n = 0u64;
    for_each_labelling(g, kind, u64::MAX, |_| {
        n += 1;
        ControlFlow::Continue(())
    })?;
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labelling::verify_vertex_labels;

    fn brute_force(g: &Graph, kind: LabellingKind) -> Vec<Vec<u64>> {
        fn rec(g: &Graph, kind: LabellingKind, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if cur.len() == g.order() {
                if verify_vertex_labels(g, cur, kind).unwrap() {
                    out.push(cur.clone());
                }
                return;
            }
            for x in 0..=max {
                if !cur.contains(&x) {
                    cur.push(x);
                    rec(g, kind, max, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(g, kind, kind.max_label(g.size()), &mut Vec::new(), &mut out);
        out
    }

    fn all_labels(g: &Graph, kind: LabellingKind) -> Vec<Vec<u64>> {
        let mut v = Vec::new();
        for_each_labelling(g, kind, u64::MAX, |l| {
            v.push(l.to_vec());
            ControlFlow::Continue(())
        })
        .unwrap();
        v
    }

    #[test]
    fn p2_graceful() {
        let mut got = all_labels(&Graph::path(2), LabellingKind::Graceful);
        got.sort();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(count_labellings(&Graph::path(2), LabellingKind::Graceful), Ok(2));
    }

    #[test]
    fn star_matches_brute_force() {
        let g = Graph::star(3);
        let mut got = all_labels(&g, LabellingKind::Graceful);
        got.sort();
        let want = brute_force(&g, LabellingKind::Graceful);
        assert_eq!(got, want);
        // centre 0 or 3, leaves any order
        assert_eq!(want.len(), 12);
    }

    #[test]
    fn cycles_c4_c5() {
        let c4 = brute_force(&Graph::cycle(4), LabellingKind::Graceful);
        let c5 = brute_force(&Graph::cycle(5), LabellingKind::Graceful);
        assert!(!c4.is_empty());
        assert!(c5.is_empty());
        assert_eq!(count_labellings(&Graph::cycle(4), LabellingKind::Graceful), Ok(c4.len() as u64));
        assert_eq!(count_labellings(&Graph::cycle(5), LabellingKind::Graceful), Ok(0));
    }

    #[test]
    fn set_ordered_subset_of_graceful() {
        let g = Graph::path(5);
        let so = all_labels(&g, LabellingKind::SetOrderedGraceful);
        let gr = all_labels(&g, LabellingKind::Graceful);
        assert!(!so.is_empty() && so.len() < gr.len());
        assert!(so.iter().all(|l| gr.contains(l)));
        assert_eq!(
            for_each_labelling(&Graph::cycle(3), LabellingKind::SetOrderedGraceful, 10, |_| ControlFlow::Continue(())),
            Err(LabelError::NotBipartite)
        );
    }

    #[test]
    fn budget_flags_partial_results() {
        let out = search_labellings(
            &Graph::path(6),
            LabellingKind::Graceful,
            SearchBudget { max_solutions: None, node_limit: 5 },
        )
        .unwrap();
        assert!(!out.complete);
        let out = search_labellings(&Graph::path(6), LabellingKind::Graceful, SearchBudget::solutions(3)).unwrap();
        assert_eq!(out.found.len(), 3);
        assert!(out.complete);
        assert_eq!(
            search_labellings(&Graph::path(3), LabellingKind::Graceful, SearchBudget::solutions(0)),
            Err(LabelError::InvalidBudget)
        );
    }

    #[test]
    fn emission_order_is_deterministic() {
        let g = Graph::star(4);
        assert_eq!(all_labels(&g, LabellingKind::OddGraceful), all_labels(&g, LabellingKind::OddGraceful));
    }

    #[test]
    fn count_cap() {
        assert_eq!(
            count_labellings(&Graph::path(13), LabellingKind::Graceful),
            Err(LabelError::Capacity { size: 13, cap: 12 })
        );
    }
}
