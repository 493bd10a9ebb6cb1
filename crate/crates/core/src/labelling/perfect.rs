use std::collections::{HashMap, HashSet};

use super::{find_labelling, LabelError, LabellingKind};
use crate::graph::{canonical_code, CanonicalCode, Edge, Graph, TopsnutGpw};

/// Largest order accepted by [`is_perfect_labelling_graph`].
pub const PERFECT_CAP: usize = 9;
const EDGE_CAP: usize = 24;

/// Whether `g` and every connected proper subgraph of `g` with at least one
/// edge admit a labelling of `kind`.
///
/// Connected edge subsets are grown one adjacent edge at a time, smallest
/// first, and each isomorphism class is searched once.
pub fn is_perfect_labelling_graph(g: &Graph, kind: LabellingKind) -> Result<bool, LabelError> {
    if g.order() > PERFECT_CAP {
        return Err(LabelError::Capacity { size: g.order(), cap: PERFECT_CAP });
    }
    if g.size() > EDGE_CAP {
        return Err(LabelError::Capacity { size: g.size(), cap: EDGE_CAP });
    }
    if g.size() == 0 {
        return Err(LabelError::NoEdges);
    }
    if !g.is_connected() {
        return Err(LabelError::Disconnected);
    }
    if !admits(g, kind)? {
        return Ok(false);
    }

    let edges: Vec<Edge> = g.edges().collect();
    let mut verdicts: HashMap<CanonicalCode, bool> = HashMap::new();
    let mut level: HashSet<u64> = (0..edges.len()).map(|i| 1u64 << i).collect();
    for _size in 1..edges.len() {
        let mut sorted: Vec<u64> = level.iter().copied().collect();
        sorted.sort_unstable();
        for &mask in &sorted {
            let chosen: Vec<Edge> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            let (sub, _) = g.edge_subgraph(&chosen);
            let code = canonical_code(&TopsnutGpw::unlabelled(sub.clone()))?;
            let ok = match verdicts.get(&code) {
                Some(&ok) => ok,
                None => {
                    let ok = admits(&sub, kind)?;
                    verdicts.insert(code, ok);
                    ok
                }
            };
            if !ok {
                return Ok(false);
            }
        }
        let mut next = HashSet::new();
        for &mask in &sorted {
            let touched: HashSet<usize> = (0..edges.len())
                .filter(|i| mask >> i & 1 == 1)
                .flat_map(|i| {
                    let (a, b) = edges[i].ends();
                    [a, b]
                })
                .collect();
            for (i, e) in edges.iter().enumerate() {
                let (a, b) = e.ends();
                if mask >> i & 1 == 0 && (touched.contains(&a) || touched.contains(&b)) {
                    next.insert(mask | 1 << i);
                }
            }
        }
        level = next;
    }
    Ok(true)
}

fn admits(g: &Graph, kind: LabellingKind) -> Result<bool, LabelError> {
    if kind == LabellingKind::OddGraceful && g.bipartition().is_none() {
        return Ok(false);
    }
    match find_labelling(g, kind) {
        Ok(found) => Ok(found.is_some()),
        Err(LabelError::NotBipartite) => Ok(false),
        Err(e) => Err(e),
    }
}
