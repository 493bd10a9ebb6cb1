use super::{total_labels, KeyLockError};
use crate::graph::{TopsnutGpw, Vertex};
use crate::planar::PlanarEmbedding;

/// Reads a password off a walk. Each walk vertex contributes its label with
/// a `'` marker, then the labels of all its neighbours in clockwise order,
/// starting just after the vertex the walk came from (for the first vertex,
/// just after the next walk vertex; for a one-vertex walk, at the start of
/// its rotation).
pub fn derive_alphanumeric(emb: &PlanarEmbedding, gpw: &TopsnutGpw, walk: &[Vertex]) -> Result<String, KeyLockError> {
    if emb.graph() != gpw.graph() {
        return Err(KeyLockError::GraphMismatch);
    }
    let labels = total_labels(gpw)?;
    let Some(&first) = walk.first() else {
        return Err(KeyLockError::EmptyWalk);
    };
    if first >= emb.order() {
        return Err(crate::graph::GraphError::OutOfRange { vertex: first, order: emb.order() }.into());
    }
    for w in walk.windows(2) {
        if w[1] >= emb.order() || !emb.graph().has_edge(w[0], w[1]) {
            return Err(KeyLockError::NotAWalk(w[0], w[1]));
        }
    }
    let mut out = String::new();
    for (i, &v) in walk.iter().enumerate() {
        out.push_str(&format!("{}'", labels[v]));
        let r = emb.rotation(v);
        let anchor = if i > 0 { Some(walk[i - 1]) } else { walk.get(1).copied() };
        let start = match anchor {
            Some(a) => r.iter().position(|&x| x == a).unwrap() + 1,
            None => 0,
        };
        for t in 0..r.len() {
            out.push_str(&labels[r[(start + t) % r.len()]].to_string());
        }
    }
    Ok(out)
}
