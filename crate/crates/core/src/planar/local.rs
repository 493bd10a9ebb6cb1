use super::{PlanarEmbedding, PlanarError};
use crate::graph::{Edge, GraphError, Vertex};

/// Replaces `w` by `with` in the rotation `r`.
fn replace(r: &mut [Vertex], w: Vertex, with: Vertex) {
    if let Some(x) = r.iter_mut().find(|x| **x == w) {
        *x = with;
    }
}

/// Replaces `w` by the sequence `with` in the rotation `r`.
fn splice(r: &mut Vec<Vertex>, w: Vertex, with: &[Vertex]) {
    let i = r.iter().position(|&x| x == w).expect("neighbour in rotation");
    r.splice(i..=i, with.iter().copied());
}

/// A dart of the old outer face that avoids `w`, so the outer face survives
/// local surgery at `w`.
fn outer_dart_avoiding(g: &PlanarEmbedding, w: Vertex) -> Option<(Vertex, Vertex)> {
    let f = g.outer_face();
    (0..f.len()).map(|t| (f[t], f[(t + 1) % f.len()])).find(|&(a, b)| a != w && b != w)
}

/// Tries each candidate rotation system and keeps the first planar one.
fn first_planar(
    candidates: impl IntoIterator<Item = Vec<Vec<Vertex>>>,
    outer: impl Fn(&[Vec<Vertex>]) -> (Vertex, Vertex),
) -> Result<PlanarEmbedding, PlanarError> {
    let mut last = PlanarError::NotPlanar(0);
    for rot in candidates {
        let dart = outer(&rot);
        match PlanarEmbedding::from_rotation(rot, dart) {
            Ok(emb) => return Ok(emb),
            Err(e) => last = e,
        }
    }
    Err(last)
}

fn check_index(g: &PlanarEmbedding, w: Vertex, j: usize, lo: usize) -> Result<Vec<Vertex>, PlanarError> {
    if w >= g.order() {
        return Err(GraphError::OutOfRange { vertex: w, order: g.order() }.into());
    }
    let ws = g.rotation(w).to_vec();
    let d = ws.len();
    if d < 2 {
        return Err(PlanarError::Degree { vertex: w, degree: d, need: 2 });
    }
    if j < lo || j > d {
        return Err(PlanarError::RotationIndex { j, lo, d });
    }
    Ok(ws)
}

/// Splits `w` into `w'` (keeping the id `w`) and `w''` (the new last vertex).
/// With the rotation of `w` read as `w_1 .. w_d`, `w'` keeps `w_1 .. w_j`,
/// `w''` takes `w_j .. w_d`, and `w'w''` becomes an edge.
pub fn split_vertex(g: &PlanarEmbedding, w: Vertex, j: usize) -> Result<PlanarEmbedding, PlanarError> {
    let ws = check_index(g, w, j, 1)?;
    let d = ws.len();
    let w2 = g.order();
    let mut base = g.rotations().to_vec();
    base[w] = ws[..j].iter().copied().chain([w2]).collect();
    base.push(ws[j - 1..].iter().copied().chain([w]).collect());
    for &x in &ws[j..d] {
        replace(&mut base[x], w, w2);
    }
    let wj = ws[j - 1];
    let candidates = [[w, w2], [w2, w]].map(|order| {
        let mut rot = base.clone();
        splice(&mut rot[wj], w, &order);
        rot
    });
    let keep = outer_dart_avoiding(g, w);
    first_planar(candidates, |rot| keep.unwrap_or((w, rot[w][0])))
}

/// Gives `w` two children `w'` and `w''` (new ids `p` and `p + 1`). `w`
/// keeps its edges to `w_1` and `w_j` and loses the rest; `w'` is joined to
/// `w_1 .. w_j` and `w''` to `w_j .. w_d`. The edge count grows by five.
pub fn offspring_vertex(g: &PlanarEmbedding, w: Vertex, j: usize) -> Result<PlanarEmbedding, PlanarError> {
    let ws = check_index(g, w, j, 2)?;
    let d = ws.len();
    let (w1, w2) = (g.order(), g.order() + 1);
    let (first, wj) = (ws[0], ws[j - 1]);
    let mut base = g.rotations().to_vec();
    base[w] = vec![first, w1, wj, w2];
    base.push(ws[..j].iter().copied().chain([w]).collect());
    base.push(ws[j - 1..].iter().copied().chain([w]).collect());
    for &x in &ws[1..j - 1] {
        replace(&mut base[x], w, w1);
    }
    for &x in &ws[j..d] {
        replace(&mut base[x], w, w2);
    }
    let mut candidates = Vec::new();
    for at_first in [[w, w1], [w1, w]] {
        for at_wj in [[w1, w, w2], [w2, w, w1]] {
            let mut rot = base.clone();
            splice(&mut rot[first], w, &at_first);
            splice(&mut rot[wj], w, &at_wj);
            candidates.push(rot);
        }
    }
    let keep = outer_dart_avoiding(g, w);
    first_planar(candidates, |rot| keep.unwrap_or((w, rot[w][0])))
}

/// The two opposite vertices of `uv` if it can be flipped.
fn flip_ends(g: &PlanarEmbedding, e: Edge) -> Result<(Vertex, Vertex), PlanarError> {
    let (u, v) = e.ends();
    if !g.graph().has_edge(u, v) {
        return Err(GraphError::MissingEdge(e).into());
    }
    let tri = |a, b| g.face(g.face_of(a, b).unwrap()).len() == 3;
    if !tri(u, v) || !tri(v, u) {
        return Err(PlanarError::Boundary(e));
    }
    let (x, y) = (g.succ(v, u), g.succ(u, v));
    if x == y {
        return Err(PlanarError::Degenerate(e));
    }
    if g.graph().has_edge(x, y) {
        return Err(PlanarError::FlipParallel { edge: e, new: Edge::new(x, y) });
    }
    Ok((x, y))
}

/// Replaces the diagonal `uv` of the quadrilateral formed by its two
/// triangles with the other diagonal `xy`.
pub fn flip_edge(g: &PlanarEmbedding, e: Edge) -> Result<PlanarEmbedding, PlanarError> {
    let (x, y) = flip_ends(g, e)?;
    let (u, v) = e.ends();
    let mut rot = g.rotations().to_vec();
    rot[u].retain(|&t| t != v);
    rot[v].retain(|&t| t != u);
    splice(&mut rot[x], v, &[v, y]);
    splice(&mut rot[y], u, &[u, x]);
    let outer = match g.outer_dart() {
        d if d == (u, v) => (v, x),
        d if d == (v, u) => (u, y),
        d => d,
    };
    PlanarEmbedding::from_rotation(rot, outer)
}

pub fn flippable_edges(g: &PlanarEmbedding) -> Vec<Edge> {
    g.graph().edges().filter(|&e| flip_ends(g, e).is_ok()).collect()
}

/// Number of flippable edges; defined for order at least 5.
pub fn count_flippable(g: &PlanarEmbedding) -> Result<usize, PlanarError> {
    if g.order() < 5 {
        return Err(PlanarError::TooSmall(g.order()));
    }
    Ok(flippable_edges(g).len())
}
