use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FaceRef, PlanarEmbedding, PlanarError};
use crate::coloring::{Color, VertexColoring};
use crate::graph::{Edge, Vertex};

/// A triangulated disc for the triangular edge operations: the embedding,
/// a proper 4-colouring, and the three outer corners in the order the
/// operation expects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub embedding: PlanarEmbedding,
    pub coloring: VertexColoring,
    pub corners: [Vertex; 3],
}

/// Face choice for [`recursive_mpg`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum FacePolicy {
    /// One of the three faces created by the previous insertion.
    #[default]
    Newest,
    FirstInner,
    Seeded(u64),
    Explicit(Vec<FaceRef>),
}

struct Glued {
    rot: Vec<Vec<Vertex>>,
    /// New id of each vertex of the second embedding.
    hmap: Vec<Vertex>,
    /// For an open path, a dart of the merged face.
    merged: (Vertex, Vertex),
}

fn face_has_path(face: &[Vertex], path: &[Vertex], closed: bool) -> bool {
    let n = face.len();
    let m = path.len();
    let steps = if closed { m } else { m - 1 };
    (0..steps).all(|i| {
        let (a, b) = (path[i], path[(i + 1) % m]);
        (0..n).any(|t| face[t] == a && face[(t + 1) % n] == b)
    })
}

/// Glues the outer face of `h` onto face `g_face` of `g`, identifying the
/// `h` vertex of each pair with its `g` vertex. The identified vertices must
/// form a path (a cycle if `closed`) along both faces; `h` is mirrored when
/// needed so the two faces run the path in opposite directions.
fn glue(
    g: &PlanarEmbedding,
    g_face: usize,
    h: &PlanarEmbedding,
    pairs: &[(Vertex, Vertex)],
    closed: bool,
) -> Result<Glued, PlanarError> {
    let gf = g.face(g_face).to_vec();
    let mut pairs = pairs.to_vec();
    let g_path = |pairs: &[(Vertex, Vertex)]| pairs.iter().map(|&(_, t)| t).collect::<Vec<_>>();
    if !face_has_path(&gf, &g_path(&pairs), closed) {
        pairs.reverse();
        if !face_has_path(&gf, &g_path(&pairs), closed) {
            return Err(PlanarError::NotOnFace(format!("{:?} on face {:?}", g_path(&pairs), gf)));
        }
    }
    let h_back: Vec<Vertex> = pairs.iter().rev().map(|&(s, _)| s).collect();
    let h = if face_has_path(h.outer_face(), &h_back, closed) {
        h.clone()
    } else {
        let m = h.mirrored();
        if !face_has_path(m.outer_face(), &h_back, closed) {
            return Err(PlanarError::NotOnFace(format!("{:?} on outer face {:?}", h_back, h.outer_face())));
        }
        m
    };
    let hf = h.outer_face();

    let mut hmap = vec![usize::MAX; h.order()];
    for &(s, t) in &pairs {
        hmap[s] = t;
    }
    let mut next = g.order();
    for v in h.graph().vertices() {
        if hmap[v] == usize::MAX {
            hmap[v] = next;
            next += 1;
        }
    }
    let mut rot = g.rotations().to_vec();
    rot.resize(next, Vec::new());
    for v in h.graph().vertices() {
        if hmap[v] >= g.order() {
            rot[hmap[v]] = h.rotation(v).iter().map(|&w| hmap[w]).collect();
        }
    }

    let m = pairs.len();
    let at = |face: &[Vertex], x: Vertex| face.iter().position(|&y| y == x).expect("path vertex on face");
    for (idx, &(s, t)) in pairs.iter().enumerate() {
        let path_nbr = |x: Vertex| {
            let before = (idx > 0 || closed).then(|| pairs[(idx + m - 1) % m].0);
            let after = (idx + 1 < m || closed).then(|| pairs[(idx + 1) % m].0);
            before == Some(x) || after == Some(x)
        };
        let i = at(&gf, t);
        let pred = gf[(i + gf.len() - 1) % gf.len()];
        let k = at(hf, s);
        let (n, p) = (hf[(k + 1) % hf.len()], hf[(k + hf.len() - 1) % hf.len()]);
        let r = h.rotation(s);
        let start = r.iter().position(|&x| x == n).unwrap();
        let mut run: VecDeque<Vertex> = VecDeque::new();
        for off in 0..r.len() {
            let x = r[(start + off) % r.len()];
            run.push_back(x);
            if x == p {
                break;
            }
        }
        if run.front().is_some_and(|&x| path_nbr(x)) {
            run.pop_front();
        }
        if run.back().is_some_and(|&x| path_nbr(x)) {
            run.pop_back();
        }
        let slot = rot[t].iter().position(|&x| x == pred).unwrap() + 1;
        rot[t].splice(slot..slot, run.into_iter().map(|x| hmap[x]));
    }

    let last = pairs[m - 1].1;
    let after = gf[(at(&gf, last) + 1) % gf.len()];
    Ok(Glued { rot, hmap, merged: (last, after) })
}

fn check_triangle(emb: &PlanarEmbedding, index: usize) -> Result<(), PlanarError> {
    match emb.face(index).len() {
        3 => Ok(()),
        len => Err(PlanarError::NotTriangle { index, len }),
    }
}

fn teeoo_mapped(
    g: &PlanarEmbedding,
    face: &FaceRef,
    h: &PlanarEmbedding,
    h_corners: Option<[Vertex; 3]>,
) -> Result<(PlanarEmbedding, Vec<Vertex>, [Vertex; 3]), PlanarError> {
    let fi = g.face_index(face)?;
    if fi == g.outer_index() {
        return Err(PlanarError::OuterFace(fi));
    }
    check_triangle(g, fi)?;
    check_triangle(h, h.outer_index())?;
    if !h.is_triangulation() {
        return Err(PlanarError::NotTriangulation("the inserted graph must be maximal planar".into()));
    }
    let corners = match *face {
        FaceRef::Triangle(t) => t,
        FaceRef::Index(_) => {
            let f = g.face(fi);
            [f[0], f[1], f[2]]
        }
    };
    let hc = match h_corners {
        Some(c) => c,
        None => {
            let f = h.outer_face();
            [f[0], f[1], f[2]]
        }
    };
    let pairs: Vec<(Vertex, Vertex)> = (0..3).map(|i| (hc[i], corners[i])).collect();
    let glued = glue(g, fi, h, &pairs, true)?;
    let emb = PlanarEmbedding::from_rotation(glued.rot, g.outer_dart())?;
    Ok((emb, glued.hmap, hc))
}

/// Places `h` inside the inner triangular face of `g`, identifying the outer
/// triangle of `h` with the face. With `FaceRef::Triangle([A, B, C])` and
/// corners `[a, b, c]` the identification is a→A, b→B, c→C; by default the
/// corners are the traced outer face of `h`. New vertices of `h` are
/// numbered after those of `g`.
pub fn teeoo(
    g: &PlanarEmbedding,
    face: &FaceRef,
    h: &PlanarEmbedding,
    h_corners: Option<[Vertex; 3]>,
) -> Result<PlanarEmbedding, PlanarError> {
    teeoo_mapped(g, face, h, h_corners).map(|(emb, _, _)| emb)
}

/// [`teeoo`] on coloured graphs. The colours of `h` are permuted to agree
/// with `g` on the identified triangle before the union is taken.
pub fn teeoo_colored(
    g: &PlanarEmbedding,
    cg: &VertexColoring,
    face: &FaceRef,
    h: &PlanarEmbedding,
    ch: &VertexColoring,
    h_corners: Option<[Vertex; 3]>,
) -> Result<(PlanarEmbedding, VertexColoring), PlanarError> {
    let cg = VertexColoring::new(g.graph(), cg.colors().to_vec(), cg.k())?;
    let ch = VertexColoring::new(h.graph(), ch.colors().to_vec(), ch.k())?;
    let (emb, hmap, hc) = teeoo_mapped(g, face, h, h_corners)?;
    let k = cg.k().max(ch.k());
    let mut perm: Vec<Option<Color>> = vec![None; k as usize];
    for &a in &hc {
        let target = cg.color(hmap[a]);
        perm[ch.color(a) as usize - 1] = Some(target);
    }
    let used: Vec<Color> = perm.iter().flatten().copied().collect();
    let mut spare = (1..=k).filter(|c| !used.contains(c));
    let perm: Vec<Color> = perm.into_iter().map(|c| c.unwrap_or_else(|| spare.next().unwrap())).collect();
    let mut colors = cg.colors().to_vec();
    colors.resize(emb.order(), 0);
    for v in h.graph().vertices() {
        colors[hmap[v]] = perm[ch.color(v) as usize - 1];
    }
    let c = VertexColoring::new(emb.graph(), colors, k)?;
    Ok((emb, c))
}

/// Adds a vertex inside an inner triangular face, joined to its corners.
/// This is [`teeoo`] with the tetrahedron; the new vertex is `g.order()`.
pub fn stack_vertex(g: &PlanarEmbedding, face: &FaceRef) -> Result<PlanarEmbedding, PlanarError> {
    teeoo(g, face, &PlanarEmbedding::tetrahedron(), None)
}

/// Starts from the triangle and stacks `n` vertices, choosing faces by
/// `policy`. The result has `n + 3` vertices and `3n + 3` edges.
pub fn recursive_mpg(n: usize, policy: &FacePolicy) -> Result<PlanarEmbedding, PlanarError> {
    let mut g = PlanarEmbedding::triangle();
    let mut rng = match policy {
        FacePolicy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };
    let mut newest: Option<(Vertex, Vertex)> = None;
    for step in 0..n {
        let fi = match policy {
            FacePolicy::Newest => match newest {
                Some((a, b)) => g.face_of(a, b).unwrap(),
                None => g.inner_faces().next().unwrap(),
            },
            FacePolicy::FirstInner => g.inner_faces().next().unwrap(),
            FacePolicy::Seeded(_) => {
                let inner: Vec<usize> = g.inner_faces().collect();
                inner[rng.as_mut().unwrap().gen_range(0..inner.len())]
            }
            FacePolicy::Explicit(faces) => {
                let f = faces.get(step).ok_or_else(|| {
                    PlanarError::NoSuchFace(format!(
                        "explicit policy lists {} faces, step {step} needs one",
                        faces.len()
                    ))
                })?;
                g.face_index(f)?
            }
        };
        let f = g.face(fi);
        // stacking into A->B->C leaves the dart C->A on the face C, A, new
        newest = Some((f[2 % f.len()], f[0]));
        g = stack_vertex(&g, &FaceRef::Index(fi))?;
    }
    Ok(g)
}

/// Identifies edge `eh` on the outer face of `h` with edge `eg` on the outer
/// face of `g`; `eh.0` goes to `eg.0` and `eh.1` to `eg.1`. The two outer
/// faces merge into the new outer face.
pub fn single_edge_paste(
    g: &PlanarEmbedding,
    eg: (Vertex, Vertex),
    h: &PlanarEmbedding,
    eh: (Vertex, Vertex),
) -> Result<PlanarEmbedding, PlanarError> {
    let on_outer = |emb: &PlanarEmbedding, (a, b): (Vertex, Vertex)| {
        let o = emb.outer_index();
        emb.outer_face().len() >= 3 && (emb.face_of(a, b) == Some(o) || emb.face_of(b, a) == Some(o))
    };
    if !on_outer(g, eg) {
        return Err(PlanarError::NotOuterEdge(Edge::new(eg.0, eg.1)));
    }
    if !on_outer(h, eh) {
        return Err(PlanarError::NotOuterEdge(Edge::new(eh.0, eh.1)));
    }
    let glued = glue(g, g.outer_index(), h, &[(eh.0, eg.0), (eh.1, eg.1)], false)?;
    PlanarEmbedding::from_rotation(glued.rot, glued.merged)
}

fn check_piece(piece: &Piece) -> Result<VertexColoring, PlanarError> {
    let emb = &piece.embedding;
    check_triangle(emb, emb.outer_index())?;
    let mut outer = emb.outer_face().to_vec();
    let mut corners = piece.corners;
    outer.sort_unstable();
    corners.sort_unstable();
    if outer != corners {
        return Err(PlanarError::NotOnFace(format!(
            "corners {:?} are not the outer face {:?}",
            piece.corners,
            emb.outer_face()
        )));
    }
    Ok(VertexColoring::new(emb.graph(), piece.coloring.colors().to_vec(), 4)?)
}

/// Glues three coloured triangulated discs. With corners `tl = [k, i, j]`,
/// `tr = [i, l, j]` and `tb = [j, k, l]`, `tl` and `tr` share the edge `ij`,
/// and `tb` is then attached along `k-j-l`. The shared vertices must carry
/// equal colours. The result has outer triangle `[k, i, l]` and the union
/// colouring.
pub fn edge_identify(tl: &Piece, tr: &Piece, tb: &Piece) -> Result<Piece, PlanarError> {
    let (cl, cr, cb) = (check_piece(tl)?, check_piece(tr)?, check_piece(tb)?);
    let [k, i, j] = tl.corners;
    let [ri, rl, rj] = tr.corners;
    let [bj, bk, bl] = tb.corners;
    let agree = |corner, left: Color, right: Color| {
        if left == right {
            Ok(())
        } else {
            Err(PlanarError::ColorMismatch { corner, left, right })
        }
    };
    agree("i", cl.color(i), cr.color(ri))?;
    agree("j", cl.color(j), cr.color(rj))?;
    agree("j", cl.color(j), cb.color(bj))?;
    agree("k", cl.color(k), cb.color(bk))?;
    agree("l", cr.color(rl), cb.color(bl))?;

    let first = glue(&tl.embedding, tl.embedding.outer_index(), &tr.embedding, &[(ri, i), (rj, j)], false)?;
    let mid = PlanarEmbedding::from_rotation(first.rot, first.merged)?;
    let mut colors = cl.colors().to_vec();
    colors.resize(mid.order(), 0);
    for v in tr.embedding.graph().vertices() {
        colors[first.hmap[v]] = cr.color(v);
    }
    let l = first.hmap[rl];

    let second = glue(&mid, mid.outer_index(), &tb.embedding, &[(bk, k), (bj, j), (bl, l)], false)?;
    let emb = PlanarEmbedding::from_rotation(second.rot, second.merged)?;
    colors.resize(emb.order(), 0);
    for v in tb.embedding.graph().vertices() {
        colors[second.hmap[v]] = cb.color(v);
    }
    let coloring = VertexColoring::new(emb.graph(), colors, 4)?;
    Ok(Piece { embedding: emb, coloring, corners: [k, i, l] })
}

/// Vertices `corners` plus every component of `g - corners` that avoids `far`.
fn part(g: &PlanarEmbedding, corners: [Vertex; 3], far: Vertex) -> Vec<Vertex> {
    let p = g.order();
    let mut comp = vec![usize::MAX; p];
    let mut far_comp = usize::MAX;
    for s in 0..p {
        if corners.contains(&s) || comp[s] != usize::MAX {
            continue;
        }
        comp[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == far {
                far_comp = s;
            }
            for w in g.graph().neighbors(u) {
                if !corners.contains(&w) && comp[w] == usize::MAX {
                    comp[w] = s;
                    queue.push_back(w);
                }
            }
        }
    }
    (0..p).filter(|&v| corners.contains(&v) || comp[v] != far_comp).collect()
}

fn restrict(
    g: &PlanarEmbedding,
    c: &VertexColoring,
    verts: &[Vertex],
    corners: [Vertex; 3],
) -> Result<Piece, PlanarError> {
    let mut index = vec![usize::MAX; g.order()];
    for (n, &v) in verts.iter().enumerate() {
        index[v] = n;
    }
    let rot: Vec<Vec<Vertex>> = verts
        .iter()
        .map(|&v| g.rotation(v).iter().filter(|&&w| index[w] != usize::MAX).map(|&w| index[w]).collect())
        .collect();
    let [a, b, cc] = corners.map(|v| index[v]);
    let emb = PlanarEmbedding::from_rotation(rot, (a, b))?;
    let mut want = [a, b, cc];
    want.sort_unstable();
    let dart = [(a, b), (b, a)]
        .into_iter()
        .find(|&(x, y)| {
            let mut f = emb.face(emb.face_of(x, y).unwrap()).to_vec();
            f.sort_unstable();
            f == want
        })
        .ok_or_else(|| PlanarError::NotSubdivisible(format!("{corners:?} does not bound a face of its part")))?;
    let embedding = emb.with_outer(dart)?;
    let coloring = VertexColoring::new(embedding.graph(), verts.iter().map(|&v| c.color(v)).collect(), 4)?;
    Ok(Piece { embedding, coloring, corners: [a, b, cc] })
}

/// Inverse of [`edge_identify`]. `cut` lists the edges `ij`, `jk`, `jl`
/// around the common vertex `j`; the pieces come back in the order
/// `tl`, `tr`, `tb` with the corner conventions of [`edge_identify`].
pub fn edge_subdivide(g: &PlanarEmbedding, c: &VertexColoring, cut: [Edge; 3]) -> Result<[Piece; 3], PlanarError> {
    let common: Vec<Vertex> = {
        let (a, b) = cut[0].ends();
        [a, b].into_iter().filter(|&v| cut[1].contains(v) && cut[2].contains(v)).collect()
    };
    let &[j] = common.as_slice() else {
        return Err(PlanarError::NotSubdivisible("cut edges must share exactly one vertex".into()));
    };
    let [i, k, l] = cut.map(|e| e.other(j));
    for e in cut.iter().copied().chain([Edge::new(k, i), Edge::new(i, l), Edge::new(k, l)]) {
        if !g.graph().has_edge(e.ends().0, e.ends().1) {
            return Err(PlanarError::NotSubdivisible(format!("edge {e} is missing")));
        }
    }
    let specs = [([k, i, j], l), ([i, l, j], k), ([j, k, l], i)];
    let parts: Vec<Vec<Vertex>> = specs.iter().map(|&(corners, far)| part(g, corners, far)).collect();
    if let Some(n) = parts.iter().position(|p| p.len() <= 3) {
        return Err(PlanarError::NotSubdivisible(format!("part {n} has no interior vertex")));
    }
    let pieces: Vec<Piece> = specs
        .iter()
        .zip(&parts)
        .map(|(&(corners, _), verts)| restrict(g, c, verts, corners))
        .collect::<Result<_, _>>()?;
    let p: usize = pieces.iter().map(|pc| pc.embedding.order()).sum();
    let q: usize = pieces.iter().map(|pc| pc.embedding.size()).sum();
    if p != g.order() + 5 || q != g.size() + 3 {
        return Err(PlanarError::NotSubdivisible("the cut does not separate the graph into three parts".into()));
    }
    let [a, b, d] = <[Piece; 3]>::try_from(pieces).unwrap();
    Ok([a, b, d])
}
