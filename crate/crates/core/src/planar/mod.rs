//! Planar graphs held as rotation systems, and the surgery operations on
//! maximal planar graphs: face insertion (TEEoO), triangular edge
//! identification and subdivision, single-edge pasting, vertex split and
//! offspring, and edge flips.
//!
//! A rotation lists each vertex's neighbours clockwise. Faces are traced by
//! following a dart `(u, v)` to `(v, w)` where `w` comes right after `u` in
//! the rotation of `v`. Every constructor checks Euler's formula, so an
//! embedding value is always planar.

mod glue;
mod io;
mod local;

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::coloring::{ColorError, EdgeColoring3, VertexColoring};
use crate::graph::{Edge, Graph, GraphError, Vertex};

pub use glue::{
    edge_identify, edge_subdivide, recursive_mpg, single_edge_paste, stack_vertex, teeoo, teeoo_colored, FacePolicy,
    Piece,
};
pub use io::{parse_embedding, to_embedding_text};
pub use local::{count_flippable, flip_edge, flippable_edges, offspring_vertex, split_vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Color(#[from] ColorError),
    #[error("invalid rotation system: {0}")]
    Rotation(String),
    #[error("rotation system gives p - q + f = {0}, not 2")]
    NotPlanar(i64),
    #[error("not a triangulation: {0}")]
    NotTriangulation(String),
    #[error("no such face: {0}")]
    NoSuchFace(String),
    #[error("face {0} is the outer face")]
    OuterFace(usize),
    #[error("face {index} has {len} sides, expected 3")]
    NotTriangle { index: usize, len: usize },
    #[error("gluing path is not on the face boundary: {0}")]
    NotOnFace(String),
    #[error("colours disagree at identified corner {corner}: {left} vs {right}")]
    ColorMismatch { corner: &'static str, left: u8, right: u8 },
    #[error("vertex {vertex} has degree {degree}, need at least {need}")]
    Degree { vertex: Vertex, degree: usize, need: usize },
    #[error("rotation index {j} outside {lo}..={d}")]
    RotationIndex { j: usize, lo: usize, d: usize },
    #[error("edge {0} does not lie between two triangles")]
    Boundary(Edge),
    #[error("edge {0} has the same opposite vertex on both sides")]
    Degenerate(Edge),
    #[error("flipping {edge} would duplicate the existing edge {new}")]
    FlipParallel { edge: Edge, new: Edge },
    #[error("edge {0} is not on the outer face")]
    NotOuterEdge(Edge),
    #[error("not subdivisible: {0}")]
    NotSubdivisible(String),
    #[error("order {0} is below 5")]
    TooSmall(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A face, either by index into [`PlanarEmbedding::faces`] or by the three
/// corners of a triangular face. A triangle given in some order also fixes
/// the corner correspondence used by [`teeoo`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaceRef {
    Index(usize),
    Triangle([Vertex; 3]),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarEmbedding {
    graph: Graph,
    rot: Vec<Vec<Vertex>>,
    faces: Vec<Vec<Vertex>>,
    dart_face: HashMap<(Vertex, Vertex), usize>,
    outer: usize,
}

fn succ(rot: &[Vec<Vertex>], v: Vertex, u: Vertex) -> Vertex {
    let r = &rot[v];
    let i = r.iter().position(|&x| x == u).expect("dart in rotation");
    r[(i + 1) % r.len()]
}

type Faces = (Vec<Vec<Vertex>>, HashMap<(Vertex, Vertex), usize>);

fn trace(rot: &[Vec<Vertex>]) -> Faces {
    let mut faces = Vec::new();
    let mut dart_face = HashMap::new();
    for u in 0..rot.len() {
        for &v in &rot[u] {
            if dart_face.contains_key(&(u, v)) {
                continue;
            }
            let idx = faces.len();
            let mut face = Vec::new();
            let (mut a, mut b) = (u, v);
            while dart_face.insert((a, b), idx).is_none() {
                face.push(a);
                let c = succ(rot, b, a);
                (a, b) = (b, c);
            }
            faces.push(face);
        }
    }
    (faces, dart_face)
}

impl PlanarEmbedding {
    /// Builds an embedding from clockwise rotations, with the outer face
    /// being the face traced from the dart `outer`.
    pub fn from_rotation(rot: Vec<Vec<Vertex>>, outer: (Vertex, Vertex)) -> Result<Self, PlanarError> {
        let p = rot.len();
        let mut edges = Vec::new();
        for (v, r) in rot.iter().enumerate() {
            for (i, &w) in r.iter().enumerate() {
                if w >= p {
                    return Err(GraphError::OutOfRange { vertex: w, order: p }.into());
                }
                if r[..i].contains(&w) {
                    return Err(PlanarError::Rotation(format!("vertex {v} lists {w} twice")));
                }
                if !rot[w].contains(&v) {
                    return Err(PlanarError::Rotation(format!("{v} lists {w} but not the reverse")));
                }
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        let graph = Graph::new(p, edges)?;
        if graph.size() == 0 || !graph.is_connected() {
            return Err(PlanarError::Rotation("graph must be connected with at least one edge".into()));
        }
        let (faces, dart_face) = trace(&rot);
        let euler = p as i64 - graph.size() as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(PlanarError::NotPlanar(euler));
        }
        let outer = *dart_face
            .get(&outer)
            .ok_or_else(|| PlanarError::NoSuchFace(format!("dart {}->{} is not an edge", outer.0, outer.1)))?;
        Ok(PlanarEmbedding { graph, rot, faces, dart_face, outer })
    }

    pub fn triangle() -> Self {
        PlanarEmbedding::from_rotation(vec![vec![1, 2], vec![2, 0], vec![0, 1]], (0, 1)).expect("K3 embeds")
    }

    pub fn tetrahedron() -> Self {
        embed_triangulation(&Graph::complete(4)).expect("K4 embeds")
    }

    /// Vertices 0..6 with antipodal pairs {0,5}, {1,3}, {2,4}.
    pub fn octahedron() -> Self {
        let g = Graph::new(
            6,
            (0..6)
                .flat_map(|a| (a + 1..6).map(move |b| (a, b)))
                .filter(|&(a, b)| ![(0, 5), (1, 3), (2, 4)].contains(&(a, b))),
        )
        .expect("octahedron edges");
        embed_triangulation(&g).expect("octahedron embeds")
    }

    /// The double pyramid over an `n`-cycle `0..n`, apexes `n` and `n + 1`.
    pub fn bipyramid(n: usize) -> Result<Self, PlanarError> {
        if n < 3 {
            return Err(PlanarError::NotTriangulation(format!("bipyramid needs a cycle of length >= 3, got {n}")));
        }
        let mut edges: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        for i in 0..n {
            edges.push((i, n));
            edges.push((i, n + 1));
        }
        embed_triangulation(&Graph::new(n + 2, edges)?)
    }

    /// Hub 0 joined to the rim cycle `1..=n`; the rim is the outer face.
    pub fn wheel(n: usize) -> Result<Self, PlanarError> {
        if n < 3 {
            return Err(PlanarError::Rotation(format!("wheel needs a rim of length >= 3, got {n}")));
        }
        let next = |i: usize| i % n + 1;
        let prev = |i: usize| if i == 1 { n } else { i - 1 };
        let mut rot = vec![(1..=n).collect::<Vec<_>>()];
        for i in 1..=n {
            rot.push(vec![next(i), 0, prev(i)]);
        }
        PlanarEmbedding::from_rotation(rot, (1, 2))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn size(&self) -> usize {
        self.graph.size()
    }

    /// Clockwise neighbours of `v`.
    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rot
    }

    pub fn faces(&self) -> &[Vec<Vertex>] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &[Vertex] {
        &self.faces[i]
    }

    pub fn outer_index(&self) -> usize {
        self.outer
    }

    pub fn outer_face(&self) -> &[Vertex] {
        &self.faces[self.outer]
    }

    /// Dart from which the outer face is traced.
    pub fn outer_dart(&self) -> (Vertex, Vertex) {
        let f = self.outer_face();
        (f[0], f[1 % f.len()])
    }

    pub fn inner_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.faces.len()).filter(move |&i| i != self.outer)
    }

    /// Face to the side of the dart `u -> v`.
    pub fn face_of(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.dart_face.get(&(u, v)).copied()
    }

    /// `p - q + f`; always 2 for a valid embedding.
    pub fn euler(&self) -> i64 {
        self.order() as i64 - self.size() as i64 + self.faces.len() as i64
    }

    /// Every face is a triangle (so `q = 3p - 6` when `p >= 3`).
    pub fn is_triangulation(&self) -> bool {
        self.faces.iter().all(|f| f.len() == 3)
    }

    pub(crate) fn succ(&self, v: Vertex, u: Vertex) -> Vertex {
        succ(&self.rot, v, u)
    }

    /// The mirror image: every rotation reversed.
    pub fn mirrored(&self) -> Self {
        let rot = self.rot.iter().map(|r| r.iter().rev().copied().collect()).collect();
        let (a, b) = self.outer_dart();
        PlanarEmbedding::from_rotation(rot, (b, a)).expect("mirror of a planar embedding")
    }

    /// Same embedding with the outer face moved to the face of `dart`.
    pub fn with_outer(&self, dart: (Vertex, Vertex)) -> Result<Self, PlanarError> {
        let outer = self
            .face_of(dart.0, dart.1)
            .ok_or_else(|| PlanarError::NoSuchFace(format!("dart {}->{} is not an edge", dart.0, dart.1)))?;
        Ok(PlanarEmbedding { outer, ..self.clone() })
    }

    pub fn face_index(&self, f: &FaceRef) -> Result<usize, PlanarError> {
        match *f {
            FaceRef::Index(i) if i < self.faces.len() => Ok(i),
            FaceRef::Index(i) => Err(PlanarError::NoSuchFace(format!("index {i} of {}", self.faces.len()))),
            FaceRef::Triangle([a, b, c]) => {
                let mut want = [a, b, c];
                want.sort_unstable();
                let matches = |&i: &usize| {
                    let mut got = self.faces[i].clone();
                    got.sort_unstable();
                    got == want
                };
                let candidates: Vec<usize> =
                    [self.face_of(a, b), self.face_of(b, a)].into_iter().flatten().filter(matches).collect();
                candidates
                    .iter()
                    .copied()
                    .find(|&i| i != self.outer)
                    .or(candidates.first().copied())
                    .ok_or_else(|| PlanarError::NoSuchFace(format!("triangle {a} {b} {c}")))
            }
        }
    }

    /// The dual multigraph must be simple here (true for triangulations with
    /// `p >= 4`). Returns the dual and, for each dual edge, the primal edge
    /// it crosses.
    pub fn dual(&self) -> Result<(Graph, HashMap<Edge, Edge>), PlanarError> {
        let mut crossing = HashMap::new();
        let mut dual = Graph::empty(self.faces.len());
        for e in self.graph.edges() {
            let (u, v) = e.ends();
            let (f, g) = (self.dart_face[&(u, v)], self.dart_face[&(v, u)]);
            if f == g {
                return Err(PlanarError::Rotation(format!("edge {e} is a bridge; its dual is a loop")));
            }
            dual.insert_edge(f, g)?;
            crossing.insert(Edge::new(f, g), e);
        }
        Ok((dual, crossing))
    }
}

/// Embeds a maximal planar graph. Faces are its non-separating triangles,
/// oriented consistently by a breadth-first sweep across shared edges. The
/// outer face is the face on vertices {0, 1, 2} when there is one.
pub fn embed_triangulation(g: &Graph) -> Result<PlanarEmbedding, PlanarError> {
    let p = g.order();
    if p < 3 || g.size() != 3 * p - 6 || !g.is_connected() {
        return Err(PlanarError::NotTriangulation(format!(
            "order {p} with {} edges; need a connected graph with 3p - 6 edges",
            g.size()
        )));
    }
    if p == 3 {
        return Ok(PlanarEmbedding::triangle());
    }
    let mut tris: Vec<[Vertex; 3]> = Vec::new();
    for e in g.edges() {
        let (u, v) = e.ends();
        for w in g.neighbors(u).filter(|&w| w > v && g.has_edge(v, w)) {
            let rest: Vec<Vertex> = g.vertices().filter(|&x| x != u && x != v && x != w).collect();
            if g.induced(&rest).is_connected() {
                tris.push([u, v, w]);
            }
        }
    }
    if tris.len() != 2 * p - 4 {
        return Err(PlanarError::NotTriangulation(format!(
            "found {} facial triangles, expected {}",
            tris.len(),
            2 * p - 4
        )));
    }
    let mut by_edge: HashMap<Edge, Vec<usize>> = HashMap::new();
    for (i, t) in tris.iter().enumerate() {
        for k in 0..3 {
            by_edge.entry(Edge::new(t[k], t[(k + 1) % 3])).or_default().push(i);
        }
    }
    if let Some((e, _)) = by_edge.iter().find(|(_, fs)| fs.len() != 2) {
        return Err(PlanarError::NotTriangulation(format!("edge {e} is not on exactly two facial triangles")));
    }
    let darts = |t: &[Vertex; 3]| [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])];
    let mut oriented: Vec<Option<[Vertex; 3]>> = vec![None; tris.len()];
    oriented[0] = Some(tris[0]);
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        let t = oriented[i].unwrap();
        for (a, b) in darts(&t) {
            let j = by_edge[&Edge::new(a, b)].iter().copied().find(|&j| j != i).unwrap();
            let s = tris[j];
            let want = if darts(&s).contains(&(b, a)) { s } else { [s[0], s[2], s[1]] };
            match oriented[j] {
                None => {
                    oriented[j] = Some(want);
                    queue.push_back(j);
                }
                Some(have) if darts(&have).contains(&(b, a)) => {}
                Some(_) => return Err(PlanarError::NotTriangulation("facial triangles are not orientable".into())),
            }
        }
    }
    let mut next: HashMap<(Vertex, Vertex), Vertex> = HashMap::new();
    for t in oriented.iter().flatten() {
        let [x, y, z] = *t;
        next.insert((y, x), z);
        next.insert((z, y), x);
        next.insert((x, z), y);
    }
    let mut rot = Vec::with_capacity(p);
    for v in g.vertices() {
        let start = g.neighbors(v).next().unwrap();
        let mut r = vec![start];
        let mut cur = next[&(v, start)];
        while cur != start {
            if r.len() > g.degree(v) {
                return Err(PlanarError::NotTriangulation(format!("faces around {v} do not close up")));
            }
            r.push(cur);
            cur = next[&(v, cur)];
        }
        if r.len() != g.degree(v) {
            return Err(PlanarError::NotTriangulation(format!("vertex {v} is pinched")));
        }
        rot.push(r);
    }
    let outer = oriented
        .iter()
        .flatten()
        .find(|t| {
            let mut s = **t;
            s.sort_unstable();
            s == [0, 1, 2]
        })
        .or(oriented[0].as_ref())
        .unwrap();
    PlanarEmbedding::from_rotation(rot, (outer[0], outer[1]))
}

/// Klein edge colouring of the dual of a 4-coloured triangulation: each dual
/// edge takes the group sum of the colours at the ends of the primal edge it
/// crosses.
pub fn dual_klein_coloring(emb: &PlanarEmbedding, c: &VertexColoring) -> Result<(Graph, EdgeColoring3), PlanarError> {
    let (dual, crossing) = emb.dual()?;
    let primal = crate::coloring::klein_edge_coloring(emb.graph(), c)?;
    let colors = crossing.iter().map(|(&d, &e)| (d, primal.color(e).expect("primal edge coloured"))).collect();
    Ok((dual, EdgeColoring3::from_map(colors)))
}
