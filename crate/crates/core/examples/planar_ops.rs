//! Growing a maximal planar graph by stacking, then flipping, splitting and
//! pasting.

use topsnut::graph::Edge;
use topsnut::planar::{
    count_flippable, flip_edge, recursive_mpg, single_edge_paste, split_vertex, to_embedding_text, FacePolicy,
    PlanarEmbedding,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = recursive_mpg(4, &FacePolicy::Newest)?;
    println!("stacked: p={} q={} euler={}", g.order(), g.size(), g.euler());
    print!("{}", to_embedding_text(&g));
    println!("flippable edges: {}", count_flippable(&g)?);

    let oct = PlanarEmbedding::octahedron();
    let flipped = flip_edge(&oct, Edge::new(0, 1))?;
    let back =
        flip_edge(&flipped, flipped.graph().edges().find(|e| !oct.graph().has_edge(e.ends().0, e.ends().1)).unwrap())?;
    println!("flip then flip back restores the edge set: {}", back.graph() == oct.graph());

    let split = split_vertex(&oct, 0, 2)?;
    println!("split vertex 0 of the octahedron: p={} q={}", split.order(), split.size());

    let k4 = PlanarEmbedding::tetrahedron();
    let o = k4.outer_face().to_vec();
    let pasted = single_edge_paste(&k4, (o[0], o[1]), &k4, (o[1], o[0]))?;
    println!("two K4 pasted on an edge: p={} q={}", pasted.order(), pasted.size());
    Ok(())
}
