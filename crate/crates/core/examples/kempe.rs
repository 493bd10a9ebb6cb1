//! Kempe changes, Kempe classes, and the Klein-four edge colouring with its
//! mod-3 shifts.

use topsnut::coloring::{
    find_coloring, kempe_change, kempe_classes, klein_edge_coloring, shift_mod3, verify_mod3_group, Mod3EdgeLabelling,
};
use topsnut::planar::{dual_klein_coloring, PlanarEmbedding};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let oct = PlanarEmbedding::octahedron();
    let g = oct.graph();
    let c = find_coloring(g, 4).expect("planar graphs are 4-colourable");
    println!("colouring: {:?}", c.colors());

    let swapped = kempe_change(g, &c, c.color(0), c.color(1), 0)?;
    println!("after the ({}, {}) swap at 0: {:?}", c.color(0), c.color(1), swapped.colors());

    let classes = kempe_classes(g, 3)?;
    let sizes: Vec<usize> = classes.classes.iter().map(Vec::len).collect();
    println!("3-colourings of the octahedron: classes {sizes:?}, kempe graph: {}", classes.is_kempe_graph);

    // the octahedron is 4-regular, so only its cubic dual gets a proper 3-edge-colouring
    let edges = klein_edge_coloring(g, &c)?;
    let (cube, cube_edges) = dual_klein_coloring(&oct, &c)?;
    println!("klein colouring proper on the dual cube: {}", cube_edges.is_proper(&cube));
    let h1 = Mod3EdgeLabelling::from(&edges);
    let h2 = shift_mod3(&h1);
    let h3 = shift_mod3(&h2);
    println!("mod-3 law holds: {}", verify_mod3_group(&h1, &h2, &h3)?);
    Ok(())
}
