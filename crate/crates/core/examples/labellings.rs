//! Graceful and odd-graceful labellings of small trees, their duals, and
//! the matrix view of a labelled graph.

use topsnut::graph::{graph_matrix, Graph, Rule, TopsnutGpw};
use topsnut::labelling::{
    count_labellings, dual_labelling, find_labelling, is_perfect_labelling_graph, verify_labelling, LabellingKind,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let star = Graph::star(4);
    for kind in [LabellingKind::Graceful, LabellingKind::OddGraceful, LabellingKind::SetOrderedGraceful] {
        let labels = find_labelling(&star, kind)?.expect("stars admit all three");
        println!("{kind:?}: {labels:?} ({} in total)", count_labellings(&star, kind)?);
    }

    let path = TopsnutGpw::from_vertex_labels(Graph::path(4), &[0, 3, 1, 2], Rule::Graceful)?;
    println!("P4 0-3-1-2 graceful: {}", verify_labelling(&path, LabellingKind::Graceful)?);
    let dual = dual_labelling(&path)?;
    println!("dual labels: {:?}", dual.vertex_labels().unwrap());
    print!("matrix:\n{}", graph_matrix(&path));

    println!("P5 perfect graceful: {}", is_perfect_labelling_graph(&Graph::path(5), LabellingKind::Graceful)?);
    println!("C5 perfect graceful: {}", is_perfect_labelling_graph(&Graph::cycle(5), LabellingKind::Graceful)?);
    Ok(())
}
