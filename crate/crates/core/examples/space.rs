//! How many passwords do trees of order 10 give?

use topsnut::space::{
    count_rooted_trees, enumerate_trees, gpw_count_class, lookup_counts, sheppard_count, CountKind, SpaceParams,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t10 = enumerate_trees(10)?.count();
    let rooted = count_rooted_trees(10);
    println!("trees of order 10: {t10}, rooted: {rooted}");

    let params = SpaceParams::labellings(sheppard_count(10)).with_exponent(18);
    let free = gpw_count_class(10, 9, &t10.into(), &params)?;
    println!("free trees:\n{free}");
    let all = gpw_count_class(10, 9, &rooted, &params)?;
    println!("rooted trees:\n{all}");

    for p in [6, 12, 24] {
        println!("graphs of order {p}: {}", lookup_counts(p, CountKind::Graphs)?);
    }
    Ok(())
}
