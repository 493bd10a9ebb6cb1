//! Recursive and Fibonacci chains of labelled graphs.

use topsnut::graph::{Graph, Rule, TopsnutGpw};
use topsnut::keylock::{build_chain, AuthRule, ChainKind, ChainSeed, ChainSpec, ChainStep, KeyLockPair};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let key = TopsnutGpw::from_vertex_labels(Graph::path(3), &[0, 1, 4], Rule::TwinOddGraceful)?;
    let lock = TopsnutGpw::from_vertex_labels(Graph::path(3), &[2, 3, 0], Rule::TwinOddGraceful)?;

    let dual = ChainSpec { kind: ChainKind::Recursive, m: 4, step: ChainStep::Dual };
    for el in build_chain(&ChainSeed::Single(key.clone()), &dual)? {
        println!("recursive: {:?}", el.gpw.vertex_labels().unwrap());
    }

    let fib = ChainSpec { kind: ChainKind::Fibonacci, m: 6, step: ChainStep::LabelComplement { bound: 4 } };
    let seed = ChainSeed::Pair(KeyLockPair { key, lock, rule: AuthRule::TwinOddGraceful });
    for el in build_chain(&seed, &fib)? {
        println!("fibonacci: {:?} compatible={:?}", el.gpw.vertex_labels().unwrap(), el.compatible);
    }
    Ok(())
}
