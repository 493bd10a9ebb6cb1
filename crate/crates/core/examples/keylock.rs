//! A twin odd-graceful key and its locks, and a password read off a walk.

use topsnut::graph::{Graph, Rule, TopsnutGpw};
use topsnut::keylock::{authenticate, derive_alphanumeric, enumerate_locks, AuthRule, KeyLockPair};
use topsnut::planar::PlanarEmbedding;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // P4 labelled 0-5-2-3 has odd edge labels 5, 3, 1.
    let key = TopsnutGpw::from_vertex_labels(Graph::path(4), &[0, 5, 2, 3], Rule::TwinOddGraceful)?;
    let candidates = [Graph::path(4), Graph::star(3)];
    let locks = enumerate_locks(&key, &candidates)?;
    println!("{} locks open with this key", locks.len());
    for lock in locks.iter().take(3) {
        println!("  lock {:?}", lock.vertex_labels().unwrap());
        let pair = KeyLockPair { key: key.clone(), lock: lock.clone(), rule: AuthRule::TwinOddGraceful };
        assert!(authenticate(&pair)?);
    }

    let emb = PlanarEmbedding::wheel(5)?;
    let labels: Vec<u64> = (0..emb.order() as u64).map(|v| 10 + v).collect();
    let gpw = TopsnutGpw::from_vertex_labels(emb.graph().clone(), &labels, Rule::Free)?;
    println!("walk 1,0,3: {}", derive_alphanumeric(&emb, &gpw, &[1, 0, 3])?);
    println!("walk 3,0,1: {}", derive_alphanumeric(&emb, &gpw, &[3, 0, 1])?);
    Ok(())
}
