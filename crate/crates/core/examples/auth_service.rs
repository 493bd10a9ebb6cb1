//! A two-round login against the authentication service, in process.
//! Pass `--serve` to expose it over HTTP on port 8080 instead.

use std::sync::Arc;

use topsnut::authd::{serve, Authd, RoundOutcome, Store};
use topsnut::graph::{Graph, Rule, TopsnutGpw};
use topsnut::keylock::AuthRule;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let svc = Authd::new(Store::in_memory(), vec![Graph::path(3)])?;
    let twin = |l: &[u64]| TopsnutGpw::from_vertex_labels(Graph::path(3), l, Rule::TwinOddGraceful);
    svc.register(
        "alice",
        &[(twin(&[2, 3, 0])?, AuthRule::TwinOddGraceful), (twin(&[0, 1, 4])?, AuthRule::MatrixEquality)],
    )?;

    let (session, challenge) = svc.start_session("alice")?;
    println!("round {} template: {:?}", challenge.round, challenge.template.map(|g| g.size()));
    let (_, out) = svc.submit_round(&session.session_id, &twin(&[0, 1, 4])?)?;
    if let RoundOutcome::Continue(next) = out {
        println!("round 1 passed, now at round {}", next.round);
    }
    let (s, out) = svc.submit_round(&session.session_id, &twin(&[4, 1, 0])?)?;
    assert_eq!(out, RoundOutcome::Accepted);
    println!("round 2: {out:?} after {} attempts", s.attempts);

    if std::env::args().any(|a| a == "--serve") {
        let rt = tokio::runtime::Runtime::new()?;
        rt.block_on(serve(Arc::new(svc), ([127, 0, 0, 1], 8080).into()))?;
    }
    Ok(())
}
