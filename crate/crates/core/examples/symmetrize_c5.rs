//! Symmetrize the 5-cycle round by round and replay the trace.
//!
//! The 5-cycle has fewer than n^2/4 edges, so by default the run stops at
//! once; the second run forces one round first.

use tripack::generators::cycle;
use tripack::partition::GreedyPartition;
use tripack::symmetrize::{run_symm_alg_with, verify_trace, InitialCheck};

fn main() {
    let g = cycle(5).unwrap();
    let p = GreedyPartition::new(vec![vec![4], vec![0, 1], vec![2, 3]]);
    for mode in [InitialCheck::StopIfNegative, InitialCheck::AfterFirstRound] {
        let trace = run_symm_alg_with(&g, &p, mode).unwrap();
        println!("{mode:?}: outcome {:?}, {} round(s)", trace.outcome, trace.rounds.len());
        for (i, round) in trace.rounds.iter().enumerate() {
            println!("  round {i}: r0 = {}, matches {:?}, merges {:?}", round.r0, round.matches, round.merges);
            for s in &round.steps {
                println!(
                    "    {:?} replaced {:?} by {:?}: e = {}, t = {}, 4f = {}, edges {:?}",
                    s.kind,
                    s.replaced,
                    s.source,
                    s.e,
                    s.t,
                    s.f4,
                    s.graph.edges().collect::<Vec<_>>()
                );
            }
            println!("    head {:?}, tail {:?}", round.partition.head, round.partition.tail);
        }
        let c = verify_trace(&trace, &g, &p).expect("trace verifies");
        println!("  verified: 4f(G0,P0) = {} <= {} <= 0", c.initial_f4, c.chain_f4);
    }
}
