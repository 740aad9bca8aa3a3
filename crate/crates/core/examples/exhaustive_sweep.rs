//! Exhaustive sweep over all labeled graphs on n vertices.
//!
//!     cargo run --release --example exhaustive_sweep -- 6 [check,...]

use std::time::Instant;

use tripack::explorer::{exhaustive_sweep, Check, ExploreOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(5, |s| s.parse().expect("n"));
    let opts = match args.next() {
        Some(list) => ExploreOptions::with_checks(list.split(',').map(|c| c.parse::<Check>().expect("check id"))),
        None => ExploreOptions::default(),
    };
    let start = Instant::now();
    let report = exhaustive_sweep(n, &opts).expect("n within budget");
    eprintln!("n = {n}: {} graphs in {:.2?}", report.graphs, start.elapsed());
    for (c, s) in &report.checks {
        eprintln!("  {c:<12} checked {:>9}  failed {:>3}  equality {:>7}", s.checked, s.failed, s.equality);
    }
    println!("{}", report.to_json());
}
