//! Build greedy partitions and compare with every greedy partition the
//! brute-force enumerator finds.

use tripack::generators::{complete_multipartite, cycle};
use tripack::graph::Graph;
use tripack::oracle::enumerate_greedy_partitions;
use tripack::partition::{build_greedy_partition, validate_greedy};

fn show(name: &str, g: &Graph) {
    let p = build_greedy_partition(g);
    println!("{name}: built {:?} (r = {}, valid = {:?})", p.cliques(), p.r(), validate_greedy(g, &p));
    let all = enumerate_greedy_partitions(g).expect("small graph");
    println!("  {} greedy partitions in total", all.len());
    for q in all.iter().take(6) {
        println!("    {:?}", q.cliques());
    }
}

fn main() {
    show("C5", &cycle(5).unwrap());
    show("K_{1,2,2}", &complete_multipartite(&[1, 2, 2]).unwrap());
    show("octahedron", &complete_multipartite(&[2, 2, 2]).unwrap());
    show("K_{2,3}", &complete_multipartite(&[2, 3]).unwrap());
}
