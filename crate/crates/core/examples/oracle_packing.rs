//! Exact packing numbers next to the residue-class packing and ceil(k).

use tripack::bounds::k_value;
use tripack::generators::{complete_multipartite, cycle, equality_family, random_k4_free};
use tripack::graph::Graph;
use tripack::oracle::max_packing_exact;
use tripack::packing::extract_packing;
use tripack::partition::build_greedy_partition;

fn main() {
    let mut graphs: Vec<(String, Graph)> = vec![
        ("K_{1,2,2}".into(), complete_multipartite(&[1, 2, 2]).unwrap()),
        ("octahedron".into(), complete_multipartite(&[2, 2, 2]).unwrap()),
        ("K_{3,5}+C5".into(), equality_family(3, &cycle(5).unwrap()).unwrap()),
        ("K_{2,2,3}".into(), complete_multipartite(&[2, 2, 3]).unwrap()),
    ];
    for seed in 0..4 {
        graphs.push((format!("random n=9 seed={seed}"), random_k4_free(9, 0.7, seed).unwrap()));
    }
    println!("graph\tceil(k)\tpacking\texact");
    for (name, g) in &graphs {
        let pk = extract_packing(g, &build_greedy_partition(g)).unwrap();
        match max_packing_exact(g) {
            Ok(te) => println!("{name}\t{}\t{}\t{te}", k_value(g).ceil(), pk.size),
            Err(e) => println!("{name}\t{}\t{}\t({e})", k_value(g).ceil(), pk.size),
        }
    }
}
