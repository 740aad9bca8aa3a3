//! Split the triangles of a K4-free graph into residue classes and take the
//! largest one as an edge-disjoint packing.

use tripack::bounds::k_value;
use tripack::generators::{complete_multipartite, random_k4_free};
use tripack::graph::Graph;
use tripack::packing::{extract_packing, residue_classes};
use tripack::partition::build_greedy_partition;

fn report(name: &str, g: &Graph) {
    let p = build_greedy_partition(g);
    let classes = residue_classes(g, &p).unwrap();
    let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    let pk = extract_packing(g, &p).unwrap();
    println!(
        "{name}: t = {}, r = {}, class sizes {sizes:?}, packing {} (>= ceil(t/r) = {}, ceil(k) = {})",
        g.triangle_count(),
        p.r(),
        pk.size,
        pk.bound,
        k_value(g).ceil()
    );
    println!("  {}", serde_json::to_string(&pk).unwrap());
}

fn main() {
    report("octahedron", &complete_multipartite(&[2, 2, 2]).unwrap());
    report("K_{1,2,2}", &complete_multipartite(&[1, 2, 2]).unwrap());
    report("K_{3,3,3}", &complete_multipartite(&[3, 3, 3]).unwrap());
    report("random n=16", &random_k4_free(16, 0.8, 7).unwrap());
}
