//! Emit the named families in both output formats.

use tripack::edgelist::to_edge_list;
use tripack::generators::{complete_multipartite, cycle, equality_family, random_k4_free, turan2, RNG_NAME};
use tripack::graph6::to_graph6;

fn main() {
    let t5 = turan2(5).unwrap();
    print!("{}", to_edge_list(&t5, &["family=turan2 params=5".to_string()]));
    println!();
    let fam = [
        ("multipartite 1,2,3", complete_multipartite(&[1, 2, 3]).unwrap()),
        ("equality 3 C5", equality_family(3, &cycle(5).unwrap()).unwrap()),
        ("equality 2 K2", equality_family(2, &turan2(2).unwrap()).unwrap()),
    ];
    for (name, g) in &fam {
        println!("# {name}\n{}", to_graph6(g));
    }
    for seed in 0..3 {
        let g = random_k4_free(12, 0.6, seed).unwrap();
        println!("# family=random params=12 edge_prob=0.6 seed={seed} rng={RNG_NAME}\n{}", to_graph6(&g));
    }
}
