//! TSV table of n, e, t, r, 4k, 4f, 4g for a few families, plus the closed
//! form for complete multipartite graphs.

use tripack::bounds::{g_value, multipartite_g, ReportRow};
use tripack::generators::{complete_multipartite, cycle, equality_family, turan2};
use tripack::oracle::max_packing_exact;
use tripack::packing::extract_packing;
use tripack::partition::build_greedy_partition;

fn main() {
    let graphs = vec![
        ("K3", complete_multipartite(&[1, 1, 1]).unwrap()),
        ("C5", cycle(5).unwrap()),
        ("T2(6)", turan2(6).unwrap()),
        ("K_{1,2,2}", complete_multipartite(&[1, 2, 2]).unwrap()),
        ("octahedron", complete_multipartite(&[2, 2, 2]).unwrap()),
        ("K_{2,3}+edge", equality_family(2, &turan2(2).unwrap()).unwrap()),
    ];
    println!("graph\t{}", ReportRow::TSV_HEADER);
    for (name, g) in &graphs {
        let p = build_greedy_partition(g);
        let mut row = ReportRow::new(g, &p);
        row.packing_size = extract_packing(g, &p).ok().map(|pk| pk.size);
        row.oracle_max = max_packing_exact(g).ok();
        println!("{name}\t{}", row.to_tsv());
    }
    println!();
    println!("sizes\tclosed form\t4g");
    for sizes in [vec![1, 2, 3], vec![1, 1, 1, 1], vec![1, 2, 2, 3], vec![2, 2, 2, 2]] {
        let g = complete_multipartite(&sizes).unwrap();
        let top = *sizes.last().unwrap();
        println!("{sizes:?}\t{}\t{}", multipartite_g(&sizes).unwrap(), g_value(&g, top));
    }
}
