//! Parse a graph (edge list or graph6), print its counts and the excess `k`.
//!
//!     cargo run --example parse_and_count -- 'Es\o'
//!     cargo run --example parse_and_count -- path/to/graph.txt

use tripack::bounds::k_value;
use tripack::cli::parse_graph_text;
use tripack::graph6::to_graph6;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "Es\\o".to_string());
    let text = std::fs::read_to_string(&arg).unwrap_or(arg);
    let g = parse_graph_text(&text, None)?;
    let k = k_value(&g);
    println!("graph6      {}", to_graph6(&g));
    println!("vertices    {}", g.n());
    println!("edges       {}", g.edge_count());
    println!("triangles   {}", g.triangle_count());
    println!("clique no.  {}", g.clique_number());
    println!("k           {k}  (ceil {})", k.ceil());
    for t in g.triangles() {
        println!("  triangle {t}");
    }
    Ok(())
}
