//! Named graph families and seeded random K4-free graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Generator behind every seeded construction here.
pub const RNG_NAME: &str = "ChaCha8Rng";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("inner graph contains a triangle")]
    InnerHasTriangle,
    #[error("edge probability {0} is not in [0, 1]")]
    BadProbability(f64),
}

/// Complete bipartite graph with parts `floor(n/2)` and `ceil(n/2)`.
pub fn turan2(n: usize) -> Result<Graph, GraphError> {
    complete_multipartite(&[n / 2, n - n / 2])
}

/// Complete multipartite graph; part `i` occupies a contiguous id range in
/// the given order. Zero-size parts are allowed.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph, GraphError> {
    let part: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat_n(i, c))
        .collect();
    let n = part.len();
    let g = Graph::from_edges(
        n,
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| part[u] != part[v]),
    )?;
    let (mut e1, mut e2, mut e3) = (0usize, 0usize, 0usize);
    for &c in sizes {
        e3 += c * e2;
        e2 += c * e1;
        e1 += c;
    }
    assert_eq!(g.edge_count(), e2, "edge count of complete multipartite {sizes:?}");
    assert_eq!(g.triangle_count(), e3, "triangle count of complete multipartite {sizes:?}");
    Ok(g)
}

/// `K_{r, m}` with the triangle-free `inner` (on `m` vertices) placed on
/// the `m` side. Vertices `0..r` form the independent side.
pub fn equality_family(r: usize, inner: &Graph) -> Result<Graph, GeneratorError> {
    if inner.triangle_count() > 0 {
        return Err(GeneratorError::InnerHasTriangle);
    }
    let m = inner.n();
    let cross = (0..r).flat_map(|u| (r..r + m).map(move |v| (u, v)));
    let within = inner.edges().map(|(u, v)| (u + r, v + r));
    Ok(Graph::from_edges(r + m, cross.chain(within))?)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Graph::from_edges(n, (1..n).map(|v| (v - 1, v)));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

fn check_probability(p: f64) -> Result<(), GeneratorError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GeneratorError::BadProbability(p))
    }
}

/// Random subgraph of the complete 3-partite graph with the given parts
/// (contiguous ids), each cross edge kept with probability `edge_prob`.
pub fn random_tripartite_subgraph(parts: [usize; 3], edge_prob: f64, seed: u64) -> Result<Graph, GeneratorError> {
    check_probability(edge_prob)?;
    let labels: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat_n(i, c))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_subgraph(&labels, edge_prob, &mut rng)?)
}

fn random_subgraph(labels: &[usize], edge_prob: f64, rng: &mut ChaCha8Rng) -> Result<Graph, GraphError> {
    let n = labels.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if labels[u] != labels[v] && rng.random_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Random K4-free graph: every vertex picks one of three parts uniformly,
/// then each cross pair becomes an edge with probability `edge_prob`.
/// Deterministic in `(n, edge_prob, seed)`.
pub fn random_k4_free(n: usize, edge_prob: f64, seed: u64) -> Result<Graph, GeneratorError> {
    check_probability(edge_prob)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<usize> = (0..n).map(|_| rng.random_range(0..3)).collect();
    Ok(random_subgraph(&labels, edge_prob, &mut rng)?)
}
