//! Edge-disjoint triangle packings in K4-free graphs.
//!
//! Graphs have at most 64 vertices and are stored as adjacency bitrows
//! ([`graph`]). A greedy clique partition ([`partition`]) splits the
//! triangles into residue classes whose largest member is an edge-disjoint
//! packing ([`packing`]); [`bounds`] holds the exact quarter-integer bound
//! expressions, [`symmetrize`] the traced symmetrization, [`oracle`] the
//! brute-force references and [`explorer`] the parallel sweeps behind the
//! `tripack` binary ([`cli`]).

pub mod bounds;
pub mod cli;
pub mod edgelist;
pub mod explorer;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod packing;
pub mod partition;
pub mod symmetrize;
