//! graph6 checked against a from-scratch bit-string encoder.

use proptest::prelude::*;
use tripack::graph::Graph;
use tripack::graph6::{parse_graph6, to_graph6};

/// Straight transcription of the format: size prefix, then the upper
/// triangle column by column as a '0'/'1' string, padded to a multiple of
/// six and cut into printable characters.
fn reference_encode(n: usize, edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut bits = String::new();
    for j in 1..n {
        for i in 0..j {
            let on = edges.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i));
            bits.push(if on { '1' } else { '0' });
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push('0');
    }
    for chunk in bits.as_bytes().chunks(6) {
        let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        out.push((v + 63) as char);
    }
    out
}

fn all_graphs(n: usize) -> impl Iterator<Item = (Graph, Vec<(usize, usize)>)> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        (Graph::from_edges(n, edges.iter().copied()).unwrap(), edges)
    })
}

#[test]
fn matches_reference_for_every_graph_up_to_four_vertices() {
    for n in 0..=4 {
        for (g, edges) in all_graphs(n) {
            assert_eq!(to_graph6(&g), reference_encode(n, &edges), "n={n} edges={edges:?}");
        }
    }
}

#[test]
fn round_trips_every_graph_up_to_five_vertices() {
    let mut seen = std::collections::HashSet::new();
    for n in 0..=5 {
        for (g, _) in all_graphs(n) {
            let s = to_graph6(&g);
            assert_eq!(parse_graph6(&s).unwrap(), g);
            assert!(seen.insert(s), "two graphs share an encoding");
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            (n, edges)
        })
    })
}

proptest! {
    #[test]
    fn agrees_with_reference_up_to_64_vertices((n, edges) in arb_graph(64)) {
        let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
        let s = to_graph6(&g);
        prop_assert_eq!(&s, &reference_encode(n, &edges));
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
