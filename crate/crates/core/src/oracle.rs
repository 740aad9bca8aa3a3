//! Brute-force ground truth for small graphs.
//!
//! Nothing here reuses the bitrow routines of [`crate::graph`] beyond
//! `has_edge`, so the counts and enumerations below can be used to check
//! those routines.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;
use crate::partition::GreedyPartition;

/// Triangle budget for [`max_packing_exact`].
pub const MAX_PACKING_TRIANGLES: usize = 64;
/// Vertex budget for [`enumerate_greedy_partitions`].
pub const MAX_ENUMERATION_VERTICES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} is {actual}, over the oracle budget of {limit}")]
    OverBudget {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
}

/// Edge and triangle counts by naive pair and triple scans.
pub fn recount(g: &Graph) -> (usize, usize) {
    let n = g.n();
    let mut e = 0;
    let mut t = 0;
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            e += 1;
            for c in b + 1..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    t += 1;
                }
            }
        }
    }
    (e, t)
}

fn naive_triangles(g: &Graph) -> Vec<[usize; 3]> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

struct PackingSearch {
    tris: Vec<[usize; 3]>,
    used: Vec<u64>,
    best: usize,
}

impl PackingSearch {
    fn free(&self, t: &[usize; 3]) -> bool {
        let [a, b, c] = *t;
        self.used[a] & ((1 << b) | (1 << c)) == 0 && self.used[b] & (1 << c) == 0
    }

    fn toggle(&mut self, t: &[usize; 3]) {
        let [a, b, c] = *t;
        for (x, y) in [(a, b), (a, c), (b, c)] {
            self.used[x] ^= 1 << y;
            self.used[y] ^= 1 << x;
        }
    }

    fn run(&mut self, start: usize, taken: usize) {
        if taken > self.best {
            self.best = taken;
        }
        let open: Vec<usize> = (start..self.tris.len()).filter(|&i| self.free(&self.tris[i])).collect();
        if taken + open.len() <= self.best {
            return;
        }
        // every open triangle needs three edges nobody else in the packing uses
        let mut edges = BTreeSet::new();
        for &i in &open {
            let [a, b, c] = self.tris[i];
            edges.extend([(a, b), (a, c), (b, c)]);
        }
        if taken + edges.len() / 3 <= self.best {
            return;
        }
        let i = open[0];
        let t = self.tris[i];
        self.toggle(&t);
        self.run(i + 1, taken + 1);
        self.toggle(&t);
        self.run(i + 1, taken);
    }
}

/// Exact maximum number of pairwise edge-disjoint triangles, by take/skip
/// backtracking over the lexicographically ordered triangle list.
pub fn max_packing_exact(g: &Graph) -> Result<usize, OracleError> {
    let tris = naive_triangles(g);
    if tris.len() > MAX_PACKING_TRIANGLES {
        return Err(OracleError::OverBudget {
            what: "triangle count",
            actual: tris.len(),
            limit: MAX_PACKING_TRIANGLES,
        });
    }
    let mut s = PackingSearch {
        tris,
        used: vec![0; g.n()],
        best: 0,
    };
    s.run(0, 0);
    Ok(s.best)
}

fn is_clique_naive(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// All maximum cliques of the subgraph induced by `remaining`, by subset scan.
fn maximum_cliques(g: &Graph, remaining: &[usize]) -> Vec<Vec<usize>> {
    let k = remaining.len();
    let mut best = 0;
    let mut found = Vec::new();
    for sub in 1u32..(1 << k) {
        let size = sub.count_ones() as usize;
        if size < best {
            continue;
        }
        let set: Vec<usize> = (0..k).filter(|&i| sub & (1 << i) != 0).map(|i| remaining[i]).collect();
        if !is_clique_naive(g, &set) {
            continue;
        }
        if size > best {
            best = size;
            found.clear();
        }
        found.push(set);
    }
    found
}

/// Sorts each run of equal-size cliques, so partitions that differ only in
/// the order of same-size cliques compare equal.
pub fn canonical(p: &GreedyPartition) -> GreedyPartition {
    let mut cliques = p.cliques().to_vec();
    let mut start = 0;
    while start < cliques.len() {
        let len = cliques[start].len();
        let end = start + cliques[start..].iter().take_while(|c| c.len() == len).count();
        cliques[start..end].sort();
        start = end;
    }
    GreedyPartition::new(cliques)
}

/// Every greedy partition, produced by all backward orders of maximum
/// clique removal and deduplicated up to reordering of equal-size cliques.
pub fn enumerate_greedy_partitions(g: &Graph) -> Result<Vec<GreedyPartition>, OracleError> {
    if g.n() > MAX_ENUMERATION_VERTICES {
        return Err(OracleError::OverBudget {
            what: "vertex count",
            actual: g.n(),
            limit: MAX_ENUMERATION_VERTICES,
        });
    }
    fn walk(g: &Graph, remaining: Vec<usize>, peeled: &mut Vec<Vec<usize>>, out: &mut BTreeSet<GreedyPartition>) {
        if remaining.is_empty() {
            let mut cliques = peeled.clone();
            cliques.reverse();
            out.insert(canonical(&GreedyPartition::new(cliques)));
            return;
        }
        for c in maximum_cliques(g, &remaining) {
            let rest = remaining.iter().copied().filter(|v| !c.contains(v)).collect();
            peeled.push(c);
            walk(g, rest, peeled, out);
            peeled.pop();
        }
    }
    let mut out = BTreeSet::new();
    walk(g, (0..g.n()).collect(), &mut Vec::new(), &mut out);
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn multipartite(sizes: &[usize]) -> Graph {
        let part: Vec<usize> = sizes.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i, c)).collect();
        let n = part.len();
        Graph::from_edges(
            n,
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| part[u] != part[v]),
        )
        .unwrap()
    }

    #[test]
    fn recount_examples() {
        assert_eq!(recount(&Graph::complete(3).unwrap()), (3, 1));
        assert_eq!(recount(&c5()), (5, 0));
        assert_eq!(recount(&multipartite(&[2, 2, 2])), (12, 8));
    }

    #[test]
    fn max_packing_examples() {
        assert_eq!(max_packing_exact(&Graph::complete(3).unwrap()), Ok(1));
        assert_eq!(max_packing_exact(&multipartite(&[2, 2, 2])), Ok(4));
        assert_eq!(max_packing_exact(&multipartite(&[1, 2, 2])), Ok(2));
        assert_eq!(max_packing_exact(&c5()), Ok(0));
        // K5 has 10 edges; 2 edge-disjoint triangles is the maximum
        assert_eq!(max_packing_exact(&Graph::complete(5).unwrap()), Ok(2));
        // K7 decomposes into the 7 lines of the Fano plane
        assert_eq!(max_packing_exact(&Graph::complete(7).unwrap()), Ok(7));
    }

    #[test]
    fn max_packing_budget() {
        // K9 has 84 triangles
        assert!(matches!(
            max_packing_exact(&Graph::complete(9).unwrap()),
            Err(OracleError::OverBudget { actual: 84, .. })
        ));
    }

    #[test]
    fn enumerate_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            enumerate_greedy_partitions(&k3).unwrap(),
            vec![GreedyPartition::new(vec![vec![0, 1, 2]])]
        );
        let k22 = multipartite(&[2, 2]);
        let all = enumerate_greedy_partitions(&k22).unwrap();
        // the two perfect matchings of the 4-cycle
        assert_eq!(all.len(), 2);
        assert!(all.iter().all(|p| p.sizes() == vec![2, 2]));
        let oct = multipartite(&[2, 2, 2]);
        let all = enumerate_greedy_partitions(&oct).unwrap();
        // 8 transversal triangles, complementary pairs: 4 partitions
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|p| p.sizes() == vec![3, 3]));
        assert!(enumerate_greedy_partitions(&Graph::empty(9).unwrap()).is_err());
    }

    #[test]
    fn canonical_sorts_equal_size_runs() {
        let p = GreedyPartition::new(vec![vec![5], vec![2], vec![3, 4], vec![0, 1]]);
        assert_eq!(
            canonical(&p),
            GreedyPartition::new(vec![vec![2], vec![5], vec![0, 1], vec![3, 4]])
        );
    }
}
