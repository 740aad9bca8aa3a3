//! Greedy clique partitions and their generalization whose first element is
//! a blown-up clique (a complete multipartite graph whose parts are twins).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bits, mask_of, Graph};

/// Structural problems: the sets do not partition the vertex set, or the
/// caller asked for something the partition cannot support.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} appears in more than one set")]
    Overlap(usize),
    #[error("vertex {0} is not covered")]
    Uncovered(usize),
    #[error("empty set at position {0}")]
    EmptySet(usize),
    #[error("head part {part} is not symmetric: vertices {u} and {v} have different neighborhoods")]
    SymmetryViolation { part: usize, u: usize, v: usize },
    #[error("the sets partition the vertices but do not form a valid generalized greedy partition")]
    NotGreedy,
}

/// Ordered cliques `C_0, ..., C_{r-1}` covering the vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GreedyPartition {
    cliques: Vec<Vec<usize>>,
}

impl GreedyPartition {
    /// Wraps the given sets (each is sorted); no validation happens here.
    pub fn new(mut cliques: Vec<Vec<usize>>) -> Self {
        for c in &mut cliques {
            c.sort_unstable();
        }
        GreedyPartition { cliques }
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    /// Number of cliques.
    pub fn r(&self) -> usize {
        self.cliques.len()
    }

    /// `labels[v]` is the index of the clique containing `v`.
    pub fn labels(&self, n: usize) -> Vec<usize> {
        let mut labels = vec![usize::MAX; n];
        for (i, c) in self.cliques.iter().enumerate() {
            for &v in c {
                labels[v] = i;
            }
        }
        labels
    }

    /// Number of cliques with at least two vertices.
    pub fn non_singleton_count(&self) -> usize {
        self.cliques.iter().filter(|c| c.len() >= 2).count()
    }

    /// Clique sizes in order.
    pub fn sizes(&self) -> Vec<usize> {
        self.cliques.iter().map(Vec::len).collect()
    }
}

/// Generalized greedy partition: a head of pairwise completely joined,
/// independent, twin parts followed by a tail of cliques.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ggp {
    pub head: Vec<Vec<usize>>,
    pub tail: Vec<Vec<usize>>,
}

impl Ggp {
    /// Views a normal greedy partition as a ggp whose head parts are the
    /// single vertices of `C_0`.
    pub fn from_greedy(p: &GreedyPartition) -> Self {
        let mut cliques = p.cliques().iter();
        let head = cliques
            .next()
            .map(|c0| c0.iter().map(|&v| vec![v]).collect())
            .unwrap_or_default();
        Ggp {
            head,
            tail: cliques.cloned().collect(),
        }
    }

    /// Largest head part plus the number of tail cliques.
    pub fn size(&self) -> usize {
        self.head.iter().map(Vec::len).max().unwrap_or(0) + self.tail.len()
    }

    pub fn head_mask(&self) -> u64 {
        self.head.iter().fold(0, |m, p| m | mask_of(p))
    }

    /// A normal greedy partition of `g` obtained by greedily partitioning
    /// the head and keeping the tail.
    pub fn flatten(&self, g: &Graph) -> GreedyPartition {
        let mut cliques = build_within(g, self.head_mask());
        cliques.extend(self.tail.iter().cloned());
        GreedyPartition::new(cliques)
    }
}

/// Number of cliques in a ggp; see [`Ggp::size`].
pub fn ggp_size(p: &Ggp) -> usize {
    p.size()
}

fn check_cover<'a, I>(g: &Graph, sets: I) -> Result<(), PartitionError>
where
    I: IntoIterator<Item = &'a Vec<usize>>,
{
    let n = g.n();
    let mut seen = 0u64;
    for (i, set) in sets.into_iter().enumerate() {
        if set.is_empty() {
            return Err(PartitionError::EmptySet(i));
        }
        for &v in set {
            if v >= n {
                return Err(PartitionError::OutOfRange { vertex: v, n });
            }
            if seen & (1u64 << v) != 0 {
                return Err(PartitionError::Overlap(v));
            }
            seen |= 1u64 << v;
        }
    }
    match bits(g.vertex_mask() & !seen).next() {
        Some(v) => Err(PartitionError::Uncovered(v)),
        None => Ok(()),
    }
}

/// Repeatedly removes a maximum clique (lexicographically smallest among
/// ties) from the vertices in `within`; returns the cliques in
/// non-decreasing size order.
fn build_within(g: &Graph, within: u64) -> Vec<Vec<usize>> {
    let mut remaining = within;
    let mut removed = Vec::new();
    while remaining != 0 {
        let c = g.max_clique_in(remaining);
        remaining &= !c;
        removed.push(bits(c).collect());
    }
    removed.reverse();
    removed
}

/// Builds a greedy partition backwards by peeling off maximum cliques.
pub fn build_greedy_partition(g: &Graph) -> GreedyPartition {
    GreedyPartition::new(build_within(g, g.vertex_mask()))
}

/// Checks ordering, that every set is a clique, and that each prefix
/// `C_0 ∪ ... ∪ C_i` is `K_{|C_i|+1}`-free. Errors only when `p` does not
/// partition the vertex set.
pub fn validate_greedy(g: &Graph, p: &GreedyPartition) -> Result<bool, PartitionError> {
    check_cover(g, p.cliques())?;
    let sizes = p.sizes();
    if sizes.windows(2).any(|w| w[0] > w[1]) {
        return Ok(false);
    }
    let mut prefix = 0u64;
    for c in p.cliques() {
        let m = mask_of(c);
        if !g.is_clique(m) {
            return Ok(false);
        }
        prefix |= m;
        if g.has_clique(prefix, c.len() + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn head_symmetry(g: &Graph, p: &Ggp) -> Result<(), PartitionError> {
    for (i, part) in p.head.iter().enumerate() {
        let rep = part[0];
        if let Some(&v) = part.iter().find(|&&v| g.neighbors(v) != g.neighbors(rep)) {
            return Err(PartitionError::SymmetryViolation { part: i, u: rep, v });
        }
    }
    Ok(())
}

/// Full check of a generalized greedy partition. Errors only when the
/// sets do not partition the vertex set.
pub fn validate_ggp(g: &Graph, p: &Ggp) -> Result<bool, PartitionError> {
    check_cover(g, p.head.iter().chain(&p.tail))?;
    if p.head.is_empty() {
        return Ok(p.tail.is_empty());
    }
    let masks: Vec<u64> = p.head.iter().map(|part| mask_of(part)).collect();
    for (i, &m) in masks.iter().enumerate() {
        if !g.is_independent(m) {
            return Ok(false);
        }
        for &other in &masks[i + 1..] {
            if bits(m).any(|v| other & !g.neighbors(v) != 0) {
                return Ok(false);
            }
        }
    }
    if head_symmetry(g, p).is_err() {
        return Ok(false);
    }
    let mut prev = p.head.len();
    let mut prefix = p.head_mask();
    for c in &p.tail {
        if c.len() < prev {
            return Ok(false);
        }
        prev = c.len();
        let m = mask_of(c);
        if !g.is_clique(m) {
            return Ok(false);
        }
        prefix |= m;
        if g.has_clique(prefix, c.len() + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of contracting every head part of a ggp to a single vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// Normal greedy partition of the contracted graph; its first clique is
    /// `0..l0`, one vertex per head part.
    pub partition: GreedyPartition,
    /// `members[x]` lists the original vertices behind contracted vertex `x`.
    pub members: Vec<Vec<usize>>,
}

pub fn contract_head(g: &Graph, p: &Ggp) -> Result<Contraction, PartitionError> {
    check_cover(g, p.head.iter().chain(&p.tail))?;
    head_symmetry(g, p)?;
    if !validate_ggp(g, p)? {
        return Err(PartitionError::NotGreedy);
    }
    let mut members: Vec<Vec<usize>> = p.head.iter().map(|part| {
        let mut part = part.clone();
        part.sort_unstable();
        part
    }).collect();
    let head = p.head_mask();
    members.extend(bits(g.vertex_mask() & !head).map(|v| vec![v]));

    let mut new_id = vec![0usize; g.n()];
    for (x, set) in members.iter().enumerate() {
        for &v in set {
            new_id[v] = x;
        }
    }
    let rows = members
        .iter()
        .map(|set| bits(g.neighbors(set[0])).fold(0u64, |m, u| m | (1u64 << new_id[u])))
        .collect();
    let graph = Graph::from_rows(rows);

    let mut cliques = vec![(0..p.head.len()).collect::<Vec<_>>()];
    cliques.extend(
        p.tail
            .iter()
            .map(|c| c.iter().map(|&v| new_id[v]).collect()),
    );
    Ok(Contraction {
        graph,
        partition: GreedyPartition::new(cliques),
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    /// K_{1,2,2} with a=0, b1=1, b2=2, c1=3, c2=4.
    fn k122() -> Graph {
        Graph::from_edges(
            5,
            [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)],
        )
        .unwrap()
    }

    fn octahedron() -> Graph {
        Graph::from_edges(
            6,
            (0..6).flat_map(|u| (u + 1..6).filter(move |v| u / 2 != v / 2).map(move |v| (u, v))),
        )
        .unwrap()
    }

    fn gp(c: &[&[usize]]) -> GreedyPartition {
        GreedyPartition::new(c.iter().map(|s| s.to_vec()).collect())
    }

    #[test]
    fn build_examples() {
        assert_eq!(build_greedy_partition(&Graph::complete(3).unwrap()), gp(&[&[0, 1, 2]]));
        let p = build_greedy_partition(&c5());
        assert_eq!(p.sizes(), vec![1, 2, 2]);
        assert_eq!(p, gp(&[&[4], &[2, 3], &[0, 1]]));
        assert_eq!(build_greedy_partition(&k122()), gp(&[&[2, 4], &[0, 1, 3]]));
        assert_eq!(build_greedy_partition(&Graph::empty(0).unwrap()).r(), 0);
    }

    #[test]
    fn validate_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(validate_greedy(&k3, &gp(&[&[0, 1, 2]])), Ok(true));
        assert_eq!(validate_greedy(&c5(), &gp(&[&[0], &[1, 2], &[3, 4]])), Ok(true));
        assert_eq!(validate_greedy(&k3, &gp(&[&[0], &[1], &[2]])), Ok(false));
        // ordering and clique violations
        assert_eq!(validate_greedy(&c5(), &gp(&[&[1, 2], &[0], &[3, 4]])), Ok(false));
        assert_eq!(validate_greedy(&c5(), &gp(&[&[0], &[1, 3], &[2, 4]])), Ok(false));
    }

    #[test]
    fn validate_structural_errors() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(validate_greedy(&k3, &gp(&[&[0, 1]])), Err(PartitionError::Uncovered(2)));
        assert_eq!(
            validate_greedy(&k3, &gp(&[&[0, 1], &[1, 2]])),
            Err(PartitionError::Overlap(1))
        );
        assert_eq!(
            validate_greedy(&k3, &gp(&[&[0, 1, 2, 3]])),
            Err(PartitionError::OutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            validate_greedy(&k3, &gp(&[&[], &[0, 1, 2]])),
            Err(PartitionError::EmptySet(0))
        );
    }

    #[test]
    fn ggp_validation() {
        // single head part followed by the rest of a greedy partition
        let p = build_greedy_partition(&c5());
        let q = Ggp::from_greedy(&p);
        assert_eq!(validate_ggp(&c5(), &q), validate_greedy(&c5(), &p));
        assert_eq!(q.size(), p.r());

        let oct = Ggp {
            head: vec![vec![0, 1], vec![2, 3], vec![4, 5]],
            tail: vec![],
        };
        assert_eq!(validate_ggp(&octahedron(), &oct), Ok(true));
        assert_eq!(oct.size(), 2);

        // two head parts with no edges between them
        let e = Graph::empty(2).unwrap();
        let bad = Ggp { head: vec![vec![0], vec![1]], tail: vec![] };
        assert_eq!(validate_ggp(&e, &bad), Ok(false));
        // head part whose members are not twins
        let bad = Ggp { head: vec![vec![0, 2]], tail: vec![vec![1, 3], vec![4]] };
        assert_eq!(validate_ggp(&c5(), &bad), Ok(false));
    }

    #[test]
    fn ggp_size_examples() {
        let p = Ggp { head: vec![vec![4, 1], vec![0]], tail: vec![vec![2, 3]] };
        assert_eq!(ggp_size(&p), 3);
        let p = Ggp { head: vec![vec![0], vec![1], vec![2]], tail: vec![vec![3, 4, 5]; 2] };
        assert_eq!(ggp_size(&p), 1 + 2);
    }

    #[test]
    fn contraction_examples() {
        let oct = Ggp { head: vec![vec![0, 1], vec![2, 3], vec![4, 5]], tail: vec![] };
        let c = contract_head(&octahedron(), &oct).unwrap();
        assert_eq!(c.graph, Graph::complete(3).unwrap());
        assert_eq!(c.partition, gp(&[&[0, 1, 2]]));

        let p = build_greedy_partition(&c5());
        let c = contract_head(&c5(), &Ggp::from_greedy(&p)).unwrap();
        assert_eq!(c.graph.edge_count(), 5);
        assert_eq!(c.members, vec![vec![4], vec![0], vec![1], vec![2], vec![3]]);

        // C5 after v2 became a copy of v5: head {v5, v2}, {v1}; tail {v3, v4}
        let g = c5().replace_by_copy(1, 4).unwrap();
        let q = Ggp { head: vec![vec![1, 4], vec![0]], tail: vec![vec![2, 3]] };
        assert_eq!(validate_ggp(&g, &q), Ok(true));
        let c = contract_head(&g, &q).unwrap();
        assert_eq!(c.graph.n(), 4);
        // merged vertex 0 is adjacent to v1 (new 1) and v4 (new 3)
        assert_eq!(bits(c.graph.neighbors(0)).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(validate_greedy(&c.graph, &c.partition), Ok(true));
    }

    #[test]
    fn contraction_detects_asymmetry() {
        let bad = Ggp { head: vec![vec![0, 2]], tail: vec![vec![1, 3], vec![4]] };
        assert!(matches!(
            contract_head(&c5(), &bad),
            Err(PartitionError::SymmetryViolation { part: 0, .. })
        ));
    }

    #[test]
    fn flatten_matches_size() {
        let oct = Ggp { head: vec![vec![0, 1], vec![2, 3], vec![4, 5]], tail: vec![] };
        let flat = oct.flatten(&octahedron());
        assert_eq!(validate_greedy(&octahedron(), &flat), Ok(true));
        assert_eq!(flat.r(), oct.size());
    }
}
