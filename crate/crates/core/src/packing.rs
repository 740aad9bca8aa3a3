//! Edge-disjoint triangles from residue classes of a greedy partition.
//!
//! Label every vertex with the index of its clique and every triangle with
//! the sum of its labels modulo `r`. In a K4-free graph two triangles that
//! share an edge always land in different classes, so the largest class is
//! an edge-disjoint family of at least `t / r` triangles.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Triangle};
use crate::partition::{validate_greedy, GreedyPartition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PackingError {
    #[error("graph contains a K4; residue classes need not be edge-disjoint")]
    NotK4Free,
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("the partition is not a greedy partition of the graph")]
    NotGreedy,
    #[error("residue class {residue} contains triangles {first} and {second} sharing an edge")]
    ClassNotEdgeDisjoint {
        residue: usize,
        first: Triangle,
        second: Triangle,
    },
}

/// An edge-disjoint family of triangles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrianglePacking {
    pub triangles: Vec<Triangle>,
    pub size: usize,
    /// Residue class the family was taken from.
    pub residue: usize,
    /// `ceil(t / r)`, the guaranteed minimum size.
    pub bound: usize,
}

fn checked_partition(g: &Graph, p: &GreedyPartition) -> Result<(), PackingError> {
    if validate_greedy(g, p)? {
        Ok(())
    } else {
        Err(PackingError::NotGreedy)
    }
}

/// Triangles grouped by `sum of clique indices mod r`; entry `i` holds class `i`.
pub fn residue_classes(g: &Graph, p: &GreedyPartition) -> Result<Vec<Vec<Triangle>>, PackingError> {
    checked_partition(g, p)?;
    Ok(classes_unchecked(g, p))
}

pub(crate) fn classes_unchecked(g: &Graph, p: &GreedyPartition) -> Vec<Vec<Triangle>> {
    let r = p.r();
    let labels = p.labels(g.n());
    let mut classes = vec![Vec::new(); r];
    for t in g.triangles() {
        let h = t.vertices().iter().map(|&v| labels[v]).sum::<usize>() % r;
        classes[h].push(t);
    }
    classes
}

/// First pair of triangles in `triangles` that share a vertex pair.
pub fn find_shared_edge(triangles: &[Triangle]) -> Option<(Triangle, Triangle)> {
    let mut owner: std::collections::HashMap<(usize, usize), Triangle> =
        std::collections::HashMap::with_capacity(3 * triangles.len());
    for &t in triangles {
        for e in t.edges() {
            if let Some(&prev) = owner.get(&e) {
                return Some((prev, t));
            }
            owner.insert(e, t);
        }
    }
    None
}

pub fn is_edge_disjoint(triangles: &[Triangle]) -> bool {
    find_shared_edge(triangles).is_none()
}

/// The largest residue class (smallest residue on ties), checked to be
/// edge-disjoint before it is returned.
pub fn extract_packing(g: &Graph, p: &GreedyPartition) -> Result<TrianglePacking, PackingError> {
    if !g.is_k4_free() {
        return Err(PackingError::NotK4Free);
    }
    checked_partition(g, p)?;
    let classes = classes_unchecked(g, p);
    let t: usize = classes.iter().map(Vec::len).sum();
    let r = p.r();
    let (residue, best) = classes
        .into_iter()
        .enumerate()
        .fold((0, Vec::new()), |(ri, best), (i, c)| {
            if c.len() > best.len() {
                (i, c)
            } else {
                (ri, best)
            }
        });
    if let Some((first, second)) = find_shared_edge(&best) {
        return Err(PackingError::ClassNotEdgeDisjoint { residue, first, second });
    }
    Ok(TrianglePacking {
        size: best.len(),
        triangles: best,
        residue,
        bound: if r == 0 { 0 } else { t.div_ceil(r) },
    })
}
