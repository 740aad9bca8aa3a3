//! Exact bound arithmetic in quarter units.
//!
//! `n^2/4` is fractional for odd `n`, and the interesting cases of every
//! inequality here are the equality cases, so all values are carried as
//! integers equal to four times the rational value.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::partition::GreedyPartition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("graph contains a K4")]
    NotK4Free,
    #[error("graph contains a triangle")]
    HasTriangle,
    #[error("part sizes must be positive and non-decreasing, got {0:?}")]
    BadPartSizes(Vec<usize>),
}

/// An exact multiple of 1/4, stored as four times its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QuarterInt(i64);

impl QuarterInt {
    pub const ZERO: QuarterInt = QuarterInt(0);

    pub const fn from_quarters(q: i64) -> Self {
        QuarterInt(q)
    }

    pub const fn from_int(v: i64) -> Self {
        QuarterInt(4 * v)
    }

    /// Four times the represented value.
    pub const fn quarters(self) -> i64 {
        self.0
    }

    /// Smallest integer not below the value.
    pub const fn ceil(self) -> i64 {
        -((-self.0).div_euclid(4))
    }

    pub const fn floor(self) -> i64 {
        self.0.div_euclid(4)
    }

    pub const fn is_integral(self) -> bool {
        self.0 % 4 == 0
    }
}

impl Add for QuarterInt {
    type Output = QuarterInt;
    fn add(self, rhs: Self) -> Self {
        QuarterInt(self.0 + rhs.0)
    }
}

impl Sub for QuarterInt {
    type Output = QuarterInt;
    fn sub(self, rhs: Self) -> Self {
        QuarterInt(self.0 - rhs.0)
    }
}

impl Neg for QuarterInt {
    type Output = QuarterInt;
    fn neg(self) -> Self {
        QuarterInt(-self.0)
    }
}

impl fmt::Display for QuarterInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let abs = self.0.unsigned_abs();
        let frac = match abs % 4 {
            0 => "",
            1 => ".25",
            2 => ".5",
            _ => ".75",
        };
        write!(f, "{sign}{}{frac}", abs / 4)
    }
}

/// `e - n^2/4` from raw counts.
pub fn k_from_counts(n: usize, e: usize) -> QuarterInt {
    QuarterInt(4 * e as i64 - (n * n) as i64)
}

/// `r(e - n^2/4) - t` from raw counts.
pub fn f_from_counts(n: usize, e: usize, t: usize, r: usize) -> QuarterInt {
    QuarterInt(r as i64 * k_from_counts(n, e).0 - 4 * t as i64)
}

/// `r(e - r(n-r)) - t` from raw counts.
pub fn g_from_counts(n: usize, e: usize, t: usize, r: usize) -> QuarterInt {
    let (n, e, t, r) = (n as i64, e as i64, t as i64, r as i64);
    QuarterInt(4 * (r * e - r * r * (n - r) - t))
}

pub fn k_value(g: &Graph) -> QuarterInt {
    k_from_counts(g.n(), g.edge_count())
}

pub fn f_value(g: &Graph, r: usize) -> QuarterInt {
    f_from_counts(g.n(), g.edge_count(), g.triangle_count(), r)
}

pub fn g_value(g: &Graph, r: usize) -> QuarterInt {
    g_from_counts(g.n(), g.edge_count(), g.triangle_count(), r)
}

/// Closed form of `g` for a complete multipartite graph: minus the sum of
/// `c_i c_j c_m` over index triples below the largest part.
pub fn multipartite_g(sizes: &[usize]) -> Result<i64, BoundsError> {
    if sizes.contains(&0) || sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(BoundsError::BadPartSizes(sizes.to_vec()));
    }
    let below = &sizes[..sizes.len().saturating_sub(1)];
    // elementary symmetric polynomials e1, e2, e3 of the lower parts
    let (mut e1, mut e2, mut e3) = (0i64, 0i64, 0i64);
    for &c in below {
        let c = c as i64;
        e3 += c * e2;
        e2 += c * e1;
        e1 += c;
    }
    Ok(-e3)
}

fn check_k4_free(g: &Graph) -> Result<(), BoundsError> {
    if g.is_k4_free() {
        Ok(())
    } else {
        Err(BoundsError::NotK4Free)
    }
}

/// `e <= r(n-r) + r2(n-r-r2)` where `r2` counts cliques with two or more vertices.
pub fn claim_r2_check(g: &Graph, p: &GreedyPartition) -> Result<bool, BoundsError> {
    check_k4_free(g)?;
    let (n, e) = (g.n() as i64, g.edge_count() as i64);
    let r = p.r() as i64;
    let r2 = p.non_singleton_count() as i64;
    Ok(e <= r * (n - r) + r2 * (n - r - r2))
}

/// `e <= r(n-r)` for a triangle-free graph.
pub fn trianglefree_check(g: &Graph, p: &GreedyPartition) -> Result<bool, BoundsError> {
    if g.triangle_count() > 0 {
        return Err(BoundsError::HasTriangle);
    }
    let (n, e, r) = (g.n() as i64, g.edge_count() as i64, p.r() as i64);
    Ok(e <= r * (n - r))
}

/// `t >= r(e - r(n-r))`. A `false` is a counterexample candidate to an open
/// conjecture, never an error.
pub fn conjecture_nice_check(g: &Graph, p: &GreedyPartition) -> bool {
    g_value(g, p.r()) <= QuarterInt::ZERO
}

/// One TSV row of per-graph quantities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: usize,
    pub e: usize,
    pub t: usize,
    pub r: usize,
    pub k4: i64,
    pub f4: i64,
    pub g4: i64,
    pub packing_size: Option<usize>,
    pub oracle_max: Option<usize>,
}

impl ReportRow {
    pub const TSV_HEADER: &'static str = "n\te\tt\tr\t4k\t4f\t4g\tpacking_size\toracle_max";

    pub fn new(g: &Graph, p: &GreedyPartition) -> Self {
        let (n, e, t, r) = (g.n(), g.edge_count(), g.triangle_count(), p.r());
        ReportRow {
            n,
            e,
            t,
            r,
            k4: k_from_counts(n, e).quarters(),
            f4: f_from_counts(n, e, t, r).quarters(),
            g4: g_from_counts(n, e, t, r).quarters(),
            packing_size: None,
            oracle_max: None,
        }
    }

    pub fn to_tsv(&self) -> String {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.n,
            self.e,
            self.t,
            self.r,
            self.k4,
            self.f4,
            self.g4,
            opt(self.packing_size),
            opt(self.oracle_max)
        )
    }
}
