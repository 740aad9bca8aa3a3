//! Exhaustive and randomized sweeps that run the library's checks over many
//! graphs and collect counts, equality cases and failure witnesses.
//!
//! Work is split into contiguous index ranges handled in parallel; partial
//! reports are combined with [`Report::merge`], which is associative and
//! order-independent, so the final report does not depend on scheduling.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{f_value, g_value, k_value, ReportRow};
use crate::generators::{random_k4_free, GeneratorError, RNG_NAME};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::oracle::{enumerate_greedy_partitions, max_packing_exact, MAX_ENUMERATION_VERTICES};
use crate::packing::{extract_packing, find_shared_edge, residue_classes};
use crate::partition::{build_greedy_partition, GreedyPartition};
use crate::symmetrize::{nonedge_matching, run_symm_alg_with, verify_trace, InitialCheck};

pub const MAX_EXHAUSTIVE_N: usize = 7;
pub const MAX_RANDOM_N: usize = 40;
/// Witnesses kept per check; the ones with the smallest graph index win.
pub const MAX_WITNESSES: usize = 8;
const CHUNK: u64 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExploreError {
    #[error("n = {n} is over the {what} limit of {limit}")]
    OverBudget { what: &'static str, n: usize, limit: usize },
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error("cannot build thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Extracted packing has at least `ceil(k)` triangles (K4-free graphs).
    Theorem2,
    /// `4t >= r(4e - n^2)` (all graphs).
    Theorem4,
    /// Symmetrization runs in both initial-check modes and its traces verify (all graphs).
    Symmalg,
    /// Residue classes are edge-disjoint and the largest has `ceil(t/r)` triangles (K4-free).
    Lemma3,
    /// Every pair of partition cliques has a covering non-edge matching (K4-free).
    Lemma5,
    /// `e <= r(n-r) + r2(n-r-r2)` (K4-free).
    Claim9,
    /// `e <= r(n-r)` (triangle-free).
    Claim10,
    /// `t >= r(e - r(n-r))`, an open conjecture; failures are informational.
    Conjecture8,
    /// Exact packing number against the extracted packing and `ceil(k)`, on a sample.
    Oracle,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Theorem2,
        Check::Theorem4,
        Check::Symmalg,
        Check::Lemma3,
        Check::Lemma5,
        Check::Claim9,
        Check::Claim10,
        Check::Conjecture8,
        Check::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem2 => "theorem2",
            Check::Theorem4 => "theorem4",
            Check::Symmalg => "symmalg",
            Check::Lemma3 => "lemma3",
            Check::Lemma5 => "lemma5",
            Check::Claim9 => "claim9",
            Check::Claim10 => "claim10",
            Check::Conjecture8 => "conjecture8",
            Check::Oracle => "oracle",
        }
    }

    /// Failures of informational checks do not make a report fail.
    pub fn is_informational(self) -> bool {
        self == Check::Conjecture8
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown check `{0}`")]
pub struct UnknownCheck(pub String);

impl FromStr for Check {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExploreOptions {
    pub checks: BTreeSet<Check>,
    /// Run every check against every greedy partition (n ≤ 8) rather than
    /// only the one [`build_greedy_partition`] returns.
    pub all_partitions: bool,
    /// The oracle check runs on graphs whose index is a multiple of this.
    pub oracle_sample: u64,
    /// Collect one [`ReportRow`] per K4-free graph and partition.
    pub rows: bool,
    /// Worker threads; 0 uses the global pool.
    pub jobs: usize,
    /// Random sweeps only: fixed edge probability, or `None` to draw one
    /// uniformly from `[0.2, 1]` per instance.
    pub edge_prob: Option<f64>,
}

impl Default for ExploreOptions {
    fn default() -> Self {
        ExploreOptions {
            checks: Check::ALL.into_iter().collect(),
            all_partitions: false,
            oracle_sample: 64,
            rows: false,
            jobs: 0,
            edge_prob: None,
        }
    }
}

impl ExploreOptions {
    pub fn with_checks(checks: impl IntoIterator<Item = Check>) -> Self {
        ExploreOptions {
            checks: checks.into_iter().collect(),
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: u64,
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckStats {
    pub checked: u64,
    pub failed: u64,
    /// Cases where the inequality holds with equality.
    pub equality: u64,
    /// Cases not run because they exceeded the oracle budget.
    pub skipped: u64,
    pub failures: Vec<Witness>,
    pub equality_examples: Vec<Witness>,
}

fn merge_witnesses(a: &mut Vec<Witness>, b: Vec<Witness>) {
    a.extend(b);
    a.sort_by(|x, y| (x.index, &x.detail).cmp(&(y.index, &y.detail)));
    a.truncate(MAX_WITNESSES);
}

impl CheckStats {
    fn merge(&mut self, other: CheckStats) {
        self.checked += other.checked;
        self.failed += other.failed;
        self.equality += other.equality;
        self.skipped += other.skipped;
        merge_witnesses(&mut self.failures, other.failures);
        merge_witnesses(&mut self.equality_examples, other.equality_examples);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    Random,
}

/// One per-graph row, tagged with the graph's sweep index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedRow {
    pub index: u64,
    pub row: ReportRow,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub mode: Mode,
    pub n: usize,
    pub seed: Option<u64>,
    pub rng: Option<String>,
    pub edge_prob: Option<f64>,
    pub all_partitions: bool,
    /// Graphs scanned (every labeled graph, or every random instance).
    pub graphs: u64,
    pub k4_free: u64,
    pub triangle_free: u64,
    /// Graph/partition pairs examined.
    pub partitions: u64,
    pub checks: BTreeMap<Check, CheckStats>,
    #[serde(skip)]
    pub rows: Vec<IndexedRow>,
}

impl Report {
    fn empty(mode: Mode, n: usize, opts: &ExploreOptions) -> Self {
        Report {
            mode,
            n,
            seed: None,
            rng: None,
            edge_prob: None,
            all_partitions: opts.all_partitions,
            graphs: 0,
            k4_free: 0,
            triangle_free: 0,
            partitions: 0,
            checks: opts.checks.iter().map(|&c| (c, CheckStats::default())).collect(),
            rows: Vec::new(),
        }
    }

    /// Combines two partial reports over disjoint graph sets.
    pub fn merge(mut self, other: Report) -> Report {
        self.graphs += other.graphs;
        self.k4_free += other.k4_free;
        self.triangle_free += other.triangle_free;
        self.partitions += other.partitions;
        for (c, s) in other.checks {
            self.checks.entry(c).or_default().merge(s);
        }
        self.rows.extend(other.rows);
        self.rows.sort_by_key(|r| r.index);
        self
    }

    pub fn stats(&self, check: Check) -> Option<&CheckStats> {
        self.checks.get(&check)
    }

    pub fn failures(&self, check: Check) -> u64 {
        self.stats(check).map_or(0, |s| s.failed)
    }

    /// No failures in any non-informational check.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(c, s)| c.is_informational() || s.failed == 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn rows_tsv(&self) -> String {
        let mut out = String::from(ReportRow::TSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.row.to_tsv());
            out.push('\n');
        }
        out
    }

    fn stat(&mut self, c: Check) -> &mut CheckStats {
        self.checks.get_mut(&c).expect("check was selected")
    }

    fn record(&mut self, c: Check, index: u64, g: &Graph, ok: bool, equal: bool, detail: impl FnOnce() -> String) {
        let s = self.stat(c);
        s.checked += 1;
        if !ok {
            s.failed += 1;
            if s.failures.len() < MAX_WITNESSES {
                s.failures.push(Witness { index, graph6: to_graph6(g), detail: detail() });
            }
        } else if equal {
            s.equality += 1;
            if s.equality_examples.len() < MAX_WITNESSES {
                s.equality_examples.push(Witness { index, graph6: to_graph6(g), detail: detail() });
            }
        }
    }
}

fn run_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, ExploreError> {
    if jobs == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| ExploreError::ThreadPool(e.to_string()))?;
    Ok(pool.install(f))
}

/// The labeled graph on `n` vertices whose edges are the set bits of `mask`,
/// with pair `i` taken in the order (0,1), (0,2), …, (n-2,n-1).
pub fn graph_from_index(n: usize, mask: u64) -> Graph {
    let mut rows = vec![0u64; n];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            bit += 1;
        }
    }
    Graph::from_rows(rows)
}

/// Runs the selected checks over all `2^(n(n-1)/2)` labeled graphs on `n`
/// vertices.
pub fn exhaustive_sweep(n: usize, opts: &ExploreOptions) -> Result<Report, ExploreError> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(ExploreError::OverBudget { what: "exhaustive", n, limit: MAX_EXHAUSTIVE_N });
    }
    check_partition_budget(n, opts)?;
    let total = 1u64 << (n * n.saturating_sub(1) / 2);
    let chunks = total.div_ceil(CHUNK);
    let report = run_pool(opts.jobs, || {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut rep = Report::empty(Mode::Exhaustive, n, opts);
                for mask in c * CHUNK..((c + 1) * CHUNK).min(total) {
                    examine(&graph_from_index(n, mask), mask, opts, &mut rep);
                }
                rep
            })
            .reduce(|| Report::empty(Mode::Exhaustive, n, opts), Report::merge)
    })?;
    Ok(report)
}

fn check_partition_budget(n: usize, opts: &ExploreOptions) -> Result<(), ExploreError> {
    if opts.all_partitions && n > MAX_ENUMERATION_VERTICES {
        return Err(ExploreError::OverBudget { what: "all-partitions", n, limit: MAX_ENUMERATION_VERTICES });
    }
    Ok(())
}

/// Seed and edge probability of random instance `index`: stream `index` of
/// the sweep's ChaCha8 generator.
pub fn random_instance(n: usize, seed: u64, index: u64, edge_prob: Option<f64>) -> Result<Graph, ExploreError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let instance_seed = rng.next_u64();
    let p = edge_prob.unwrap_or_else(|| rng.random_range(0.2..=1.0));
    Ok(random_k4_free(n, p, instance_seed)?)
}

/// Runs the selected checks over `count` seeded random K4-free graphs.
pub fn random_sweep(n: usize, count: u64, seed: u64, opts: &ExploreOptions) -> Result<Report, ExploreError> {
    if n > MAX_RANDOM_N {
        return Err(ExploreError::OverBudget { what: "random", n, limit: MAX_RANDOM_N });
    }
    check_partition_budget(n, opts)?;
    if let Some(p) = opts.edge_prob {
        if !(0.0..=1.0).contains(&p) {
            return Err(GeneratorError::BadProbability(p).into());
        }
    }
    let chunk = 64;
    let chunks = count.div_ceil(chunk);
    let mut report = run_pool(opts.jobs, || {
        (0..chunks)
            .into_par_iter()
            .map(|c| -> Result<Report, ExploreError> {
                let mut rep = Report::empty(Mode::Random, n, opts);
                for i in c * chunk..((c + 1) * chunk).min(count) {
                    let g = random_instance(n, seed, i, opts.edge_prob)?;
                    examine(&g, i, opts, &mut rep);
                }
                Ok(rep)
            })
            .try_reduce(|| Report::empty(Mode::Random, n, opts), |a, b| Ok(a.merge(b)))
    })??;
    report.seed = Some(seed);
    report.rng = Some(RNG_NAME.to_string());
    report.edge_prob = opts.edge_prob;
    Ok(report)
}

fn partitions_for(g: &Graph, opts: &ExploreOptions) -> Vec<GreedyPartition> {
    if opts.all_partitions {
        enumerate_greedy_partitions(g).expect("vertex budget checked up front")
    } else {
        vec![build_greedy_partition(g)]
    }
}

/// Runs every selected check on one graph and adds the results to `rep`.
pub fn examine(g: &Graph, index: u64, opts: &ExploreOptions, rep: &mut Report) {
    rep.graphs += 1;
    let k4_free = g.is_k4_free();
    let t = g.triangle_count();
    rep.k4_free += k4_free as u64;
    rep.triangle_free += (t == 0) as u64;
    let on = |c: Check| opts.checks.contains(&c);
    let n = g.n();
    let e = g.edge_count();
    let need = k_value(g).ceil().max(0);

    for p in partitions_for(g, opts) {
        rep.partitions += 1;
        let r = p.r();

        if on(Check::Theorem4) {
            let f4 = f_value(g, r).quarters();
            rep.record(Check::Theorem4, index, g, f4 <= 0, f4 == 0, || format!("r={r} 4f={f4}"));
        }

        if on(Check::Symmalg) {
            let direct = f_value(g, r).quarters();
            let mut problem = None;
            for mode in [InitialCheck::StopIfNegative, InitialCheck::AfterFirstRound] {
                let verdict = run_symm_alg_with(g, &p, mode)
                    .map_err(|e| e.to_string())
                    .and_then(|tr| verify_trace(&tr, g, &p).map_err(|e| e.to_string()))
                    .and_then(|c| {
                        if c.initial_f4 != direct {
                            Err(format!("initial 4f {} but direct value {direct}", c.initial_f4))
                        } else if c.chain_f4 > 0 {
                            Err(format!("chain ended at 4f={}", c.chain_f4))
                        } else {
                            Ok(())
                        }
                    });
                if let Err(msg) = verdict {
                    problem = Some(format!("{mode:?}: {msg}"));
                    break;
                }
            }
            let ok = problem.is_none();
            rep.record(Check::Symmalg, index, g, ok, direct == 0, || problem.unwrap_or_else(|| format!("4f={direct}")));
        }

        if on(Check::Conjecture8) && k4_free {
            let g4 = g_value(g, r).quarters();
            rep.record(Check::Conjecture8, index, g, g4 <= 0, g4 == 0, || format!("r={r} t={t} 4g={g4}"));
        }

        if on(Check::Claim10) && t == 0 {
            let bound = r * (n - r);
            rep.record(Check::Claim10, index, g, e <= bound, e == bound, || format!("r={r} e={e} r(n-r)={bound}"));
        }

        if !k4_free {
            continue;
        }

        if on(Check::Claim9) {
            let r2 = p.non_singleton_count();
            let bound = r * (n - r) + r2 * (n - r - r2);
            rep.record(Check::Claim9, index, g, e <= bound, e == bound, || format!("r={r} r2={r2} e={e} bound={bound}"));
        }

        if on(Check::Lemma3) {
            let (ok, equal, detail) = match residue_classes(g, &p) {
                Err(err) => (false, false, err.to_string()),
                Ok(classes) => {
                    let shared = classes.iter().enumerate().find_map(|(h, c)| find_shared_edge(c).map(|x| (h, x)));
                    let largest = classes.iter().map(Vec::len).max().unwrap_or(0);
                    let bound = if r == 0 { 0 } else { t.div_ceil(r) };
                    match shared {
                        Some((h, (a, b))) => (false, false, format!("class {h} has {a} and {b} sharing an edge")),
                        None => (largest >= bound, t > 0 && largest == bound, format!("largest={largest} ceil(t/r)={bound}")),
                    }
                }
            };
            rep.record(Check::Lemma3, index, g, ok, equal, || detail);
        }

        if on(Check::Lemma5) {
            let cliques = p.cliques();
            for i in 0..cliques.len() {
                for j in i + 1..cliques.len() {
                    let res = nonedge_matching(g, &cliques[i], &cliques[j]);
                    rep.record(Check::Lemma5, index, g, res.is_ok(), false, || {
                        format!("cliques {:?} {:?}: {}", cliques[i], cliques[j], res.unwrap_err())
                    });
                }
            }
        }

        let mut row = opts.rows.then(|| ReportRow::new(g, &p));
        let mut packing_size = None;
        if on(Check::Theorem2) || on(Check::Oracle) {
            match extract_packing(g, &p) {
                Ok(pk) => packing_size = Some(pk.size),
                Err(err) => {
                    if on(Check::Theorem2) {
                        rep.record(Check::Theorem2, index, g, false, false, || err.to_string());
                    }
                }
            }
        }
        if let (true, Some(size)) = (on(Check::Theorem2), packing_size) {
            let got = size as i64;
            rep.record(Check::Theorem2, index, g, got >= need, need >= 1 && got == need, || {
                format!("packing={size} ceil(k)={need}")
            });
        }
        if on(Check::Oracle) && opts.oracle_sample > 0 && index.is_multiple_of(opts.oracle_sample) {
            match max_packing_exact(g) {
                Ok(te) => {
                    let ok = te as i64 >= need && packing_size.is_none_or(|s| te >= s);
                    rep.record(Check::Oracle, index, g, ok, need >= 1 && te as i64 == need, || {
                        format!("te={te} packing={packing_size:?} ceil(k)={need}")
                    });
                    if let Some(row) = row.as_mut() {
                        row.oracle_max = Some(te);
                    }
                }
                Err(_) => rep.stat(Check::Oracle).skipped += 1,
            }
        }
        if let Some(mut row) = row {
            row.packing_size = packing_size;
            rep.rows.push(IndexedRow { index, row });
        }
    }
}
