//! Symmetrization of a graph together with a generalized greedy partition.
//!
//! Each round takes the blown-up head `C_0` and the next clique `C_1`,
//! matches head parts to non-adjacent vertices of `C_1`, and replaces one
//! side of every matched pair by copies of the other (whichever has the
//! larger `r0*d - t`). The resulting blow-up of `C_0 ∪ C_1` is then made
//! complete by merging non-adjacent parts the same way. With `r0` fixed for
//! the round, `r0(4e - n^2) - 4t` never decreases, and the new partition has
//! one clique fewer and size at least `r0`. The run ends when the head is
//! the only part left (the graph is complete multipartite) or when
//! `4e - n^2` turns negative.
//!
//! Every replacement is recorded in a [`SymmetrizationTrace`], which
//! [`verify_trace`] re-checks with independent recounts.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{f_from_counts, g_value, k_from_counts, multipartite_g, QuarterInt};
use crate::graph::{bits, mask_of, Graph, GraphError};
use crate::oracle::recount;
use crate::partition::{
    contract_head, validate_ggp, validate_greedy, Ggp, GreedyPartition, PartitionError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetrizeError {
    #[error("matching precondition violated: {0}")]
    MatchingPrecondition(String),
    #[error("no non-edge partner for vertex {0}; a covering matching must exist")]
    HallFailure(usize),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("the partition is not a valid greedy partition of the graph")]
    NotGreedy,
    #[error("the partition has no clique after its head")]
    NoTail,
    #[error("r0 = {given} but the partition has size {expected}")]
    WrongR0 { given: usize, expected: usize },
    #[error("head part {0} has members with different neighborhoods")]
    AsymmetricPart(usize),
    #[error("objective dropped from {before} to {after} (quarter units)")]
    ObjectiveDecreased { before: i64, after: i64 },
    #[error("merge produced an invalid generalized greedy partition")]
    InvalidMergeResult,
    #[error("partition size fell from {before} to {after}")]
    SizeDecreased { before: usize, after: usize },
    #[error("round {0} did not remove a clique")]
    NoProgress(usize),
    #[error("final graph is not complete multipartite with clique number at most {0}")]
    BadFinalGraph(usize),
}

/// Pairs `(a, b)` with `a` from the smaller clique, `b` from the larger,
/// `ab` a non-edge, no endpoint repeated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonEdgeMatching {
    pub pairs: Vec<(usize, usize)>,
}

/// Matching of non-edges between cliques `a` and `b` covering `a`.
///
/// Needs `a`, `b` disjoint cliques with `|a| <= |b|` and `a ∪ b` free of
/// `K_{|b|+1}`; under those conditions a covering matching always exists.
/// Augmenting paths scan vertices in increasing id order.
pub fn nonedge_matching(g: &Graph, a: &[usize], b: &[usize]) -> Result<NonEdgeMatching, SymmetrizeError> {
    let pre = |m: &str| Err(SymmetrizeError::MatchingPrecondition(m.to_string()));
    if a.iter().chain(b).any(|&v| v >= g.n()) {
        return pre("vertex out of range");
    }
    let (ma, mb) = (mask_of(a), mask_of(b));
    if ma.count_ones() as usize != a.len() || mb.count_ones() as usize != b.len() {
        return pre("repeated vertex");
    }
    if ma & mb != 0 {
        return pre("sides overlap");
    }
    if a.len() > b.len() {
        return pre("first side is larger than the second");
    }
    if !g.is_clique(ma) || !g.is_clique(mb) {
        return pre("sides must be cliques");
    }
    if g.has_clique(ma | mb, b.len() + 1) {
        return pre("union contains a clique larger than the second side");
    }

    let mut a_sorted = a.to_vec();
    a_sorted.sort_unstable();
    let mut b_sorted = b.to_vec();
    b_sorted.sort_unstable();
    // owner[j] = index into a_sorted matched to b_sorted[j]
    let mut owner: Vec<Option<usize>> = vec![None; b_sorted.len()];

    fn augment(
        g: &Graph,
        i: usize,
        a: &[usize],
        b: &[usize],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        // a free partner first, so uncontested vertices keep the id-order choice
        let open = |j: usize| !g.has_edge(a[i], b[j]);
        if let Some(j) = (0..b.len()).find(|&j| owner[j].is_none() && open(j)) {
            owner[j] = Some(i);
            return true;
        }
        for j in 0..b.len() {
            if seen[j] || !open(j) {
                continue;
            }
            seen[j] = true;
            let k = owner[j].expect("free partners were taken above");
            if augment(g, k, a, b, owner, seen) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }

    for i in 0..a_sorted.len() {
        let mut seen = vec![false; b_sorted.len()];
        if !augment(g, i, &a_sorted, &b_sorted, &mut owner, &mut seen) {
            return Err(SymmetrizeError::HallFailure(a_sorted[i]));
        }
    }
    let mut pairs: Vec<(usize, usize)> = owner
        .iter()
        .enumerate()
        .filter_map(|(j, o)| o.map(|i| (a_sorted[i], b_sorted[j])))
        .collect();
    pairs.sort_unstable();
    Ok(NonEdgeMatching { pairs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    MatchPair,
    MergePair,
    SubroundEnd,
}

/// One recorded state. For replacement steps, every vertex of `replaced`
/// was given the neighborhood of `source`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub kind: StepKind,
    pub replaced: Vec<usize>,
    pub source: Option<usize>,
    pub e: usize,
    pub t: usize,
    /// `r` used for `f4`: the round's fixed `r0` for replacements, the new
    /// partition size at a subround end.
    pub r_current: usize,
    pub f4: i64,
    pub graph: Graph,
}

/// Head parts of `C_0 ∪ C_1` after matching, plus the untouched cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blowup {
    pub parts: Vec<Vec<usize>>,
    pub rest: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct SubMatch {
    pub graph: Graph,
    pub blowup: Blowup,
    /// `(head part as it was, matched vertex of C_1)`.
    pub matches: Vec<(Vec<usize>, usize)>,
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone)]
pub struct SubMerge {
    pub graph: Graph,
    pub partition: Ggp,
    pub merges: Vec<(Vec<usize>, Vec<usize>)>,
    pub steps: Vec<Step>,
}

fn objective(g: &Graph, r0: usize) -> (usize, usize, i64) {
    let (e, t) = (g.edge_count(), g.triangle_count());
    (e, t, f_from_counts(g.n(), e, t, r0).quarters())
}

fn replacement_step(
    kind: StepKind,
    g: &Graph,
    replaced: &[usize],
    source: usize,
    r0: usize,
    before: i64,
) -> Result<(Graph, Step), SymmetrizeError> {
    let mut next = g.clone();
    for &x in replaced {
        if x != source {
            next = next.replace_by_copy(x, source)?;
        }
    }
    let (e, t, f4) = objective(&next, r0);
    if f4 < before {
        return Err(SymmetrizeError::ObjectiveDecreased { before, after: f4 });
    }
    let step = Step {
        kind,
        replaced: replaced.to_vec(),
        source: Some(source),
        e,
        t,
        r_current: r0,
        f4,
        graph: next.clone(),
    };
    Ok((next, step))
}

fn representative(g: &Graph, part: &[usize], index: usize) -> Result<usize, SymmetrizeError> {
    let rep = *part.iter().min().expect("parts are non-empty");
    if part.iter().any(|&v| g.neighbors(v) != g.neighbors(rep)) {
        return Err(SymmetrizeError::AsymmetricPart(index));
    }
    Ok(rep)
}

/// Matches head parts to vertices of `C_1` along non-edges and symmetrizes
/// each matched pair, head-part side winning ties.
pub fn symm_sub_match(g: &Graph, p: &Ggp, r0: usize) -> Result<SubMatch, SymmetrizeError> {
    if !validate_ggp(g, p)? {
        return Err(SymmetrizeError::NotGreedy);
    }
    if p.tail.is_empty() {
        return Err(SymmetrizeError::NoTail);
    }
    if r0 != p.size() {
        return Err(SymmetrizeError::WrongR0 { given: r0, expected: p.size() });
    }
    let contraction = contract_head(g, p)?;
    let l0 = p.head.len();
    let a: Vec<usize> = (0..l0).collect();
    let b = &contraction.partition.cliques()[1];
    let matching = nonedge_matching(&contraction.graph, &a, b)?;

    let mut graph = g.clone();
    let mut steps = Vec::with_capacity(matching.pairs.len());
    let mut matches = Vec::with_capacity(matching.pairs.len());
    let mut parts: Vec<Vec<usize>> = Vec::with_capacity(p.tail[0].len());
    let mut matched_b = 0u64;
    let (_, _, mut current) = objective(&graph, r0);

    for &(part_idx, bx) in &matching.pairs {
        let part = &contraction.members[part_idx];
        let w = contraction.members[bx][0];
        let v = representative(&graph, part, part_idx)?;
        let fv = graph.vertex_stats(v, r0).f;
        let fw = graph.vertex_stats(w, r0).f;
        let (replaced, source) = if fv >= fw { (vec![w], v) } else { (part.clone(), w) };
        let (next, step) = replacement_step(StepKind::MatchPair, &graph, &replaced, source, r0, current)?;
        current = step.f4;
        graph = next;
        steps.push(step);
        matches.push((part.clone(), w));
        let mut merged = part.clone();
        merged.push(w);
        merged.sort_unstable();
        parts.push(merged);
        matched_b |= 1u64 << w;
    }
    parts.extend(p.tail[0].iter().filter(|&&w| matched_b & (1u64 << w) == 0).map(|&w| vec![w]));

    Ok(SubMatch {
        graph,
        blowup: Blowup {
            parts,
            rest: p.tail[1..].to_vec(),
        },
        matches,
        steps,
    })
}

/// Merges non-adjacent parts of the blow-up (lowest index pair first) until
/// the parts are pairwise completely joined.
pub fn symm_sub_merge(g: &Graph, blowup: Blowup, r0: usize) -> Result<SubMerge, SymmetrizeError> {
    let Blowup { mut parts, rest } = blowup;
    let mut graph = g.clone();
    let mut steps = Vec::new();
    let mut merges = Vec::new();
    let (_, _, mut current) = objective(&graph, r0);

    loop {
        let mut reps = Vec::with_capacity(parts.len());
        for (i, part) in parts.iter().enumerate() {
            reps.push(representative(&graph, part, i)?);
        }
        let pair = (0..parts.len())
            .flat_map(|i| (i + 1..parts.len()).map(move |j| (i, j)))
            .find(|&(i, j)| !graph.has_edge(reps[i], reps[j]));
        let Some((i, j)) = pair else { break };

        let f1 = graph.vertex_stats(reps[i], r0).f;
        let f2 = graph.vertex_stats(reps[j], r0).f;
        let (replaced, source) = if f2 >= f1 {
            (parts[i].clone(), reps[j])
        } else {
            (parts[j].clone(), reps[i])
        };
        let (next, step) = replacement_step(StepKind::MergePair, &graph, &replaced, source, r0, current)?;
        current = step.f4;
        graph = next;
        steps.push(step);
        merges.push((parts[i].clone(), parts[j].clone()));
        let absorbed = parts.remove(j);
        parts[i].extend(absorbed);
        parts[i].sort_unstable();
    }

    let partition = Ggp { head: parts, tail: rest };
    if !validate_ggp(&graph, &partition)? {
        return Err(SymmetrizeError::InvalidMergeResult);
    }
    if partition.size() < r0 {
        return Err(SymmetrizeError::SizeDecreased { before: r0, after: partition.size() });
    }
    Ok(SubMerge { graph, partition, merges, steps })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    StoppedSinglePart,
    StoppedNegativeK,
}

/// Counts and objective for one state; `f4` uses `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snapshot {
    pub e: usize,
    pub t: usize,
    pub r: usize,
    pub f4: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    pub r0: usize,
    pub matches: Vec<(Vec<usize>, usize)>,
    pub merges: Vec<(Vec<usize>, Vec<usize>)>,
    pub steps: Vec<Step>,
    pub partition: Ggp,
    pub e: usize,
    pub t: usize,
    pub r: usize,
    pub f4: i64,
}

/// What to do when the input already has `4e - n^2 < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InitialCheck {
    /// Stop before the first round; the bound already holds.
    #[default]
    StopIfNegative,
    /// Run the first round anyway and test the sign only after each merge.
    AfterFirstRound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetrizationTrace {
    pub input: Graph,
    pub initial_check: InitialCheck,
    pub initial_partition: GreedyPartition,
    pub initial: Snapshot,
    pub rounds: Vec<Round>,
    pub outcome: Outcome,
    #[serde(rename = "final")]
    pub final_graph: Graph,
    pub final_partition: Ggp,
}

impl SymmetrizationTrace {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Complete multipartite structure of `g`: part sizes in non-decreasing
/// order, or `None` if non-adjacency is not an equivalence relation.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<usize>> {
    let all = g.vertex_mask();
    let mut left = all;
    let mut sizes = Vec::new();
    while left != 0 {
        let v = left.trailing_zeros() as usize;
        let part = all & !g.neighbors(v);
        if part & !left != 0 || bits(part).any(|u| g.neighbors(u) != g.neighbors(v)) {
            return None;
        }
        sizes.push(part.count_ones() as usize);
        left &= !part;
    }
    sizes.sort_unstable();
    Some(sizes)
}

/// Runs the symmetrization from a greedy partition until it stops.
pub fn run_symm_alg(g0: &Graph, p0: &GreedyPartition) -> Result<SymmetrizationTrace, SymmetrizeError> {
    run_symm_alg_with(g0, p0, InitialCheck::default())
}

pub fn run_symm_alg_with(
    g0: &Graph,
    p0: &GreedyPartition,
    initial_check: InitialCheck,
) -> Result<SymmetrizationTrace, SymmetrizeError> {
    if !validate_greedy(g0, p0)? {
        return Err(SymmetrizeError::NotGreedy);
    }
    let n = g0.n();
    let (e, t) = (g0.edge_count(), g0.triangle_count());
    let initial = Snapshot { e, t, r: p0.r(), f4: f_from_counts(n, e, t, p0.r()).quarters() };

    let mut graph = g0.clone();
    let mut partition = Ggp::from_greedy(p0);
    let mut rounds = Vec::new();
    let negative = |g: &Graph| k_from_counts(g.n(), g.edge_count()) < QuarterInt::ZERO;

    let outcome = if initial_check == InitialCheck::StopIfNegative && negative(&graph) {
        Outcome::StoppedNegativeK
    } else {
        loop {
            if partition.tail.is_empty() {
                break Outcome::StoppedSinglePart;
            }
            if rounds.len() >= p0.r() {
                return Err(SymmetrizeError::NoProgress(rounds.len()));
            }
            let r0 = partition.size();
            let matched = symm_sub_match(&graph, &partition, r0)?;
            let merged = symm_sub_merge(&matched.graph, matched.blowup, r0)?;
            if merged.partition.tail.len() + 1 != partition.tail.len() {
                return Err(SymmetrizeError::NoProgress(rounds.len()));
            }
            let r = merged.partition.size();
            let (e, t) = (merged.graph.edge_count(), merged.graph.triangle_count());
            let f4 = f_from_counts(n, e, t, r).quarters();
            let mut steps = matched.steps;
            steps.extend(merged.steps);
            steps.push(Step {
                kind: StepKind::SubroundEnd,
                replaced: vec![],
                source: None,
                e,
                t,
                r_current: r,
                f4,
                graph: merged.graph.clone(),
            });
            rounds.push(Round {
                r0,
                matches: matched.matches,
                merges: merged.merges,
                steps,
                partition: merged.partition.clone(),
                e,
                t,
                r,
                f4,
            });
            graph = merged.graph;
            partition = merged.partition;
            if negative(&graph) {
                break Outcome::StoppedNegativeK;
            }
        }
    };

    if outcome == Outcome::StoppedSinglePart {
        let omega = g0.clique_number();
        match multipartite_parts(&graph) {
            Some(sizes) if sizes.len() <= omega => {}
            _ => return Err(SymmetrizeError::BadFinalGraph(omega)),
        }
    }

    Ok(SymmetrizationTrace {
        input: g0.clone(),
        initial_check,
        initial_partition: p0.clone(),
        initial,
        rounds,
        outcome,
        final_graph: graph,
        final_partition: partition,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("trace check failed at step {step}: {reason}")]
pub struct TraceError {
    /// 0 is the initial state; replacement and subround-end steps are
    /// numbered from 1 across all rounds.
    pub step: usize,
    pub reason: String,
}

/// What a verified trace certifies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceConclusion {
    pub outcome: Outcome,
    pub rounds: usize,
    /// `4 f(G0, P0)`.
    pub initial_f4: i64,
    /// Last objective value of the monotone chain; `initial_f4 <= chain_f4 <= 0`.
    pub chain_f4: i64,
    /// `4 g` of the final complete multipartite graph, single-part outcomes only.
    pub final_g4: Option<i64>,
    pub final_part_sizes: Option<Vec<usize>>,
}

/// Re-derives every recorded number from the stored graphs and checks the
/// chain `f(G0,P0) <= ... <= 0`.
pub fn verify_trace(
    trace: &SymmetrizationTrace,
    g0: &Graph,
    p0: &GreedyPartition,
) -> Result<TraceConclusion, TraceError> {
    let fail = |step: usize, reason: String| Err(TraceError { step, reason });
    if &trace.input != g0 || &trace.initial_partition != p0 {
        return fail(0, "trace was recorded for a different input".into());
    }
    if validate_greedy(g0, p0) != Ok(true) {
        return fail(0, "initial partition is not greedy".into());
    }
    let n = g0.n();
    let (e0, t0) = recount(g0);
    let init = Snapshot { e: e0, t: t0, r: p0.r(), f4: f_from_counts(n, e0, t0, p0.r()).quarters() };
    if trace.initial != init {
        return fail(0, format!("initial state {:?} does not match recount {:?}", trace.initial, init));
    }

    let mut prev_graph = g0.clone();
    let mut r = p0.r();
    let mut tail = p0.r().saturating_sub(1);
    let mut chain = init.f4;
    let mut k4 = k_from_counts(n, e0).quarters();
    let mut idx = 0;
    let mut last_partition = Ggp::from_greedy(p0);

    for (ri, round) in trace.rounds.iter().enumerate() {
        let may_start = ri == 0 && trace.initial_check == InitialCheck::AfterFirstRound;
        if k4 < 0 && !may_start {
            return fail(idx, format!("round {ri} started although 4k = {k4} < 0"));
        }
        if round.r0 != r {
            return fail(idx, format!("round {ri} uses r0 = {} but the partition size is {r}", round.r0));
        }
        let Some((end, replacements)) = round.steps.split_last() else {
            return fail(idx, format!("round {ri} has no steps"));
        };
        for step in replacements {
            idx += 1;
            if step.kind == StepKind::SubroundEnd {
                return fail(idx, "subround end before the last step".into());
            }
            let Some(source) = step.source else {
                return fail(idx, "replacement without a source".into());
            };
            if let Err(reason) = check_replacement(&prev_graph, &step.graph, &step.replaced, source) {
                return fail(idx, reason);
            }
            let (e, t) = recount(&step.graph);
            let f4 = f_from_counts(n, e, t, round.r0).quarters();
            if (step.e, step.t, step.r_current, step.f4) != (e, t, round.r0, f4) {
                return fail(
                    idx,
                    format!(
                        "recorded (e, t, r, 4f) = ({}, {}, {}, {}) but recount gives ({e}, {t}, {}, {f4})",
                        step.e, step.t, step.r_current, step.f4, round.r0
                    ),
                );
            }
            if f4 < chain {
                return fail(idx, format!("objective decreased from {chain} to {f4}"));
            }
            chain = f4;
            prev_graph = step.graph.clone();
        }

        idx += 1;
        if end.kind != StepKind::SubroundEnd || end.graph != prev_graph {
            return fail(idx, "round does not close with its last graph".into());
        }
        match validate_ggp(&end.graph, &round.partition) {
            Ok(true) => {}
            _ => return fail(idx, "round partition is not a generalized greedy partition".into()),
        }
        let new_r = round.partition.size();
        if new_r < round.r0 {
            return fail(idx, format!("partition size fell from {} to {new_r}", round.r0));
        }
        if round.partition.tail.len() + 1 != tail {
            return fail(idx, "round did not absorb exactly one clique".into());
        }
        let (e, t) = recount(&end.graph);
        let f4 = f_from_counts(n, e, t, new_r).quarters();
        let expect = (e, t, new_r, f4);
        if (end.e, end.t, end.r_current, end.f4) != expect || (round.e, round.t, round.r, round.f4) != expect {
            return fail(idx, format!("round summary does not match recount {expect:?}"));
        }
        k4 = k_from_counts(n, e).quarters();
        if k4 >= 0 {
            // larger r only helps once e >= n^2/4
            if f4 < chain {
                return fail(idx, format!("objective decreased from {chain} to {f4} at the new size"));
            }
            chain = f4;
        }
        r = new_r;
        tail = round.partition.tail.len();
        last_partition = round.partition.clone();
    }

    if trace.final_graph != prev_graph || trace.final_partition != last_partition {
        return fail(idx, "final state differs from the last recorded state".into());
    }

    let mut conclusion = TraceConclusion {
        outcome: trace.outcome,
        rounds: trace.rounds.len(),
        initial_f4: init.f4,
        chain_f4: chain,
        final_g4: None,
        final_part_sizes: None,
    };
    match trace.outcome {
        Outcome::StoppedNegativeK => {
            if k4 >= 0 {
                return fail(idx, format!("negative-k stop with 4k = {k4}"));
            }
        }
        Outcome::StoppedSinglePart => {
            if !last_partition.tail.is_empty() {
                return fail(idx, "single-part stop with cliques left".into());
            }
            let Some(sizes) = multipartite_parts(&prev_graph) else {
                return fail(idx, "final graph is not complete multipartite".into());
            };
            if sizes.len() > g0.clique_number() {
                return fail(idx, "final graph has a larger clique than the input".into());
            }
            let top = sizes.last().copied().unwrap_or(0);
            if top != r {
                return fail(idx, format!("largest part {top} differs from partition size {r}"));
            }
            let closed = multipartite_g(&sizes).map_err(|e| TraceError { step: idx, reason: e.to_string() })?;
            let g4 = g_value(&prev_graph, r).quarters();
            if g4 != 4 * closed || closed > 0 {
                return fail(idx, format!("4g = {g4} but the closed form gives 4 * {closed}"));
            }
            // at the final state chain is f(G*, P*) <= g(G*, P*)
            if chain > g4 {
                return fail(idx, format!("final 4f = {chain} exceeds 4g = {g4}"));
            }
            conclusion.final_g4 = Some(g4);
            conclusion.final_part_sizes = Some(sizes);
        }
    }
    if chain > 0 {
        return fail(idx, format!("chain ends at 4f = {chain} > 0"));
    }
    Ok(conclusion)
}

/// `after` equals `before` except that each replaced vertex has the
/// neighborhood of `source` and is not adjacent to it.
fn check_replacement(before: &Graph, after: &Graph, replaced: &[usize], source: usize) -> Result<(), String> {
    let n = before.n();
    if after.n() != n || source >= n || replaced.iter().any(|&x| x >= n) {
        return Err("replacement refers to vertices outside the graph".into());
    }
    if replaced.contains(&source) {
        return Err("source among replaced vertices".into());
    }
    for &x in replaced {
        if after.has_edge(x, source) {
            return Err(format!("copy {x} is adjacent to its source {source}"));
        }
        for u in 0..n {
            if u != x && u != source && after.has_edge(x, u) != after.has_edge(source, u) {
                return Err(format!("vertex {x} is not a copy of {source} (differs at {u})"));
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if replaced.contains(&u) || replaced.contains(&v) {
                continue;
            }
            if before.has_edge(u, v) != after.has_edge(u, v) {
                return Err(format!("pair {u}-{v} changed outside the replaced set"));
            }
        }
    }
    Ok(())
}
