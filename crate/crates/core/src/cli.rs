//! Command-line front end. Data goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or parse error,
//! 3 size budget exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bounds::{f_value, g_value, k_value, QuarterInt};
use crate::edgelist::{parse_edge_list, to_edge_list, EdgeListErrorKind};
use crate::explorer::{exhaustive_sweep, random_sweep, Check, ExploreError, ExploreOptions, Report};
use crate::generators::{
    complete_multipartite, cycle, equality_family, random_k4_free, random_tripartite_subgraph, turan2,
    GeneratorError, RNG_NAME,
};
use crate::graph::{Graph, GraphError};
use crate::graph6::{parse_graph6, to_graph6, Graph6Error};
use crate::oracle::{enumerate_greedy_partitions, max_packing_exact, OracleError};
use crate::packing::extract_packing;
use crate::partition::{build_greedy_partition, validate_greedy, GreedyPartition};
use crate::symmetrize::{run_symm_alg_with, verify_trace, InitialCheck, SymmetrizationTrace};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    OverBudget(String),
    #[error("{0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CheckFailed(_) => 1,
            CliError::Usage(_) | CliError::Io { .. } | CliError::Parse(_) => 2,
            CliError::OverBudget(_) => 3,
        }
    }
}

fn graph_error(e: GraphError) -> CliError {
    match e {
        GraphError::TooManyVertices(_) => CliError::OverBudget(e.to_string()),
        other => CliError::Parse(other.to_string()),
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::OverBudget(e.to_string())
    }
}

impl From<GeneratorError> for CliError {
    fn from(e: GeneratorError) -> Self {
        match e {
            GeneratorError::Graph(g) => graph_error(g),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<ExploreError> for CliError {
    fn from(e: ExploreError) -> Self {
        match e {
            ExploreError::OverBudget { .. } => CliError::OverBudget(e.to_string()),
            ExploreError::Generator(g) => g.into(),
            ExploreError::ThreadPool(_) => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "tripack", version, about = "Edge-disjoint triangles in K4-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Counts, bounds and the extracted-packing check for one graph.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Also compute the exact packing number.
        #[arg(long)]
        oracle: bool,
        /// Also report the two partition inequalities and the conjectured bound.
        #[arg(long)]
        claims: bool,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Writes the residue-class packing as JSON.
    Extract {
        #[command(flatten)]
        input: Input,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs the symmetrization, verifies its trace and prints the conclusion.
    Symmetrize {
        #[command(flatten)]
        input: Input,
        /// Where to write the trace JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Behavior when the input already has fewer than n^2/4 edges.
        #[arg(long, value_enum, default_value_t = InitialMode::StopIfNegative)]
        initial_check: InitialMode,
        /// Re-verify an existing trace for this graph instead of running.
        #[arg(long, conflicts_with = "trace")]
        replay: Option<PathBuf>,
    },
    /// Exact maximum number of edge-disjoint triangles.
    Oracle {
        #[command(flatten)]
        input: Input,
        /// Also list every greedy partition (at most 8 vertices).
        #[arg(long)]
        partitions: bool,
    },
    /// Generates a graph from a named family.
    Gen {
        #[arg(value_enum)]
        family: Family,
        /// Family parameters: turan2 N | multipartite C1 C2 .. | equality R INNER_GRAPH6 |
        /// random N | tripartite A B C | cycle N
        #[arg(required = true)]
        params: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Edge probability for the random families.
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        #[arg(long, value_enum, default_value_t = OutFormat::Edgelist)]
        format: OutFormat,
    },
    /// Sweeps many graphs and prints a JSON report.
    Explore {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SweepMode::Exhaustive)]
        mode: SweepMode,
        /// Comma-separated check ids; all checks when omitted.
        #[arg(long, value_delimiter = ',', value_parser = parse_check)]
        checks: Vec<Check>,
        /// Random instances.
        #[arg(long, default_value_t = 1000)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Fixed edge probability for random instances.
        #[arg(long)]
        edge_prob: Option<f64>,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Check every greedy partition, not just the constructed one.
        #[arg(long)]
        all_partitions: bool,
        /// Run the oracle on every k-th graph.
        #[arg(long, default_value_t = 64)]
        oracle_sample: u64,
        /// Write per-graph TSV rows to this file.
        #[arg(long)]
        rows: Option<PathBuf>,
    },
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse().map_err(|e: crate::explorer::UnknownCheck| {
        let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

#[derive(Debug, Args)]
struct Input {
    /// Graph file (`-` for stdin).
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = InFormat::Auto)]
    format: InFormat,
    /// JSON list of cliques to use instead of the constructed greedy partition.
    #[arg(long)]
    partition: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InFormat {
    Auto,
    Edgelist,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Edgelist,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InitialMode {
    StopIfNegative,
    AfterFirstRound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Turan2,
    Multipartite,
    Equality,
    Random,
    Tripartite,
    Cycle,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Turan2 => "turan2",
            Family::Multipartite => "multipartite",
            Family::Equality => "equality",
            Family::Random => "random",
            Family::Tripartite => "tripartite",
            Family::Cycle => "cycle",
        }
    }
}

fn read_source(path: &Path) -> Result<String, CliError> {
    let io_err = |source| CliError::Io { path: path.display().to_string(), source };
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn looks_like_graph6(line: &str) -> bool {
    let s = line.strip_prefix(">>graph6<<").unwrap_or(line);
    !s.is_empty() && s.bytes().all(|b| (63..=126).contains(&b))
}

/// Parses a graph in edge-list or graph6 form. `#` lines are comments in
/// both; `auto` picks graph6 when the first remaining line is a single
/// graph6 token.
pub fn parse_graph_text(text: &str, format: Option<&str>) -> Result<Graph, CliError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    let graph6 = match format {
        Some("graph6") => true,
        Some("edgelist") => false,
        _ => first.is_some_and(looks_like_graph6),
    };
    if graph6 {
        let line = first.ok_or_else(|| CliError::Parse("no graph6 line found".into()))?;
        parse_graph6(line).map_err(|e| match e {
            Graph6Error::Graph(g) => graph_error(g),
            other => CliError::Parse(format!("graph6: {other}")),
        })
    } else {
        parse_edge_list(text).map_err(|e| match e.kind {
            EdgeListErrorKind::TooManyVertices(_) => CliError::OverBudget(e.to_string()),
            _ => CliError::Parse(format!("edge list: {e}")),
        })
    }
}

struct Loaded {
    graph: Graph,
    partition: GreedyPartition,
}

fn load(input: &Input) -> Result<Loaded, CliError> {
    let text = read_source(&input.file)?;
    let format = match input.format {
        InFormat::Auto => None,
        InFormat::Edgelist => Some("edgelist"),
        InFormat::Graph6 => Some("graph6"),
    };
    let graph = parse_graph_text(&text, format)?;
    let partition = match &input.partition {
        None => build_greedy_partition(&graph),
        Some(path) => {
            let text = read_source(path)?;
            let p: GreedyPartition =
                serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("partition: {e}")))?;
            let p = GreedyPartition::new(p.cliques().to_vec());
            match validate_greedy(&graph, &p) {
                Ok(true) => p,
                Ok(false) => return Err(CliError::Parse("partition is not a greedy partition of the graph".into())),
                Err(e) => return Err(CliError::Parse(format!("partition: {e}"))),
            }
        }
    };
    Ok(Loaded { graph, partition })
}

fn out_err(e: io::Error) -> CliError {
    CliError::Io { path: "<stdout>".into(), source: e }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                let _ = write!(out, "{e}");
                0
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Verify { input, oracle, claims, json } => verify(&input, oracle, claims, json, out, err),
        Command::Extract { input, out: path } => {
            let Loaded { graph, partition } = load(&input)?;
            if !graph.is_k4_free() {
                return Err(CliError::Usage("graph contains a K4; residue classes are only disjoint in K4-free graphs".into()));
            }
            let pk = extract_packing(&graph, &partition).map_err(|e| CliError::CheckFailed(e.to_string()))?;
            let text = serde_json::to_string_pretty(&pk).expect("packing serializes") + "\n";
            match path {
                Some(p) => {
                    write_file(&p, &text)?;
                    writeln!(err, "wrote {} triangles (bound {}) to {}", pk.size, pk.bound, p.display()).map_err(out_err)?;
                }
                None => out.write_all(text.as_bytes()).map_err(out_err)?,
            }
            Ok(())
        }
        Command::Symmetrize { input, trace, initial_check, replay } => {
            let Loaded { graph, mut partition } = load(&input)?;
            let tr = match replay {
                Some(path) => {
                    let tr = SymmetrizationTrace::from_json(&read_source(&path)?)
                        .map_err(|e| CliError::Parse(format!("trace: {e}")))?;
                    if input.partition.is_none() {
                        partition = tr.initial_partition.clone();
                    }
                    tr
                }
                None => {
                    let mode = match initial_check {
                        InitialMode::StopIfNegative => InitialCheck::StopIfNegative,
                        InitialMode::AfterFirstRound => InitialCheck::AfterFirstRound,
                    };
                    run_symm_alg_with(&graph, &partition, mode).map_err(|e| CliError::CheckFailed(e.to_string()))?
                }
            };
            if let Some(p) = &trace {
                write_file(p, &(tr.to_json() + "\n"))?;
            }
            let c = verify_trace(&tr, &graph, &partition).map_err(|e| CliError::CheckFailed(e.to_string()))?;
            let q = |x: i64| QuarterInt::from_quarters(x);
            let outcome = serde_json::to_value(c.outcome).expect("outcome serializes");
            writeln!(out, "outcome\t{}", outcome.as_str().unwrap_or_default()).map_err(out_err)?;
            writeln!(out, "rounds\t{}", c.rounds).map_err(out_err)?;
            writeln!(out, "f(G0,P0)\t{}", q(c.initial_f4)).map_err(out_err)?;
            writeln!(out, "f chain end\t{}", q(c.chain_f4)).map_err(out_err)?;
            if let (Some(g4), Some(sizes)) = (c.final_g4, &c.final_part_sizes) {
                writeln!(out, "final parts\t{sizes:?}").map_err(out_err)?;
                writeln!(out, "g(final)\t{}", q(g4)).map_err(out_err)?;
            }
            writeln!(out, "conclusion\tf(G0,P0) = {} <= {} <= 0", q(c.initial_f4), q(c.chain_f4)).map_err(out_err)?;
            Ok(())
        }
        Command::Oracle { input, partitions } => {
            let Loaded { graph, .. } = load(&input)?;
            let te = max_packing_exact(&graph)?;
            writeln!(out, "{te}").map_err(out_err)?;
            if partitions {
                for p in enumerate_greedy_partitions(&graph)? {
                    writeln!(out, "{}", serde_json::to_string(&p).expect("partition serializes")).map_err(out_err)?;
                }
            }
            Ok(())
        }
        Command::Gen { family, params, seed, edge_prob, format } => {
            let g = generate(family, &params, seed, edge_prob)?;
            let seeded = matches!(family, Family::Random | Family::Tripartite);
            let mut meta = format!("family={} params={}", family.name(), params.join(","));
            if seeded {
                meta += &format!(" edge_prob={edge_prob} seed={} rng={RNG_NAME}", seed.unwrap_or(0));
            }
            let text = match format {
                OutFormat::Edgelist => to_edge_list(&g, &[meta]),
                OutFormat::Graph6 => format!("# {meta}\n{}\n", to_graph6(&g)),
            };
            out.write_all(text.as_bytes()).map_err(out_err)
        }
        Command::Explore { n, mode, checks, count, seed, edge_prob, jobs, all_partitions, oracle_sample, rows } => {
            let mut opts = if checks.is_empty() { ExploreOptions::default() } else { ExploreOptions::with_checks(checks) };
            opts.jobs = jobs;
            opts.all_partitions = all_partitions;
            opts.oracle_sample = oracle_sample;
            opts.rows = rows.is_some();
            opts.edge_prob = edge_prob;
            let report = match mode {
                SweepMode::Exhaustive => exhaustive_sweep(n, &opts)?,
                SweepMode::Random => random_sweep(n, count, seed, &opts)?,
            };
            if let Some(p) = &rows {
                write_file(p, &report.rows_tsv())?;
            }
            writeln!(out, "{}", report.to_json()).map_err(out_err)?;
            report_verdict(&report, err)
        }
    }
}

fn report_verdict(report: &Report, err: &mut dyn Write) -> Result<(), CliError> {
    let mut broken = Vec::new();
    for (c, s) in &report.checks {
        if s.failed == 0 {
            continue;
        }
        let first = s.failures.first().map(|w| w.graph6.as_str()).unwrap_or("");
        if c.is_informational() {
            writeln!(err, "note: {c} has {} counterexample candidate(s), first {first}", s.failed).map_err(out_err)?;
        } else {
            broken.push(format!("{c}: {} failure(s), first {first}", s.failed));
        }
    }
    if broken.is_empty() {
        Ok(())
    } else {
        Err(CliError::CheckFailed(broken.join("; ")))
    }
}

fn number(params: &[String], i: usize, what: &str) -> Result<usize, CliError> {
    let s = params.get(i).ok_or_else(|| CliError::Usage(format!("missing parameter {what}")))?;
    s.parse().map_err(|_| CliError::Usage(format!("parameter {what} must be a non-negative integer, got `{s}`")))
}

fn exact_params(params: &[String], count: usize, usage: &str) -> Result<(), CliError> {
    if params.len() == count {
        Ok(())
    } else {
        Err(CliError::Usage(format!("expected parameters: {usage}")))
    }
}

fn generate(family: Family, params: &[String], seed: Option<u64>, edge_prob: f64) -> Result<Graph, CliError> {
    let seed = seed.unwrap_or(0);
    match family {
        Family::Turan2 => {
            exact_params(params, 1, "N")?;
            turan2(number(params, 0, "N")?).map_err(graph_error)
        }
        Family::Cycle => {
            exact_params(params, 1, "N")?;
            cycle(number(params, 0, "N")?).map_err(graph_error)
        }
        Family::Multipartite => {
            let sizes = (0..params.len()).map(|i| number(params, i, "part size")).collect::<Result<Vec<_>, _>>()?;
            complete_multipartite(&sizes).map_err(graph_error)
        }
        Family::Equality => {
            exact_params(params, 2, "R INNER_GRAPH6")?;
            let r = number(params, 0, "R")?;
            let inner = parse_graph_text(&params[1], Some("graph6"))?;
            Ok(equality_family(r, &inner)?)
        }
        Family::Random => {
            exact_params(params, 1, "N")?;
            Ok(random_k4_free(number(params, 0, "N")?, edge_prob, seed)?)
        }
        Family::Tripartite => {
            exact_params(params, 3, "A B C")?;
            let parts = [number(params, 0, "A")?, number(params, 1, "B")?, number(params, 2, "C")?];
            Ok(random_tripartite_subgraph(parts, edge_prob, seed)?)
        }
    }
}

#[derive(serde::Serialize)]
struct VerifyReport {
    n: usize,
    e: usize,
    t: usize,
    r: usize,
    k4: i64,
    ceil_k: i64,
    k4_free: bool,
    packing_size: Option<usize>,
    theorem2: Option<bool>,
    f4: i64,
    theorem4: bool,
    oracle_max: Option<usize>,
    oracle_ok: Option<bool>,
    claim9: Option<bool>,
    claim10: Option<bool>,
    g4: Option<i64>,
    conjecture8: Option<bool>,
}

fn verify(input: &Input, oracle: bool, claims: bool, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let Loaded { graph: g, partition: p } = load(input)?;
    let (n, e, t, r) = (g.n(), g.edge_count(), g.triangle_count(), p.r());
    let k = k_value(&g);
    let need = k.ceil().max(0);
    let k4_free = g.is_k4_free();
    let packing_size = if k4_free {
        Some(extract_packing(&g, &p).map_err(|e| CliError::CheckFailed(e.to_string()))?.size)
    } else {
        None
    };
    let theorem2 = packing_size.map(|s| s as i64 >= need);
    let f4 = f_value(&g, r).quarters();
    let oracle_max = if oracle { Some(max_packing_exact(&g)?) } else { None };
    let oracle_ok = oracle_max.filter(|_| k4_free).map(|te| te as i64 >= need && packing_size.is_none_or(|s| te >= s));
    let (claim9, claim10, g4, conjecture8) = if claims {
        let r2 = p.non_singleton_count();
        let claim9 = k4_free.then(|| e <= r * (n - r) + r2 * (n - r - r2));
        let claim10 = (t == 0).then(|| e <= r * (n - r));
        let g4 = g_value(&g, r).quarters();
        (claim9, claim10, Some(g4), k4_free.then_some(g4 <= 0))
    } else {
        (None, None, None, None)
    };
    let rep = VerifyReport {
        n, e, t, r, k4: k.quarters(), ceil_k: need, k4_free, packing_size, theorem2, f4,
        theorem4: f4 <= 0, oracle_max, oracle_ok, claim9, claim10, g4, conjecture8,
    };

    let w = |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(out_err);
    if json {
        w(out, serde_json::to_string_pretty(&rep).expect("report serializes"))?;
    } else {
        let verdict = |b: bool| if b { "PASS" } else { "FAIL" };
        w(out, format!("n\t{n}\ne\t{e}\nt\t{t}\nr\t{r}\n4k\t{}\nceil(k)\t{need}", k.quarters()))?;
        match packing_size {
            Some(s) => w(out, format!("packing\t{s}\ntheorem2\t{}", verdict(s as i64 >= need)))?,
            None => w(out, "packing\tn/a (graph contains K4)\ntheorem2\tn/a".into())?,
        }
        w(out, format!("4f\t{f4}\ntheorem4\t{}", verdict(f4 <= 0)))?;
        if let Some(te) = oracle_max {
            w(out, format!("oracle\t{te}"))?;
            if let Some(ok) = oracle_ok {
                w(out, format!("oracle check\t{}", verdict(ok)))?;
            }
        }
        if claims {
            let opt = |b: Option<bool>, na: &str| b.map_or(format!("n/a ({na})"), |b| verdict(b).to_string());
            w(out, format!("claim9\t{}", opt(claim9, "graph contains K4")))?;
            w(out, format!("claim10\t{}", opt(claim10, "graph has triangles")))?;
            w(out, format!("4g\t{}", g4.unwrap_or_default()))?;
            let conj = conjecture8.map_or("n/a (graph contains K4)".to_string(), |b| {
                if b { "holds".to_string() } else { "COUNTEREXAMPLE".to_string() }
            });
            w(out, format!("conjecture8\t{conj}"))?;
        }
    }
    if conjecture8 == Some(false) {
        writeln!(err, "note: conjectured bound fails for {}", to_graph6(&g)).map_err(out_err)?;
    }
    let failed: Vec<&str> = [
        ("theorem2", theorem2),
        ("theorem4", Some(rep.theorem4)),
        ("oracle", oracle_ok),
        ("claim9", claim9),
        ("claim10", claim10),
    ]
    .into_iter()
    .filter(|(_, v)| *v == Some(false))
    .map(|(name, _)| name)
    .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::CheckFailed(format!("failed: {}", failed.join(", "))))
    }
}
