//! The `cascode` command-line harness.
//!
//! Subcommands: `detect`, `compare`, `bench`, `generate`, `scaling`. Every
//! command takes `--seed` (default 0) and its non-timing output is a
//! deterministic function of the arguments. Files written by the harness start
//! with a `#` provenance line recording tool version, command line and seed.
//!
//! Exit codes: 0 on success, 1 for usage or parameter errors, 2 for input or
//! parse errors.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::benchgen::{self, GeneratorSpec, Wiring};
use crate::cascade::detect;
use crate::error::Error;
use crate::graph::{parse_edge_list, Graph};
use crate::greedy::greedy_modularity_partition;
use crate::metrics::{modularity, nmi, MODULARITY_VARIANT, NMI_VARIANT};
use crate::partition::Partition;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

const BASELINE_NAME: &str = "greedy agglomerative modularity (CNM merge order, smallest label pair on ties)";

#[derive(Debug, Parser)]
#[command(name = "cascode", version, about = "Cascaded leader-follower community detection")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Detect communities and write a node,community CSV.
    Detect(DetectArgs),
    /// Compare against the greedy modularity baseline on one graph.
    Compare(CompareArgs),
    /// Sweep GN benchmark networks over several seeds.
    Bench(BenchArgs),
    /// Write a benchmark network and its truth sidecar.
    Generate(GenerateArgs),
    /// Measure how detection time grows with |V|·|E|.
    Scaling(ScalingArgs),
}

#[derive(Debug, Args)]
pub struct GraphSource {
    /// Edge-list file.
    #[arg(long, conflicts_with = "karate")]
    pub input: Option<PathBuf>,
    /// Use the embedded Zachary karate club network.
    #[arg(long)]
    pub karate: bool,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Number of communities.
    #[arg(long, default_value_t = 5)]
    pub k: usize,
    /// Nodes per community.
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = benchgen::DEFAULT_P_IN)]
    pub p_in: f64,
    /// Defaults to two expected external edges per node.
    #[arg(long)]
    pub p_out: Option<f64>,
    /// Number of seeds; run i uses seed + i.
    #[arg(long, default_value_t = 20)]
    pub seeds: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Result file; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// `text` writes the full result as TOML, `csv` one row per run.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeneratorName {
    Gn,
    Cliques,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WiringArg {
    Ring,
    Complete,
}

impl From<WiringArg> for Wiring {
    fn from(w: WiringArg) -> Self {
        match w {
            WiringArg::Ring => Wiring::Ring,
            WiringArg::Complete => Wiring::Complete,
        }
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub generator: GeneratorName,
    /// Number of communities or cliques.
    #[arg(long, default_value_t = 5)]
    pub k: usize,
    /// Nodes per community, or clique size.
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = benchgen::DEFAULT_P_IN)]
    pub p_in: f64,
    #[arg(long)]
    pub p_out: Option<f64>,
    #[arg(long, value_enum, default_value_t = WiringArg::Ring)]
    pub wiring: WiringArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge-list destination.
    #[arg(long)]
    pub output: PathBuf,
    /// Truth sidecar destination; defaults to the output path plus `.truth`.
    #[arg(long)]
    pub truth: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScalingArgs {
    /// Comma-separated node counts, each a multiple of the community size 20.
    #[arg(long, value_delimiter = ',', default_value = "200,400,800,1600,3200")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Failure of a command, carrying its exit code class.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Usage(String),
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Input(m) => m,
        }
    }

    fn from_error(err: Error, context: Option<&Path>) -> Self {
        let located = match (&err, context) {
            (Error::Parse { line, message }, Some(path)) => {
                format!("{}:{line}: {message}", path.display())
            }
            (_, Some(path)) => format!("{}: {err}", path.display()),
            (_, None) => err.to_string(),
        };
        match err {
            Error::Parse { .. } | Error::EmptyGraph | Error::EdgelessGraph => CliError::Input(located),
            _ => CliError::Usage(located),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::from_error(err, None)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit code; diagnostics go to `err`.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    1
                }
            };
        }
    };
    let command_line = std::iter::once("cascode")
        .chain(args.iter().skip(1).map(String::as_str))
        .collect::<Vec<_>>()
        .join(" ");
    match execute(&cli.command, &command_line, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

fn execute(command: &Command, command_line: &str, out: &mut dyn Write) -> CliResult<()> {
    let text = match command {
        Command::Detect(args) => cmd_detect(args, command_line)?,
        Command::Compare(args) => cmd_compare(args, command_line)?,
        Command::Bench(args) => cmd_bench(args, command_line)?,
        Command::Generate(args) => cmd_generate(args, command_line)?,
        Command::Scaling(args) => cmd_scaling(args, command_line)?,
    };
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::Input(format!("writing output: {e}")))
}

fn provenance(command_line: &str, seed: u64) -> String {
    format!("# cascode {VERSION} | command: {command_line} | seed: {seed}\n")
}

fn load_graph(source: &GraphSource) -> CliResult<Graph> {
    match (&source.input, source.karate) {
        (_, true) => Ok(benchgen::karate_club()),
        (Some(path), false) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            parse_edge_list(&text).map_err(|e| CliError::from_error(e, Some(path)))
        }
        (None, false) => Err(CliError::Usage("one of --input or --karate is required".into())),
    }
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn format_q(q: Option<f64>) -> String {
    q.map_or_else(|| "undefined".to_string(), |q| format!("{q:.6}"))
}

/// Labels as `node,community` CSV rows under a provenance line.
pub fn labels_csv(g: &Graph, p: &Partition, command_line: &str, seed: u64) -> String {
    let mut csv = provenance(command_line, seed);
    csv.push_str("node,community\n");
    for v in 0..g.node_count() {
        let _ = writeln!(csv, "{},{}", g.name(v), p.label(v));
    }
    csv
}

pub fn cmd_detect(args: &DetectArgs, command_line: &str) -> CliResult<String> {
    let g = load_graph(&args.source)?;
    let (partition, _) = detect(&g, args.seed)?;
    let q = modularity(&g, &partition).ok();
    let csv = labels_csv(&g, &partition, command_line, args.seed);
    let summary = format!(
        "nodes={} edges={} communities={} modularity={}\n",
        g.node_count(),
        g.edge_count(),
        partition.community_count(),
        format_q(q)
    );
    match &args.output {
        Some(path) => {
            write_file(path, &csv)?;
            Ok(summary)
        }
        None => Ok(csv + &summary),
    }
}

/// One row of a CASCODE-versus-baseline comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub q_cascode: f64,
    pub q_greedy: f64,
    pub delta_q: f64,
    pub communities_cascode: usize,
    pub communities_greedy: usize,
    pub nmi_between: f64,
}

pub fn compare(g: &Graph, seed: u64) -> crate::Result<Comparison> {
    if g.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let (cascode, _) = detect(g, seed)?;
    let greedy = greedy_modularity_partition(g)?;
    let q_cascode = modularity(g, &cascode)?;
    let q_greedy = modularity(g, &greedy)?;
    Ok(Comparison {
        q_cascode,
        q_greedy,
        delta_q: q_cascode - q_greedy,
        communities_cascode: cascode.community_count(),
        communities_greedy: greedy.community_count(),
        nmi_between: nmi(&cascode, &greedy)?,
    })
}

pub fn cmd_compare(args: &CompareArgs, command_line: &str) -> CliResult<String> {
    let g = load_graph(&args.source)?;
    let row = compare(&g, args.seed).map_err(|e| match e {
        Error::EdgelessGraph => CliError::Input(format!(
            "{e}; compare needs an input with at least one edge"
        )),
        other => other.into(),
    })?;
    let mut text = provenance(command_line, args.seed);
    match args.format {
        Format::Csv => {
            text.push_str("q_cascode,q_greedy,delta_q,communities_cascode,communities_greedy,nmi_between\n");
            let _ = writeln!(
                text,
                "{:.6},{:.6},{:.6},{},{},{:.6}",
                row.q_cascode,
                row.q_greedy,
                row.delta_q,
                row.communities_cascode,
                row.communities_greedy,
                row.nmi_between
            );
        }
        Format::Text => {
            let _ = writeln!(text, "q_cascode           = {:.6}", row.q_cascode);
            let _ = writeln!(text, "q_greedy            = {:.6}", row.q_greedy);
            let _ = writeln!(text, "delta_q             = {:.6}", row.delta_q);
            let _ = writeln!(text, "abs_delta_q         = {:.6}", row.delta_q.abs());
            let _ = writeln!(text, "communities_cascode = {}", row.communities_cascode);
            let _ = writeln!(text, "communities_greedy  = {}", row.communities_greedy);
            let _ = writeln!(text, "nmi_between         = {:.6}", row.nmi_between);
        }
    }
    Ok(text)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchSpec {
    pub k: usize,
    pub n: usize,
    pub p_in: f64,
    pub p_out: f64,
    pub seeds: usize,
    pub base_seed: u64,
    pub nmi_variant: String,
    pub modularity_variant: String,
    pub baseline: String,
}

/// One seed of a benchmark sweep. Fields ending in `_ms` are wall-clock
/// timings and the only non-deterministic values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub seed: u64,
    pub nodes: usize,
    pub edges: usize,
    pub communities_truth: usize,
    pub communities_cascode: usize,
    pub communities_greedy: usize,
    pub q_cascode: f64,
    pub q_greedy: f64,
    pub nmi_cascode: f64,
    pub nmi_greedy: f64,
    pub generate_ms: f64,
    pub cascode_ms: f64,
    pub greedy_ms: f64,
}

/// Means and sample standard deviations over the runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub mean_nmi_cascode: f64,
    pub std_nmi_cascode: f64,
    pub mean_nmi_greedy: f64,
    pub std_nmi_greedy: f64,
    pub mean_abs_delta_nmi: f64,
    pub mean_q_cascode: f64,
    pub mean_q_greedy: f64,
    pub mean_abs_delta_q: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchResult {
    pub spec: BenchSpec,
    pub aggregate: Aggregate,
    pub runs: Vec<RunRecord>,
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn mean_std(values: impl Iterator<Item = f64> + Clone) -> (f64, f64) {
    let n = values.clone().count();
    if n == 0 {
        return (f64::NAN, f64::NAN);
    }
    let mean = values.clone().sum::<f64>() / n as f64;
    if n == 1 {
        return (mean, 0.0);
    }
    let var = values.map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
    (mean, var.sqrt())
}

fn bench_one(k: usize, n: usize, p_in: f64, p_out: f64, seed: u64) -> crate::Result<RunRecord> {
    let start = Instant::now();
    let net = benchgen::gn_benchmark(k, n, p_in, p_out, seed)?;
    let generate_ms = millis(start.elapsed());
    if net.graph.edge_count() == 0 {
        return Err(Error::param(format!("seed {seed} generated a graph without edges")));
    }

    let start = Instant::now();
    let (cascode, _) = detect(&net.graph, seed)?;
    let cascode_ms = millis(start.elapsed());

    let start = Instant::now();
    let greedy = greedy_modularity_partition(&net.graph)?;
    let greedy_ms = millis(start.elapsed());

    Ok(RunRecord {
        seed,
        nodes: net.graph.node_count(),
        edges: net.graph.edge_count(),
        communities_truth: net.truth.community_count(),
        communities_cascode: cascode.community_count(),
        communities_greedy: greedy.community_count(),
        q_cascode: modularity(&net.graph, &cascode)?,
        q_greedy: modularity(&net.graph, &greedy)?,
        nmi_cascode: nmi(&cascode, &net.truth)?,
        nmi_greedy: nmi(&greedy, &net.truth)?,
        generate_ms,
        cascode_ms,
        greedy_ms,
    })
}

/// Runs the GN sweep: seed `base_seed + i` for `i in 0..seeds` drives both the
/// generator and the detector. Seeds run in parallel; records come back in
/// seed order.
pub fn bench(
    k: usize,
    n: usize,
    p_in: f64,
    p_out: Option<f64>,
    seeds: usize,
    base_seed: u64,
) -> crate::Result<BenchResult> {
    if seeds == 0 {
        return Err(Error::param("--seeds must be at least 1"));
    }
    let p_out = p_out.unwrap_or_else(|| benchgen::default_p_out(k, n));
    // Surface parameter errors once, before fanning out.
    benchgen::gn_benchmark(k, n, p_in, p_out, base_seed)?;
    let runs = (0..seeds as u64)
        .into_par_iter()
        .map(|i| bench_one(k, n, p_in, p_out, base_seed.wrapping_add(i)))
        .collect::<crate::Result<Vec<_>>>()?;

    let (mean_nmi_cascode, std_nmi_cascode) = mean_std(runs.iter().map(|r| r.nmi_cascode));
    let (mean_nmi_greedy, std_nmi_greedy) = mean_std(runs.iter().map(|r| r.nmi_greedy));
    let (mean_abs_delta_nmi, _) = mean_std(runs.iter().map(|r| (r.nmi_cascode - r.nmi_greedy).abs()));
    let (mean_q_cascode, _) = mean_std(runs.iter().map(|r| r.q_cascode));
    let (mean_q_greedy, _) = mean_std(runs.iter().map(|r| r.q_greedy));
    let (mean_abs_delta_q, _) = mean_std(runs.iter().map(|r| (r.q_cascode - r.q_greedy).abs()));

    Ok(BenchResult {
        spec: BenchSpec {
            k,
            n,
            p_in,
            p_out,
            seeds,
            base_seed,
            nmi_variant: NMI_VARIANT.into(),
            modularity_variant: MODULARITY_VARIANT.into(),
            baseline: BASELINE_NAME.into(),
        },
        aggregate: Aggregate {
            mean_nmi_cascode,
            std_nmi_cascode,
            mean_nmi_greedy,
            std_nmi_greedy,
            mean_abs_delta_nmi,
            mean_q_cascode,
            mean_q_greedy,
            mean_abs_delta_q,
        },
        runs,
    })
}

impl BenchResult {
    pub fn to_text(&self) -> String {
        toml::to_string(self).expect("bench result serializes")
    }

    pub fn from_text(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.to_string())
    }

    pub fn to_csv(&self) -> String {
        let mut csv = String::from(
            "seed,nodes,edges,communities_truth,communities_cascode,communities_greedy,\
             q_cascode,q_greedy,nmi_cascode,nmi_greedy,generate_ms,cascode_ms,greedy_ms\n",
        );
        for r in &self.runs {
            let _ = writeln!(
                csv,
                "{},{},{},{},{},{},{:.6},{:.6},{:.6},{:.6},{:.3},{:.3},{:.3}",
                r.seed,
                r.nodes,
                r.edges,
                r.communities_truth,
                r.communities_cascode,
                r.communities_greedy,
                r.q_cascode,
                r.q_greedy,
                r.nmi_cascode,
                r.nmi_greedy,
                r.generate_ms,
                r.cascode_ms,
                r.greedy_ms
            );
        }
        csv
    }
}

pub fn cmd_bench(args: &BenchArgs, command_line: &str) -> CliResult<String> {
    let result = bench(args.k, args.n, args.p_in, args.p_out, args.seeds, args.seed)?;
    let mut body = provenance(command_line, args.seed);
    body.push_str(&match args.format {
        Format::Text => result.to_text(),
        Format::Csv => result.to_csv(),
    });
    let a = &result.aggregate;
    let summary = format!(
        "runs={} mean_nmi_cascode={:.6} mean_nmi_greedy={:.6} mean_abs_delta_nmi={:.6}\n",
        result.runs.len(),
        a.mean_nmi_cascode,
        a.mean_nmi_greedy,
        a.mean_abs_delta_nmi
    );
    match &args.output {
        Some(path) => {
            write_file(path, &body)?;
            Ok(summary)
        }
        None => Ok(body),
    }
}

pub fn cmd_generate(args: &GenerateArgs, command_line: &str) -> CliResult<String> {
    let net = match args.generator {
        GeneratorName::Gn => {
            let p_out = args.p_out.unwrap_or_else(|| benchgen::default_p_out(args.k, args.n));
            benchgen::gn_benchmark(args.k, args.n, args.p_in, p_out, args.seed)?
        }
        GeneratorName::Cliques => {
            benchgen::clique_constellation(args.k, args.n, args.wiring.into(), args.seed)?
        }
    };
    let header = provenance(command_line, args.seed);
    let spec_line = match &net.spec {
        GeneratorSpec::Gn { k, n, p_in, p_out, seed } => {
            format!("# generator: gn k={k} n={n} p_in={p_in} p_out={p_out} seed={seed}\n")
        }
        GeneratorSpec::Cliques { k, s, wiring, seed } => {
            format!("# generator: cliques k={k} s={s} wiring={wiring} seed={seed}\n")
        }
    };
    let truth_path = args.truth.clone().unwrap_or_else(|| {
        let mut p = args.output.clone().into_os_string();
        p.push(".truth");
        PathBuf::from(p)
    });
    write_file(
        &args.output,
        &format!("{header}{spec_line}{}", net.graph.to_edge_list()),
    )?;
    write_file(
        &truth_path,
        &format!(
            "{header}{spec_line}{}",
            benchgen::truth_to_text(&net.graph, &net.truth)
        ),
    )?;
    Ok(format!(
        "nodes={} edges={} communities={}\n",
        net.graph.node_count(),
        net.graph.edge_count(),
        net.truth.community_count()
    ))
}

/// Community size of the scaling networks.
pub const SCALING_BLOCK: usize = 20;
/// Expected degree of the scaling networks: 8 inside the block, 2 outside.
pub const SCALING_DEGREE: f64 = 10.0;

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingPoint {
    pub nodes: usize,
    pub edges: usize,
    pub repetitions: usize,
    pub median_seconds: f64,
}

impl ScalingPoint {
    pub fn work(&self) -> f64 {
        self.nodes as f64 * self.edges as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingReport {
    pub points: Vec<ScalingPoint>,
    /// Least-squares slope of ln(time) against ln(|V|·|E|).
    pub slope: f64,
}

/// Ordinary least-squares slope of `ys` on `xs`.
pub fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let cov: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    cov / var
}

/// Times `detect` on sparse GN networks (blocks of 20, average degree 10),
/// one size after another. Each size is repeated until at least 0.2 s have
/// been spent (minimum 3 runs) and the median run is kept.
pub fn scaling(sizes: &[usize], seed: u64) -> crate::Result<ScalingReport> {
    const MIN_RUNS: usize = 3;
    const MAX_RUNS: usize = 200;
    const BUDGET: Duration = Duration::from_millis(200);

    if sizes.len() < 4 {
        return Err(Error::param("need ≥ 4 sizes"));
    }
    let mut points = Vec::with_capacity(sizes.len());
    for (i, &size) in sizes.iter().enumerate() {
        if size < 2 * SCALING_BLOCK || size % SCALING_BLOCK != 0 {
            return Err(Error::param(format!(
                "size {size} must be a multiple of {SCALING_BLOCK} and at least {}",
                2 * SCALING_BLOCK
            )));
        }
        let k = size / SCALING_BLOCK;
        let p_in = (SCALING_DEGREE - 2.0) / (SCALING_BLOCK - 1) as f64;
        let p_out = 2.0 / (size - SCALING_BLOCK) as f64;
        let net = benchgen::gn_benchmark(k, SCALING_BLOCK, p_in, p_out, seed.wrapping_add(i as u64))?;

        let mut times = Vec::new();
        let started = Instant::now();
        while times.len() < MIN_RUNS || (started.elapsed() < BUDGET && times.len() < MAX_RUNS) {
            let t = Instant::now();
            let result = detect(&net.graph, seed)?;
            times.push(t.elapsed().as_secs_f64());
            std::hint::black_box(result);
        }
        times.sort_by(f64::total_cmp);
        points.push(ScalingPoint {
            nodes: net.graph.node_count(),
            edges: net.graph.edge_count(),
            repetitions: times.len(),
            median_seconds: times[times.len() / 2],
        });
    }
    let xs: Vec<f64> = points.iter().map(|p| p.work().ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.median_seconds.ln()).collect();
    Ok(ScalingReport {
        slope: least_squares_slope(&xs, &ys),
        points,
    })
}

pub fn cmd_scaling(args: &ScalingArgs, command_line: &str) -> CliResult<String> {
    let report = scaling(&args.sizes, args.seed)?;
    let mut text = provenance(command_line, args.seed);
    text.push_str("nodes,edges,v_times_e,repetitions,median_seconds\n");
    for p in &report.points {
        let _ = writeln!(
            text,
            "{},{},{},{},{:.6e}",
            p.nodes,
            p.edges,
            p.nodes * p.edges,
            p.repetitions,
            p.median_seconds
        );
    }
    let _ = writeln!(text, "slope = {:.4}", report.slope);
    Ok(text)
}
