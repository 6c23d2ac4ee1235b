//! The `ramsey-sat` command-line tool.
//!
//! Every successful command prints one canonical-JSON [`Certificate`] on
//! standard output. Exit codes: 0 holds, 1 fails (witness in the
//! certificate), 2 unknown (budget recorded), 3 usage error, 4 input or
//! output error, 5 internal error.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::certificate::Certificate;
use crate::constructions::{
    affine_coloring, count_bad_sets, fq3_coloring, lower_bound_p, rng_from_seed, sample_gnp, AffineStrategy,
    BadSetMode, GnpParams, GENERATOR_NAME,
};
use crate::error::{Error, Result};
use crate::geometry::{build_affine_plane, fq3_line_family, incidence_sum, parallel_classes};
use crate::graph::{SimpleGraph, VertexSet};
use crate::pattern::{ColoredCompleteGraph, PatternSummary};
use crate::reduction::{
    coloring_to_graph, f_oracle, forced_pairs, g_oracle, graph_to_coloring, Colour, KSubsetColoring, RamseyParams,
    TieBreak,
};
use crate::saturation::{
    check_observation, is_kkfree_pattern, is_saturated, is_semisaturated, is_semisaturated_direct,
    monochromatic_clique, ssat_search, CheckOptions, Outcome, SearchOutcome, Verdict, Witness,
    DEFAULT_MAX_COLORINGS, DEFAULT_MAX_SUBSETS,
};

pub const EXIT_USAGE: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "ramsey-sat", version, about = "Generalised Ramsey functions and semisaturated colour patterns")]
pub struct Cli {
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Also write the certificate to this file.
    #[arg(long, global = true)]
    pub cert: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a colour pattern or random graph.
    #[command(subcommand)]
    Construct(Construct),
    /// Check a property of a colour pattern.
    #[command(subcommand)]
    Verify(Verify),
    /// Exhaustive values of f_k(n,s,t) and g(n,s,t).
    #[command(subcommand)]
    Oracle(Oracle),
    /// Convert between k-subset colourings and graphs.
    #[command(subcommand)]
    Reduce(Reduce),
    /// Search for small patterns.
    #[command(subcommand)]
    Search(Search),
    /// Random-graph experiments.
    #[command(subcommand)]
    Experiment(Experiment),
    /// Incidence structures over prime fields.
    #[command(subcommand)]
    Geom(Geom),
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// Colour K_{q^2} by the lines of AG(2,q).
    Affine {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "parallel-balanced")]
        strategy: StrategyArg,
        /// Required by `round-robin`.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Colour K_{q^3} by the F_q^3 slope families, then complete round-robin.
    Fq3 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the partial pattern before completion.
        #[arg(long)]
        pre_out: Option<PathBuf>,
    },
    /// Sample G(N,p).
    Gnp {
        #[arg(long = "N", alias = "big-n")]
        big_n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum StrategyArg {
    ParallelBalanced,
    RoundRobin,
}

#[derive(Args, Debug)]
pub struct PatternCheck {
    /// Pattern in `.cg` format.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub k: usize,
    /// Cap on exhaustively enumerated objects.
    #[arg(long)]
    pub max_exhaustive: Option<u128>,
    /// Random trials when over the cap (needs --seed).
    #[arg(long, requires = "seed")]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Semisaturation via vertex colourings.
    Ssat(PatternCheck),
    /// Semisaturation by literal one-vertex extensions.
    SsatDirect(PatternCheck),
    /// The ceil(n/r)-subset sufficient condition.
    Observation {
        #[command(flatten)]
        check: PatternCheck,
        /// Number of classes to test (default: all).
        #[arg(long)]
        r: Option<usize>,
    },
    /// Every colour class is K_k-free.
    Kkfree {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// K_k-free classes and semisaturated.
    Saturated(PatternCheck),
}

#[derive(Subcommand, Debug)]
pub enum Oracle {
    /// f_k(n,s,t) over colourings of k-subsets.
    F {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// Defaults to s + t - 2.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n_max: usize,
    },
    /// g(n,s,t) over graphs.
    G {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n_max: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TieArg {
    NonEdge,
    Edge,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ColourArg {
    Red,
    Blue,
}

#[derive(Subcommand, Debug)]
pub enum Reduce {
    /// k-subset colouring (`ksc`) to graph (`g`), k = s + t - 2.
    ChiToGraph {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value = "non-edge")]
        tie_break: TieArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graph (`g`) to k-subset colouring (`ksc`), k = s + t - 2.
    GraphToChi {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value = "red")]
        default: ColourArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Search {
    /// Smallest n with an (r,K_k)-semisaturated pattern, scanning upward.
    Ssat {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        /// Search only this n.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Node budget per n.
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Experiment {
    /// Count n-sets of G(N,p) lacking a K_s or an independent t-set.
    BadSets {
        #[arg(long = "N", alias = "big-n")]
        big_n: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// Edge probability (default: the lower-bound formula for s, t).
        #[arg(long)]
        p: Option<f64>,
        /// Seed of the graph; sampling uses seed + 1.
        #[arg(long)]
        seed: u64,
        /// Sample this many n-sets instead of enumerating all of them.
        #[arg(long)]
        samples: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Geom {
    /// AG(2,q).
    Plane {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The F_q^3 line family for slope parameter lambda.
    Fq3Family {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Incidences between a point set and a union of parallel classes of
    /// AG(2,q), against |U||F|/q - 2 sqrt(q) sqrt(|U||F|).
    Incidence {
        #[arg(long)]
        q: u64,
        /// Parallel class indices, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        classes: Vec<usize>,
        /// Point indices (x*q + y), comma separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "random_points")]
        points: Vec<usize>,
        /// Use a random point set of this size instead (needs --seed).
        #[arg(long, requires = "seed")]
        random_points: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Result of one invocation.
#[derive(Debug)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Entry point of the binary.
pub fn main_from_env() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            return if code == 0 {
                RunOutput { code, stdout: text, stderr: String::new() }
            } else {
                RunOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let started = Instant::now();
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| execute(&cli.command)),
            Err(e) => Err(CliError::Usage(format!("cannot start {t} threads: {e}"))),
        },
        None => execute(&cli.command),
    };
    let mut cert = match result {
        Ok(c) => c,
        Err(e) => return RunOutput { code: e.code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    cert.wall_time_ms = started.elapsed().as_millis() as u64;
    if let Err(e) = cert.validate() {
        return RunOutput { code: EXIT_INTERNAL, stdout: String::new(), stderr: format!("error: {e}\n") };
    }
    let text = cert.to_canonical_json();
    if let Some(path) = &cli.cert {
        if let Err(e) = write_file(path, &text) {
            return RunOutput { code: e.code(), stdout: String::new(), stderr: format!("error: {e}\n") };
        }
    }
    RunOutput { code: cert.exit_code(), stdout: text, stderr: String::new() }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input(_) => EXIT_IO,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::Parse { .. } => CliError::Input(e.to_string()),
            Error::Invariant(_) => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type CliResult = std::result::Result<Certificate, CliError>;

fn read_file(path: &Path) -> std::result::Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_opt(path: &Option<PathBuf>, text: &str) -> std::result::Result<(), CliError> {
    match path {
        Some(p) => write_file(p, text),
        None => Ok(()),
    }
}

fn with_input<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T>) -> std::result::Result<T, CliError> {
    let text = read_file(path)?;
    parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn to_json(v: impl serde::Serialize) -> Value {
    serde_json::to_value(v).expect("serialisable")
}

fn execute(cmd: &Command) -> CliResult {
    match cmd {
        Command::Construct(c) => construct(c),
        Command::Verify(v) => verify(v),
        Command::Oracle(o) => oracle(o),
        Command::Reduce(r) => reduce(r),
        Command::Search(s) => search(s),
        Command::Experiment(e) => experiment(e),
        Command::Geom(g) => geom(g),
    }
}

fn construct(c: &Construct) -> CliResult {
    match *c {
        Construct::Affine { q, r, strategy, seed, ref out } => {
            let (strategy, name) = match strategy {
                StrategyArg::ParallelBalanced => (AffineStrategy::ParallelBalanced, "parallel-balanced"),
                StrategyArg::RoundRobin => (AffineStrategy::RoundRobin, "round-robin"),
            };
            if strategy == AffineStrategy::RoundRobin && seed.is_none() {
                return Err(CliError::Usage("--strategy round-robin needs --seed".into()));
            }
            let pattern = affine_coloring(q, r, strategy, seed.unwrap_or(0))?;
            write_opt(out, &pattern.to_cg())?;
            let mut cert = Certificate::new("affine-coloring", Outcome::Holds)
                .param("q", q)
                .param("r", r)
                .param("strategy", name);
            if strategy == AffineStrategy::RoundRobin {
                cert.seed = seed;
                cert.generator = Some(GENERATOR_NAME.into());
            }
            cert.value = Some(to_json(PatternSummary::from(&pattern)));
            cert.checked = q * q + q;
            Ok(cert)
        }
        Construct::Fq3 { q, r, ref out, ref pre_out } => {
            let col = fq3_coloring(q, r)?;
            write_opt(out, &col.completed.to_cg())?;
            write_opt(pre_out, &col.pre_completion.to_cg())?;
            let mut cert = Certificate::new("fq3-coloring", Outcome::Holds).param("q", q).param("r", r);
            cert.value = Some(json!({
                "pattern": PatternSummary::from(&col.completed),
                "pre_completion_class_sizes": col.pre_completion.class_sizes(),
                "leftover_pairs": col.leftover.len(),
            }));
            cert.checked = r as u64 * q * q * q;
            Ok(cert)
        }
        Construct::Gnp { big_n, p, seed, ref out } => {
            let g = sample_gnp(GnpParams { n: big_n, p, seed })?;
            write_opt(out, &g.to_text())?;
            let mut cert = Certificate::new("gnp-sample", Outcome::Holds).param("N", big_n).param("p", p);
            cert.seed = Some(seed);
            cert.generator = Some(GENERATOR_NAME.into());
            cert.value = Some(json!({ "edges": g.edge_count() }));
            cert.checked = (big_n * big_n.saturating_sub(1) / 2) as u64;
            Ok(cert)
        }
    }
}

fn options(check: &PatternCheck, default_cap: u128) -> CheckOptions {
    CheckOptions {
        max_exhaustive: check.max_exhaustive.unwrap_or(default_cap),
        sampling: match (check.samples, check.seed) {
            (Some(trials), Some(seed)) => Some(crate::saturation::Sampling { trials, seed }),
            _ => None,
        },
    }
}

fn budget_json(opts: &CheckOptions) -> Value {
    json!({
        "max_exhaustive": opts.max_exhaustive.to_string(),
        "samples": opts.sampling.map(|s| s.trials),
    })
}

/// Certificate for a pattern verdict; an over-budget check without
/// sampling becomes an unknown verdict.
fn verdict_certificate(
    claim: &str,
    check: &PatternCheck,
    opts: &CheckOptions,
    verdict: Result<Verdict>,
) -> CliResult {
    let mut cert = Certificate::new(claim, Outcome::Unknown).param("k", check.k).param("in", check.input.display().to_string());
    if let Some(s) = opts.sampling {
        cert.seed = Some(s.seed);
        cert.generator = Some(GENERATOR_NAME.into());
    }
    match verdict {
        Ok(v) => {
            cert.verdict = v.outcome;
            cert.witness = v.witness.map(to_json);
            cert.checked = v.checked;
            cert.exhaustive = v.exhaustive;
            if v.outcome == Outcome::Unknown {
                cert.budget = Some(budget_json(opts));
            }
        }
        Err(Error::BudgetExceeded { what, needed, cap }) => {
            cert.exhaustive = false;
            cert.budget = Some(json!({ "what": what, "needed": needed.to_string(), "cap": cap.to_string() }));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(cert)
}

fn verify(v: &Verify) -> CliResult {
    match v {
        Verify::Ssat(check) => {
            let c = with_input(&check.input, ColoredCompleteGraph::parse_cg)?;
            let opts = options(check, DEFAULT_MAX_COLORINGS);
            verdict_certificate("semisaturated", check, &opts, is_semisaturated(&c, check.k, &opts))
        }
        Verify::SsatDirect(check) => {
            let c = with_input(&check.input, ColoredCompleteGraph::parse_cg)?;
            let opts = options(check, DEFAULT_MAX_COLORINGS);
            verdict_certificate("semisaturated-direct", check, &opts, is_semisaturated_direct(&c, check.k, &opts))
        }
        Verify::Observation { check, r } => {
            let c = with_input(&check.input, ColoredCompleteGraph::parse_cg)?;
            let r = r.unwrap_or(c.r());
            let opts = options(check, DEFAULT_MAX_SUBSETS);
            let cert = verdict_certificate("observation", check, &opts, check_observation(&c, check.k, r, &opts))?;
            Ok(cert.param("r", r))
        }
        Verify::Kkfree { input, k } => {
            let c = with_input(input, ColoredCompleteGraph::parse_cg)?;
            if *k == 0 {
                return Err(CliError::Usage("need k >= 1".into()));
            }
            let mut cert = Certificate::new("kk-free", Outcome::Holds).param("k", k).param("in", input.display().to_string());
            if let Some((colour, vertices)) = monochromatic_clique(&c, *k) {
                cert.verdict = Outcome::Fails;
                cert.witness = Some(to_json(Witness::MonochromaticClique { colour, vertices }));
            }
            debug_assert_eq!(cert.verdict == Outcome::Holds, is_kkfree_pattern(&c, *k));
            cert.checked = c.r() as u64;
            Ok(cert)
        }
        Verify::Saturated(check) => {
            let c = with_input(&check.input, ColoredCompleteGraph::parse_cg)?;
            let opts = options(check, DEFAULT_MAX_COLORINGS);
            verdict_certificate("saturated", check, &opts, is_saturated(&c, check.k, &opts))
        }
    }
}

fn oracle(o: &Oracle) -> CliResult {
    let (mut cert, result) = match *o {
        Oracle::F { n, s, t, k, n_max } => {
            let k = k.unwrap_or((s + t).saturating_sub(2));
            let cert = Certificate::new("f-oracle", Outcome::Unknown)
                .param("n", n)
                .param("s", s)
                .param("t", t)
                .param("k", k)
                .param("n_max", n_max);
            let r = RamseyParams::general(n, s, t, k).and_then(|p| f_oracle(&p, n_max)).map(|r| {
                let cx = r.counterexample.map(|(big_n, chi)| json!({ "N": big_n, "ksc": chi.to_ksc() }));
                (r.value, cx, r.checked)
            });
            (cert, r)
        }
        Oracle::G { n, s, t, n_max } => {
            let cert = Certificate::new("g-oracle", Outcome::Unknown)
                .param("n", n)
                .param("s", s)
                .param("t", t)
                .param("n_max", n_max);
            let r = g_oracle(n, s, t, n_max).map(|r| {
                let cx = r.counterexample.map(|(big_n, g)| json!({ "N": big_n, "graph": g.to_text() }));
                (r.value, cx, r.checked)
            });
            (cert, r)
        }
    };
    match result {
        Ok((value, counterexample, checked)) => {
            cert.checked = checked;
            // the largest N without the property is evidence for the value
            cert.witness = counterexample;
            match value {
                Some(v) => {
                    cert.verdict = Outcome::Holds;
                    cert.value = Some(v.into());
                }
                None => cert.budget = cert.params.get("n_max").cloned(),
            }
        }
        Err(Error::BudgetExceeded { what, needed, cap }) => {
            cert.exhaustive = false;
            cert.budget = Some(json!({ "what": what, "needed": needed.to_string(), "cap": cap.to_string() }));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(cert)
}

fn reduce(r: &Reduce) -> CliResult {
    match *r {
        Reduce::ChiToGraph { ref input, s, t, tie_break, ref out } => {
            let chi = with_input(input, KSubsetColoring::parse_ksc)?;
            let tie = match tie_break {
                TieArg::NonEdge => TieBreak::NonEdge,
                TieArg::Edge => TieBreak::Edge,
            };
            let mut cert = Certificate::new("chi-to-graph", Outcome::Holds)
                .param("s", s)
                .param("t", t)
                .param("tie_break", format!("{tie_break:?}").to_lowercase())
                .param("in", input.display().to_string());
            match forced_pairs(&chi, s, t) {
                Ok(f) => {
                    let g = coloring_to_graph(&chi, s, t, tie)?;
                    write_opt(out, &g.to_text())?;
                    cert.value = Some(json!({
                        "forced_edges": f.edges.len(),
                        "forced_non_edges": f.non_edges.len(),
                        "edges": g.edge_count(),
                    }));
                }
                Err(Error::Invariant(msg)) => {
                    cert.verdict = Outcome::Fails;
                    cert.witness = Some(json!({ "conflict": msg }));
                }
                Err(e) => return Err(e.into()),
            }
            cert.checked = chi.len();
            Ok(cert)
        }
        Reduce::GraphToChi { ref input, s, t, default, ref out } => {
            let g = with_input(input, SimpleGraph::parse)?;
            let colour = match default {
                ColourArg::Red => Colour::Red,
                ColourArg::Blue => Colour::Blue,
            };
            let mut cert = Certificate::new("graph-to-chi", Outcome::Holds)
                .param("s", s)
                .param("t", t)
                .param("default", format!("{default:?}").to_lowercase())
                .param("in", input.display().to_string());
            match graph_to_coloring(&g, s, t, colour) {
                Ok(chi) => {
                    write_opt(out, &chi.to_ksc())?;
                    cert.value = Some(json!({ "k": chi.k(), "blue": chi.blue_count(), "red": chi.len() - chi.blue_count() }));
                    cert.checked = chi.len();
                }
                Err(Error::Invariant(msg)) => {
                    cert.verdict = Outcome::Fails;
                    cert.witness = Some(json!({ "conflict": msg }));
                }
                Err(e) => return Err(e.into()),
            }
            Ok(cert)
        }
    }
}

fn search(s: &Search) -> CliResult {
    let Search::Ssat { r, k, n, n_min, n_max, budget, ref out } = *s;
    let range = match n {
        Some(n) => n..=n,
        None => n_min..=n_max,
    };
    if range.is_empty() {
        return Err(CliError::Usage("empty range of n".into()));
    }
    let mut cert = Certificate::new("ssat-search", Outcome::Fails)
        .param("r", r)
        .param("k", k)
        .param("n_range", [*range.start(), *range.end()]);
    let mut per_n = Vec::new();
    let mut exhausted = Vec::new();
    for n in range {
        let res = ssat_search(r, k, n, budget)?;
        cert.checked += res.nodes;
        let label = match &res.outcome {
            SearchOutcome::Found(_) => "found",
            SearchOutcome::Exhausted => "none",
            SearchOutcome::BudgetHit => "budget",
        };
        per_n.push(json!({ "n": n, "result": label, "nodes": res.nodes }));
        match res.outcome {
            SearchOutcome::Found(p) => {
                write_opt(out, &p.to_cg())?;
                cert.verdict = Outcome::Holds;
                cert.value = Some(json!({ "n": n, "per_n": per_n }));
                cert.witness = Some(json!({ "cg": p.to_cg() }));
                return Ok(cert);
            }
            SearchOutcome::Exhausted => exhausted.push(n),
            SearchOutcome::BudgetHit => {
                cert.verdict = Outcome::Unknown;
                cert.exhaustive = false;
                cert.budget = Some(budget.into());
                cert.value = Some(json!({ "per_n": per_n }));
                return Ok(cert);
            }
        }
    }
    cert.value = Some(json!({ "per_n": per_n }));
    cert.witness = Some(json!({ "exhausted": exhausted }));
    Ok(cert)
}

fn experiment(e: &Experiment) -> CliResult {
    let Experiment::BadSets { big_n, n, s, t, p, seed, samples } = *e;
    let p = match p {
        Some(p) => p,
        None => lower_bound_p(s as u32, t as u32)?,
    };
    let g = sample_gnp(GnpParams { n: big_n, p, seed })?;
    let mode = match samples {
        Some(trials) => BadSetMode::Sampled { trials, seed: seed.wrapping_add(1) },
        None => BadSetMode::Exact,
    };
    let mut cert = Certificate::new("bad-sets", Outcome::Holds)
        .param("N", big_n)
        .param("n", n)
        .param("s", s)
        .param("t", t)
        .param("p", p)
        .param("mode", mode);
    cert.seed = Some(seed);
    cert.generator = Some(GENERATOR_NAME.into());
    match count_bad_sets(&g, n, s, t, mode) {
        Ok(count) => {
            cert.checked = count.trials;
            cert.exhaustive = count.exact;
            cert.value = Some(json!({ "edges": g.edge_count(), "count": count }));
        }
        Err(Error::BudgetExceeded { what, needed, cap }) => {
            cert.verdict = Outcome::Unknown;
            cert.exhaustive = false;
            cert.budget = Some(json!({ "what": what, "needed": needed.to_string(), "cap": cap.to_string() }));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(cert)
}

fn structure_certificate(claim: &str, st: &crate::geometry::IncidenceStructure, out: &Option<PathBuf>) -> CliResult {
    write_opt(out, &st.to_text())?;
    let mut cert = Certificate::new(claim, Outcome::Holds).param("q", st.q());
    if let crate::geometry::StructureKind::Fq3Family { lambda } = st.kind() {
        cert = cert.param("lambda", lambda);
    }
    if let Err(msg) = st.validate() {
        cert.verdict = Outcome::Fails;
        cert.witness = Some(json!({ "violation": msg }));
    }
    cert.value = Some(json!({ "points": st.point_count(), "lines": st.lines().len() }));
    cert.checked = st.lines().len() as u64;
    Ok(cert)
}

fn geom(g: &Geom) -> CliResult {
    match *g {
        Geom::Plane { q, ref out } => structure_certificate("affine-plane", &build_affine_plane(q)?, out),
        Geom::Fq3Family { q, lambda, ref out } => structure_certificate("fq3-family", &fq3_line_family(q, lambda)?, out),
        Geom::Incidence { q, ref classes, ref points, random_points, seed } => {
            let plane = build_affine_plane(q)?;
            let all = parallel_classes(&plane)?;
            let mut family = Vec::new();
            for &c in classes {
                let lines = all.get(c).ok_or_else(|| CliError::Usage(format!("class {c} outside [0, {}]", all.len() - 1)))?;
                family.extend_from_slice(lines);
            }
            family.sort_unstable();
            family.dedup();
            let u = match random_points {
                Some(m) => {
                    let pts = plane.point_count();
                    if m > pts {
                        return Err(CliError::Usage(format!("--random-points {m} exceeds {pts} points")));
                    }
                    let mut rng = rng_from_seed(seed.expect("clap enforces --seed"));
                    VertexSet::new(rand::seq::index::sample(&mut rng, pts, m).into_vec())
                }
                None => VertexSet::new(points.clone()),
            };
            let res = incidence_sum(&plane, &family, &u)?;
            let mut cert = Certificate::new("incidence-bound", if res.holds() { Outcome::Holds } else { Outcome::Fails })
                .param("q", q)
                .param("classes", classes)
                .param("points", u.as_slice());
            if random_points.is_some() {
                cert.seed = seed;
                cert.generator = Some(GENERATOR_NAME.into());
            }
            if !res.holds() {
                cert.witness = Some(json!({ "points": u.as_slice(), "lines": family }));
            }
            cert.value = Some(to_json(res));
            cert.checked = family.len() as u64;
            Ok(cert)
        }
    }
}
