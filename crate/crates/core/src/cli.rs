//! The `pdom` command line.
//!
//! Machine-readable output is JSON (`--format json`, the default) with field
//! names that are stable across releases; `--format text` prints the same
//! fields as `key: value` lines (audits print their line-oriented record).
//! Witness sets are sorted 0-indexed vertex lists and proportions are always
//! written `i/j`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::audit::{audit_suite, sample_connected_coconnected};
use crate::closed_forms::{
    gamma_half_cycle, gamma_half_grid, gamma_half_multipartite, gamma_half_path, gamma_half_torus,
    FormulaResult,
};
use crate::edge_list::{read_edge_list, to_edge_list_string};
use crate::engine::{
    big_gamma_p_exact, gamma_p_binary_search_with, gamma_p_exact_with, greedy_gamma_p,
    oracle_gamma_p, SolveOptions, SolveResult, MAX_SEARCH_VERTICES,
};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::proportion::Proportion;
use crate::vertex_set::VertexSet;

const DEFAULT_AUDIT_PS: &str = "1/4,1/3,1/2,2/3,3/4,1/1";
const DEFAULT_BENCH_SWEEP: &str = "path:30;cycle:36;grid:4,8;torus:4,6;spider:8";

#[derive(Debug, Parser)]
#[command(name = "pdom", version, about = "Partial domination solvers")]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    /// Split the exact search across threads. The witness matches the
    /// sequential search.
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Debug, Args)]
struct GraphArgs {
    /// Family spec: path:n, cycle:n, multipartite:m1,m2,..., grid:m,n, torus:m,n, spider:legs.
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,

    /// Edge-list file.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Write a family graph as an edge list.
    Gen {
        #[arg(long)]
        family: String,
    },
    /// Compute γ_p.
    Solve {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value = "1/2")]
        p: String,
        #[arg(long, value_enum, default_value_t = SolveMethod::Exact)]
        method: SolveMethod,
    },
    /// Compute γ (solve with p = 1/1).
    Gamma {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = SolveMethod::Exact)]
        method: SolveMethod,
    },
    /// Compute Γ_p, the largest minimal p-dominating set.
    BigGamma {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value = "1/2")]
        p: String,
    },
    /// Evaluate the closed-form 1/2-domination number of a family.
    ClosedForm {
        #[arg(long)]
        family: String,
    },
    /// Check every bound against exact values.
    Audit {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated proportions.
        #[arg(long, default_value = DEFAULT_AUDIT_PS)]
        ps: String,
        /// Sample a graph on this many vertices with connected complement.
        #[arg(long, conflicts_with_all = ["family", "input"])]
        sample: Option<usize>,
        /// Edge probability used by the sampler.
        #[arg(long, default_value = "1/2")]
        edge_probability: String,
        /// Sampler seed (default 0).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Time the solver across a family sweep.
    Bench {
        /// Semicolon-separated family specs.
        #[arg(long, default_value = DEFAULT_BENCH_SWEEP)]
        sweep: String,
        #[arg(long, default_value = "1/2")]
        p: String,
        #[arg(long, value_enum, default_value_t = SolveMethod::Exact)]
        method: SolveMethod,
        #[arg(long, default_value_t = 3)]
        repeat: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveMethod {
    Exact,
    BinarySearch,
    Greedy,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Gen,
    Solve,
    Gamma,
    BigGamma,
    ClosedForm,
    Audit,
    Bench,
}

#[derive(Debug, Clone)]
pub enum InputSource {
    File(PathBuf),
    Family(FamilySpec),
    Sample {
        n: usize,
        edge_probability: Proportion,
        seed: u64,
    },
}

impl InputSource {
    fn label(&self) -> String {
        match self {
            InputSource::File(p) => p.display().to_string(),
            InputSource::Family(f) => f.to_string(),
            InputSource::Sample {
                n,
                edge_probability,
                seed,
            } => format!("sample:{n},{edge_probability},{seed}"),
        }
    }

    fn load(&self) -> Result<Graph> {
        match self {
            InputSource::File(path) => {
                let file = fs::File::open(path)?;
                read_edge_list(std::io::BufReader::new(file))
            }
            InputSource::Family(f) => f.build(),
            InputSource::Sample {
                n,
                edge_probability,
                seed,
            } => sample_connected_coconnected(*n, *edge_probability, *seed),
        }
    }
}

/// A validated invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub input: Vec<InputSource>,
    pub p: Proportion,
    pub ps: Vec<Proportion>,
    pub method: SolveMethod,
    pub seed: Option<u64>,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub parallel: bool,
    pub repeat: usize,
}

impl RunConfig {
    /// Parses `pdom <args>`; `args` includes the program name.
    pub fn from_args<I, T>(args: I) -> std::result::Result<Self, CliError>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args).map_err(CliError::Usage)?;
        Self::from_cli(cli).map_err(CliError::Run)
    }

    fn from_cli(cli: Cli) -> Result<Self> {
        let mut cfg = RunConfig {
            command: Command::Solve,
            input: Vec::new(),
            p: Proportion::HALF,
            ps: Vec::new(),
            method: SolveMethod::Exact,
            seed: None,
            output: cli.output,
            format: cli.format,
            parallel: cli.parallel,
            repeat: 3,
        };
        match cli.command {
            CommandArgs::Gen { family } => {
                cfg.command = Command::Gen;
                cfg.input.push(InputSource::Family(family.parse()?));
            }
            CommandArgs::Solve { graph, p, method } => {
                cfg.command = Command::Solve;
                cfg.input.push(graph_source(graph)?);
                cfg.p = p.parse()?;
                cfg.method = method;
            }
            CommandArgs::Gamma { graph, method } => {
                cfg.command = Command::Gamma;
                cfg.input.push(graph_source(graph)?);
                cfg.p = Proportion::ONE;
                cfg.method = method;
            }
            CommandArgs::BigGamma { graph, p } => {
                cfg.command = Command::BigGamma;
                cfg.input.push(graph_source(graph)?);
                cfg.p = p.parse()?;
            }
            CommandArgs::ClosedForm { family } => {
                cfg.command = Command::ClosedForm;
                cfg.input.push(InputSource::Family(family.parse()?));
            }
            CommandArgs::Audit {
                graph,
                ps,
                sample,
                edge_probability,
                seed,
            } => {
                cfg.command = Command::Audit;
                cfg.ps = parse_list(&ps, ',')?;
                cfg.seed = seed;
                let source = match sample {
                    Some(n) => InputSource::Sample {
                        n,
                        edge_probability: edge_probability.parse()?,
                        seed: seed.unwrap_or(0),
                    },
                    None => graph_source(graph)?,
                };
                cfg.input.push(source);
            }
            CommandArgs::Bench {
                sweep,
                p,
                method,
                repeat,
            } => {
                cfg.command = Command::Bench;
                cfg.input = parse_list::<FamilySpec>(&sweep, ';')?
                    .into_iter()
                    .map(InputSource::Family)
                    .collect();
                cfg.p = p.parse()?;
                cfg.method = method;
                if repeat == 0 {
                    return Err(Error::invalid("--repeat must be at least 1"));
                }
                cfg.repeat = repeat;
            }
        }
        Ok(cfg)
    }
}

fn graph_source(args: GraphArgs) -> Result<InputSource> {
    match (args.family, args.input) {
        (Some(f), None) => Ok(InputSource::Family(f.parse()?)),
        (None, Some(path)) => Ok(InputSource::File(path)),
        _ => Err(Error::invalid("give exactly one of --family or --input")),
    }
}

fn parse_list<T: std::str::FromStr<Err = Error>>(s: &str, sep: char) -> Result<Vec<T>> {
    s.split(sep)
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Debug)]
pub enum CliError {
    Usage(clap::Error),
    Run(Error),
}

#[derive(Serialize)]
struct SolveReport<'a> {
    graph: String,
    n: usize,
    p: Proportion,
    threshold: usize,
    cardinality: usize,
    witness: &'a VertexSet,
    covered: usize,
    method: crate::engine::Method,
    nodes_explored: u64,
}

#[derive(Serialize)]
struct ClosedFormReport<'a> {
    graph: String,
    n: usize,
    #[serde(flatten)]
    result: &'a FormulaResult,
}

#[derive(Serialize)]
struct BenchRow {
    graph: String,
    n: usize,
    p: Proportion,
    method: SolveMethod,
    cardinality: usize,
    nodes_explored: u64,
    repeat: usize,
    min_ms: f64,
    median_ms: f64,
}

fn solve_with(
    g: &Graph,
    p: Proportion,
    method: SolveMethod,
    parallel: bool,
) -> Result<SolveResult> {
    let opts = SolveOptions { parallel };
    let search_limit = || {
        if g.n() > MAX_SEARCH_VERTICES {
            Err(Error::ResourceLimit {
                what: "branch-and-bound search",
                limit: MAX_SEARCH_VERTICES,
                got: g.n(),
            })
        } else {
            Ok(())
        }
    };
    match method {
        SolveMethod::Exact => search_limit().map(|_| gamma_p_exact_with(g, p, opts)),
        SolveMethod::BinarySearch => search_limit().map(|_| gamma_p_binary_search_with(g, p, opts)),
        SolveMethod::Greedy => Ok(greedy_gamma_p(g, p)),
        SolveMethod::Oracle => oracle_gamma_p(g, p),
    }
}

fn solve_report<'a>(
    label: String,
    g: &Graph,
    p: Proportion,
    r: &'a SolveResult,
) -> SolveReport<'a> {
    SolveReport {
        graph: label,
        n: g.n(),
        p,
        threshold: p.threshold(g.n()),
        cardinality: r.cardinality,
        witness: &r.witness,
        covered: r.covered,
        method: r.method,
        nodes_explored: r.nodes_explored,
    }
}

fn closed_form(spec: &FamilySpec) -> Result<FormulaResult> {
    match spec {
        FamilySpec::Path(n) => gamma_half_path(*n),
        FamilySpec::Cycle(n) => gamma_half_cycle(*n),
        FamilySpec::CompleteMultipartite(parts) => gamma_half_multipartite(parts),
        FamilySpec::Grid(m, n) => gamma_half_grid(*m, *n),
        FamilySpec::Torus(m, n) => gamma_half_torus(*m, *n),
        FamilySpec::Spider(_) => Err(Error::Unsupported(
            "no closed form for spiders; use `solve`".into(),
        )),
    }
}

fn render<T: Serialize>(value: &T, format: Format) -> String {
    let json = serde_json::to_value(value).expect("reports serialize");
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            text_lines(&json, "", &mut out);
            out
        }
    }
}

fn text_lines(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                text_lines(v, &key, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| !i.is_object()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{prefix}: [{}]\n", parts.join(", ")));
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                text_lines(item, &format!("{prefix}.{i}"), out);
            }
        }
        other => out.push_str(&format!("{prefix}: {}\n", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn median(sorted: &[f64]) -> f64 {
    let k = sorted.len();
    if k % 2 == 1 {
        sorted[k / 2]
    } else {
        (sorted[k / 2 - 1] + sorted[k / 2]) / 2.0
    }
}

fn bench_table(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:<16} {:>5} {:>5} {:<14} {:>5} {:>12} {:>10} {:>10}\n",
        "graph", "n", "p", "method", "value", "nodes", "min_ms", "median_ms"
    );
    for r in rows {
        let method = serde_json::to_value(r.method).unwrap();
        out.push_str(&format!(
            "{:<16} {:>5} {:>5} {:<14} {:>5} {:>12} {:>10.3} {:>10.3}\n",
            r.graph,
            r.n,
            r.p.to_string(),
            method.as_str().unwrap(),
            r.cardinality,
            r.nodes_explored,
            r.min_ms,
            r.median_ms
        ));
    }
    out
}

/// Executes `config` and returns what should be written to the output.
pub fn run(config: &RunConfig) -> Result<String> {
    let source = config.input.first();
    match config.command {
        Command::Gen => {
            let source = source.expect("gen has a family");
            let g = source.load()?;
            Ok(format!("# {}\n{}", source.label(), to_edge_list_string(&g)))
        }
        Command::Solve | Command::Gamma => {
            let source = source.expect("solve has an input");
            let g = source.load()?;
            let r = solve_with(&g, config.p, config.method, config.parallel)?;
            Ok(render(
                &solve_report(source.label(), &g, config.p, &r),
                config.format,
            ))
        }
        Command::BigGamma => {
            let source = source.expect("big-gamma has an input");
            let g = source.load()?;
            let r = big_gamma_p_exact(&g, config.p)?;
            Ok(render(
                &solve_report(source.label(), &g, config.p, &r),
                config.format,
            ))
        }
        Command::ClosedForm => {
            let Some(InputSource::Family(spec)) = source else {
                return Err(Error::invalid("closed-form needs --family"));
            };
            let r = closed_form(spec)?;
            let report = ClosedFormReport {
                graph: spec.to_string(),
                n: spec.order(),
                result: &r,
            };
            Ok(render(&report, config.format))
        }
        Command::Audit => {
            let source = source.expect("audit has an input");
            let g = source.load()?;
            let mut report = audit_suite(&g, source.label(), &config.ps);
            report.seed = config.seed;
            Ok(match config.format {
                Format::Text => report.to_text(),
                Format::Json => render(&report, Format::Json),
            })
        }
        Command::Bench => {
            let mut rows = Vec::new();
            for source in &config.input {
                let g = source.load()?;
                let mut times = Vec::with_capacity(config.repeat);
                let mut last = None;
                for _ in 0..config.repeat {
                    let start = Instant::now();
                    let r = solve_with(&g, config.p, config.method, config.parallel)?;
                    times.push(start.elapsed().as_secs_f64() * 1e3);
                    last = Some(r);
                }
                times.sort_by(f64::total_cmp);
                let r = last.expect("repeat >= 1");
                rows.push(BenchRow {
                    graph: source.label(),
                    n: g.n(),
                    p: config.p,
                    method: config.method,
                    cardinality: r.cardinality,
                    nodes_explored: r.nodes_explored,
                    repeat: config.repeat,
                    min_ms: times[0],
                    median_ms: median(&times),
                });
            }
            Ok(match config.format {
                Format::Text => bench_table(&rows),
                Format::Json => render(&rows, Format::Json),
            })
        }
    }
}

/// Full CLI entry point: parses, runs, writes output, and returns the exit
/// status (0 on success, 1 on errors, 2 on usage errors).
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::from_args(args) {
        Ok(c) => c,
        Err(CliError::Usage(e)) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
        Err(CliError::Run(e)) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let result = run(&config).and_then(|text| match &config.output {
        Some(path) => fs::write(path, text).map_err(Error::from),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(Error::from),
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
