//! Command-line front end. [`dispatch`] parses arguments, runs one subcommand and returns the
//! process exit code: 0 success, 1 input error, 2 solver budget exhausted, 3 invariant violated.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::acceptance::{self, AcceptanceConfig};
use crate::error::{Error, Result};
use crate::generators::{make_g_family, make_h_family, Family};
use crate::graph::Graph;
use crate::interval::{build_endpoint_sequence, count_ab_pairs, grundy_interval, intersection_graph};
use crate::io::{parse_edge_list, parse_intervals, parse_sequence, write_edge_list};
use crate::removal::{edge_removal_profile, vertex_removal_profile, RemovalProfile};
use crate::sequence::{check_legal, LegalityReport, VertexSequence};
use crate::sierpinski::{a_sequence, build_sierpinski, l_sequence};
use crate::solver::{grundy_domination_number, Exploration, SolverConfig, DEFAULT_MAX_VERTICES};

#[derive(Debug, Parser)]
#[command(name = "grundy", version, about = "Grundy domination numbers and sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact Grundy domination number of a graph.
    Solve(SolveArgs),
    /// Check a vertex sequence for legality and domination.
    Verify(VerifyArgs),
    /// Sierpinski graph sequences.
    #[command(subcommand)]
    Sierpinski(SierpinskiCommand),
    /// Interval graph sweep.
    #[command(subcommand)]
    Interval(IntervalCommand),
    /// Per-edge or per-vertex removal profiles.
    #[command(subcommand)]
    Analyze(AnalyzeCommand),
    /// Emit a graph from one of the extremal families.
    Families(FamiliesArgs),
    /// Run the acceptance suite.
    Accept(AcceptArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub graph: PathBuf,
    /// Abort after this many distinct search states.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Disable the memo table.
    #[arg(long)]
    pub no_memo: bool,
    /// Print the witness sequence.
    #[arg(long)]
    pub witness: bool,
    #[arg(long)]
    pub json: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    pub max_vertices: usize,
    /// Try high-degree vertices first.
    #[arg(long)]
    pub degree_order: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    pub sequence: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum SierpinskiCommand {
    /// Generate a Grundy dominating sequence of S(p, n).
    Gen(SierpinskiGenArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Recursive construction.
    A,
    /// Lexicographic construction.
    L,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Labels,
    Graph,
    Both,
}

#[derive(Debug, Args)]
pub struct SierpinskiGenArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = Method::A)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Emit::Labels)]
    pub emit: Emit,
}

#[derive(Debug, Subcommand)]
pub enum IntervalCommand {
    /// Run the endpoint sweep on an interval file.
    Solve(IntervalSolveArgs),
}

#[derive(Debug, Args)]
pub struct IntervalSolveArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub witness: bool,
    /// Also write the intersection graph as an edge list.
    #[arg(long)]
    pub graph_out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum AnalyzeCommand {
    Edges(AnalyzeArgs),
    Vertices(AnalyzeArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub json: bool,
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    /// Path glued to a cycle.
    H,
    /// Path glued to a clique.
    G,
}

#[derive(Debug, Args)]
pub struct FamiliesArgs {
    #[arg(value_enum)]
    pub family: FamilyKind,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// Emit the graph with its role labels as JSON instead of an edge list.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct AcceptArgs {
    #[arg(long, default_value_t = AcceptanceConfig::default().seed)]
    pub seed: u64,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long)]
    pub json: bool,
    /// Run only these criteria (comma-separated ids).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<u32>,
}

/// JSON body of `solve --json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub schema: String,
    pub n: usize,
    pub m: usize,
    pub exact: bool,
    pub gamma_gr: usize,
    pub witness: Option<VertexSequence>,
    pub explored_states: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: String,
    #[serde(flatten)]
    pub legality: LegalityReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalReport {
    pub schema: String,
    pub n: usize,
    pub gamma_gr: usize,
    pub ab_pairs: usize,
    pub endpoints: String,
    pub witness: Option<VertexSequence>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub schema: String,
    pub kind: String,
    #[serde(flatten)]
    pub profile: RemovalProfile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub schema: String,
    pub name: String,
    pub n: usize,
    pub vertex_roles: Vec<String>,
    pub edges: Vec<(usize, usize, String)>,
}

pub const SOLVE_SCHEMA: &str = "grundy.solve/v1";
pub const VERIFY_SCHEMA: &str = "grundy.verify/v1";
pub const INTERVAL_SCHEMA: &str = "grundy.interval/v1";
pub const ANALYZE_SCHEMA: &str = "grundy.analyze/v1";
pub const FAMILY_SCHEMA: &str = "grundy.family/v1";

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(Error::from)
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_edge_list(&read(path)?)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize") + "\n"
}

fn solve(args: &SolveArgs, out: &mut String) -> Result<i32> {
    let g = read_graph(&args.graph)?;
    let config = SolverConfig {
        max_vertices: args.max_vertices,
        budget: args.budget,
        memo: !args.no_memo,
        exploration: if args.degree_order {
            Exploration::DegreeDescending
        } else {
            Exploration::Index
        },
    };
    let (exact, gamma, witness, explored, code) = match grundy_domination_number(&g, &config) {
        Ok(r) => (true, r.gamma_gr, r.witness, r.stats.explored_states, 0),
        Err(Error::BudgetExhausted(p)) => (false, p.best_length, p.witness, p.stats.explored_states, 2),
        Err(e) => return Err(e),
    };
    if args.json {
        out.push_str(&json(&SolveReport {
            schema: SOLVE_SCHEMA.into(),
            n: g.n(),
            m: g.edge_count(),
            exact,
            gamma_gr: gamma,
            witness: args.witness.then_some(witness),
            explored_states: explored,
        }));
    } else {
        if exact {
            out.push_str(&format!("gamma_gr {gamma}\n"));
        } else {
            out.push_str(&format!("aborted: budget exhausted after {explored} states\nlower_bound {gamma}\n"));
        }
        if args.witness {
            out.push_str(&format!("witness {witness}\n"));
        }
    }
    Ok(code)
}

fn verify(args: &VerifyArgs, out: &mut String) -> Result<i32> {
    let g = read_graph(&args.graph)?;
    let s = parse_sequence(&read(&args.sequence)?)?;
    let legality = check_legal(&g, &s)?;
    if args.json {
        out.push_str(&json(&VerifyReport {
            schema: VERIFY_SCHEMA.into(),
            legality,
        }));
    } else {
        match legality.first_illegal {
            None => out.push_str("legal\n"),
            Some(i) => out.push_str(&format!("illegal at step {} (vertex {})\n", i + 1, s.as_slice()[i])),
        }
        out.push_str(&format!("dominating {}\n", legality.dominating));
        for (i, (v, fp)) in s.iter().zip(&legality.footprints).enumerate() {
            let fp: Vec<String> = fp.iter().map(ToString::to_string).collect();
            out.push_str(&format!("step {} vertex {v} footprints {{{}}}\n", i + 1, fp.join(" ")));
        }
    }
    Ok(0)
}

fn sierpinski_gen(args: &SierpinskiGenArgs, out: &mut String) -> Result<i32> {
    let seq = match args.method {
        Method::A => a_sequence(args.p, args.n)?,
        Method::L => l_sequence(args.p, args.n)?,
    };
    if matches!(args.emit, Emit::Labels | Emit::Both) {
        out.push_str(&seq.to_string());
    }
    if matches!(args.emit, Emit::Graph | Emit::Both) {
        out.push_str(&write_edge_list(&build_sierpinski(args.p, args.n)?.graph));
    }
    Ok(0)
}

fn interval_solve(args: &IntervalSolveArgs, out: &mut String) -> Result<i32> {
    let model = parse_intervals(&read(&args.file)?)?;
    let endpoints = build_endpoint_sequence(&model);
    let seq = grundy_interval(&model);
    if let Some(path) = &args.graph_out {
        fs::write(path, write_edge_list(&intersection_graph(&model)))?;
    }
    if args.json {
        out.push_str(&json(&IntervalReport {
            schema: INTERVAL_SCHEMA.into(),
            n: model.len(),
            gamma_gr: seq.len(),
            ab_pairs: count_ab_pairs(&endpoints),
            endpoints: endpoints.to_string(),
            witness: args.witness.then(|| seq.clone()),
        }));
    } else {
        out.push_str(&format!("gamma_gr {}\n", seq.len()));
        if args.witness {
            let named: Vec<String> = seq.iter().map(|v| format!("v{}", v + 1)).collect();
            out.push_str(&format!("sequence {}\n", named.join(" ")));
        }
    }
    Ok(0)
}

fn analyze(kind: &str, args: &AnalyzeArgs, out: &mut String) -> Result<i32> {
    let g = read_graph(&args.graph)?;
    let config = SolverConfig {
        budget: args.budget,
        ..SolverConfig::default()
    };
    let profile = if kind == "edges" {
        edge_removal_profile(&g, &config)?
    } else {
        vertex_removal_profile(&g, &config)?
    };
    if args.json {
        out.push_str(&json(&AnalyzeReport {
            schema: ANALYZE_SCHEMA.into(),
            kind: kind.into(),
            profile,
        }));
    } else {
        out.push_str("element\trole\tgamma_before\tgamma_after\tdelta\n");
        for r in &profile.records {
            let role = r.role.map_or_else(|| "-".to_string(), |r| r.to_string());
            out.push_str(&format!(
                "{}\t{role}\t{}\t{}\t{:+}\n",
                r.element, profile.base_gamma, r.gamma_after, r.delta
            ));
        }
    }
    Ok(0)
}

fn families(args: &FamiliesArgs, out: &mut String) -> Result<i32> {
    let family: Family = match args.family {
        FamilyKind::H => make_h_family(args.m, args.n)?,
        FamilyKind::G => make_g_family(args.m, args.n)?,
    };
    if args.json {
        out.push_str(&json(&FamilyReport {
            schema: FAMILY_SCHEMA.into(),
            name: family.name.clone(),
            n: family.graph.n(),
            vertex_roles: family.vertex_roles.iter().map(ToString::to_string).collect(),
            edges: family
                .edge_roles
                .iter()
                .map(|(&(u, v), r)| (u, v, r.to_string()))
                .collect(),
        }));
    } else {
        out.push_str(&write_edge_list(&family.graph));
    }
    Ok(0)
}

fn accept(args: &AcceptArgs, out: &mut String) -> Result<i32> {
    let config = AcceptanceConfig {
        seed: args.seed,
        budget: args.budget,
        ..AcceptanceConfig::default()
    };
    let report = if args.only.is_empty() {
        acceptance::run_acceptance_suite(&config)
    } else {
        acceptance::run_selected(&config, &args.only)
    };
    if args.json {
        out.push_str(&json(&report));
    } else {
        out.push_str(&report.render());
    }
    Ok(acceptance::exit_code(&report))
}

/// Runs a parsed command, appending its standard output to `out`.
pub fn run(cli: &Cli, out: &mut String) -> Result<i32> {
    match &cli.command {
        Command::Solve(a) => solve(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Sierpinski(SierpinskiCommand::Gen(a)) => sierpinski_gen(a, out),
        Command::Interval(IntervalCommand::Solve(a)) => interval_solve(a, out),
        Command::Analyze(AnalyzeCommand::Edges(a)) => analyze("edges", a, out),
        Command::Analyze(AnalyzeCommand::Vertices(a)) => analyze("vertices", a, out),
        Command::Families(a) => families(a, out),
        Command::Accept(a) => accept(a, out),
    }
}

/// Parses `argv` (including the program name), runs it, and writes to the given streams.
pub fn dispatch<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut out = String::new();
    match run(&cli, &mut out) {
        Ok(code) => {
            let _ = stdout.write_all(out.as_bytes());
            code
        }
        Err(e) => {
            let _ = stdout.write_all(out.as_bytes());
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
