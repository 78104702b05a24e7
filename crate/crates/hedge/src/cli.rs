//! Command-line front end. Four subcommands: `compute` decides whether a
//! witness exists and prints it, `verify` re-checks a previously emitted
//! witness report, `oracle` prints the exhaustive reference values with
//! their internal cross-check, and `corpus` writes graph6 for the named
//! test families.
//!
//! Exit codes: 0 for a completed run (the decision itself is in the
//! payload), 1 when a size cap was exceeded, 2 for parse or
//! configuration errors.

use crate::families;
use crate::graph::{Graph, ParseError};
use crate::oracle::ClassOracle;
use crate::set::VertexSet;
use crate::width::WidthError;
use crate::witness::{
    brute_force_hhdepth, brute_force_torso_param, certify_witness, solve_bip,
    solve_finite_obstruction, verify_witness, Kind, SolveBranch, SolveError, SolveResult,
};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "hedge",
    version,
    about = "Exact solvers for elimination distance and treewidth relative to a hereditary class"
)]
struct Cli {
    /// Cap the worker threads used by parallel search (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a witness exists for the class, kind, and parameter
    Compute(ComputeArgs),
    /// Re-check a witness report against its graph
    Verify(VerifyArgs),
    /// Print exhaustive reference values with their consistency cross-check
    Oracle(OracleArgs),
    /// Write graph6 for a named family, byte-identical across runs
    Corpus(CorpusArgs),
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Path to a graph file, graph6 or DIMACS (sniffed by first token)
    path: Option<PathBuf>,
    /// Inline graph6 string instead of a file
    #[arg(long, conflicts_with = "path")]
    g6: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Class preset or obstruction list: bip | triangle-free | claw-free |
    /// maxdeg:<d> | split | cograph | file:<path>
    #[arg(long)]
    class: String,
    /// Witness quality: ed (torso treedepth <= k) or tw (torso treewidth <= k-1)
    #[arg(long)]
    kind: Kind,
    /// The parameter k
    #[arg(short)]
    k: usize,
    /// Unbreakability size threshold for the structured branch
    #[arg(short, default_value_t = 8)]
    s: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Witness report (JSON) produced by compute
    #[arg(long)]
    witness: PathBuf,
    #[arg(long)]
    class: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    class: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    #[command(subcommand)]
    family: Family,
    /// Output file (stdout when absent)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Path on n vertices
    Path { n: usize },
    /// Cycle on n >= 3 vertices
    Cycle { n: usize },
    /// Complete graph on n vertices
    Clique { n: usize },
    /// Hub joined to a cycle on rim >= 3 vertices
    Wheel { rim: usize },
    /// Grid graph
    Grid { rows: usize, cols: usize },
    /// Erdos-Renyi graph, deterministic for a fixed seed
    Gnp {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Clique on m >= 3 vertices plus pendant vertices tied to vertices 0-2
    Appendage { m: usize, pendants: usize },
}

/// Parses `args` (including the program name) and runs the selected
/// command, returning the process exit code. Reports go to stdout,
/// errors to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            e.print().ok();
            return code;
        }
    };
    let _ = env_logger::Builder::from_default_env().try_init();
    if let Some(t) = cli.threads {
        // a second init in the same process keeps the first pool; fine for tests
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Corpus(a) => cmd_corpus(a),
    }
}

fn fail(code: i32, msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    code
}

fn solve_exit_code(e: &SolveError) -> i32 {
    match e {
        SolveError::CapExceeded { .. } | SolveError::Width(WidthError::CapExceeded { .. }) => 1,
        _ => 2,
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph, String> {
    match (&input.path, &input.g6) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            parse_graph_text(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        (None, Some(g6)) => Graph::parse_graph6(g6).map_err(|e| e.to_string()),
        (None, None) => Err("no graph given: pass a file path or --g6".into()),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    }
}

/// DIMACS lines start with a one-letter token (`p`, `c`, or `e`); a valid
/// graph6 string is a single longer token, so the sniff is unambiguous.
fn parse_graph_text(text: &str) -> Result<Graph, ParseError> {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    match first.split_whitespace().next() {
        Some("p") | Some("c") | Some("e") => Graph::parse_dimacs(text),
        _ => Graph::parse_graph6(text.trim()),
    }
}

fn resolve_class(spec: &str) -> Result<ClassOracle, String> {
    match spec {
        "bip" => Ok(ClassOracle::bipartite()),
        "triangle-free" => Ok(ClassOracle::triangle_free()),
        "claw-free" => Ok(ClassOracle::claw_free()),
        "split" => Ok(ClassOracle::split()),
        "cograph" => Ok(ClassOracle::cograph()),
        other => {
            if let Some(d) = other.strip_prefix("maxdeg:") {
                let d: usize = d
                    .parse()
                    .map_err(|_| format!("maxdeg wants an integer, got {d:?}"))?;
                ClassOracle::max_degree(d).map_err(|e| e.to_string())
            } else if let Some(path) = other.strip_prefix("file:") {
                let text = fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {path}: {e}"))?;
                ClassOracle::from_obstruction_file(format!("file:{path}"), &text)
                    .map_err(|e| e.to_string())
            } else {
                Err(format!(
                    "unknown class {other:?}; expected bip, triangle-free, claw-free, \
                     maxdeg:<d>, split, cograph, or file:<path>"
                ))
            }
        }
    }
}

fn cmd_compute(a: ComputeArgs) -> i32 {
    let g = match load_graph(&a.input) {
        Ok(g) => g,
        Err(e) => return fail(2, e),
    };
    let oracle = match resolve_class(&a.class) {
        Ok(o) => o,
        Err(e) => return fail(2, e),
    };
    let result: Result<SolveResult, SolveError> = if oracle.is_finite_class() {
        solve_finite_obstruction(&g, a.k, a.s, a.kind, &oracle)
    } else {
        solve_bip(&g, a.k, a.s, a.kind)
    };
    let res = match result {
        Ok(r) => r,
        Err(e) => return fail(solve_exit_code(&e), e),
    };
    let branch = match res.branch {
        SolveBranch::BruteForce => "brute-force",
        SolveBranch::Structured => "structured",
    };
    match a.format {
        Format::Json => {
            let payload = json!({
                "command": "compute",
                "class": oracle.name(),
                "kind": a.kind.to_string(),
                "k": a.k,
                "s": a.s,
                "n": g.n(),
                "decision": res.witness.is_some(),
                "branch": branch,
                "hypotheses_verified": res.hypotheses_verified,
                "witness": res.witness.as_ref().map(|w| w.to_json()),
            });
            println!("{}", serde_json::to_string_pretty(&payload).unwrap());
        }
        Format::Text => {
            println!("class: {}", oracle.name());
            println!("kind: {}", a.kind);
            println!("k: {}", a.k);
            println!("s: {}", a.s);
            println!("branch: {branch}");
            if let Some(v) = res.hypotheses_verified {
                println!("hypotheses verified: {v}");
            }
            match &res.witness {
                Some(w) => {
                    println!("decision: yes");
                    println!("witness: {}", w.x);
                    println!("value: {}", w.value);
                }
                None => println!("decision: no"),
            }
        }
    }
    0
}

fn cmd_verify(a: VerifyArgs) -> i32 {
    let g = match load_graph(&a.input) {
        Ok(g) => g,
        Err(e) => return fail(2, e),
    };
    let oracle = match resolve_class(&a.class) {
        Ok(o) => o,
        Err(e) => return fail(2, e),
    };
    let text = match fs::read_to_string(&a.witness) {
        Ok(t) => t,
        Err(e) => return fail(2, format!("cannot read {}: {e}", a.witness.display())),
    };
    let report: serde_json::Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return fail(2, format!("witness report is not JSON: {e}")),
    };
    let Some(kind) = report["kind"].as_str().and_then(|s| s.parse::<Kind>().ok()) else {
        return fail(2, "witness report lacks a valid \"kind\"");
    };
    let Some(k) = report["k"].as_u64() else {
        return fail(2, "witness report lacks an integer \"k\"");
    };
    let Some(ids) = report["x"].as_array() else {
        return fail(2, "witness report lacks an \"x\" array");
    };
    let mut x = VertexSet::new();
    for id in ids {
        match id.as_u64() {
            Some(v) if (v as usize) < g.n() => x.insert(v as usize),
            _ => return fail(2, format!("witness vertex {id} is not a vertex of the graph")),
        }
    }
    let witness_ok = match verify_witness(&g, &x, k as usize, kind, &oracle) {
        Ok(ok) => ok,
        Err(e) => return fail(solve_exit_code(&e), e),
    };
    // the stored torso value must match a fresh computation
    let value_ok = if witness_ok {
        match certify_witness(&g, x.clone(), k as usize, kind, &oracle) {
            Ok(Some(w)) => report["value"].as_i64() == Some(w.value as i64),
            Ok(None) => false,
            Err(e) => return fail(solve_exit_code(&e), e),
        }
    } else {
        false
    };
    let valid = witness_ok && value_ok;
    match a.format {
        Format::Json => {
            let payload = json!({
                "command": "verify",
                "class": oracle.name(),
                "kind": kind.to_string(),
                "k": k,
                "x": x.to_vec(),
                "witness_ok": witness_ok,
                "value_ok": value_ok,
                "valid": valid,
            });
            println!("{}", serde_json::to_string_pretty(&payload).unwrap());
        }
        Format::Text => {
            println!("witness: {x}");
            println!("witness ok: {witness_ok}");
            println!("value ok: {value_ok}");
            println!("valid: {}", if valid { "yes" } else { "no" });
        }
    }
    0
}

fn cmd_oracle(a: OracleArgs) -> i32 {
    let g = match load_graph(&a.input) {
        Ok(g) => g,
        Err(e) => return fail(2, e),
    };
    let oracle = match resolve_class(&a.class) {
        Ok(o) => o,
        Err(e) => return fail(2, e),
    };
    let ed_recursive = match brute_force_hhdepth(&g, &oracle) {
        Ok(v) => v,
        Err(e) => return fail(solve_exit_code(&e), e),
    };
    let ed_torso = match brute_force_torso_param(&g, &oracle, Kind::Ed) {
        Ok(v) => v,
        Err(e) => return fail(solve_exit_code(&e), e),
    };
    let tw = match brute_force_torso_param(&g, &oracle, Kind::Tw) {
        Ok(v) => v,
        Err(e) => return fail(solve_exit_code(&e), e),
    };
    // the recursive definition and the torso-parameter minimum must agree
    let consistent = ed_recursive as i64 == ed_torso as i64;
    let check = if consistent { "ok" } else { "FAIL" };
    match a.format {
        Format::Json => {
            let payload = json!({
                "command": "oracle",
                "class": oracle.name(),
                "n": g.n(),
                "ed": ed_recursive,
                "tw": tw,
                "cross_check": check,
            });
            println!("{}", serde_json::to_string_pretty(&payload).unwrap());
        }
        Format::Text => println!("ed={ed_recursive}, tw={tw}, cross-check:{check}"),
    }
    if consistent {
        0
    } else {
        1
    }
}

fn cmd_corpus(a: CorpusArgs) -> i32 {
    let built = match a.family {
        Family::Path { n } => Ok(families::path(n)),
        Family::Cycle { n } => families::cycle(n),
        Family::Clique { n } => Ok(families::complete(n)),
        Family::Wheel { rim } => families::wheel(rim),
        Family::Grid { rows, cols } => families::grid(rows, cols),
        Family::Gnp { n, p, seed } => families::gnp(n, p, seed),
        Family::Appendage { m, pendants } => families::clique_with_appendage(m, pendants),
    };
    let g = match built {
        Ok(g) => g,
        Err(e) => return fail(2, e),
    };
    let line = match g.to_graph6() {
        Ok(s) => s,
        Err(e) => return fail(2, e),
    };
    match &a.out {
        Some(path) => {
            if let Err(e) = fs::write(path, format!("{line}\n")) {
                return fail(2, format!("cannot write {}: {e}", path.display()));
            }
        }
        None => println!("{line}"),
    }
    0
}
