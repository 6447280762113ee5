//! Command-line front end.
//!
//! Results go to the output stream, diagnostics to the error stream. Exit
//! codes: 0 success, 1 verification mismatch / target missed / search
//! incomplete, 2 usage or input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::corpus::{self, parse_configuration, parse_edges, serialize_configuration, serialize_edges};
use crate::hexlattice::{to_cartesian, Window};
use crate::packing::{build_contact_graph, Configuration};
use crate::report::{self, Relation};
use crate::search::{self, Algorithm, AnnealSchedule, SearchError, SearchParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hcpack", version, about = "Contact numbers of finite ball packings on the HCP lattice")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compare computed contacts with a reference or user configuration.
    Verify(VerifyArgs),
    /// Search for a configuration with many contacts.
    Search(SearchArgs),
    /// Convert a configuration to Cartesian CSV or an edge list.
    Convert(ConvertArgs),
    /// Print the summary metrics table.
    Report(ReportArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "source")]
struct VerifySource {
    /// Reference configuration for N balls (20..=27).
    #[arg(long, value_name = "N")]
    paper: Option<usize>,
    /// A .hexcfg file.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: VerifySource,
    /// Expected contacts in .edges format (with --input).
    #[arg(long, value_name = "FILE", requires = "input")]
    edges: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Algo {
    Exact,
    Greedy,
    Anneal,
}

impl From<Algo> for Algorithm {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Exact => Algorithm::Exact,
            Algo::Greedy => Algorithm::Greedy,
            Algo::Anneal => Algorithm::Anneal,
        }
    }
}

fn parse_window(s: &str) -> Result<Window, String> {
    let parts: Vec<&str> = s.split(['x', 'X']).collect();
    if parts.len() != 3 {
        return Err(format!("window must look like IxJxK, got `{s}`"));
    }
    let mut ext = [0i64; 3];
    for (slot, p) in ext.iter_mut().zip(&parts) {
        *slot = p.trim().parse().map_err(|_| format!("`{p}` is not an integer"))?;
    }
    Window::new(ext[0], ext[1], ext[2]).map_err(|e| e.to_string())
}

fn parse_seconds(s: &str) -> Result<Duration, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number of seconds"))?;
    Duration::try_from_secs_f64(v).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Number of balls.
    #[arg(long = "n", value_name = "N")]
    n: usize,
    /// Search box, extents along i, j and k.
    #[arg(long, value_name = "IxJxK", value_parser = parse_window)]
    window: Window,
    #[arg(long, value_enum)]
    algo: Algo,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Wall-clock cap in seconds.
    #[arg(long, value_name = "SECONDS", value_parser = parse_seconds)]
    budget: Option<Duration>,
    /// Independent annealing chains.
    #[arg(long, default_value_t = 8)]
    restarts: usize,
    /// Annealing proposals per restart.
    #[arg(long)]
    steps: Option<u64>,
    /// Starting configuration (.hexcfg).
    #[arg(long, value_name = "FILE")]
    init: Option<PathBuf>,
    /// Exit 1 when the best count stays below C.
    #[arg(long, value_name = "C")]
    target: Option<usize>,
    /// Write the best configuration here instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads (0 = all cores, 1 = single-threaded).
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConvertTarget {
    Cartesian,
    Edges,
}

#[derive(Debug, Args)]
struct ConvertArgs {
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_enum)]
    to: ConvertTarget,
}

#[derive(Debug, Args)]
struct ReportArgs {
    /// Include the eight reference configurations.
    #[arg(long)]
    paper: bool,
    /// .hexcfg files whose contact counts become extra rows.
    #[arg(long, value_name = "FILE", num_args = 1..)]
    input: Vec<PathBuf>,
}

/// A failed command: exit code plus a diagnostic for the error stream.
struct Failure(i32, String);

type CmdResult = Result<i32, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

fn read_config(path: &Path) -> Result<Configuration, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_configuration(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure(EXIT_FAILURE, format!("write failed: {e}")))
}

/// Runs the CLI with explicit streams and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let res = match cli.command {
        Command::Verify(a) => cmd_verify(a, out),
        Command::Search(a) => cmd_search(a, out, err),
        Command::Convert(a) => cmd_convert(a, out),
        Command::Report(a) => cmd_report(a, out, err),
    };
    match res {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let report = if let Some(n) = a.source.paper {
        let entry = corpus::embedded(n).map_err(|e| usage(e.to_string()))?;
        let r = corpus::verify_entry(&entry);
        emit(out, &r.to_string())?;
        if !entry.printed_total_matches() {
            emit(
                out,
                &format!(
                    "note\tprinted total line reads \"Total: c({n}) = {}\"; summary table and listed pairs give {}\n",
                    entry.printed_total, entry.claimed_total
                ),
            )?;
        }
        r
    } else {
        let path = a.source.input.expect("clap enforces one source");
        let cfg = read_config(&path)?;
        let listed = match &a.edges {
            Some(p) => {
                let text = fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
                Some(parse_edges(&text).map_err(|e| usage(format!("{}: {e}", p.display())))?)
            }
            None => None,
        };
        let r = corpus::verify(&cfg, listed.as_deref(), None).map_err(|e| usage(e.to_string()))?;
        emit(out, &r.to_string())?;
        r
    };
    Ok(if report.is_exact() { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_search(a: SearchArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let mut params =
        SearchParams::new(a.n, a.window, a.algo.into()).seed(a.seed).restarts(a.restarts).threads(a.threads);
    params.budget = a.budget;
    if let Some(steps) = a.steps {
        params.schedule = AnnealSchedule { steps, ..AnnealSchedule::default() };
    }
    if let Some(path) = &a.init {
        params.initial = Some(read_config(path)?);
    }
    let result = match search::run(&params) {
        Ok(r) => r,
        Err(e @ SearchError::Incomplete { .. }) => return Err(Failure(EXIT_FAILURE, e.to_string())),
        Err(e) => return Err(usage(e.to_string())),
    };
    let _ = writeln!(
        err,
        "elapsed {:.3}s, nodes {}{}",
        result.elapsed.as_secs_f64(),
        result.nodes_explored,
        if result.truncated { ", stopped by wall-clock budget" } else { "" }
    );
    let mut text: String = result.summary().lines().map(|l| format!("# {l}\n")).collect();
    let body = serialize_configuration(&result.best);
    match &a.out {
        Some(path) => {
            fs::write(path, &body).map_err(|e| Failure(EXIT_FAILURE, format!("{}: {e}", path.display())))?;
        }
        None => text.push_str(&body),
    }
    emit(out, &text)?;
    match a.target {
        Some(t) if result.best_count < t => {
            let _ = writeln!(err, "target {t} not reached (best {})", result.best_count);
            Ok(EXIT_FAILURE)
        }
        _ => Ok(EXIT_OK),
    }
}

/// `v` with nine significant digits, trailing zeros dropped, at least one
/// decimal place kept.
pub fn format_sig9(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return if v.is_finite() { "0.0".into() } else { v.to_string() };
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (8 - magnitude).max(1) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.push('0');
        }
    }
    if s == "-0.0" {
        s = "0.0".into();
    }
    s
}

fn cmd_convert(a: ConvertArgs, out: &mut dyn Write) -> CmdResult {
    let cfg = read_config(&a.input)?;
    let text = match a.to {
        ConvertTarget::Cartesian => {
            let mut s = String::from("index,x,y,z\n");
            for (t, &c) in cfg.centers.iter().enumerate() {
                let p = to_cartesian(c);
                s.push_str(&format!("{},{},{},{}\n", t + 1, format_sig9(p.x), format_sig9(p.y), format_sig9(p.z)));
            }
            s
        }
        ConvertTarget::Edges => {
            let g = build_contact_graph(&cfg).map_err(|e| usage(e.to_string()))?;
            serialize_edges(&g.edges)
        }
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_report(a: ReportArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let mut rows = Vec::new();
    if a.paper {
        rows.extend(corpus::all_embedded().iter().map(|e| (e.n, e.claimed_total)));
    }
    for path in &a.input {
        let cfg = read_config(path)?;
        let c = cfg.contact_count().map_err(|e| usage(e.to_string()))?;
        rows.push((cfg.len(), c));
    }
    let table = report::summary_table(&rows).map_err(|e| usage(e.to_string()))?;
    emit(out, &table)?;
    for &(n, c) in &rows {
        let b = report::bound_check(n, c).map_err(|e| usage(e.to_string()))?;
        if b.relation != Relation::Inside {
            let _ = writeln!(
                err,
                "note: n={n} ratio {:.6} is {} the interval ({}, {}); {}",
                b.ratio, b.relation, b.lower, b.upper, b.note
            );
        }
    }
    Ok(EXIT_OK)
}
