//! Command-line front end. [`run`] takes the argument list and returns the
//! exit code with everything that would be written to stdout and stderr, so
//! the binary is a thin wrapper and tests need no subprocess.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use tucker_core::oracle::MAX_SIZE;
use tucker_core::{
    canonicalize, emit_report, oracle_solve, read_mps, solve, text_header, text_row, CanonicalLp, Error, OracleStatus,
    ReportFormat, ReportInput, SchemeOrder, SolveOptions, SolveReport, Status, TerminalClass, DEFAULT_TOL,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRIMAL_INFEASIBLE: i32 = 2;
pub const EXIT_PRIMAL_UNBOUNDED: i32 = 3;
pub const EXIT_BOTH_INFEASIBLE: i32 = 4;
pub const EXIT_LIMIT_OR_CYCLE: i32 = 5;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

#[derive(Debug, Parser)]
#[command(
    name = "tucker",
    version,
    about = "Symmetric primal-dual simplex solver for MPS files"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one MPS file and print a report.
    Solve {
        file: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
    /// Solve every MPS file in the given directories or paths and print a summary table.
    Bench {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[command(flatten)]
        flags: Flags,
    },
    /// Print only the terminal class of one MPS file.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
}

#[derive(Debug, Args)]
struct Flags {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write one line per pivot to stderr.
    #[arg(long)]
    trace: bool,
    /// Pivot budget (default 50 * (m + n)).
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    max_iters: Option<u64>,
    /// Zero tolerance for signs and pivots.
    #[arg(long, value_name = "X", default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Comma-separated order of the six pivot schemes.
    #[arg(long, value_name = "LIST")]
    strategy_order: Option<String>,
    /// After an optimum, list alternative optimal bases.
    #[arg(long)]
    enumerate_alternatives: bool,
    /// Cross-check against exhaustive vertex enumeration when small enough.
    #[arg(long)]
    oracle_check: bool,
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Output {
            code,
            stdout: String::new(),
            stderr: format!("tucker: {message}\n"),
        }
    }
}

/// Exit code for a finished run.
pub fn exit_code(class: TerminalClass, cycle_flag: bool, limit_hit: bool) -> i32 {
    if cycle_flag || limit_hit {
        return EXIT_LIMIT_OR_CYCLE;
    }
    match (class.primal, class.dual) {
        (Status::Infeasible, Status::Infeasible) => EXIT_BOTH_INFEASIBLE,
        (Status::Infeasible, _) => EXIT_PRIMAL_INFEASIBLE,
        (Status::Unbounded, Status::Infeasible) => EXIT_PRIMAL_UNBOUNDED,
        _ => EXIT_OK,
    }
}

impl Flags {
    fn options(&self) -> Result<SolveOptions, String> {
        if !(self.tol.is_finite() && self.tol >= 0.0) {
            return Err(format!("invalid --tol {}", self.tol));
        }
        let order = match &self.strategy_order {
            Some(list) => list.parse::<SchemeOrder>().map_err(|e| e.to_string())?,
            None => SchemeOrder::default(),
        };
        Ok(SolveOptions {
            max_iterations: self.max_iters.map(|n| n as usize),
            tol: self.tol,
            order,
            enumerate_alternatives: self.enumerate_alternatives,
            trace: false,
        })
    }
}

struct Solved {
    name: String,
    problem: CanonicalLp,
    report: SolveReport,
    limit_hit: bool,
}

fn problem_name(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn solve_file(path: &Path, options: &SolveOptions) -> Result<Solved, Error> {
    let lp = read_mps(path)?;
    let problem = canonicalize(&lp)?;
    let (report, limit_hit) = match solve(&problem, options) {
        Ok(r) => (r, false),
        Err(Error::IterationLimit { partial, .. }) => (*partial, true),
        Err(e) => return Err(e),
    };
    Ok(Solved {
        name: problem_name(path),
        problem,
        report,
        limit_hit,
    })
}

fn input(s: &Solved) -> ReportInput<'_> {
    ReportInput {
        problem: &s.name,
        report: &s.report,
        transform: &s.problem.transform,
    }
}

fn trace_lines(s: &Solved, out: &mut String) {
    let _ = writeln!(out, "iter scheme row col dII lem II delta");
    for r in &s.report.records {
        let _ = writeln!(
            out,
            "{} {} {} {} {} {} {} {}",
            r.iteration, r.scheme, r.row, r.col, r.delta_ii, r.lem, r.infeasibility_index, r.delta
        );
    }
}

fn notes(s: &Solved, out: &mut String) {
    let r = &s.report;
    if r.cycle_flag {
        let _ = writeln!(
            out,
            "tucker: {}: basis repeated after {} pivots; class is best effort",
            s.name, r.iterations
        );
    }
    if s.limit_hit {
        let _ = writeln!(
            out,
            "tucker: {}: iteration limit reached after {} pivots",
            s.name, r.iterations
        );
    }
    for a in &r.alternatives {
        let _ = writeln!(out, "alternative optimal basis {a}");
    }
}

fn oracle_note(s: &Solved, out: &mut String) {
    let size = s.problem.m() + s.problem.n();
    if size > MAX_SIZE {
        let _ = writeln!(out, "oracle check skipped: m + n = {size} exceeds {MAX_SIZE}");
        return;
    }
    let verdict = match oracle_solve(&s.problem) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(out, "oracle check failed: {e}");
            return;
        }
    };
    let r = &s.report;
    let agrees = match verdict.status {
        OracleStatus::Optimal { value, .. } => r
            .objective
            .is_some_and(|f| (f - value).abs() <= 1e-8 * value.abs().max(1.0)),
        OracleStatus::Infeasible => r.class.primal == Status::Infeasible,
        OracleStatus::Unbounded => r.class.primal == Status::Unbounded,
    };
    let what = match verdict.status {
        OracleStatus::Optimal { value, .. } => format!("optimal {value}"),
        OracleStatus::Infeasible => "infeasible".into(),
        OracleStatus::Unbounded => "unbounded".into(),
    };
    let verdict_word = if agrees { "agrees" } else { "DISAGREES" };
    let _ = writeln!(
        out,
        "oracle check {verdict_word}: {what} over {} vertices",
        verdict.vertices.len()
    );
}

fn run_one(file: &Path, flags: &Flags, classify_only: bool) -> Output {
    let options = match flags.options() {
        Ok(o) => o,
        Err(e) => return Output::fail(EXIT_USAGE, e),
    };
    let solved = match solve_file(file, &options) {
        Ok(s) => s,
        Err(e) => return Output::fail(EXIT_DATA, e),
    };
    let r = &solved.report;
    let mut out = Output {
        code: exit_code(r.class, r.cycle_flag, solved.limit_hit),
        ..Output::default()
    };
    if flags.trace {
        trace_lines(&solved, &mut out.stderr);
    }
    out.stdout = match (classify_only, flags.json) {
        (true, true) => format!(
            "{{\"problem\": {:?}, \"status_primal\": \"{}\", \"status_dual\": \"{}\"}}\n",
            solved.name,
            r.class.primal.code(),
            r.class.dual.code()
        ),
        (true, false) => format!("{}\n", r.class),
        (false, true) => emit_report(&input(&solved), ReportFormat::Json),
        (false, false) => emit_report(&input(&solved), ReportFormat::Text),
    };
    notes(&solved, &mut out.stderr);
    if flags.oracle_check {
        oracle_note(&solved, &mut out.stderr);
    }
    out
}

fn mps_files(paths: &[PathBuf]) -> std::io::Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for p in paths {
        if p.is_dir() {
            for entry in std::fs::read_dir(p)? {
                let path = entry?.path();
                if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("mps")) {
                    files.push(path);
                }
            }
        } else {
            files.push(p.clone());
        }
    }
    files.sort_by_key(|p| (problem_name(p), p.clone()));
    Ok(files)
}

fn run_bench(paths: &[PathBuf], flags: &Flags) -> Output {
    let options = match flags.options() {
        Ok(o) => o,
        Err(e) => return Output::fail(EXIT_USAGE, e),
    };
    let files = match mps_files(paths) {
        Ok(f) => f,
        Err(e) => return Output::fail(EXIT_DATA, e),
    };
    let results: Vec<(PathBuf, Result<Solved, Error>)> =
        files.par_iter().map(|f| (f.clone(), solve_file(f, &options))).collect();

    let mut out = Output::default();
    let mut rows = Vec::new();
    for (path, res) in &results {
        match res {
            Ok(s) => {
                if flags.trace {
                    let _ = writeln!(out.stderr, "== {}", s.name);
                    trace_lines(s, &mut out.stderr);
                }
                notes(s, &mut out.stderr);
                if flags.oracle_check {
                    oracle_note(s, &mut out.stderr);
                }
                rows.push(s);
            }
            Err(e) => {
                let _ = writeln!(out.stderr, "tucker: {}: {e}", path.display());
                out.code = EXIT_DATA;
            }
        }
    }
    if flags.json {
        let reports: Vec<String> = rows
            .iter()
            .map(|s| emit_report(&input(s), ReportFormat::Json))
            .collect();
        out.stdout = format!("[\n{}]\n", reports.join(",\n"));
    } else {
        let _ = writeln!(out.stdout, "{}", text_header());
        for s in &rows {
            let _ = writeln!(out.stdout, "{}", text_row(&input(s)));
        }
    }
    out
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match &cli.command {
        Command::Solve { file, flags } => run_one(file, flags, false),
        Command::Classify { file, flags } => run_one(file, flags, true),
        Command::Bench { paths, flags } => run_bench(paths, flags),
    }
}
