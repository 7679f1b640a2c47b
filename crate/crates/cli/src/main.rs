//! `peisert`: clique reports, reference-table checks, invariant suites and
//! graph export for Peisert-like graphs.
//!
//! Exit status is 0 when every check passes, 1 on a mismatch and 2 on bad
//! input.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use peisert_core::report::{check_table1, table1_row};
use peisert_core::verify::{run_suite, Suite};
use peisert_core::{build_graph, CliqueReport, Error, ExportFormat};

#[derive(Parser)]
#[command(
    name = "peisert",
    version,
    about = "Clique counts of Peisert-like graphs on Z_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a JSON report of character sums and clique counts for q = p^alpha.
    Report {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        alpha: u32,
        /// Skip the 4-clique census (the formula is always evaluated).
        #[arg(long)]
        skip_brute_k4: bool,
    },
    /// Recompute every cell of the reference table.
    Table1,
    /// Run one invariant suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        alpha: u32,
    },
    /// Write the graph as an edge list or in DIMACS format.
    Export {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        alpha: u32,
        /// Use n = 2p^alpha instead of p^alpha.
        #[arg(long)]
        double: bool,
        #[arg(long, default_value = "edgelist")]
        format: ExportFormat,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Outcome {
    Pass,
    Mismatch,
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Report {
            p,
            alpha,
            skip_brute_k4,
        } => report(p, alpha, !skip_brute_k4),
        Command::Table1 => table1(),
        Command::Verify { suite, p, alpha } => verify(suite, p, alpha),
        Command::Export {
            p,
            alpha,
            double,
            format,
            out,
        } => export(p, alpha, double, format, out),
    };
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(EXIT_MISMATCH),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                CliError::Core(Error::Consistency(_)) => EXIT_MISMATCH,
                _ => EXIT_INPUT,
            })
        }
    }
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Io(io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Io(e) => e.fmt(f),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult = Result<Outcome, CliError>;

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn report(p: u64, alpha: u32, brute_k4: bool) -> CliResult {
    let report = CliqueReport::compute(p, alpha, brute_k4)?;
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    println!("{json}");

    let mut ok = report.consistent();
    if !ok {
        eprintln!("mismatch: formula and census disagree");
    }
    match table1_row(p, alpha) {
        Some(row) => {
            let matches = (
                report.rho,
                report.xi,
                report.m3,
                report.m5,
                report.k4.formula,
            ) == (row.rho, row.xi, row.m3, row.m5, row.k4);
            if !matches {
                eprintln!(
                    "mismatch: values differ from the reference table row q = {}",
                    row.q()
                );
            }
            ok &= matches;
        }
        None if !report.rho_equals_xi() => {
            eprintln!(
                "note: rho = {} differs from xi = {} at q = {}",
                report.rho, report.xi, report.q
            );
        }
        None => {}
    }
    Ok(if ok { Outcome::Pass } else { Outcome::Mismatch })
}

fn table1() -> CliResult {
    let rows = check_table1()?;
    let mut all = true;
    for cells in &rows {
        let mut line = format!("q={:<4}", cells[0].q);
        for cell in cells {
            all &= cell.pass;
            line.push_str(&format!(
                "  {}={} {}",
                cell.column,
                cell.computed,
                verdict(cell.pass)
            ));
            if !cell.pass {
                line.push_str(&format!(" (expected {})", cell.expected));
            }
        }
        println!("{line}");
    }
    println!("{} rows, {}", rows.len(), verdict(all));
    Ok(if all {
        Outcome::Pass
    } else {
        Outcome::Mismatch
    })
}

fn verify(suite: Suite, p: u64, alpha: u32) -> CliResult {
    let checks = run_suite(suite, p, alpha)?;
    for check in &checks {
        println!("{check}");
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    let all = passed == checks.len();
    println!(
        "suite={suite} p={p} alpha={alpha} checks={} passed={passed} {}",
        checks.len(),
        verdict(all)
    );
    Ok(if all {
        Outcome::Pass
    } else {
        Outcome::Mismatch
    })
}

fn export(
    p: u64,
    alpha: u32,
    double: bool,
    format: ExportFormat,
    out: Option<PathBuf>,
) -> CliResult {
    let graph = build_graph(p, alpha, double)?;
    match &out {
        Some(path) => graph.export(format, &mut File::create(path)?)?,
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            graph.export(format, &mut lock)?;
            lock.flush()?;
        }
    }
    let target = out
        .as_ref()
        .map_or("standard output".to_string(), |p| p.display().to_string());
    eprintln!("wrote {} edges ({format}) to {target}", graph.edge_count());
    Ok(Outcome::Pass)
}
