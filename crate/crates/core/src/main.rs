use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cubefactor::graphs::{self, ExportFormat};
use cubefactor::oeis::{self, FetchOptions, LocalSequence};
use cubefactor::polynomials::{self, qpoly_table, Method};
use cubefactor::sequences::{lucas_triangle_rows, NamedSequence};
use cubefactor::solver::{self, verify_factor, CubeFactor, SolveMethod};
use cubefactor::verify::{self, Suite};
use cubefactor::{Error, Family};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NETWORK: u8 = 3;

#[derive(Parser)]
#[command(name = "cubefactor", version, about = "Optimal cube factors of Fibonacci and matchable Lucas cubes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Gamma,
    Omega,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Gamma => Family::Gamma,
            FamilyArg::Omega => Family::Omega,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyMethod {
    Rec,
    Closed,
    Gf,
}

#[derive(Clone, Copy, ValueEnum)]
enum FactorMethod {
    Exact,
    Greedy,
    Structural,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqName {
    Padovan,
    Fibonacci,
    Lucas,
}

#[derive(Clone, Copy, ValueEnum)]
enum AgainstName {
    Padovan,
    Fibonacci,
    Lucas,
    LucasTriangle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Dot,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identities,
    Oracle,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of one polynomial Q(G_n, x).
    Poly {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "rec")]
        method: PolyMethod,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Coefficient rows for n = 0 .. rows-1.
    Table {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Rows of the Lucas triangle.
    Triangle {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Terms of a sequence, one per line.
    Seq {
        #[arg(long, value_enum)]
        name: SeqName,
        #[arg(long)]
        count: usize,
    },
    /// Export a graph.
    Graph {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "edgelist")]
        emit: Emit,
        /// Largest n allowed.
        #[arg(long, default_value_t = graphs::DEFAULT_CAP)]
        cap: usize,
    },
    /// Compute a cube factor, or check one given as JSON.
    Factor {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "exact")]
        method: FactorMethod,
        #[arg(long)]
        json: bool,
        /// Verify the factor in this JSON file instead of solving.
        #[arg(long, value_name = "FILE")]
        check: Option<PathBuf>,
    },
    /// Run an audit suite; exit 1 if any entry fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Also compare against OEIS b-files.
        #[arg(long)]
        oeis: bool,
        #[arg(long)]
        offline: bool,
        #[arg(long, value_name = "PATH")]
        cache_dir: Option<PathBuf>,
    },
    /// Line up a local sequence with an OEIS b-file over shifts -5..=5.
    Oeis {
        #[arg(long)]
        id: String,
        #[arg(long, value_enum)]
        against: AgainstName,
        /// Local terms to generate.
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Read this b-file instead of fetching.
        #[arg(long, value_name = "FILE")]
        bfile: Option<PathBuf>,
        #[arg(long)]
        offline: bool,
        #[arg(long, value_name = "PATH")]
        cache_dir: Option<PathBuf>,
    },
}

/// Failure of a subcommand, carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Offline(_)
            | Error::Network { .. }
            | Error::Io(_)
            | Error::BFileSyntax { .. }
            | Error::BFileGap { .. }
            | Error::BFileEmpty => EXIT_NETWORK,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("cubefactor: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Poly { family, n, method, json, csv } => {
            let method = match method {
                PolyMethod::Rec => Method::Recurrence,
                PolyMethod::Closed => Method::Closed,
                PolyMethod::Gf => Method::GeneratingFunction,
            };
            let p = polynomials::qpoly(family.into(), n, method);
            Ok(if json {
                format!("{}\n", p.to_json())
            } else if csv {
                format!("{}\n", p.csv_row())
            } else {
                format!("{}\n", p.table_row())
            })
        }
        Command::Table { family, rows, csv } => {
            let mut out = String::new();
            if rows > 0 {
                for p in qpoly_table(family.into(), rows - 1) {
                    out.push_str(&if csv { p.csv_row() } else { p.table_row() });
                    out.push('\n');
                }
            }
            Ok(out)
        }
        Command::Triangle { rows, csv } => {
            let sep = if csv { "," } else { " " };
            Ok(lucas_triangle_rows(rows)
                .iter()
                .map(|r| r.entries.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep) + "\n")
                .collect())
        }
        Command::Seq { name, count } => {
            let seq = match name {
                SeqName::Padovan => NamedSequence::Padovan,
                SeqName::Fibonacci => NamedSequence::Fibonacci,
                SeqName::Lucas => NamedSequence::Lucas,
            };
            Ok(seq.terms(count).iter().map(|t| format!("{t}\n")).collect())
        }
        Command::Graph { family, n, emit, cap } => {
            let g = graphs::build_with_cap(family.into(), n, cap)?;
            Ok(g.export(match emit {
                Emit::Dot => ExportFormat::Dot,
                Emit::Edgelist => ExportFormat::EdgeList,
            }))
        }
        Command::Factor { family, n, method, json, check } => {
            let g = graphs::build(family.into(), n)?;
            let f = match &check {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Failure { code: EXIT_USAGE, message: format!("{}: {e}", path.display()) })?;
                    CubeFactor::from_json(&g, &text)?
                }
                None => solver::solve(
                    &g,
                    match method {
                        FactorMethod::Exact => SolveMethod::Exact,
                        FactorMethod::Greedy => SolveMethod::Greedy,
                        FactorMethod::Structural => SolveMethod::Structural,
                    },
                )?,
            };
            let profile = verify_factor(&g, &f)
                .map_err(|v| Failure { code: EXIT_FAIL, message: format!("invalid factor of {}: {v}", g.name()) })?;
            if json {
                Ok(format!("{}\n", f.to_json(&g)))
            } else {
                Ok(format!("{}parts {}\nprofile {profile}\n", f.describe(&g), f.len()))
            }
        }
        Command::Verify { suite, max_n, oeis, offline, cache_dir } => {
            let suite = match suite {
                SuiteArg::Identities => Suite::Identities,
                SuiteArg::Oracle => Suite::Oracle,
                SuiteArg::All => Suite::All,
            };
            let mut report = verify::run_suite(suite, max_n);
            if oeis {
                report.extend(verify::oeis_checks(&FetchOptions::new(cache_dir, offline))?);
            }
            let text = report.to_string();
            if report.passed() {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure { code: EXIT_FAIL, message: "verification failed".into() })
            }
        }
        Command::Oeis { id, against, count, bfile, offline, cache_dir } => {
            let remote = match bfile {
                Some(path) => oeis::parse_bfile(&id, &std::fs::read_to_string(path).map_err(Error::from)?)?,
                None => {
                    oeis::id_digits(&id)?;
                    oeis::fetch_bfile(&id, &FetchOptions::new(cache_dir, offline))?
                }
            };
            let local = match against {
                AgainstName::Padovan => LocalSequence::Named(NamedSequence::Padovan),
                AgainstName::Fibonacci => LocalSequence::Named(NamedSequence::Fibonacci),
                AgainstName::Lucas => LocalSequence::Named(NamedSequence::Lucas),
                AgainstName::LucasTriangle => LocalSequence::LucasTriangle,
            }
            .record(count);
            let scan = oeis::shift_scan(&local, &remote, -5..=5);
            let text = scan.render();
            if scan.best().is_some() {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure { code: EXIT_FAIL, message: format!("{} does not match {id} at any shift", local.id) })
            }
        }
    }
}
