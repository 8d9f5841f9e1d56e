//! `polyb`: compute poly-Bernoulli numbers, enumerate the families they count
//! and run the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use polyb::bijections::all_gamma_codes;
use polyb::families::{collect_family, count_family};
use polyb::verify::{run_verify, Check};
use polyb::{polybernoulli_formula, polybernoulli_recursion, EnumerationLimits, FamilyId};

use table::TableFormat;

const DEFAULT_MAX_MATRIX: usize = 5;
const DEFAULT_MAX_PERM: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "polyb", version, about = "Exact poly-Bernoulli numbers B_n^(-k) and the families they count")]
struct Cli {
    /// Worker threads for family enumeration; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Largest n and k accepted for matrix families and partition pairs.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_MATRIX)]
    max_matrix: usize,

    /// Largest n+k accepted for permutation families.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_PERM)]
    max_perm: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print B_n^(-k) as an exact decimal.
    Compute {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// formula, recursion, or enumerate:<family>
        #[arg(long, default_value = "formula")]
        method: String,
        /// text or json
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Print the table of B_n^(-k) for 0 <= n <= max-n, 0 <= k <= max-k.
    ///
    /// Formats: csv (header "n,0,1,..." then one row per n), json (array of
    /// {"n","k","value"} objects, value as a decimal string) and bfile
    /// ("index value" lines). The b-file reads the table by anti-diagonals:
    /// N = n+k ascending, then n ascending within a diagonal, skipping cells
    /// outside the table; the index starts at 0.
    Table {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_k: usize,
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// List every member of a family at size (n, k), or just count them.
    ///
    /// Families: lonesum, gammafree, acyclic, callan, maxascending,
    /// vesztergombi, pairs.
    Enumerate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run verification suites; exits 1 if any check fails.
    ///
    /// Checks: all, symmetry, recursion, altsum, families, lonesum-equiv,
    /// gamma-roundtrip, phi, split. Wall times go to standard error.
    ///
    /// --max bounds n,k for symmetry, recursion, families, gamma-roundtrip and
    /// split; n+k for altsum and phi; n*k for lonesum-equiv. Without it each
    /// check uses its default (10, 10, 4, 4, 4, 12, 7, 16).
    Verify {
        #[arg(long, default_value = "all")]
        check: String,
        /// Size bound; see above for its meaning per check.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Emit every well-formed gamma-free code for (n, k).
    Codes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<polyb::Error> for Failure {
    fn from(e: polyb::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn limits(cli: &Cli) -> EnumerationLimits {
    if cli.max_matrix > DEFAULT_MAX_MATRIX || cli.max_perm > DEFAULT_MAX_PERM {
        eprintln!("warning: raised size guards can make enumeration very slow");
    }
    EnumerationLimits { max_matrix_dim: cli.max_matrix, max_perm_size: cli.max_perm }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let threads = cli.threads.max(1);
    match &cli.command {
        Command::Compute { n, k, method, format } => {
            let (n, k) = (*n, *k);
            let value = match method.as_str() {
                "formula" => polybernoulli_formula(n, k),
                "recursion" => polybernoulli_recursion(n, k),
                m => match m.strip_prefix("enumerate:") {
                    Some(family) => count_family(family.parse::<FamilyId>()?, n, k, &limits(&cli), threads)?,
                    None => return Err(Failure::Usage(format!("unknown method {m:?}"))),
                },
            };
            let mut out = io::stdout().lock();
            match format.as_str() {
                "text" => writeln!(out, "{value}")?,
                "json" => writeln!(out, "{}", table::json_cell(n, k, &value))?,
                f => return Err(Failure::Usage(format!("unknown format {f:?}"))),
            }
        }
        Command::Table { max_n, max_k, format } => {
            let format: TableFormat = format.parse().map_err(Failure::Usage)?;
            let mut out = io::stdout().lock();
            out.write_all(table::render(*max_n, *max_k, format).as_bytes())?;
        }
        Command::Enumerate { family, n, k, count_only, output } => {
            let family: FamilyId = family.parse()?;
            let limits = limits(&cli);
            let mut out = open_output(output.as_ref())?;
            if *count_only {
                writeln!(out, "{}", count_family(family, *n, *k, &limits, threads)?)?;
            } else {
                let members = collect_family(family, *n, *k, &limits, threads)?;
                let separator = if family.is_matrix_family() { "\n" } else { "" };
                for (idx, m) in members.iter().enumerate() {
                    if idx > 0 {
                        out.write_all(separator.as_bytes())?;
                    }
                    writeln!(out, "{m}")?;
                }
            }
            out.flush()?;
        }
        Command::Verify { check, max } => {
            let check: Check = check.parse()?;
            let reports = run_verify(check, *max, threads);
            let mut out = io::stdout().lock();
            for r in &reports {
                writeln!(out, "{}", r.summary())?;
                for d in &r.details {
                    writeln!(out, "  {d}")?;
                }
                if let Some(w) = &r.witness {
                    writeln!(out, "  witness:")?;
                    for line in w.lines() {
                        writeln!(out, "    {line}")?;
                    }
                }
                eprintln!("{}: {:.3}s", r.check, r.elapsed.as_secs_f64());
            }
            out.flush()?;
            if reports.iter().any(|r| !r.passed) {
                return Err(Failure::Verification);
            }
        }
        Command::Codes { n, k, output } => {
            limits(&cli).check(FamilyId::GammaFree, *n, *k)?;
            let mut out = open_output(output.as_ref())?;
            for (idx, code) in all_gamma_codes(*n, *k).iter().enumerate() {
                if idx > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "{code}")?;
            }
            out.flush()?;
        }
    }
    Ok(())
}
