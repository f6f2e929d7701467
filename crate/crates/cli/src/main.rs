//! `qcycles`: Foata transforms, mesh-pattern queries, exact series and
//! exhaustive verification runs from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification or b-file comparison
//! finds a discrepancy, 2 on usage, parse or I/O errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qcycles::bfile::{BFile, Comparison};
use qcycles::enumerate::{
    a2_series, f_series, BruteForce, VerificationReport, DEFAULT_BRUTE_FORCE_BOUND,
};
use qcycles::{
    foata_forward, foata_inverse, named_pattern, CoefficientSeries, MeshPattern, NamedPattern,
    Permutation,
};

#[derive(Parser, Debug)]
#[command(
    name = "qcycles",
    version,
    about = "Adjacent q-cycles, Foata's transformation and mesh patterns"
)]
struct Cli {
    /// Largest permutation length swept exhaustively.
    #[arg(long, global = true, default_value_t = DEFAULT_BRUTE_FORCE_BOUND)]
    bound: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply Foata's fundamental transformation (or its inverse).
    Foata {
        /// Permutation as a digit string or comma-separated list.
        perm: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Query mesh-pattern occurrences.
    Mesh {
        #[command(subcommand)]
        query: MeshQuery,
    },
    /// Print a generating function, one `n<TAB>coefficient` line per term.
    Series {
        which: SeriesKind,
        /// Highest power of x to print.
        #[arg(long)]
        terms: usize,
    },
    /// Run an exhaustive verification.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Compare a local series with an OEIS b-file.
    OeisDiff {
        bfile: PathBuf,
        #[arg(long, value_enum, default_value_t = SeriesKind::A2)]
        series: SeriesKind,
        #[arg(long, default_value_t = 100)]
        terms: usize,
    },
}

#[derive(Subcommand, Debug)]
enum MeshQuery {
    /// Number of occurrences in a permutation.
    Count {
        #[arg(long)]
        pattern: String,
        perm: String,
    },
    /// Occurrence positions, one comma-separated set per line.
    Occurrences {
        #[arg(long)]
        pattern: String,
        perm: String,
    },
    /// Number of avoiders of length n, or the avoiders themselves.
    Avoiders {
        #[arg(long)]
        pattern: String,
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyTarget {
    /// Adjacent q-cycles of π against occurrences of r_q and s_q in its image.
    Theorem1 {
        #[arg(long)]
        max_n: usize,
    },
    /// Avoiders of p against the coefficients of Σ m!·(x/(1+x²))^m.
    Conjecture {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 100)]
        series_terms: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    /// Permutations without adjacent transpositions.
    A2,
    /// Σ m!·(x/(1+x²))^m.
    F,
    /// Brute-force avoider counts of p.
    AvoidersP,
}

/// What a command produced: text for stdout and the exit status.
struct Outcome {
    stdout: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, String> {
    let brute = BruteForce::with_bound(cli.bound);
    match cli.command {
        Command::Foata { perm, inverse } => {
            let p = parse_perm(&perm)?;
            let image = if inverse {
                foata_inverse(&p)
            } else {
                foata_forward(&p)
            };
            Ok(Outcome::ok(format!("{image}\n")))
        }
        Command::Mesh { query } => mesh(brute, query),
        Command::Series { which, terms } => Ok(Outcome::ok(series(brute, which, terms)?.to_tsv())),
        Command::Verify { target } => {
            let report = match target {
                VerifyTarget::Theorem1 { max_n } => brute.verify_theorem1(max_n),
                VerifyTarget::Conjecture {
                    max_n,
                    series_terms,
                } => brute.verify_conjecture(max_n, series_terms),
            }
            .map_err(|e| e.to_string())?;
            Ok(Outcome {
                stdout: render_report(&report),
                code: if report.passed() { 0 } else { 1 },
            })
        }
        Command::OeisDiff {
            bfile,
            series: which,
            terms,
        } => {
            let b = BFile::read(&bfile).map_err(|e| e.to_string())?;
            let local = series(brute, which, terms)?;
            match b.compare(&local) {
                Comparison::Match { lo, hi } => {
                    Ok(Outcome::ok(format!("MATCH over [{lo},{hi}]\n")))
                }
                Comparison::Mismatch {
                    index,
                    bfile,
                    computed,
                } => Ok(Outcome {
                    stdout: format!(
                        "MISMATCH at index {index}: b-file has {bfile}, computed {computed}\n"
                    ),
                    code: 1,
                }),
                Comparison::NoOverlap => Err(format!(
                    "no overlapping range between {} and the computed terms 0..={terms}",
                    bfile.display()
                )),
            }
        }
    }
}

fn mesh(brute: BruteForce, query: MeshQuery) -> Result<Outcome, String> {
    match query {
        MeshQuery::Count { pattern, perm } => {
            let (t, p) = (parse_mesh(&pattern)?, parse_perm(&perm)?);
            Ok(Outcome::ok(format!("{}\n", t.count_occurrences(&p))))
        }
        MeshQuery::Occurrences { pattern, perm } => {
            let (t, p) = (parse_mesh(&pattern)?, parse_perm(&perm)?);
            let mut out = String::new();
            for occ in t.occurrences(&p) {
                writeln!(out, "{occ}").expect("writing to a String");
            }
            Ok(Outcome::ok(out))
        }
        MeshQuery::Avoiders { pattern, n, list } => {
            let t = parse_mesh(&pattern)?;
            let avoiders = brute.avoiders(&[t], n).map_err(|e| e.to_string())?;
            if !list {
                return Ok(Outcome::ok(format!("{}\n", avoiders.len())));
            }
            let mut out = String::new();
            for a in avoiders {
                writeln!(out, "{a}").expect("writing to a String");
            }
            Ok(Outcome::ok(out))
        }
    }
}

fn series(brute: BruteForce, which: SeriesKind, terms: usize) -> Result<CoefficientSeries, String> {
    match which {
        SeriesKind::A2 => Ok(a2_series(terms)),
        SeriesKind::F => Ok(f_series(terms)),
        SeriesKind::AvoidersP => brute
            .avoider_series(&named_pattern(NamedPattern::P), terms)
            .map_err(|e| e.to_string()),
    }
}

fn parse_perm(text: &str) -> Result<Permutation, String> {
    text.parse().map_err(|e: qcycles::Error| e.to_string())
}

fn parse_mesh(text: &str) -> Result<MeshPattern, String> {
    text.parse().map_err(|e: qcycles::Error| e.to_string())
}

fn render_report(report: &VerificationReport) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(report.title.clone());
    for check in &report.checks {
        let status = if check.passed() { "ok  " } else { "FAIL" };
        line(format!(
            "  [{status}] {} ({} cases, {} failures)",
            check.name, check.cases, check.failures
        ));
        if let Some(first) = &check.first_failure {
            line(format!("         first failure: {first}"));
        }
    }
    for c in &report.counterexamples {
        line(format!("  counterexample: {c}"));
    }
    line(format!(
        "permutations scanned: {}",
        report.permutations_scanned
    ));
    let checked: u64 = report.checks.iter().map(|c| c.cases).sum();
    line(format!("comparisons: {checked}"));
    line(if report.passed() { "PASS" } else { "FAIL" }.to_string());
    out
}
