//! `tcheb`: indices, Tchebyshev transforms, poset families and the
//! verification suites from the command line.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
//! error, 3 domain error (e.g. not cd-expressible), 4 violated precondition
//! (e.g. rank-zero input).

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tchebyshev::ab_algebra::{ab_index, cd_index};
use tchebyshev::poset::{
    boolean_algebra, chain, crosspolytope, ladder, parse_poset, random_graded_poset,
    tchebyshev_poset, Poset,
};
use tchebyshev::qsym::{f_b_poset, f_poset};
use tchebyshev::spectral::verify_spectrum;
use tchebyshev::transforms::{tcheb_t, tcheb_u};
use tchebyshev::verify::{self, VerifyConfig, CHECKS};
use tchebyshev::{AbPoly, Error};

/// Environment variable holding the default `--seed`.
const SEED_ENV: &str = "TCHEB_SEED";

#[derive(Parser)]
#[command(name = "tcheb", version, about = "Tchebyshev transforms of graded posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print an invariant of the poset in FILE.
    Index {
        file: String,
        #[arg(long, value_enum, default_value_t = Basis::Ab)]
        basis: Basis,
    },
    /// Apply a Tchebyshev transform to a poset file or an ab-polynomial.
    Transform {
        /// Poset file (`--level poset`) or polynomial such as `1*ab - 2*ba`.
        input: String,
        #[arg(long, value_enum, default_value_t = Kind::First)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Level::Poly)]
        level: Level,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
        #[arg(long, default_value_t = 8)]
        degree: usize,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        /// Emit one JSON object per report with keys check, instance,
        /// status, witness, ms.
        #[arg(long)]
        json: bool,
    },
    /// Print a poset of a built-in family in the poset file format.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        /// Largest inner rank level of a random poset.
        #[arg(long, default_value_t = 3)]
        width: usize,
    },
    /// Check the eigen-decomposition of U on degree N.
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// List the verification checks.
    Checks,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Ab,
    Cd,
    Qsym,
    Bqsym,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    First,
    Second,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Level {
    Poset,
    Poly,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Boolean,
    Ladder,
    Chain,
    Crosspolytope,
    Random,
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotCdExpressible | Error::NonPositiveDegree | Error::NotComparable(..) => 3,
            Error::RankZeroInput | Error::RankZeroOperand => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn read_poset(path: &str) -> Result<Poset, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
    Ok(parse_poset(&text)?)
}

fn index(file: &str, basis: Basis) -> Result<String, Failure> {
    let p = read_poset(file)?;
    Ok(match basis {
        Basis::Ab => ab_index(&p)?.to_string(),
        Basis::Cd => cd_index(&p)?.to_string(),
        Basis::Qsym => f_poset(&p).to_string(),
        Basis::Bqsym => f_b_poset(&p)?.to_string(),
    })
}

fn transform(input: &str, kind: Kind, level: Level) -> Result<String, Failure> {
    match (level, kind) {
        (Level::Poset, Kind::First) => Ok(tchebyshev_poset(&read_poset(input)?)?.emit()),
        (Level::Poset, Kind::Second) => Err(usage(
            "the second-kind transform is defined on polynomials only; use --level poly",
        )),
        (Level::Poly, _) => {
            let u: AbPoly = input.parse()?;
            let image = if kind == Kind::First {
                tcheb_t(&u)
            } else {
                tcheb_u(&u)
            };
            Ok(image.to_string())
        }
    }
}

fn gen(family: Family, n: usize, seed: u64, width: usize) -> Result<String, Failure> {
    let p = match family {
        Family::Boolean => boolean_algebra(n),
        Family::Ladder => ladder(n),
        Family::Chain => chain(n),
        Family::Crosspolytope => {
            if n == 0 {
                return Err(usage("crosspolytope needs --n ≥ 1"));
            }
            crosspolytope(n)
        }
        Family::Random => random_graded_poset(n, width, seed)?,
    };
    Ok(p.emit())
}

fn run_verify(check: &str, cfg: &VerifyConfig, json: bool, out: &mut impl Write) -> Result<bool, Failure> {
    let reports = verify::run(check, cfg)?;
    for r in &reports {
        let line = if json {
            serde_json::to_string(r).expect("reports serialise")
        } else {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let mut line = format!("{status} {} {} ({} ms)", r.check, r.instance, r.ms);
            if let Some(w) = &r.witness {
                line.push_str(&format!("\n    witness: {w}"));
            }
            line
        };
        writeln!(out, "{line}").map_err(|e| usage(e.to_string()))?;
    }
    if !json {
        let failed = reports.iter().filter(|r| !r.passed()).count();
        writeln!(out, "{} reports, {failed} failed", reports.len()).map_err(|e| usage(e.to_string()))?;
    }
    Ok(!verify::any_failed(&reports))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Index { file, basis } => index(&file, basis).map(|s| (s, true)),
        Command::Transform { input, kind, level } => transform(&input, kind, level).map(|s| (s, true)),
        Command::Gen {
            family,
            n,
            seed,
            width,
        } => gen(family, n, seed, width).map(|s| (s, true)),
        Command::Spectrum { n, json } => {
            let r = verify_spectrum(n);
            let text = if json {
                serde_json::to_string(&r).expect("report serialises")
            } else {
                format!(
                    "degree {}: multiplicities {:?} (expected {:?}), rank {}, trace {} (expected {}), {} failed vectors",
                    r.degree,
                    r.multiplicities,
                    r.expected_multiplicities,
                    r.rank,
                    r.trace,
                    r.expected_trace,
                    r.failures.len()
                )
            };
            Ok((text, r.passed()))
        }
        Command::Checks => Ok((CHECKS.join("\n"), true)),
        Command::Verify {
            check,
            max_rank,
            degree,
            seed,
            json,
        } => {
            let cfg = VerifyConfig {
                max_rank,
                degree,
                seed,
                ..VerifyConfig::default()
            };
            run_verify(&check, &cfg, json, &mut out).map(|ok| (String::new(), ok))
        }
    };
    match result {
        Ok((text, ok)) => {
            if !text.is_empty() {
                let text = text.trim_end_matches('\n');
                if writeln!(out, "{text}").is_err() {
                    return ExitCode::from(2);
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
