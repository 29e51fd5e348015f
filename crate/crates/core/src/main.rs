use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use clifford_split::check::all_passed;
use clifford_split::lemmas::run_identity_suite;
use clifford_split::report::{build_report, ReportOptions};
use clifford_split::slgroup::{enumerate_relations, verify_presentation};
use clifford_split::splitcheck::{
    build_generators, search_witness, verdict, DirectEvaluator, GenParams, SearchOptions,
    SplitVerdict, DEFAULT_SEARCH_BOUND,
};
use clifford_split::weylnum;
use clifford_split::Error;

const DEFAULT_MAX_DIM: u64 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "clifford-split",
    version,
    about = "Splitting of the projective Clifford group in even dimension"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form answer, with the explicit witness when N ≡ 2 (mod 4)
    Verdict {
        #[arg(long)]
        dim: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: u64,
    },
    /// Search all 64·N⁴ generator lifts for one satisfying every relation
    Search {
        #[arg(long)]
        dim: u64,
        /// Evaluate every candidate literally, without closed-form pruning
        #[arg(long)]
        exhaustive: bool,
        /// Count all witnesses instead of stopping at the first
        #[arg(long)]
        count: bool,
        #[arg(long, env = "CLIFFORD_SPLIT_JOBS")]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        max_dim: u64,
    },
    /// List the defining relations of SL(2, Z_N) and check them on t, r
    Relations {
        #[arg(long)]
        dim: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: u64,
    },
    /// Cross-check the closed-form power and relation identities
    Lemmas {
        #[arg(long)]
        dim: u64,
        /// Largest exponent for the power identities (default 2N+2)
        #[arg(long)]
        max_exp: Option<u64>,
        /// Random vector choices per bit tuple
        #[arg(long, default_value_t = 4)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: u64,
    },
    /// Numerical checks on the Weyl operators
    Weyl {
        #[arg(long)]
        dim: u64,
    },
    /// Write a JSON report for a range of dimensions
    Report {
        /// Inclusive range `a..b`, or a single dimension
        #[arg(long, value_parser = parse_dims)]
        dims: (u64, u64),
        #[arg(long)]
        json: PathBuf,
        /// Omit timestamps and timings so output is reproducible
        #[arg(long)]
        no_timestamp: bool,
        /// Use the witness search instead of the closed-form verdict
        #[arg(long)]
        search: bool,
        #[arg(long, requires = "search")]
        exhaustive: bool,
        #[arg(long, env = "CLIFFORD_SPLIT_JOBS")]
        jobs: Option<usize>,
        /// Defaults to 12 with --search and 64 otherwise
        #[arg(long)]
        max_dim: Option<u64>,
    },
}

fn parse_dims(s: &str) -> Result<(u64, u64), String> {
    let parse = |x: &str| {
        x.trim()
            .parse::<u64>()
            .map_err(|e| format!("invalid dimension {x:?}: {e}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let n = parse(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

fn bound(n: u64, max: u64) -> Result<(), Error> {
    if n > max {
        Err(Error::DimensionOverBound { got: n, bound: max })
    } else {
        Ok(())
    }
}

enum Outcome {
    Pass,
    Fail,
}

fn print_verdict(v: &SplitVerdict) -> Result<(), Error> {
    println!("N = {}", v.n);
    println!("splits: {}", if v.splits { "yes" } else { "no" });
    if let Some(p) = &v.witness {
        let (t, r) = build_generators(p)?;
        println!("witness: {p}");
        println!("  T = {t}");
        println!("  R = {r}");
    }
    for note in &v.notes {
        println!("note: {note}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Verdict { dim, max_dim } => {
            bound(dim, max_dim)?;
            print_verdict(&verdict(dim)?)?;
            Ok(Outcome::Pass)
        }
        Command::Search {
            dim,
            exhaustive,
            count,
            jobs,
            max_dim,
        } => {
            let opts = SearchOptions {
                exhaustive,
                count,
                jobs,
                bound: max_dim,
            };
            let v = search_witness(dim, &opts)?;
            println!("N = {dim} ({} search)", v.mode);
            match &v.witness {
                Some(p) => {
                    let (t, r) = build_generators(p)?;
                    println!("witness: {p}");
                    println!("  T = {t}");
                    println!("  R = {r}");
                    println!("checked {} candidates", v.candidates_checked);
                }
                None => println!("no witness among {} candidates", v.candidates_checked),
            }
            if let Some(c) = v.witness_count {
                println!("witnesses: {c}");
            }
            if dim % 4 == 2 {
                let standard = GenParams::standard_witness(dim)?;
                let ok = DirectEvaluator::new(dim)?.passes(&standard);
                println!(
                    "standard witness ({standard}) passes: {}",
                    if ok { "yes" } else { "no" }
                );
                if !ok {
                    return Ok(Outcome::Fail);
                }
            }
            let expected = verdict(dim)?.splits;
            if v.splits != expected {
                println!("MISMATCH: closed-form verdict says splits = {expected}");
                return Ok(Outcome::Fail);
            }
            Ok(Outcome::Pass)
        }
        Command::Relations { dim, max_dim } => {
            bound(dim, max_dim)?;
            let rels = enumerate_relations(dim)?;
            for r in &rels {
                println!("{:<8} k={:<3} l={:<3} {r}", r.family.to_string(), r.k, r.l);
            }
            println!("{} relations", rels.len());
            let ok = verify_presentation(dim)?;
            println!(
                "t, r satisfy all relations over Z_{dim}: {}",
                if ok { "yes" } else { "no" }
            );
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Lemmas {
            dim,
            max_exp,
            samples,
            seed,
            max_dim,
        } => {
            bound(dim, max_dim)?;
            let out = run_identity_suite(dim, max_exp.unwrap_or(2 * dim + 2), samples, seed)?;
            for o in &out {
                println!("{o}");
            }
            let ok = all_passed(&out);
            println!(
                "{} of {} identities hold at N = {dim}",
                out.iter().filter(|o| o.passed()).count(),
                out.len()
            );
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Weyl { dim } => {
            let checks = weylnum::self_check(dim)?;
            for c in &checks {
                println!(
                    "{} {} (max error {:.1e})",
                    if c.passed { "ok  " } else { "FAIL" },
                    c.name,
                    c.max_error
                );
            }
            let fourier = weylnum::projective_action(&weylnum::fourier(dim)?)?;
            println!("Fourier acts as {fourier}");
            Ok(if checks.iter().all(|c| c.passed) {
                Outcome::Pass
            } else {
                Outcome::Fail
            })
        }
        Command::Report {
            dims,
            json,
            no_timestamp,
            search,
            exhaustive,
            jobs,
            max_dim,
        } => {
            let (lo, hi) = dims;
            let max_dim = max_dim.unwrap_or(if search {
                DEFAULT_SEARCH_BOUND
            } else {
                DEFAULT_MAX_DIM
            });
            bound(hi, max_dim)?;
            let opts = ReportOptions {
                search: search.then_some(SearchOptions {
                    exhaustive,
                    count: false,
                    jobs,
                    bound: max_dim,
                }),
                no_timestamp,
            };
            let doc = build_report(lo..=hi, &opts)?;
            std::fs::write(&json, doc.to_json() + "\n").map_err(|e| {
                Error::InvalidParameter(format!("cannot write {}: {e}", json.display()))
            })?;
            for d in &doc.dims {
                println!(
                    "N = {:<3} splits: {}",
                    d.n,
                    if d.splits { "yes" } else { "no" }
                );
            }
            println!("wrote {}", json.display());
            let consistent = doc.dims.iter().all(|d| d.splits == (d.n % 4 == 2));
            Ok(if consistent {
                Outcome::Pass
            } else {
                Outcome::Fail
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
