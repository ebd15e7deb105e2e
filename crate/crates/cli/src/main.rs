//! `qchan` command-line interface. Every command prints a JSON document and
//! exits with 0 when checks pass, 1 when a verification fails and 2 on
//! invalid input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use qchan::basis::{build_basis, PairIndex, Sector};
use qchan::channels::{Channel, FamilyChannel};
use qchan::equivalence::{inequivalence_certificate, qubit_equivalence_check, spectrum_witness};
use qchan::io::{load_channel, load_state, to_json_string, write_json, AnyChannel};
use qchan::reproduce::dimension_report;
use qchan::verification::{
    constant_fnorm_criterion, constant_fnorm_sample_test, is_cptp, param_range, verify_det_recurrence,
    verify_sum_identities, CPTP_TOLERANCE,
};
use qchan::{FamilyKind, Rational};

const TOL_ENV: &str = "QCHAN_TOL";

#[derive(Parser)]
#[command(name = "qchan", version, about = "Constant-norm quantum channel families: ranges, checks, certificates")]
struct Cli {
    /// Write the JSON report to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Tolerance override (also read from QCHAN_TOL).
    #[arg(long, global = true)]
    tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the orthonormal basis of n x n matrices.
    Basis {
        #[arg(long)]
        dim: usize,
        /// Include the matrices.
        #[arg(long)]
        json: bool,
    },
    /// Channel operations.
    Channel {
        #[command(subcommand)]
        action: ChannelAction,
    },
    /// CPTP parameter range of a family.
    Range {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        dim: usize,
    },
    /// Verification checks on a channel.
    Verify {
        #[command(subcommand)]
        check: VerifyCheck,
    },
    /// Conjugation-sum identities on random complex matrices.
    Identities {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Closed-form determinant against elimination on a parameter grid.
    Detcheck {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 21)]
        grid: usize,
    },
    /// Output spectra of both families of a pair on the two witness states.
    Witness {
        #[arg(long, value_parser = parse_pair)]
        pair: (FamilyKind, FamilyKind),
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        p: f64,
    },
    /// Inequivalence certificate for a pair of families.
    Certify {
        #[arg(long, value_parser = parse_pair)]
        pair: (FamilyKind, FamilyKind),
        #[arg(long)]
        dim: usize,
    },
    /// Pauli-conjugation equivalences of the qubit variants.
    QubitEquiv {
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Every check at one dimension plus the acceptance suite.
    Report {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum ChannelAction {
    /// Apply a channel file to a state file.
    Apply {
        #[arg(long)]
        channel: PathBuf,
        #[arg(long)]
        state: PathBuf,
    },
}

#[derive(Subcommand)]
enum VerifyCheck {
    /// Choi positivity and trace preservation.
    Cptp(ChannelArgs),
    /// Output norm over witness states and Haar-random pure states.
    ConstantNorm {
        #[command(flatten)]
        channel: ChannelArgs,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct ChannelArgs {
    /// Channel JSON file.
    #[arg(long, conflicts_with_all = ["family", "dim", "p"])]
    channel: Option<PathBuf>,
    #[arg(long, requires_all = ["dim", "p"])]
    family: Option<FamilyKind>,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    p: Option<f64>,
}

impl ChannelArgs {
    fn load(&self) -> Result<AnyChannel, Failure> {
        match (&self.channel, self.family, self.dim, self.p) {
            (Some(path), ..) => Ok(load_channel(path)?),
            (None, Some(kind), Some(dim), Some(p)) => Ok(AnyChannel::Family(FamilyChannel::new(kind, p, dim)?)),
            _ => Err(Failure::Usage("give --channel FILE or --family, --dim and --p".into())),
        }
    }
}

fn parse_pair(s: &str) -> Result<(FamilyKind, FamilyKind), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected two families `a,b`, got `{s}`"))?;
    let parse = |x: &str| x.trim().parse::<FamilyKind>().map_err(|e| e.to_string());
    Ok((parse(a)?, parse(b)?))
}

enum Failure {
    Usage(String),
    Library(qchan::Error),
}

impl From<qchan::Error> for Failure {
    fn from(e: qchan::Error) -> Self {
        Failure::Library(e)
    }
}

/// Result of a command: a JSON document and whether its checks passed.
struct Outcome {
    value: Value,
    passed: bool,
}

impl Outcome {
    fn new<T: Serialize>(value: &T, passed: bool) -> Result<Self, Failure> {
        let value = serde_json::to_value(value).map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(Self { value, passed })
    }
}

fn tolerance(flag: Option<f64>, default: f64) -> Result<f64, Failure> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(s) => s
                .trim()
                .parse::<f64>()
                .map_err(|_| Failure::Usage(format!("{TOL_ENV}={s} is not a number")))?,
            Err(_) => default,
        },
    };
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Failure::Usage(format!("tolerance must be finite and non-negative, got {tol}")));
    }
    Ok(tol)
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let tol = |default| tolerance(cli.tol, default);
    match &cli.command {
        Command::Basis { dim, json } => {
            let basis = build_basis::<f64>(*dim)?;
            let elements: Vec<Value> = basis
                .elements()
                .iter()
                .map(|e| {
                    let mut v = json!({ "sector": e.sector, "index": e.index });
                    if matches!(e.sector, Sector::X | Sector::Y) {
                        let pair = PairIndex::from_index(*dim, e.index).expect("index from the basis");
                        v["pair"] = json!([pair.k(), pair.l()]);
                    }
                    if *json {
                        v["matrix"] = serde_json::to_value(&e.matrix).expect("matrix serializes");
                    }
                    v
                })
                .collect();
            Outcome::new(&json!({ "dim": dim, "size": basis.len(), "elements": elements }), true)
        }
        Command::Channel { action: ChannelAction::Apply { channel, state } } => {
            let ch = load_channel(channel)?;
            let s = load_state(state)?;
            let out = ch.apply(s.matrix())?;
            let in_range = match &ch {
                AnyChannel::Family(f) => Some(f.in_cptp_range()),
                AnyChannel::Diagonal(_) => None,
            };
            let tr = out.trace();
            Outcome::new(
                &json!({
                    "channel": ch.spec(),
                    "in_cptp_range": in_range,
                    "trace": [tr.re, tr.im],
                    "output": out,
                }),
                true,
            )
        }
        Command::Range { family, dim } => {
            let r = param_range::<f64>(*family, *dim)?;
            let exact = param_range::<Rational>(*family, *dim)?;
            Outcome::new(
                &json!({
                    "family": family,
                    "dim": dim,
                    "p_min": r.p_min,
                    "p_max": r.p_max,
                    "p_min_exact": exact.p_min.to_string(),
                    "p_max_exact": exact.p_max.to_string(),
                }),
                true,
            )
        }
        Command::Verify { check: VerifyCheck::Cptp(args) } => {
            let ch = args.load()?;
            let rep = is_cptp(&ch, tol(CPTP_TOLERANCE)?)?;
            let passed = rep.passed;
            Outcome::new(&json!({ "channel": ch.spec(), "report": rep }), passed)
        }
        Command::Verify { check: VerifyCheck::ConstantNorm { channel, samples, seed } } => {
            if *samples == 0 {
                return Err(Failure::Usage("--samples must be at least 1".into()));
            }
            let ch = channel.load()?;
            let t = tol(1e-10)?;
            let rep = constant_fnorm_sample_test(&ch, *samples, *seed, t)?;
            let crit = constant_fnorm_criterion(&ch.to_diagonal(), t);
            let passed = rep.passed;
            Outcome::new(
                &json!({
                    "channel": ch.spec(),
                    "criterion": { "constant": crit.constant, "spread": crit.spread, "expected_norm": crit.expected_norm },
                    "report": rep,
                }),
                passed,
            )
        }
        Command::Identities { dim, trials, seed } => {
            let rep = verify_sum_identities::<f64>(*dim, *trials, *seed, tol(1e-12)?)?;
            let passed = rep.passed;
            Outcome::new(&rep, passed)
        }
        Command::Detcheck { dim, grid } => {
            let rep = verify_det_recurrence::<f64>(&[*dim], *grid, tol(1e-10)?)?;
            let passed = rep.passed;
            Outcome::new(&rep, passed)
        }
        Command::Witness { pair: (a, b), dim, p } => {
            let wa = spectrum_witness(*a, *p, *dim)?;
            let wb = spectrum_witness(*b, *p, *dim)?;
            let gap = |w: &qchan::equivalence::SpectrumWitness<f64>| w.max_spectral_gap;
            let threshold = qchan::equivalence::SPECTRAL_GAP_THRESHOLD;
            let distinguishes = (gap(&wa) > threshold) != (gap(&wb) > threshold);
            Outcome::new(
                &json!({ "pair": [a, b], "dim": dim, "p": p, "distinguishes": distinguishes, "witnesses": [wa, wb] }),
                true,
            )
        }
        Command::Certify { pair: (a, b), dim } => {
            let cert = inequivalence_certificate(*a, *b, *dim)?;
            let passed = cert.recheck();
            Outcome::new(&cert, passed)
        }
        Command::QubitEquiv { p, trials, seed } => {
            let rep = qubit_equivalence_check(*p, *trials, *seed, tol(1e-12)?)?;
            let passed = rep.passed;
            Outcome::new(&rep, passed)
        }
        Command::Report { dim, seed } => {
            let rep = dimension_report(*dim, *seed)?;
            let passed = rep.passed;
            Outcome::new(&rep, passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(f) => {
            let msg = match f {
                Failure::Usage(m) => m,
                Failure::Library(e) => e.to_string(),
            };
            eprintln!("{}", json!({ "error": msg }));
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output {
        Some(path) => write_json(&outcome.value, path),
        None => to_json_string(&outcome.value).map(|s| print!("{s}")),
    };
    if let Err(e) = written {
        eprintln!("{}", json!({ "error": e.to_string() }));
        return ExitCode::from(2);
    }
    ExitCode::from(if outcome.passed { 0 } else { 1 })
}
