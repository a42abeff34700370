//! `knotsig`: exact concordance invariants from the command line.
//!
//! Scalars print as plain text (add `--json` for a JSON object); reports
//! always print JSON. Every JSON document carries `"schema": 1`.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use knotsig::algebra::{fmt_rational, parse_rational};
use knotsig::conditions::{self, check_averaging, check_range, check_signature_conditions};
use knotsig::covers::{self, deck_action_mod_p, metabolizers, CoverError};
use knotsig::dcrit::{self, d_determinant};
use knotsig::seifert::{arf_of, fox_milnor};
use knotsig::stepfn::PlotData;
use knotsig::{CompositeKnot, KnotExpr};

use output::{emit, CliError};

#[derive(Parser)]
#[command(name = "knotsig", version, about = "Exact knot-concordance invariants")]
struct Cli {
    /// Print scalar results as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Levine–Tristram signatures.
    #[command(subcommand)]
    Sig(SigCommand),
    /// Alexander polynomial, normalized so that Δ(1) = 1.
    Alex { expr: String },
    /// Arf invariant.
    Arf { expr: String },
    /// Fox–Milnor factorization test on the Alexander polynomial.
    Foxmilnor { expr: String },
    /// (m, p)-signature conditions over the cosets of ⟨(m+1)/m⟩.
    Cond(CondArgs),
    /// Averaging condition Σ_p σ(i/p) = 0 over admissible p.
    Avg {
        expr: String,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        pmax: u64,
    },
    /// Prime sets attached to (m+1)^q − m^q.
    Primeset {
        #[arg(long)]
        m: u64,
        /// 7: prime powers dividing some order; 8: primes dividing one exactly.
        #[arg(long, value_parser = ["7", "8"])]
        thm: String,
        #[arg(long)]
        qmax: u64,
        /// Largest prime power listed (set 7 only).
        #[arg(long, default_value_t = 1000)]
        bound: u64,
        /// Primes to leave out (set 7 only).
        #[arg(long, value_delimiter = ',')]
        exclude: Vec<u64>,
    },
    /// Homology of the q-fold branched cyclic cover.
    Cover {
        expr: String,
        #[arg(long)]
        q: u64,
        /// Prime for the deck eigenvalues and metabolizer search.
        #[arg(long)]
        p: Option<u64>,
    },
    /// The determinant 𝔻(d), or a nonvanishing scan.
    Dcrit(DcritArgs),
    /// τ through the cabling and doubling rules, with a derivation trace.
    Tau { expr: String },
}

#[derive(Subcommand)]
enum SigCommand {
    /// Signature at a rational point of [0, 1].
    Eval {
        expr: String,
        /// Point j/p.
        #[arg(long)]
        at: String,
    },
    /// Samples at j/N as CSV, optionally an SVG plot of the whole function.
    Plot {
        expr: String,
        #[arg(long)]
        denominator: u64,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "modulus")]
struct Modulus {
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    pmax: Option<u64>,
}

#[derive(Args)]
struct CondArgs {
    expr: String,
    #[arg(long)]
    m: u64,
    #[command(flatten)]
    modulus: Modulus,
}

#[derive(Args)]
struct DcritArgs {
    #[arg(long, conflicts_with = "scan", required_unless_present = "scan")]
    d: Option<u64>,
    /// Scan odd d up to this bound.
    #[arg(long)]
    scan: Option<u64>,
    /// Worker threads for the scan.
    #[arg(long)]
    jobs: Option<usize>,
}

fn knot(text: &str) -> Result<CompositeKnot, CliError> {
    let e = KnotExpr::parse(text).map_err(knotsig::Error::from)?;
    Ok(e.composite().map_err(knotsig::Error::from)?)
}

fn expr(text: &str) -> Result<KnotExpr, CliError> {
    let e = KnotExpr::parse(text).map_err(knotsig::Error::from)?;
    e.validate().map_err(knotsig::Error::from)?;
    Ok(e)
}

fn rational(text: &str) -> Result<BigRational, CliError> {
    parse_rational(text).ok_or_else(|| CliError::Usage(format!("cannot read '{text}' as a rational a/b")))
}

fn run(cli: Cli) -> Result<(), CliError> {
    let json = cli.json;
    match cli.command {
        Command::Sig(SigCommand::Eval { expr, at }) => {
            let k = knot(&expr)?;
            let x = rational(&at)?;
            let v = k.signature_at(&x).map_err(knotsig::Error::from)?;
            emit(json, v.to_string(), || {
                json!({
                    "argument": fmt_rational(&x),
                    "signature": v.to_string(),
                    "nullity": v.nullity,
                    "is_jump": v.is_jump,
                })
            })
        }
        Command::Sig(SigCommand::Plot { expr, denominator, svg }) => {
            if denominator == 0 {
                return Err(CliError::Usage("--denominator must be positive".into()));
            }
            let k = knot(&expr)?;
            let mut csv = String::from("x,value\n");
            for j in 0..=denominator {
                let x = BigRational::new(j.into(), denominator.into());
                let v = k.signature_at(&x).map_err(knotsig::Error::from)?;
                csv.push_str(&format!("{},{}\n", fmt_rational(&x), v));
            }
            output::write_out(csv.trim_end())?;
            if let Some(path) = svg {
                let f = k.signature_function().map_err(knotsig::Error::from)?;
                let data = PlotData {
                    jumps: f.jumps().iter().map(|a| a.approx()).collect(),
                    labels: f.jumps().iter().map(ToString::to_string).collect(),
                    plateaus: f.plateaus().to_vec(),
                };
                std::fs::write(&path, knotsig::stepfn::svg_plot(&data, &expr))?;
            }
            Ok(())
        }
        Command::Alex { expr } => {
            let k = knot(&expr)?;
            let d = k.alexander();
            emit(json, d.to_string(), || {
                json!({
                    "alexander": d.to_string(),
                    "determinant": d.eval_at_minus_one().magnitude().to_string(),
                    "m_parameter": knotsig::seifert::m_parameter_of(&d),
                })
            })
        }
        Command::Arf { expr } => {
            let d = knot(&expr)?.alexander();
            let a = arf_of(&d);
            emit(json, a.to_string(), || json!({ "arf": a }))
        }
        Command::Foxmilnor { expr } => {
            let d = knot(&expr)?.alexander();
            let r = fox_milnor(&d).map_err(knotsig::Error::from)?;
            output::report(json!({ "alexander": d.to_string(), "report": r }))
        }
        Command::Cond(args) => {
            let k = knot(&args.expr)?;
            match (args.modulus.p, args.modulus.pmax) {
                (Some(p), _) => {
                    let r = check_signature_conditions(&k, args.m, p).map_err(knotsig::Error::from)?;
                    output::report(json!({ "report": r }))
                }
                (None, Some(pmax)) => {
                    let reports = check_range(&k, args.m, pmax).map_err(knotsig::Error::from)?;
                    let failures: Vec<u64> = reports
                        .iter()
                        .filter(|r| r.verdict == conditions::Verdict::Fail)
                        .map(|r| r.p)
                        .collect();
                    let verdict = if failures.is_empty() { "pass" } else { "fail" };
                    output::report(json!({
                        "m": args.m,
                        "pmax": pmax,
                        "verdict": verdict,
                        "failures": failures,
                        "reports": reports,
                    }))
                }
                (None, None) => unreachable!("clap enforces one of --p and --pmax"),
            }
        }
        Command::Avg { expr, m, pmax } => {
            let r = check_averaging(&knot(&expr)?, m, pmax).map_err(knotsig::Error::from)?;
            output::report(json!({ "report": r }))
        }
        Command::Primeset { m, thm, qmax, bound, exclude } => {
            let primes: Vec<String> = if thm == "7" {
                conditions::prime_set_thm7(m, qmax, bound, &exclude)
                    .map_err(knotsig::Error::from)?
                    .iter()
                    .map(ToString::to_string)
                    .collect()
            } else {
                conditions::prime_set_thm8(m, qmax)
                    .map_err(knotsig::Error::from)?
                    .iter()
                    .map(ToString::to_string)
                    .collect()
            };
            output::report(json!({ "m": m, "thm": thm.parse::<u8>().unwrap(), "qmax": qmax, "primes": primes }))
        }
        Command::Cover { expr: text, q, p } => cover(&text, q, p),
        Command::Dcrit(args) => {
            if let Some(d) = args.d {
                let v = d_determinant(d).map_err(knotsig::Error::from)?;
                let s = fmt_rational(&v);
                return emit(json, s.clone(), || json!({ "d": d, "determinant": s }));
            }
            let max = args.scan.expect("clap requires --d or --scan");
            let rows = match args.jobs {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n.max(1))
                    .build()
                    .map_err(|e| CliError::Usage(e.to_string()))?
                    .install(|| dcrit::scan(max)),
                None => dcrit::scan(max),
            }
            .map_err(knotsig::Error::from)?;
            let zeros: Vec<u64> = rows.iter().filter(|r| !r.nonzero).map(|r| r.d).collect();
            output::report(json!({ "max": max, "zeros": zeros, "rows": rows }))
        }
        Command::Tau { expr: text } => {
            let t = expr(&text)?.tau();
            output::report(json!({ "expr": text, "tau": t }))
        }
    }
}

fn cover(text: &str, q: u64, p: Option<u64>) -> Result<(), CliError> {
    let e = expr(text)?;
    let v = e
        .seifert_of()
        .ok_or_else(|| CliError::Math(format!("{text} has no Seifert matrix (cables and satellites are not supported here)")))?;
    let h = covers::homology(&v, q).map_err(knotsig::Error::from)?;
    let mut out = json!({
        "q": q,
        "invariant_factors": h.invariant_factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "free_rank": h.free_rank,
        "order": h.order.as_ref().map(ToString::to_string),
        "deck_eigenvalues": Value::Null,
        "metabolizers": Value::Null,
    });
    if let Some(p) = p {
        let deck = deck_action_mod_p(&v, q, p).map_err(knotsig::Error::from)?;
        out["p"] = json!(p);
        out["deck_eigenvalues"] = json!(deck.eigenvalues);
        out["deck_matrix"] = json!(deck.matrix);
        match metabolizers(&v, q, p) {
            Ok(r) => out["metabolizers"] = json!(r),
            // the line search needs H[p] ≅ (Z/p)²; report why it was skipped
            Err(err @ CoverError::NotElementaryRankTwo { .. }) => out["metabolizers_skipped"] = json!(err.to_string()),
            Err(err) => return Err(knotsig::Error::from(err).into()),
        }
    }
    output::report(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
