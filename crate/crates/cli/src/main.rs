use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use pretzel_core::invariants::invariants_of;
use pretzel_core::obstruction::{canonical_knots, decide, decide_all, fmt_ratio, strong_ratio, verify_theorems, Outcome, Reason, Verdict, VerifyConfig};
use pretzel_core::pretzel::{KnotSpec, PretzelKnot};
use pretzel_core::reproduce::reproduce;
use pretzel_core::signature::{profile_table, SignatureProfile};
use pretzel_core::Error;

/// Invariants, signatures and chirally cosmetic surgery obstructions for
/// the alternating odd pretzel knots K(k_1, ..., k_{2g+1}).
#[derive(Parser)]
#[command(name = "pretzel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conway coefficients and v3 as JSON, cross-checked across routes.
    Invariants {
        /// e.g. "K(1,0,0,0,0)" or "P(-3,-1,-1,-1,-1)"
        knot: String,
    },
    /// sigma(K,p) for p = 1..=pmax as CSV.
    Sigtable {
        knot: String,
        #[arg(long, default_value_t = 52)]
        pmax: u64,
        /// Append an approximate decimal column.
        #[arg(long)]
        decimal: bool,
    },
    /// Breakpoints of the signature staircase as CSV.
    Profile { knot: String },
    /// Run the obstruction pipeline and print the verdict as JSON.
    Check { knot: String },
    /// Check every knot in a range, failing on any unexpected verdict.
    Verify {
        #[arg(long = "genus", required = true)]
        genus: Vec<usize>,
        #[arg(long)]
        max_sum: u64,
        #[arg(long)]
        max_twist: Option<u64>,
        /// Also sample knots just above the twist-sum threshold for g = 1..=8.
        #[arg(long)]
        threshold: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Decide every canonical knot in a range.
    Survey {
        #[arg(long = "genus", required = true)]
        genus: Vec<usize>,
        #[arg(long)]
        max_sum: u64,
        #[arg(long)]
        max_twist: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the published tables and theorem ranges and diff them
    /// against the stored golden data.
    Reproduce {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

enum Failure {
    Parse(String),
    Violation(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::BadLength(_) | Error::NegativeTwist { .. } => Failure::Parse(e.to_string()),
            Error::TheoremViolation(_) | Error::GoldenMismatch(_) => Failure::Violation(e.to_string()),
            e => Failure::Other(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn parse_spec(s: &str) -> Result<KnotSpec, Failure> {
    Ok(s.parse::<KnotSpec>()?)
}

fn parse_knot(s: &str) -> Result<PretzelKnot, Failure> {
    // chirally cosmetic surgeries exist on a knot iff they exist on its mirror
    Ok(parse_spec(s)?.knot)
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn print_json<T: Serialize>(w: &mut dyn Write, v: &T) -> CliResult {
    serde_json::to_writer_pretty(&mut *w, v)?;
    writeln!(w)?;
    Ok(())
}

fn set_jobs(jobs: Option<usize>) {
    if let Some(n) = jobs {
        // only fails if a pool already exists, which is harmless here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn knots_in(genus: &[usize], max_sum: u64, max_twist: Option<u64>) -> Vec<PretzelKnot> {
    genus.iter().flat_map(|&g| canonical_knots(g, max_sum, max_twist)).collect()
}

fn cmd_sigtable(knot: &str, pmax: u64, decimal: bool) -> CliResult {
    if pmax == 0 {
        return Err(Failure::Parse("--pmax must be at least 1".into()));
    }
    let spec = parse_spec(knot)?;
    let sign = if spec.mirror { -1 } else { 1 };
    let rows = profile_table(&SignatureProfile::new(&spec.knot)?, pmax);
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    let mut header = vec!["p", "sigma", "sigma_over_p", "coincidence"];
    if decimal {
        header.push("sigma_over_p_approx");
    }
    w.write_record(&header)?;
    for r in rows {
        let sigma = sign * r.sigma;
        let ratio = &r.sigma_over_p * BigRational::from_integer(sign.into());
        let mut rec = vec![
            r.p.to_string(),
            sigma.to_string(),
            format!("{}/{}", ratio.numer(), ratio.denom()),
            r.coincidence.to_string(),
        ];
        if decimal {
            rec.push(format!("{:.6}", sigma as f64 / r.p as f64));
        }
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_profile(knot: &str) -> CliResult {
    let k = parse_knot(knot)?;
    let prof = SignatureProfile::new(&k)?;
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.write_record(["root", "theta_lo", "theta_hi", "theta_over_two_pi", "w", "signature_above"])?;
    for m in 0..prof.genus() {
        let th = prof.theta_at(m, 64);
        let (lo, hi) = th.to_f64_pair();
        let mid = 0.5 * (lo + hi);
        w.write_record([
            (m + 1).to_string(),
            format!("{lo:.15}"),
            format!("{hi:.15}"),
            format!("{:.15}", mid / std::f64::consts::TAU),
            format!("{:.15}", 2.0 * mid.cos() - 2.0),
            (2 * (m + 1)).to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct SurveyRow {
    knot: String,
    genus: usize,
    twist_sum: u64,
    outcome: Outcome,
    f: Option<String>,
    reasons: Vec<String>,
    survivors: Vec<(u64, String)>,
}

impl SurveyRow {
    fn new(k: &PretzelKnot, v: &Verdict) -> Self {
        SurveyRow {
            knot: k.to_string(),
            genus: k.genus(),
            twist_sum: k.twist_sum(),
            outcome: v.outcome,
            f: strong_ratio(k).ok().map(|r| fmt_ratio(&r.f)),
            reasons: v.reasons.iter().map(Reason::summary).collect(),
            survivors: v.survivors.iter().map(|s| (s.p, fmt_ratio(&s.q_plus_qprime))).collect(),
        }
    }
}

fn cmd_survey(genus: &[usize], max_sum: u64, max_twist: Option<u64>, format: Format, out: &Option<PathBuf>) -> CliResult {
    let knots = knots_in(genus, max_sum, max_twist);
    let mut rows = Vec::new();
    for (k, v) in knots.iter().zip(decide_all(&knots)) {
        rows.push(SurveyRow::new(k, &v?));
    }
    let mut w = output(out)?;
    match format {
        Format::Csv => {
            let mut c = csv::Writer::from_writer(w);
            c.write_record(["knot", "genus", "twist_sum", "outcome", "f", "reason"])?;
            for r in &rows {
                c.write_record([
                    r.knot.clone(),
                    r.genus.to_string(),
                    r.twist_sum.to_string(),
                    r.outcome.to_string(),
                    r.f.clone().unwrap_or_default(),
                    r.reasons.join("; "),
                ])?;
            }
            c.flush()?;
        }
        _ => print_json(&mut w, &rows)?,
    }
    Ok(())
}

fn cmd_verify(genus: Vec<usize>, max_sum: u64, max_twist: Option<u64>, threshold: bool, format: Format) -> CliResult {
    let cfg = VerifyConfig {
        genera: genus,
        max_sum,
        max_twist,
        threshold_genera: if threshold { (1..=8).collect() } else { vec![] },
        ..VerifyConfig::default()
    };
    let report = verify_theorems(&cfg);
    let mut w = io::stdout().lock();
    match format {
        Format::Json => print_json(&mut w, &report)?,
        _ => {
            writeln!(
                w,
                "{} knots: {} NoCCS, {} KnownChiral, {} Inconclusive",
                report.verdicts.len(),
                report.count(Outcome::NoCcs),
                report.count(Outcome::KnownChiral),
                report.count(Outcome::Inconclusive)
            )?;
            for t in &report.threshold {
                writeln!(w, "threshold g={} s1={}: {} samples, min slack {}", t.genus, t.s1, t.samples, t.min_slack)?;
            }
        }
    }
    report.into_result()?;
    Ok(())
}

fn cmd_reproduce(format: Format, out: &Option<PathBuf>) -> CliResult {
    let rep = reproduce()?;
    let mut w = output(out)?;
    match format {
        Format::Json => print_json(&mut w, &rep)?,
        _ => write!(w, "{rep}")?,
    }
    w.flush()?;
    rep.into_result()?;
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Invariants { knot } => print_json(&mut io::stdout().lock(), &invariants_of(&parse_spec(&knot)?)?),
        Command::Sigtable { knot, pmax, decimal } => cmd_sigtable(&knot, pmax, decimal),
        Command::Profile { knot } => cmd_profile(&knot),
        Command::Check { knot } => print_json(&mut io::stdout().lock(), &decide(&parse_knot(&knot)?)?),
        Command::Verify { genus, max_sum, max_twist, threshold, jobs, format } => {
            set_jobs(jobs);
            cmd_verify(genus, max_sum, max_twist, threshold, format)
        }
        Command::Survey { genus, max_sum, max_twist, format, jobs, out } => {
            set_jobs(jobs);
            cmd_survey(&genus, max_sum, max_twist, format, &out)
        }
        Command::Reproduce { format, out } => cmd_reproduce(format, &out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Violation(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Other(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
