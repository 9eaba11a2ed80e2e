//! Command-line interface. Every numeric flag is read as an exact decimal and
//! enclosed outward, so `--t0 5.867e9` means that decimal and nothing else.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bounds::{feasibility, optimize_params, verify_large_t, BoundParams, LargeTReport, ParamBox};
use crate::decimal::parse_interval;
use crate::expsum;
use crate::interval::{fmt_up, RInterval};
use crate::sweep::{self, SweepConfig};
use crate::zeta::abs_zeta_half;

#[derive(Debug, Parser)]
#[command(name = "zeta-bound", version, about = "Certified bounds for |zeta(1/2+it)|")]
pub struct Cli {
    /// Significant digits when printing enclosures.
    #[arg(long, global = true, default_value_t = 10)]
    pub digits: usize,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enclose |zeta(1/2+it)| at t or over [t, t-hi].
    Eval {
        #[arg(long, value_parser = decimal)]
        t: RInterval,
        #[arg(long, value_parser = decimal)]
        t_hi: Option<RInterval>,
    },
    /// Certify |zeta(1/2+it)| < A t^(1/6) log t on [lo, hi].
    VerifyRange {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, value_parser = decimal)]
        a: RInterval,
        #[command(flatten)]
        sweep: SweepArgs,
        /// Stop at the first chunk of pieces containing a failure.
        #[arg(long)]
        fail_fast: bool,
    },
    /// Write the record file of a sweep over [lo, hi].
    Records {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        sweep: SweepArgs,
        /// Allow ranges reaching beyond t = 1000.
        #[arg(long)]
        long_run: bool,
    },
    /// Smallest four-decimal A covering the records in [lo, hi].
    Table {
        #[arg(long)]
        records: PathBuf,
        #[command(flatten)]
        range: RangeArgs,
        /// Fail unless the constant is within one unit in the last decimal.
        #[arg(long, value_parser = decimal)]
        expect: Option<RInterval>,
    },
    /// Certify the bound for all t >= t0.
    CheckTheorem {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_parser = decimal, default_value = "0.732")]
        target: RInterval,
    },
    /// Search (k, theta, a0) for the smallest certified constant.
    OptimizeParams {
        #[arg(long, value_parser = range_pair, default_value = "1.1,1.25")]
        k_range: (f64, f64),
        #[arg(long, value_parser = range_pair, default_value = "5,10")]
        theta_range: (f64, f64),
        #[arg(long, value_parser = range_pair, default_value = "3,4")]
        a0_range: (f64, f64),
        #[arg(long, value_parser = decimal, default_value = "5.867e9")]
        t0: RInterval,
        #[arg(long, value_parser = decimal, default_value = "0.732")]
        target: RInterval,
        /// Grid points per axis.
        #[arg(long, default_value_t = 9)]
        grid: usize,
        /// Write the best parameters as a key = value file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Where 4 (t/2pi)^(1/4) and A t^(1/6) log t cross inside [lo, hi].
    Crossover {
        #[arg(long, value_parser = decimal)]
        lo: RInterval,
        #[arg(long, value_parser = decimal)]
        hi: RInterval,
        #[arg(long, value_parser = decimal, default_value = "0.732")]
        a: RInterval,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
    /// Least Q with |zeta(1/2)| < A Q^(1/6) log Q.
    MinQ {
        #[arg(long, value_parser = decimal, default_value = "0.732")]
        a: RInterval,
        /// Also certify the inequality at this Q.
        #[arg(long, value_parser = decimal)]
        check: Option<RInterval>,
    },
    /// Randomized and exhaustive checks of the exponential-sum estimates.
    CheckLemmas {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        lemma1_trials: u64,
        #[arg(long, default_value_t = 20)]
        lemma2_max_len: u64,
        #[arg(long, default_value_t = 50)]
        lemma3_samples: u64,
        #[arg(long, default_value_t = 10_000)]
        moments_max: u64,
    },
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    #[arg(long, value_parser = exact)]
    pub lo: f64,
    #[arg(long, value_parser = exact)]
    pub hi: f64,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Piece width; must be exactly representable.
    #[arg(long, value_parser = exact, default_value = "0.0009765625")]
    pub piece: f64,
    #[arg(long, default_value_t = 20)]
    pub max_depth: u32,
}

impl SweepArgs {
    fn config(&self) -> SweepConfig {
        SweepConfig { piece_width: self.piece, max_depth: self.max_depth, ..SweepConfig::default() }
    }
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    /// key = value file with k, theta, a0, t0; overrides the flags.
    #[arg(long)]
    pub params: Option<PathBuf>,
    #[arg(long, default_value = "1.16")]
    pub k: String,
    #[arg(long, default_value = "7.5")]
    pub theta: String,
    #[arg(long, default_value = "3.37")]
    pub a0: String,
    #[arg(long, default_value = "5.867e9")]
    pub t0: String,
}

impl ParamArgs {
    fn load(&self) -> Result<BoundParams, String> {
        match &self.params {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                BoundParams::parse(&text).map_err(|e| e.to_string())
            }
            None => BoundParams::from_decimals(&self.k, &self.theta, &self.a0, &self.t0).map_err(|e| e.to_string()),
        }
    }
}

fn decimal(s: &str) -> Result<RInterval, String> {
    parse_interval(s).map_err(|e| e.to_string())
}

fn exact(s: &str) -> Result<f64, String> {
    let x = decimal(s)?;
    if !x.is_point() {
        return Err(format!("{s} is not exactly representable; use a nearby dyadic value"));
    }
    Ok(x.lo())
}

fn range_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected lo,hi, got {s:?}"))?;
    let (a, b) = (decimal(a)?, decimal(b)?);
    Ok((a.mid(), b.mid()))
}

/// Parses `args` (including the program name), runs the command, writes the
/// report to `out` and returns the exit status.
pub fn run<I, T>(args: I, out: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(out, "error: thread pool: {e}");
            return 1;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| execute(&cli, &mut buf));
    let _ = out.write_all(&buf);
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            1
        }
    }
}

type Outcome = Result<bool, Box<dyn std::error::Error + Send + Sync>>;

fn verdict(out: &mut impl Write, pass: bool) -> Outcome {
    writeln!(out, "RESULT: {}", if pass { "PASS" } else { "FAIL" })?;
    Ok(pass)
}

fn execute(cli: &Cli, out: &mut impl Write) -> Outcome {
    let p = cli.digits;
    match &cli.command {
        Command::Eval { t, t_hi } => {
            let t = match t_hi {
                Some(h) => t.hull(h),
                None => *t,
            };
            let z = abs_zeta_half(t)?;
            writeln!(out, "t = {t:.p$}")?;
            writeln!(out, "|zeta(1/2+it)| in {:.p$}", z.value)?;
            writeln!(out, "method {}", z.method)?;
            Ok(true)
        }
        Command::VerifyRange { range, a, sweep: s, fail_fast } => {
            let cfg = SweepConfig { fail_fast: *fail_fast, ..s.config() };
            let r = sweep::verify_range(range.lo, range.hi, *a, &cfg)?;
            writeln!(out, "constant {a:.p$}")?;
            write!(out, "{r}")?;
            writeln!(out, "failures {}", r.failures.len())?;
            verdict(out, r.passed())
        }
        Command::Records { range, out: path, sweep: s, long_run } => {
            if range.hi > 1000.0 && !long_run {
                return Err(format!(
                    "ranges beyond t = 1000 take hours; pass --long-run to run [{}, {}]",
                    range.lo, range.hi
                )
                .into());
            }
            let f = sweep::record_sweep(range.lo, range.hi, &s.config(), path)?;
            writeln!(out, "range [{}, {}] piece {}", f.lo, f.hi, f.piece)?;
            writeln!(out, "records {} written to {}", f.records.len(), path.display())?;
            if let Some(last) = f.records.last() {
                writeln!(out, "largest upper bound {} at a = {}", last.y, last.a)?;
            }
            Ok(true)
        }
        Command::Table { records, range, expect } => {
            let f = sweep::read_records(records)?;
            let tc = sweep::table_constant(&f, range.lo, range.hi)?;
            writeln!(out, "range [{}, {}] records {}", tc.lo, tc.hi, tc.records_used)?;
            writeln!(out, "max ratio {:.p$} at a = {}", tc.max_ratio, tc.at)?;
            writeln!(out, "constant {}", tc.text())?;
            match expect {
                Some(e) => {
                    let diff = (tc.value() - e.mid()).abs();
                    writeln!(out, "expected {e:.6} difference {diff:.1e}")?;
                    verdict(out, diff <= 1.00000001e-4)
                }
                None => Ok(true),
            }
        }
        Command::CheckTheorem { params, target } => {
            let bp = params.load()?;
            writeln!(out, "parameters {bp}")?;
            let feas = feasibility(&bp);
            write!(out, "{feas}")?;
            if !feas.passed() {
                return verdict(out, false);
            }
            let report = verify_large_t(&bp, *target)?;
            print_chain(out, &report, p)?;
            verdict(out, report.passed())
        }
        Command::OptimizeParams { k_range, theta_range, a0_range, t0, target, grid, out: path } => {
            let bx = ParamBox { k: *k_range, theta: *theta_range, a0: *a0_range };
            let r = optimize_params(&bx, *t0, *grid)?;
            writeln!(out, "evaluations {}", r.evaluations)?;
            writeln!(out, "best {}", r.params)?;
            writeln!(out, "certified constant {}", fmt_up(r.constant(), p))?;
            if let Some(path) = path {
                std::fs::write(path, r.params.to_text())?;
            }
            verdict(out, r.constant() <= target.lo())
        }
        Command::Crossover { lo, hi, a, tol } => {
            let bracket = lo.hull(hi);
            let x = sweep::crossover(|t| sweep::power_log_bound(*a, t), sweep::lehman_bound, bracket, *tol)?;
            writeln!(out, "crossing of 4 (t/2pi)^(1/4) and {a:.p$} t^(1/6) log t")?;
            writeln!(out, "t in {x:.p$} width {:.3e}", x.width())?;
            Ok(true)
        }
        Command::MinQ { a, check } => {
            let m = sweep::min_q(*a)?;
            writeln!(out, "|zeta(1/2)| in {:.p$}", m.zeta_half)?;
            writeln!(out, "least Q in {:.p$}", m.q)?;
            match check {
                Some(q) => {
                    let ok = sweep::q_certified(*a, *q)?;
                    writeln!(out, "inequality at Q = {:.p$}: {}", q, if ok { "certified" } else { "not certified" })?;
                    verdict(out, ok)
                }
                None => Ok(true),
            }
        }
        Command::CheckLemmas { seed, lemma1_trials, lemma2_max_len, lemma3_samples, moments_max } => {
            let reports = [
                expsum::lemma1_battery(*lemma1_trials, *seed),
                expsum::lemma2_battery(*lemma2_max_len, seed.wrapping_add(1)),
                expsum::lemma3_battery(*lemma3_samples, seed.wrapping_add(2)),
                expsum::moments_battery(*moments_max),
            ];
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            verdict(out, reports.iter().all(|r| r.passed()))
        }
    }
}

fn print_chain(out: &mut impl Write, r: &LargeTReport, p: usize) -> io::Result<()> {
    let ch = &r.chain;
    writeln!(out, "Y0 = {:.p$}", ch.y0)?;
    for (name, vals) in [("A", &ch.a[..]), ("B", &ch.b[..]), ("C", &ch.c[..]), ("D", &ch.d[..])] {
        for (i, v) in vals.iter().enumerate() {
            writeln!(out, "{name}{} = {v:.p$}", i + 1)?;
        }
    }
    let labels = ["D1", "D2/log t", "D3/(t^(1/12) log t)", "D4/t^(1/6)", "D5/(t^(1/6) log t)"];
    for (l, v) in labels.iter().zip(r.terms) {
        writeln!(out, "term {l} <= {}", fmt_up(v.hi(), p))?;
    }
    writeln!(out, "sup over t >= t0 of bound/(t^(1/6) log t) <= {}", fmt_up(r.sup.hi(), p))?;
    writeln!(out, "target {:.p$}", r.target)?;
    Ok(())
}

/// Convenience wrapper used by the binary.
pub fn main_with_env() -> i32 {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    run(std::env::args_os(), &mut lock)
}
