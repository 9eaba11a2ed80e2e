//! Certified sweeps of |ζ(1/2+it)| against A t^{1/6} log t over finite
//! ranges, record extraction, and the crossover computations.

mod crossover;
mod records;

use std::fmt;

use rayon::prelude::*;

pub use crossover::{bracket_root, crossover, lehman_bound, min_q, power_log_bound, q_certified, MinQ};
pub use records::{
    collect_records, read_records, record_sweep, table_constant, write_records, Record, RecordFile, TableConstant,
};

use crate::interval::RInterval;
use crate::zeta::{abs_zeta_half_with, ZetaConfig, ZetaEnclosure, ZetaError};

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("outside the supported domain: {0}")]
    Domain(String),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error("record file: {0}")]
    Format(String),
    #[error("no records in [{lo}, {hi}]")]
    NoRecords { lo: f64, hi: f64 },
    #[error("no verified sign change on {0:?}")]
    NoSignChange(RInterval),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub piece_width: f64,
    /// Inconclusive pieces are halved at most this many times.
    pub max_depth: u32,
    pub zeta: ZetaConfig,
    /// Stop after the first chunk that produced a failure.
    pub fail_fast: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self { piece_width: 1.0 / 1024.0, max_depth: 20, zeta: ZetaConfig::from_env(), fail_fast: false }
    }
}

impl SweepConfig {
    fn validate(&self) -> Result<(), SweepError> {
        if !(self.piece_width > 0.0 && self.piece_width.is_finite()) {
            return Err(SweepError::Domain(format!("piece width must be positive, got {}", self.piece_width)));
        }
        Ok(())
    }
}

/// Pieces per parallel work unit.
const CHUNK: u64 = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PieceResult {
    pub a: f64,
    pub b: f64,
    pub zeta: ZetaEnclosure,
    /// A a^{1/6} log a.
    pub threshold: RInterval,
    pub verdict: Verdict,
}

/// Compares the enclosure of |ζ| on [a, b] with A a^{1/6} log a. The left
/// end is enough because t^{1/6} log t increases for t >= 2.
pub fn verify_piece_with(a: f64, b: f64, constant: RInterval, zeta: &ZetaConfig) -> Result<PieceResult, SweepError> {
    if !(a >= 2.0) || !(b >= a) || !b.is_finite() {
        return Err(SweepError::Domain(format!("pieces must satisfy 2 <= a <= b, got [{a}, {b}]")));
    }
    let t = RInterval::new(a, b).map_err(ZetaError::from)?;
    let z = abs_zeta_half_with(t, zeta)?;
    let threshold = power_log_bound(constant, RInterval::point(a))?;
    let verdict = if z.value.hi() < threshold.lo() {
        Verdict::Pass
    } else if z.value.lo() >= threshold.hi() {
        Verdict::Fail
    } else {
        Verdict::Inconclusive
    };
    Ok(PieceResult { a, b, zeta: z, threshold, verdict })
}

/// [`verify_piece_with`] on [a, a + w] with settings from the environment.
pub fn verify_piece(a: f64, w: f64, constant: RInterval) -> Result<PieceResult, SweepError> {
    verify_piece_with(a, a + w, constant, &ZetaConfig::from_env())
}

#[derive(Debug, Clone, PartialEq)]
pub struct PieceFailure {
    pub piece: PieceResult,
    pub depth: u32,
}

impl fmt::Display for PieceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.piece;
        let kind = match p.verdict {
            Verdict::Fail => "exceeds",
            _ => "undecided at the depth limit against",
        };
        write!(
            f,
            "[{:e}, {:e}] (depth {}): |zeta| in {:?} ({}) {} threshold {:?}",
            p.a, p.b, self.depth, p.zeta.value, p.zeta.method, kind, p.threshold
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub lo: f64,
    pub hi: f64,
    pub constant: RInterval,
    /// Pieces of the top-level partition that were processed.
    pub pieces: u64,
    pub evaluations: u64,
    pub failures: Vec<PieceFailure>,
    pub deepest: u32,
    /// Right end of the processed prefix; equals `hi` unless stopped early.
    pub covered_to: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.covered_to == self.hi
    }
}

/// Left end of piece i; pieces i and i+1 share this exact value.
fn piece_start(lo: f64, hi: f64, w: f64, i: u64) -> f64 {
    (lo + i as f64 * w).min(hi)
}

fn piece_count(lo: f64, hi: f64, w: f64) -> u64 {
    let mut n = ((hi - lo) / w).ceil().max(1.0) as u64;
    while piece_start(lo, hi, w, n) < hi {
        n += 1;
    }
    while n > 1 && piece_start(lo, hi, w, n - 1) >= hi {
        n -= 1;
    }
    n
}

/// Top-level pieces covering [lo, hi], in order, with shared end points.
pub fn partition(lo: f64, hi: f64, w: f64) -> Vec<(f64, f64)> {
    let n = piece_count(lo, hi, w);
    (0..n).map(|i| (piece_start(lo, hi, w, i), piece_start(lo, hi, w, i + 1))).collect()
}

struct PieceOutcome {
    evaluations: u64,
    deepest: u32,
    failures: Vec<PieceFailure>,
}

fn check_recursive(
    a: f64,
    b: f64,
    constant: RInterval,
    cfg: &SweepConfig,
    depth: u32,
) -> Result<PieceOutcome, SweepError> {
    let r = verify_piece_with(a, b, constant, &cfg.zeta)?;
    match r.verdict {
        Verdict::Pass => Ok(PieceOutcome { evaluations: 1, deepest: depth, failures: vec![] }),
        Verdict::Fail => {
            Ok(PieceOutcome { evaluations: 1, deepest: depth, failures: vec![PieceFailure { piece: r, depth }] })
        }
        Verdict::Inconclusive => {
            let m = a + (b - a) / 2.0;
            if depth >= cfg.max_depth || !(a < m && m < b) {
                return Ok(PieceOutcome {
                    evaluations: 1,
                    deepest: depth,
                    failures: vec![PieceFailure { piece: r, depth }],
                });
            }
            let left = check_recursive(a, m, constant, cfg, depth + 1)?;
            let right = check_recursive(m, b, constant, cfg, depth + 1)?;
            let mut failures = left.failures;
            failures.extend(right.failures);
            Ok(PieceOutcome {
                evaluations: 1 + left.evaluations + right.evaluations,
                deepest: left.deepest.max(right.deepest),
                failures,
            })
        }
    }
}

/// Certifies |ζ(1/2+it)| < A t^{1/6} log t on [lo, hi].
pub fn verify_range(lo: f64, hi: f64, constant: RInterval, cfg: &SweepConfig) -> Result<VerifyReport, SweepError> {
    cfg.validate()?;
    if !(lo >= 2.0 && lo < hi && hi.is_finite()) {
        return Err(SweepError::Domain(format!("need 2 <= lo < hi, got [{lo}, {hi}]")));
    }
    let w = cfg.piece_width;
    let n = piece_count(lo, hi, w);
    let mut report =
        VerifyReport { lo, hi, constant, pieces: 0, evaluations: 0, failures: vec![], deepest: 0, covered_to: lo };
    let mut start = 0;
    while start < n {
        let end = (start + CHUNK * rayon::current_num_threads() as u64).min(n);
        let outcomes: Vec<Result<PieceOutcome, SweepError>> = (start..end)
            .into_par_iter()
            .map(|i| check_recursive(piece_start(lo, hi, w, i), piece_start(lo, hi, w, i + 1), constant, cfg, 0))
            .collect();
        for o in outcomes {
            let o = o?;
            report.evaluations += o.evaluations;
            report.deepest = report.deepest.max(o.deepest);
            report.failures.extend(o.failures);
        }
        report.pieces = end;
        report.covered_to = piece_start(lo, hi, w, end);
        start = end;
        if cfg.fail_fast && !report.failures.is_empty() {
            break;
        }
    }
    Ok(report)
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "range [{}, {}] pieces {} evaluations {} deepest bisection {}",
            self.lo, self.hi, self.pieces, self.evaluations, self.deepest
        )?;
        if self.covered_to < self.hi {
            writeln!(f, "stopped early at t = {}", self.covered_to)?;
        }
        for fl in self.failures.iter().take(20) {
            writeln!(f, "failure {fl}")?;
        }
        if self.failures.len() > 20 {
            writeln!(f, "... {} failures in total", self.failures.len())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> RInterval {
        RInterval::point(x)
    }

    #[test]
    fn pieces() {
        let w = 1.0 / 1024.0;
        assert_eq!(verify_piece(100.0, w, c(0.732)).unwrap().verdict, Verdict::Pass);
        assert_eq!(verify_piece(2.0, w, c(1e-6)).unwrap().verdict, Verdict::Fail);
        assert_eq!(verify_piece(14.1347, w, c(0.732)).unwrap().verdict, Verdict::Pass);
        assert!(verify_piece(1.5, w, c(0.732)).is_err());
    }

    #[test]
    fn partition_covers_exactly() {
        for (lo, hi, w) in
            [(2.0, 3.0, 1.0 / 1024.0), (14.1347, 15.0, 0.01), (100.0, 100.0 + 1.0 / 1024.0, 1.0 / 1024.0)]
        {
            let p = partition(lo, hi, w);
            assert_eq!(p.first().unwrap().0, lo);
            assert_eq!(p.last().unwrap().1, hi);
            for pair in p.windows(2) {
                assert_eq!(pair[0].1, pair[1].0);
                assert!(pair[0].0 < pair[0].1);
            }
        }
        assert_eq!(partition(100.0, 100.0 + 1.0 / 1024.0, 1.0 / 1024.0).len(), 1);
    }

    #[test]
    fn short_ranges() {
        let cfg = SweepConfig::default();
        let r = verify_range(100.0, 100.0 + 1.0 / 1024.0, c(0.732), &cfg).unwrap();
        assert!(r.passed());
        assert_eq!(r.pieces, 1);
        let bad = verify_range(2.0, 2.25, c(0.45), &cfg).unwrap();
        assert!(!bad.passed());
        assert!(verify_range(3.0, 2.0, c(0.732), &cfg).is_err());
    }

    #[test]
    fn monotone_in_constant() {
        for a in [2.0, 7.3, 50.0, 250.0] {
            let lo = verify_piece(a, 1.0 / 1024.0, c(0.5)).unwrap();
            let hi = verify_piece(a, 1.0 / 1024.0, c(0.6)).unwrap();
            if lo.verdict == Verdict::Pass {
                assert_eq!(hi.verdict, Verdict::Pass);
            }
        }
    }

    #[test]
    fn bisection_resolves_wide_pieces() {
        let cfg = SweepConfig { piece_width: 0.5, ..SweepConfig::default() };
        let r = verify_range(20.0, 22.0, c(0.732), &cfg).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.evaluations >= r.pieces);
    }
}
