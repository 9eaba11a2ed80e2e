//! Exponential sums Σ e^{2πi f(n)} and the three estimates used for the
//! large-t bound: the second-derivative test, Weyl differencing, and the
//! approximate functional equation.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::interval::consts::{PI, TWO_PI};
use crate::interval::{CInterval, RInterval};
use crate::zeta::{abs_zeta_half, ZetaError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ExpSumError {
    #[error("hypothesis violated: {0}")]
    Domain(String),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
}

type Phase = dyn Fn(RInterval) -> RInterval + Send + Sync;

/// Real phase f with optional second-derivative bounds (V, W) meaning
/// 1/W <= |f''| <= 1/V on the summation range.
#[derive(Clone)]
pub struct PhaseFn {
    f: Arc<Phase>,
    d2: Option<(f64, f64)>,
}

impl fmt::Debug for PhaseFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PhaseFn").field("d2_range", &self.d2).finish_non_exhaustive()
    }
}

impl PhaseFn {
    /// `f` must return an enclosure of the phase over its argument interval.
    pub fn new(f: impl Fn(RInterval) -> RInterval + Send + Sync + 'static) -> Self {
        Self { f: Arc::new(f), d2: None }
    }

    /// Attaches (V, W); requires V < W and W > 1.
    pub fn with_d2_range(mut self, v: f64, w: f64) -> Result<Self, ExpSumError> {
        check_vw(v, w)?;
        self.d2 = Some((v, w));
        Ok(self)
    }

    pub fn d2_range(&self) -> Option<(f64, f64)> {
        self.d2
    }

    pub fn eval(&self, n: i64) -> RInterval {
        (self.f)(RInterval::from_int(n))
    }

    pub fn eval_interval(&self, x: RInterval) -> RInterval {
        (self.f)(x)
    }
}

fn check_vw(v: f64, w: f64) -> Result<(), ExpSumError> {
    if !(v > 0.0 && v < w && w > 1.0 && w.is_finite()) {
        return Err(ExpSumError::Domain(format!("need 0 < V < W and W > 1, got V = {v}, W = {w}")));
    }
    Ok(())
}

/// Summation window n = offset+1 ..= offset+len, prefix length for the
/// differenced sums, and the Weyl shift parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SumRange {
    pub offset: i64,
    pub len: u64,
    pub prefix: u64,
    pub modulus: u64,
    pub shift: u64,
}

impl SumRange {
    pub fn new(offset: i64, len: u64) -> Result<Self, ExpSumError> {
        if len < 1 {
            return Err(ExpSumError::Domain("sum length must be at least 1".into()));
        }
        Ok(Self { offset, len, prefix: len, modulus: 1, shift: 0 })
    }

    /// Sets the prefix length K, modulus M and shift m.
    pub fn with_weyl(mut self, prefix: u64, modulus: u64, shift: u64) -> Result<Self, ExpSumError> {
        if !(1..=self.len).contains(&prefix) {
            return Err(ExpSumError::Domain(format!("prefix {prefix} not in 1..={}", self.len)));
        }
        if modulus < 1 {
            return Err(ExpSumError::Domain("modulus M must be at least 1".into()));
        }
        if modulus > 1 && !(1..modulus).contains(&shift) {
            return Err(ExpSumError::Domain(format!("shift {shift} not in 1..{modulus}")));
        }
        self.prefix = prefix;
        self.modulus = modulus;
        self.shift = shift;
        Ok(self)
    }
}

/// e^{2πi x}, reducing x by an integer first.
pub fn unit_phase(x: RInterval) -> CInterval {
    let k = x.mid().floor();
    let r = if k.is_finite() && k.abs() < 9e15 { x - RInterval::point(k) } else { x };
    CInterval::cis(TWO_PI * r)
}

/// Enclosure of Σ_{n=N+1}^{N+L} e^{2πi f(n)}.
pub fn direct_sum(f: &PhaseFn, r: &SumRange) -> CInterval {
    let mut acc = CInterval::ZERO;
    for n in (r.offset + 1)..=(r.offset + r.len as i64) {
        acc += unit_phase(f.eval(n));
    }
    acc
}

/// Enclosure of Σ_{m,K} = Σ_{n=N+1}^{N+K} e^{2πi (f(n+m) - f(n))}.
pub fn shifted_sum(f: &PhaseFn, r: &SumRange) -> CInterval {
    let m = r.shift as i64;
    let mut acc = CInterval::ZERO;
    for n in (r.offset + 1)..=(r.offset + r.prefix as i64) {
        acc += unit_phase(f.eval(n + m) - f.eval(n));
    }
    acc
}

/// Enclosure of max_{K <= L} |Σ_{m,K}| via running partial sums.
pub fn max_shifted_prefix(f: &PhaseFn, offset: i64, len: u64, shift: u64) -> RInterval {
    let m = shift as i64;
    let mut acc = CInterval::ZERO;
    let mut best = RInterval::ZERO;
    for n in (offset + 1)..=(offset + len as i64) {
        acc += unit_phase(f.eval(n + m) - f.eval(n));
        best = best.max(&acc.cabs());
    }
    best
}

/// ((L-1)/V + 1)(2√(2/π) W^{1/2} + 2) + 1.
pub fn lemma1_bound(len: u64, v: f64, w: f64) -> Result<RInterval, ExpSumError> {
    check_vw(v, w)?;
    if len < 1 {
        return Err(ExpSumError::Domain("sum length must be at least 1".into()));
    }
    let one = RInterval::ONE;
    let two = RInterval::point(2.0);
    let first = RInterval::from_int(len as i64 - 1) / RInterval::point(v) + one;
    let c = two * (two / PI).sqrt().expect("positive");
    let second = c * RInterval::point(w).sqrt().expect("positive") + two;
    Ok(first * second + one)
}

/// L(L+M-1)/M + (2(L+M-1)/M) Σ_{m=1}^{M-1} (1 - m/M) inner_max(m), an upper
/// bound for |Σ_{n=N+1}^{N+L} e^{2πi f(n)}|² whenever inner_max(m) bounds
/// max_{K<=L} |Σ_{m,K}|.
pub fn lemma2_bound(r: &SumRange, inner_max: impl Fn(u64) -> f64) -> Result<RInterval, ExpSumError> {
    if r.modulus < 1 {
        return Err(ExpSumError::Domain("modulus M must be at least 1".into()));
    }
    let l = RInterval::from_int(r.len as i64);
    let m_big = RInterval::from_int(r.modulus as i64);
    let lm1 = RInterval::from_int((r.len + r.modulus - 1) as i64);
    let mut weighted = RInterval::ZERO;
    for m in 1..r.modulus {
        let weight = RInterval::ONE - RInterval::from_int(m as i64) / m_big;
        weighted += weight * RInterval::point(inner_max(m));
    }
    Ok(l * lm1 / m_big + RInterval::point(2.0) * lm1 / m_big * weighted)
}

/// Enclosures of (4/15) M^{3/2} and (4/3) M^{1/2}.
pub fn weighted_moment_bounds(m: u64) -> (RInterval, RInterval) {
    assert!(m >= 1, "M must be at least 1");
    let mi = RInterval::from_int(m as i64);
    let root = mi.sqrt().expect("positive");
    (RInterval::ratio(4, 15) * mi * root, RInterval::ratio(4, 3) * root)
}

/// Enclosures of Σ_{m<M} (1 - m/M) m^{1/2} and Σ_{m<M} (1 - m/M) m^{-1/2}.
pub fn weighted_moments(m: u64) -> (RInterval, RInterval) {
    let mb = RInterval::from_int(m as i64);
    let mut a = RInterval::ZERO;
    let mut b = RInterval::ZERO;
    for i in 1..m {
        let w = RInterval::ONE - RInterval::from_int(i as i64) / mb;
        let r = RInterval::from_int(i as i64).sqrt().expect("positive");
        a += w * r;
        b += w / r;
    }
    (a, b)
}

/// Σ_{n<=len} n^{-1/2-it}.
pub fn zeta_partial_sum(t: RInterval, len: u64) -> CInterval {
    let s = CInterval::new(RInterval::point(0.5), t);
    let mut acc = CInterval::ZERO;
    for n in 1..=len {
        acc += crate::zeta::int_pow_neg(n, &s);
    }
    acc
}

/// 2|Σ_{n<=√(t/2π)} n^{-1/2-it}| + 1.53 t^{-1/4} + 3.23 t^{-3/4}.
///
/// The error terms are evaluated at the same t as the sum. When the sum
/// length changes inside `t`, every length is evaluated and the hull taken.
pub fn lemma3_rhs(t: RInterval) -> Result<RInterval, ExpSumError> {
    if !(t.lo() >= 100.0) || !t.is_bounded() {
        return Err(ExpSumError::Domain(format!("approximate functional equation needs t >= 100, got {t:?}")));
    }
    let a = (t / TWO_PI).sqrt().map_err(ZetaError::from)?;
    let n_lo = a.lo().floor() as u64;
    let n_hi = a.hi().floor() as u64;
    let err = RInterval::ratio(153, 100) * t.powf(-0.25).map_err(ZetaError::from)?
        + RInterval::ratio(323, 100) * t.powf(-0.75).map_err(ZetaError::from)?;
    let mut out: Option<RInterval> = None;
    for n in n_lo..=n_hi {
        let v = RInterval::point(2.0) * zeta_partial_sum(t, n).cabs() + err;
        out = Some(match out {
            Some(o) => o.hull(&v),
            None => v,
        });
    }
    Ok(out.expect("at least one length"))
}

/// Outcome of a randomized or exhaustive check.
#[derive(Debug, Clone, PartialEq)]
pub struct BatteryReport {
    pub name: &'static str,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for BatteryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {} cases, {} failures", self.name, self.cases, self.failures.len())?;
        for msg in self.failures.iter().take(5) {
            write!(f, "\n  {msg}")?;
        }
        Ok(())
    }
}

/// f(x) = c x² + d x + ε sin(ω x), with f'' = 2c - ε ω² sin(ω x).
#[derive(Debug, Clone, Copy)]
pub struct QuadraticPhase {
    pub c: f64,
    pub d: f64,
    pub eps: f64,
    pub omega: f64,
}

impl QuadraticPhase {
    pub fn random(rng: &mut impl Rng) -> Self {
        let c = 10f64.powf(rng.gen_range(-4.0..-0.5));
        let d = rng.gen_range(0.0..1.0);
        let omega = rng.gen_range(0.01..1.0);
        // Keep |ε ω²| below c so that f'' stays within [c, 3c].
        let eps = rng.gen_range(0.0..1.0) * c / (omega * omega);
        Self { c, d, eps, omega }
    }

    pub fn eval(&self, x: RInterval) -> RInterval {
        let c = RInterval::point(self.c);
        let d = RInterval::point(self.d);
        let e = RInterval::point(self.eps);
        let w = RInterval::point(self.omega);
        c * x.sqr() + d * x + e * (w * x).sin()
    }

    pub fn second_derivative(&self, x: RInterval) -> RInterval {
        let c = RInterval::point(self.c);
        let e = RInterval::point(self.eps);
        let w = RInterval::point(self.omega);
        RInterval::point(2.0) * c - e * w.sqr() * (w * x).sin()
    }

    pub fn phase(&self) -> PhaseFn {
        let q = *self;
        PhaseFn::new(move |x| q.eval(x))
    }

    /// (V, W) certified by interval evaluation of f'' over [lo, hi].
    pub fn certified_vw(&self, lo: i64, hi: i64) -> Option<(f64, f64)> {
        let x = RInterval::new(lo as f64, hi as f64).ok()?;
        let d2 = self.second_derivative(x).abs();
        if d2.lo() <= 0.0 {
            return None;
        }
        let w = (RInterval::ONE / RInterval::point(d2.lo())).hi();
        let v = (RInterval::ONE / RInterval::point(d2.hi())).lo();
        (v < w && w > 1.0).then_some((v, w))
    }
}

/// Second-derivative bound against direct sums on random certified phases.
pub fn lemma1_battery(trials: u64, seed: u64) -> BatteryReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut cases = 0;
    while cases < trials {
        let q = QuadraticPhase::random(&mut rng);
        let offset = rng.gen_range(0..10_000i64);
        let len = rng.gen_range(1..=1500u64);
        let Some((v, w)) = q.certified_vw(offset + 1, offset + len as i64) else { continue };
        cases += 1;
        let f = q.phase();
        let r = SumRange::new(offset, len).expect("len >= 1");
        let sum = direct_sum(&f, &r).cabs();
        let bound = lemma1_bound(len, v, w).expect("certified");
        if !(bound.hi() >= sum.lo() && bound.mid() >= sum.mid()) {
            failures.push(format!("{q:?} N={offset} L={len}: bound {bound:?} < |sum| {sum:?}"));
        }
    }
    BatteryReport { name: "second-derivative test", cases, failures }
}

/// Weyl-differencing bound against direct sums for every L <= max_len and M <= L with random phases.
pub fn lemma2_battery(max_len: u64, seed: u64) -> BatteryReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut cases = 0;
    for len in 1..=max_len {
        for modulus in 1..=len {
            let a: f64 = rng.gen_range(-1.0..1.0);
            let b: f64 = rng.gen_range(-1.0..1.0);
            let tt: f64 = rng.gen_range(1.0..1e4);
            let f = PhaseFn::new(move |x: RInterval| {
                RInterval::point(a) * x.sqr() + RInterval::point(b) * x
                    - RInterval::point(tt) / TWO_PI * x.ln().expect("x >= 1")
            });
            let offset = rng.gen_range(0..200i64);
            let r = SumRange { offset, len, prefix: len, modulus, shift: 0 };
            let sum2 = direct_sum(&f, &r).norm_sqr();
            let bound = lemma2_bound(&r, |m| max_shifted_prefix(&f, offset, len, m).hi()).expect("M >= 1");
            cases += 1;
            if !(bound.hi() >= sum2.lo() && bound.mid() >= sum2.mid()) {
                failures.push(format!("L={len} M={modulus}: bound {bound:?} < |sum|^2 {sum2:?}"));
            }
        }
    }
    BatteryReport { name: "Weyl differencing", cases, failures }
}

/// Main-sum bound against the |ζ| enclosure at log-uniform t in [100, 1e5].
pub fn lemma3_battery(samples: u64, seed: u64) -> BatteryReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let t = 10f64.powf(rng.gen_range(2.0..5.0));
        let ti = RInterval::point(t);
        let rhs = lemma3_rhs(ti);
        let z = abs_zeta_half(ti);
        match (rhs, z) {
            (Ok(rhs), Ok(z)) => {
                if !(rhs.hi() >= z.value.lo()) {
                    failures.push(format!("t={t}: rhs {rhs:?} < |zeta| {:?}", z.value));
                }
            }
            (r, z) => failures.push(format!("t={t}: evaluation error {r:?} {z:?}")),
        }
    }
    BatteryReport { name: "approximate functional equation", cases: samples, failures }
}

/// Weighted-moment bounds dominate the exact sums for M = 1..=max_m.
pub fn moments_battery(max_m: u64) -> BatteryReport {
    let mut failures = Vec::new();
    // Prefix sums of m^{1/2} and m^{3/2} give both weighted sums in O(1):
    // Σ (1 - m/M) m^{1/2} = S_{1/2} - S_{3/2}/M, Σ (1 - m/M) m^{-1/2} = S_{-1/2} - S_{1/2}/M.
    let mut s_half = RInterval::ZERO;
    let mut s_three_half = RInterval::ZERO;
    let mut s_neg_half = RInterval::ZERO;
    for m in 1..=max_m {
        if m > 1 {
            let i = RInterval::from_int(m as i64 - 1);
            let r = i.sqrt().expect("positive");
            s_half += r;
            s_three_half += i * r;
            s_neg_half += RInterval::ONE / r;
        }
        let mb = RInterval::from_int(m as i64);
        let exact_a = s_half - s_three_half / mb;
        let exact_b = s_neg_half - s_half / mb;
        let (ba, bb) = weighted_moment_bounds(m);
        if !(exact_a.hi() <= ba.lo() && exact_b.hi() <= bb.lo()) {
            failures.push(format!("M={m}: ({exact_a:?}, {exact_b:?}) vs ({ba:?}, {bb:?})"));
        }
    }
    BatteryReport { name: "weighted moments", cases: max_m, failures }
}
