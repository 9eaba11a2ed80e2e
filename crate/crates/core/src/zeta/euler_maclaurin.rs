//! Euler–Maclaurin evaluation of ζ(s) for 0 < Re s <= 2.
//!
//! ζ(s) = Σ_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//!        + Σ_{k=1}^{K} B_{2k}/(2k)! · s(s+1)…(s+2k-2) · N^{-s-2k+1} + R,
//!
//! with |R| <= |s+2K+1| / (Re s + 2K + 1) · |T_{K+1}|, where T_{K+1} is the
//! first omitted correction term. The bound holds for Re s > -(2K+1).

use super::bernoulli::{scaled_bernoulli, MAX_INDEX};
use super::{tables, ZetaError};
use crate::interval::{CInterval, RInterval};

/// Truncation parameters: `n` terms in the main sum (the sum runs to n-1)
/// and `k` Bernoulli corrections.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EMParams {
    pub n: u64,
    pub k: usize,
}

impl EMParams {
    pub fn new(n: u64, k: usize) -> Result<Self, ZetaError> {
        if n < 2 || !(1..MAX_INDEX).contains(&k) {
            return Err(ZetaError::Parameter(format!("need N >= 2 and 1 <= K < {MAX_INDEX}, got N = {n}, K = {k}")));
        }
        Ok(Self { n, k })
    }
}

/// n^{-s} for an integer n >= 1.
pub(crate) fn int_pow_neg(n: u64, s: &CInterval) -> CInterval {
    if n == 1 {
        return CInterval::ONE;
    }
    let ln = tables::ln(n);
    let mag = if s.re == RInterval::point(0.5) { tables::inv_sqrt(n) } else { (-(s.re * ln)).exp() };
    CInterval::cis(-(s.im * ln)).scale(mag)
}

fn check_domain(s: &CInterval) -> Result<(), ZetaError> {
    if !(s.re.lo() > 0.0 && s.re.hi() <= 2.0) {
        return Err(ZetaError::Domain(format!("Re(s) = {:?} is not inside (0, 2]", s.re)));
    }
    if s.re.contains(1.0) && s.im.contains_zero() {
        return Err(ZetaError::Pole);
    }
    Ok(())
}

/// Upper bound on the remainder modulus for the given truncation.
pub fn remainder_bound(s: &CInterval, p: EMParams) -> f64 {
    let k = p.k;
    let n = RInterval::from_int(p.n as i64);
    // |s (s+1) ... (s+2K)|
    let mut prod = s.cabs();
    for j in 1..=(2 * k) {
        prod *= (*s + CInterval::real(RInterval::from_int(j as i64))).cabs();
    }
    let npow = (-(s.re + RInterval::from_int(2 * k as i64 + 1)) * n.ln().expect("N >= 2")).exp();
    let term = scaled_bernoulli(k + 1).abs() * prod * npow;
    let shift = RInterval::from_int(2 * k as i64 + 1);
    let factor = (*s + CInterval::real(shift)).cabs() / (s.re + shift);
    (factor * term).hi()
}

/// Enclosure of ζ(s) valid for every s in the box `s`.
pub fn em_zeta(s: CInterval, p: EMParams) -> Result<CInterval, ZetaError> {
    check_domain(&s)?;
    let p = EMParams::new(p.n, p.k)?;
    let mut sum = CInterval::ZERO;
    for n in 1..p.n {
        sum += int_pow_neg(n, &s);
    }
    let big_n = RInterval::from_int(p.n as i64);
    let n_pow = int_pow_neg(p.n, &s);
    let s_minus_1 = s - CInterval::ONE;
    sum += n_pow.scale(big_n).checked_div(s_minus_1).map_err(|_| ZetaError::Pole)?;
    sum += n_pow.scale(RInterval::point(0.5));

    let inv_n2 = RInterval::ONE / big_n.sqr();
    let mut rising = s;
    let mut pow = n_pow.scale(RInterval::ONE / big_n);
    for k in 1..=p.k {
        sum += (rising * pow).scale(scaled_bernoulli(k));
        let a = s + CInterval::real(RInterval::from_int(2 * k as i64 - 1));
        let b = s + CInterval::real(RInterval::from_int(2 * k as i64));
        rising = rising * a * b;
        pow = pow.scale(inv_n2);
    }
    let r = remainder_bound(&s, p);
    if !r.is_finite() {
        return Err(ZetaError::Parameter(format!("remainder bound is unbounded for N = {}, K = {}", p.n, p.k)));
    }
    let err = RInterval::symmetric(r);
    Ok(CInterval::new(sum.re + err, sum.im + err))
}

/// Default truncation: N = max(10, ceil(3|t|/2)) and K = 10, then K is
/// doubled up to 40 and N doubled up to `n_cap` until the remainder bound is
/// below `tol`.
pub fn auto_params(s: &CInterval, tol: f64, n_cap: u64) -> EMParams {
    let t = s.im.mag();
    let n0 = ((1.5 * t).ceil() as u64).max(10).min(n_cap.max(10));
    let mut p = EMParams { n: n0, k: 10 };
    loop {
        if remainder_bound(s, p) <= tol {
            return p;
        }
        if p.k < 40 {
            p.k *= 2;
        } else if p.n < n_cap {
            p.n = (p.n * 2).min(n_cap);
        } else {
            return p;
        }
    }
}
