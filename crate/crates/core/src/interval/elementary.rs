//! Elementary functions on intervals.
//!
//! Every kernel evaluates a truncated series in interval arithmetic on a
//! reduced argument and adds an explicit bound on the truncation error:
//!
//! * `exp`: x = k ln2 + r with |r| <= 0.35, Taylor to degree 17, remainder
//!   |r|^18 / 18! * e^|r|.
//! * `ln`: x = m 2^e with m in [1/sqrt2, sqrt2), ln m = 2 atanh(u) where
//!   u = (m-1)/(m+1), |u| <= 0.172; series to u^23, remainder
//!   2|u|^25 / (25 (1-u^2)).
//! * `sin`, `cos`: x = k pi/2 + r with |r| <= pi/4 + tiny; alternating Taylor
//!   series with remainder |r|^n / n! for the first omitted degree n.
//! * `atan`: series for |x| <= 1/2 with remainder |x|^(2n+1)/(2n+1), other
//!   arguments folded through atan(x) = pi/4 + atan((x-1)/(x+1)) and
//!   atan(x) = pi/2 - atan(1/x).

use super::consts::{HALF_PI_1, HALF_PI_2, HALF_PI_3, INV_LN2, LN2, LN2_1, LN2_2, PI, TWO_OVER_PI, TWO_PI};
use super::{round, IntervalError, RInterval};
use std::sync::OnceLock;

const EXP_DEGREE: i32 = 17;
const LN_TERMS: i32 = 11;
const TRIG_DEGREE: i32 = 25;
const ATAN_TERMS: i32 = 28;

/// |k| below this keeps k * HALF_PI_1 exact.
const TRIG_EXACT_K: f64 = 134_217_728.0;

/// Enclosure of 1/n! for n < 40.
fn fact_inv(n: i32) -> RInterval {
    static TABLE: OnceLock<Vec<RInterval>> = OnceLock::new();
    let t = TABLE.get_or_init(|| {
        let mut v = vec![RInterval::ONE];
        for i in 1..40 {
            let prev = v[i - 1];
            v.push(prev / RInterval::point(i as f64));
        }
        v
    });
    t[n as usize]
}

/// e^x for a point x.
fn exp_point(x: f64) -> RInterval {
    if x == 0.0 {
        return RInterval::ONE;
    }
    if x == f64::NEG_INFINITY {
        return RInterval::ZERO;
    }
    if x > 709.79 {
        return RInterval::raw(f64::MAX, f64::INFINITY);
    }
    if x < -745.2 {
        return RInterval::raw(0.0, f64::from_bits(1));
    }
    let k = (x * INV_LN2.lo()).round();
    // x - k*LN2_1 is exact (k has at most 11 bits, LN2_1 has 32).
    let r = RInterval::point(x) - RInterval::point(k * LN2_1) - RInterval::point(k) * LN2_2;
    let rmax = r.mag();
    let mut p = RInterval::ONE;
    for i in (1..=EXP_DEGREE).rev() {
        p = RInterval::ONE + r * p / RInterval::point(i as f64);
    }
    // e^|r| < 1.5 for |r| <= 0.36.
    let tail = RInterval::point(rmax).powi(EXP_DEGREE + 1) * fact_inv(EXP_DEGREE + 1) * RInterval::point(1.5);
    let p = p + RInterval::symmetric(tail.hi());
    p.ldexp(k as i32)
}

/// ln x for a finite point x > 0.
fn ln_point(x: f64) -> RInterval {
    if x == 1.0 {
        return RInterval::ZERO;
    }
    let (mut m, mut e) = frexp(x);
    if m < std::f64::consts::FRAC_1_SQRT_2 {
        m *= 2.0;
        e -= 1;
    }
    let mi = RInterval::point(m);
    let u = (mi - RInterval::ONE) / (mi + RInterval::ONE);
    let u2 = u.sqr();
    let mut s = RInterval::ZERO;
    for j in (0..=LN_TERMS).rev() {
        s = RInterval::ONE / RInterval::point((2 * j + 1) as f64) + u2 * s;
    }
    let umax = RInterval::point(u.mag());
    let n = 2 * LN_TERMS + 3;
    let tail = umax.powi(n) / (RInterval::point(n as f64) * (RInterval::ONE - umax.sqr()));
    let atanh2 = RInterval::point(2.0) * (u * s + RInterval::symmetric(tail.hi()));
    LN2 * RInterval::point(e as f64) + atanh2
}

/// x = m 2^e with m in [0.5, 1), for finite positive x.
fn frexp(x: f64) -> (f64, i32) {
    let mut x = x;
    let mut bias = 0;
    if x < f64::MIN_POSITIVE {
        x *= 2f64.powi(54);
        bias = -54;
    }
    let bits = x.to_bits();
    let exp = ((bits >> 52) & 0x7ff) as i32;
    let m = f64::from_bits((bits & !(0x7ffu64 << 52)) | (1022u64 << 52));
    (m, exp - 1022 + bias)
}

/// Reduced argument r and quadrant k with x = k pi/2 + r.
fn reduce_half_pi(x: f64) -> (RInterval, i64) {
    let k = (x * TWO_OVER_PI.lo()).round();
    let xi = RInterval::point(x);
    let ki = RInterval::point(k);
    let r = if k.abs() < TRIG_EXACT_K {
        xi - RInterval::point(k * HALF_PI_1) - RInterval::point(k * HALF_PI_2) - ki * HALF_PI_3
    } else {
        xi - ki * (PI * RInterval::point(0.5))
    };
    (r, k.rem_euclid(4.0) as i64)
}

fn sin_series(r: RInterval) -> RInterval {
    let r2 = r.sqr();
    let mut p = RInterval::ONE;
    let top = (TRIG_DEGREE - 1) / 2;
    for i in (1..=top).rev() {
        let d = RInterval::point(((2 * i) * (2 * i + 1)) as f64);
        p = RInterval::ONE - r2 * p / d;
    }
    let n = 2 * top + 3;
    let tail = RInterval::point(r.mag()).powi(n) * fact_inv(n);
    r * p + RInterval::symmetric(tail.hi())
}

fn cos_series(r: RInterval) -> RInterval {
    let r2 = r.sqr();
    let mut p = RInterval::ONE;
    let top = TRIG_DEGREE / 2;
    for i in (1..=top).rev() {
        let d = RInterval::point(((2 * i - 1) * (2 * i)) as f64);
        p = RInterval::ONE - r2 * p / d;
    }
    let n = 2 * top + 2;
    let tail = RInterval::point(r.mag()).powi(n) * fact_inv(n);
    p + RInterval::symmetric(tail.hi())
}

const UNIT: RInterval = RInterval::raw(-1.0, 1.0);

fn clamp_unit(x: RInterval) -> RInterval {
    x.intersect(&UNIT).unwrap_or(UNIT)
}

/// (sin x, cos x) for a finite point x.
fn sin_cos_point(x: f64) -> (RInterval, RInterval) {
    if x == 0.0 {
        return (RInterval::ZERO, RInterval::ONE);
    }
    if x.abs() > 1e15 {
        return (UNIT, UNIT);
    }
    let (r, q) = reduce_half_pi(x);
    let s = sin_series(r);
    let c = cos_series(r);
    let (s, c) = match q {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    };
    (clamp_unit(s), clamp_unit(c))
}

/// Critical points c pi/2 (c integer) that may lie in x, as a range of c.
fn half_pi_multiples(x: RInterval) -> (i64, i64) {
    let q = x * TWO_OVER_PI;
    (q.lo().ceil() as i64, q.hi().floor() as i64)
}

/// Shared interval logic for sin (`shift = 0`) and cos (`shift = 1`): the
/// function has a maximum at c pi/2 when (c + shift) % 4 == 1 and a minimum
/// when (c + shift) % 4 == 3.
fn trig_interval(x: RInterval, shift: i64) -> RInterval {
    if !x.is_bounded() || x.mag() > 1e15 {
        return UNIT;
    }
    if !(x.width() < TWO_PI.lo()) {
        return UNIT;
    }
    let pick = |v: (RInterval, RInterval)| if shift == 0 { v.0 } else { v.1 };
    let a = pick(sin_cos_point(x.lo()));
    if x.is_point() {
        return a;
    }
    trig_extrema(x, a.hull(&pick(sin_cos_point(x.hi()))), shift)
}

/// Extends the endpoint hull `out` by any extremum inside `x`.
fn trig_extrema(x: RInterval, mut out: RInterval, shift: i64) -> RInterval {
    let (c0, c1) = half_pi_multiples(x);
    let mut c = c0;
    while c <= c1 {
        match (c + shift).rem_euclid(4) {
            1 => out = RInterval::raw(out.lo(), 1.0),
            3 => out = RInterval::raw(-1.0, out.hi()),
            _ => {}
        }
        c += 1;
    }
    clamp_unit(out)
}

fn atan_small(x: RInterval) -> RInterval {
    let x2 = x.sqr();
    let mut s = RInterval::ZERO;
    for j in (0..ATAN_TERMS).rev() {
        s = RInterval::ONE / RInterval::point((2 * j + 1) as f64) - x2 * s;
    }
    let n = 2 * ATAN_TERMS + 1;
    let tail = RInterval::point(x.mag()).powi(n) / RInterval::point(n as f64);
    x * s + RInterval::symmetric(tail.hi())
}

/// atan of a finite point.
fn atan_point(x: f64) -> RInterval {
    if x == 0.0 {
        return RInterval::ZERO;
    }
    if x < 0.0 {
        return -atan_point(-x);
    }
    let xi = RInterval::point(x);
    let half_pi = PI * RInterval::point(0.5);
    if x <= 0.5 {
        atan_small(xi)
    } else if x <= 2.0 {
        let y = (xi - RInterval::ONE) / (xi + RInterval::ONE);
        PI * RInterval::point(0.25) + atan_small(y)
    } else {
        half_pi - atan_small(RInterval::ONE / xi)
    }
}

impl RInterval {
    pub fn exp(&self) -> RInterval {
        let lo = exp_point(self.lo()).lo();
        let hi = if self.hi() == f64::INFINITY { f64::INFINITY } else { exp_point(self.hi()).hi() };
        RInterval::raw(lo.max(0.0), hi)
    }

    /// Natural logarithm; requires `lo > 0`.
    pub fn ln(&self) -> Result<RInterval, IntervalError> {
        if !(self.lo() > 0.0) {
            return Err(IntervalError::Domain { func: "log", lo: self.lo(), hi: self.hi() });
        }
        let lo = ln_point(self.lo()).lo();
        let hi = if self.hi() == f64::INFINITY { f64::INFINITY } else { ln_point(self.hi()).hi() };
        Ok(RInterval::raw(lo, hi))
    }

    /// Square root; requires `lo >= 0`.
    pub fn sqrt(&self) -> Result<RInterval, IntervalError> {
        if !(self.lo() >= 0.0) {
            return Err(IntervalError::Domain { func: "sqrt", lo: self.lo(), hi: self.hi() });
        }
        Ok(RInterval::raw(round::sqrt(self.lo()).0, round::sqrt(self.hi()).1))
    }

    pub fn sin(&self) -> RInterval {
        trig_interval(*self, 0)
    }

    pub fn cos(&self) -> RInterval {
        trig_interval(*self, 1)
    }

    /// (sin x, cos x) sharing the endpoint argument reductions.
    pub fn sin_cos(&self) -> (RInterval, RInterval) {
        if self.is_point() {
            return sin_cos_point(self.lo());
        }
        if !self.is_bounded() || self.mag() > 1e15 || !(self.width() < TWO_PI.lo()) {
            return (UNIT, UNIT);
        }
        let a = sin_cos_point(self.lo());
        let b = sin_cos_point(self.hi());
        (trig_extrema(*self, a.0.hull(&b.0), 0), trig_extrema(*self, a.1.hull(&b.1), 1))
    }

    pub fn atan(&self) -> RInterval {
        let half_pi = PI * RInterval::point(0.5);
        let lo = if self.lo() == f64::NEG_INFINITY { -half_pi.hi() } else { atan_point(self.lo()).lo() };
        let hi = if self.hi() == f64::INFINITY { half_pi.hi() } else { atan_point(self.hi()).hi() };
        RInterval::raw(lo, hi)
    }

    pub fn sinh(&self) -> RInterval {
        // Monotone; small arguments use the series to avoid cancellation.
        let f = |x: f64| -> RInterval {
            if x.abs() < 0.5 {
                let xi = RInterval::point(x);
                let x2 = xi.sqr();
                let mut p = RInterval::ONE;
                for i in (1..=10).rev() {
                    p = RInterval::ONE + x2 * p / RInterval::point(((2 * i) * (2 * i + 1)) as f64);
                }
                // Remainder of the odd series after x^21 is at most
                // |x|^23/23! * cosh(1/2) < |x|^23/23! * 1.2.
                let tail = RInterval::point(x.abs()).powi(23) * fact_inv(23) * RInterval::point(1.2);
                xi * p + RInterval::symmetric(tail.hi())
            } else {
                let e = RInterval::point(x).exp();
                (e - RInterval::ONE / e) * RInterval::point(0.5)
            }
        };
        RInterval::raw(f(self.lo()).lo(), f(self.hi()).hi())
    }

    pub fn cosh(&self) -> RInterval {
        let a = self.abs();
        let f = |x: f64| {
            let e = RInterval::point(x).exp();
            (e + RInterval::ONE / e) * RInterval::point(0.5)
        };
        let lo = f(a.lo()).lo().max(1.0);
        let hi = if a.hi() == f64::INFINITY { f64::INFINITY } else { f(a.hi()).hi() };
        RInterval::raw(lo, hi)
    }

    /// `x^y` for `x > 0`, or `x >= 0` with `y > 0`.
    pub fn pow(&self, y: RInterval) -> Result<RInterval, IntervalError> {
        if self.lo() > 0.0 {
            return Ok((y * self.ln()?).exp());
        }
        if self.lo() == 0.0 && y.lo() > 0.0 {
            if self.hi() == 0.0 {
                return Ok(RInterval::ZERO);
            }
            let top = RInterval::point(self.hi()).ln()?;
            let e = if top.hi() >= 0.0 { y.hi() } else { y.lo() };
            let hi = (RInterval::point(e) * top).exp().hi();
            return Ok(RInterval::raw(0.0, hi));
        }
        Err(IntervalError::Domain { func: "pow", lo: self.lo(), hi: self.hi() })
    }

    /// `x^y` for a point exponent.
    pub fn powf(&self, y: f64) -> Result<RInterval, IntervalError> {
        self.pow(RInterval::point(y))
    }
}
