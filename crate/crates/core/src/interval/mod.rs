//! Outward-rounded real and complex interval arithmetic.
//!
//! An [`RInterval`] holds two binary64 endpoints. Every operation returns an
//! interval containing the exact image of its inputs; infinite endpoints are
//! the explicit representation of unbounded results.

mod complex;
pub mod consts;
mod elementary;
pub(crate) mod round;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

pub use complex::CInterval;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IntervalError {
    #[error("invalid interval bounds [{lo}, {hi}]")]
    InvalidBounds { lo: f64, hi: f64 },
    #[error("division by an interval containing zero: result is unbounded")]
    Unbounded,
    #[error("{func} is undefined on [{lo}, {hi}]")]
    Domain { func: &'static str, lo: f64, hi: f64 },
}

/// Closed real interval `[lo, hi]` with binary64 endpoints.
///
/// `lo` is never `+inf` and `hi` is never `-inf`; `lo <= hi` always.
#[derive(Clone, Copy, PartialEq)]
pub struct RInterval {
    lo: f64,
    hi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ElemFn {
    Exp,
    Log,
    Sqrt,
    Sin,
    Cos,
    /// Real power `x^y` with the exponent given as an interval.
    Pow(RInterval),
}

/// Applies a binary arithmetic operation. Division by an interval that
/// contains zero is reported as [`IntervalError::Unbounded`].
pub fn arith(a: RInterval, b: RInterval, op: ArithOp) -> Result<RInterval, IntervalError> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.checked_div(b),
    }
}

/// Applies an elementary function with an explicit domain check.
pub fn elem(x: RInterval, f: ElemFn) -> Result<RInterval, IntervalError> {
    match f {
        ElemFn::Exp => Ok(x.exp()),
        ElemFn::Log => x.ln(),
        ElemFn::Sqrt => x.sqrt(),
        ElemFn::Sin => Ok(x.sin()),
        ElemFn::Cos => Ok(x.cos()),
        ElemFn::Pow(y) => x.pow(y),
    }
}

impl RInterval {
    pub const ZERO: RInterval = RInterval::raw(0.0, 0.0);
    pub const ONE: RInterval = RInterval::raw(1.0, 1.0);
    pub const ENTIRE: RInterval = RInterval::raw(f64::NEG_INFINITY, f64::INFINITY);

    /// Builds `[lo, hi]`, rejecting NaN, reversed bounds and empty infinite
    /// intervals such as `[inf, inf]`.
    pub fn new(lo: f64, hi: f64) -> Result<Self, IntervalError> {
        if lo.is_nan() || hi.is_nan() || lo > hi || lo == f64::INFINITY || hi == f64::NEG_INFINITY {
            return Err(IntervalError::InvalidBounds { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub(crate) const fn raw(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    /// Degenerate interval `[x, x]`. Panics if `x` is not finite.
    pub fn point(x: f64) -> Self {
        assert!(x.is_finite(), "point interval from non-finite value {x}");
        Self { lo: x, hi: x }
    }

    /// Interval from an integer, exact when `|n| <= 2^53`.
    pub fn from_int(n: i64) -> Self {
        let x = n as f64;
        if x as i64 == n && x.abs() <= 9_007_199_254_740_992.0 {
            Self::point(x)
        } else {
            Self::raw(x.next_down(), x.next_up())
        }
    }

    /// Outward-rounded enclosure of the rational `num / den`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    /// Upper bound on the width.
    pub fn width(&self) -> f64 {
        round::sub_up(self.hi, self.lo)
    }

    /// Midpoint (rounded; not an enclosure).
    pub fn mid(&self) -> f64 {
        if self.lo == f64::NEG_INFINITY {
            if self.hi == f64::INFINITY {
                return 0.0;
            }
            return f64::MIN;
        }
        if self.hi == f64::INFINITY {
            return f64::MAX;
        }
        let m = 0.5 * self.lo + 0.5 * self.hi;
        m.clamp(self.lo, self.hi)
    }

    /// Upper bound on `max |x|`.
    pub fn mag(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    /// Lower bound on `min |x|`.
    pub fn mig(&self) -> f64 {
        if self.contains_zero() {
            0.0
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0.0)
    }

    pub fn subset_of(&self, other: &RInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersects(&self, other: &RInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersect(&self, other: &RInterval) -> Option<RInterval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Self { lo, hi })
    }

    pub fn hull(&self, other: &RInterval) -> RInterval {
        Self { lo: self.lo.min(other.lo), hi: self.hi.max(other.hi) }
    }

    /// `true` when every element is strictly below every element of `other`.
    pub fn certainly_lt(&self, other: &RInterval) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_le(&self, other: &RInterval) -> bool {
        self.hi <= other.lo
    }

    pub fn is_positive(&self) -> bool {
        self.lo > 0.0
    }

    pub fn is_negative(&self) -> bool {
        self.hi < 0.0
    }

    /// Symmetric interval `[-r, r]` for `r >= 0`.
    pub fn symmetric(r: f64) -> Self {
        debug_assert!(r >= 0.0);
        Self { lo: -r, hi: r }
    }

    /// Widens by `r` on both sides.
    pub fn inflate(&self, r: f64) -> Self {
        Self { lo: round::sub_down(self.lo, r), hi: round::add_up(self.hi, r) }
    }

    pub fn abs(&self) -> Self {
        if self.lo >= 0.0 {
            *self
        } else if self.hi <= 0.0 {
            -*self
        } else {
            Self { lo: 0.0, hi: (-self.lo).max(self.hi) }
        }
    }

    /// `x^2`, tighter than `x * x` when the interval contains zero.
    pub fn sqr(&self) -> Self {
        let a = self.abs();
        Self { lo: round::mul_down(a.lo, a.lo), hi: round::mul_up(a.hi, a.hi) }
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, n: i32) -> Self {
        if n == 0 {
            return Self::ONE;
        }
        if n < 0 {
            return Self::ONE / self.powi(-n);
        }
        if n % 2 == 0 {
            return self.powi(n / 2).sqr();
        }
        // Odd powers are monotone, so the endpoints can be treated separately.
        let lo = pow_point(self.lo, n as u32).0;
        let hi = pow_point(self.hi, n as u32).1;
        Self { lo, hi }
    }

    pub fn max(&self, other: &RInterval) -> Self {
        Self { lo: self.lo.max(other.lo), hi: self.hi.max(other.hi) }
    }

    pub fn min(&self, other: &RInterval) -> Self {
        Self { lo: self.lo.min(other.lo), hi: self.hi.min(other.hi) }
    }

    /// Reciprocal; unbounded error when the interval contains zero.
    pub fn recip(&self) -> Result<Self, IntervalError> {
        Self::ONE.checked_div(*self)
    }

    /// Division that reports a zero-containing denominator instead of
    /// returning the whole line.
    pub fn checked_div(&self, b: RInterval) -> Result<Self, IntervalError> {
        if b.contains_zero() {
            return Err(IntervalError::Unbounded);
        }
        Ok(div_nonzero(*self, b))
    }

    /// Multiplies by `2^k` (exact unless the result leaves the normal range).
    pub fn ldexp(&self, k: i32) -> Self {
        let mut r = *self;
        let mut k = k;
        while k != 0 {
            let step = k.clamp(-1000, 1000);
            let f = 2f64.powi(step);
            let scale = |x: f64, down: bool| {
                let y = x * f;
                if y.is_finite() && (y.abs() >= f64::MIN_POSITIVE || x == 0.0) {
                    y
                } else if down {
                    round::mul_down(x, f)
                } else {
                    round::mul_up(x, f)
                }
            };
            r = Self { lo: scale(r.lo, true), hi: scale(r.hi, false) };
            k -= step;
        }
        r
    }

    /// Splits into two halves sharing the midpoint.
    pub fn bisect(&self) -> (Self, Self) {
        let m = self.mid();
        (Self { lo: self.lo, hi: m }, Self { lo: m, hi: self.hi })
    }
}

fn pow_point(x: f64, n: u32) -> (f64, f64) {
    let mut acc = RInterval::ONE;
    let mut base = RInterval::raw(x, x);
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base = base * base;
        e >>= 1;
    }
    (acc.lo, acc.hi)
}

fn div_nonzero(a: RInterval, b: RInterval) -> RInterval {
    let (b_lo, b_hi) = (b.lo, b.hi);
    let cands_lo = [
        round::div_down(a.lo, b_lo),
        round::div_down(a.lo, b_hi),
        round::div_down(a.hi, b_lo),
        round::div_down(a.hi, b_hi),
    ];
    let cands_hi =
        [round::div_up(a.lo, b_lo), round::div_up(a.lo, b_hi), round::div_up(a.hi, b_lo), round::div_up(a.hi, b_hi)];
    normalize(
        cands_lo.iter().copied().fold(f64::INFINITY, f64::min),
        cands_hi.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    )
}

fn normalize(lo: f64, hi: f64) -> RInterval {
    if lo.is_nan() || hi.is_nan() {
        return RInterval::ENTIRE;
    }
    RInterval {
        lo: if lo == f64::INFINITY { f64::MAX } else { lo },
        hi: if hi == f64::NEG_INFINITY { f64::MIN } else { hi },
    }
}

impl Default for RInterval {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<f64> for RInterval {
    fn from(x: f64) -> Self {
        Self::point(x)
    }
}

impl fmt::Debug for RInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo, self.hi)
    }
}

impl fmt::Display for RInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "[{}, {}]", fmt_down(self.lo, p), fmt_up(self.hi, p)),
            None => write!(f, "[{:?}, {:?}]", self.lo, self.hi),
        }
    }
}

/// Formats `x` with `digits` significant digits, rounded toward -inf.
pub fn fmt_down(x: f64, digits: usize) -> String {
    fmt_directed(x, digits, false)
}

/// Formats `x` with `digits` significant digits, rounded toward +inf.
pub fn fmt_up(x: f64, digits: usize) -> String {
    fmt_directed(x, digits, true)
}

fn fmt_directed(x: f64, digits: usize, up: bool) -> String {
    if !x.is_finite() || x == 0.0 {
        return format!("{x}");
    }
    let digits = digits.max(1);
    let exact = crate::decimal::exact_decimal(x);
    crate::decimal::round_sci(&exact, digits, up)
}

impl Neg for RInterval {
    type Output = RInterval;
    fn neg(self) -> RInterval {
        RInterval { lo: -self.hi, hi: -self.lo }
    }
}

impl Add for RInterval {
    type Output = RInterval;
    fn add(self, b: RInterval) -> RInterval {
        normalize(round::add_down(self.lo, b.lo), round::add_up(self.hi, b.hi))
    }
}

impl Sub for RInterval {
    type Output = RInterval;
    fn sub(self, b: RInterval) -> RInterval {
        normalize(round::sub_down(self.lo, b.hi), round::sub_up(self.hi, b.lo))
    }
}

impl Mul for RInterval {
    type Output = RInterval;
    fn mul(self, b: RInterval) -> RInterval {
        let a = self;
        if a.lo >= 0.0 && b.lo >= 0.0 {
            return normalize(round::mul_down(a.lo, b.lo), round::mul_up(a.hi, b.hi));
        }
        let p = [(a.lo, b.lo), (a.lo, b.hi), (a.hi, b.lo), (a.hi, b.hi)];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (x, y) in p {
            let (l, h) = round::mul(x, y);
            lo = lo.min(l);
            hi = hi.max(h);
        }
        normalize(lo, hi)
    }
}

/// Division through the operator returns the entire line when the divisor
/// contains zero; use [`RInterval::checked_div`] to get an error instead.
impl Div for RInterval {
    type Output = RInterval;
    fn div(self, b: RInterval) -> RInterval {
        if b.contains_zero() {
            return RInterval::ENTIRE;
        }
        div_nonzero(self, b)
    }
}

macro_rules! scalar_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<f64> for RInterval {
            type Output = RInterval;
            fn $m(self, b: f64) -> RInterval {
                $tr::$m(self, RInterval::point(b))
            }
        }
        impl $tr<RInterval> for f64 {
            type Output = RInterval;
            fn $m(self, b: RInterval) -> RInterval {
                $tr::$m(RInterval::point(self), b)
            }
        }
    )*};
}
scalar_ops!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign for RInterval {
    fn add_assign(&mut self, b: RInterval) {
        *self = *self + b;
    }
}

impl SubAssign for RInterval {
    fn sub_assign(&mut self, b: RInterval) {
        *self = *self - b;
    }
}

impl MulAssign for RInterval {
    fn mul_assign(&mut self, b: RInterval) {
        *self = *self * b;
    }
}

impl std::iter::Sum for RInterval {
    fn sum<I: Iterator<Item = RInterval>>(iter: I) -> RInterval {
        iter.fold(RInterval::ZERO, |a, b| a + b)
    }
}
