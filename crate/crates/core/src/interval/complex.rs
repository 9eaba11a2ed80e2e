//! Rectangular complex intervals.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use super::{IntervalError, RInterval};

#[derive(Clone, Copy, PartialEq, Default)]
pub struct CInterval {
    pub re: RInterval,
    pub im: RInterval,
}

impl CInterval {
    pub const ZERO: CInterval = CInterval { re: RInterval::ZERO, im: RInterval::ZERO };
    pub const ONE: CInterval = CInterval { re: RInterval::ONE, im: RInterval::ZERO };

    pub fn new(re: RInterval, im: RInterval) -> Self {
        Self { re, im }
    }

    pub fn real(re: RInterval) -> Self {
        Self { re, im: RInterval::ZERO }
    }

    pub fn point(re: f64, im: f64) -> Self {
        Self { re: RInterval::point(re), im: RInterval::point(im) }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re, im: -self.im }
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn contains(&self, re: f64, im: f64) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    pub fn scale(&self, k: RInterval) -> Self {
        Self { re: self.re * k, im: self.im * k }
    }

    /// `|z|^2`.
    pub fn norm_sqr(&self) -> RInterval {
        self.re.sqr() + self.im.sqr()
    }

    /// Enclosure of `{|w| : w in z}`; the lower end is 0 when z contains 0.
    pub fn cabs(&self) -> RInterval {
        let n = self.norm_sqr();
        // norm_sqr is non-negative by construction, so sqrt cannot fail.
        n.sqrt().expect("non-negative norm")
    }

    /// `e^(i theta)` for real theta.
    pub fn cis(theta: RInterval) -> Self {
        let (s, c) = theta.sin_cos();
        Self { re: c, im: s }
    }

    /// `e^z`.
    pub fn exp(&self) -> Self {
        Self::cis(self.im).scale(self.re.exp())
    }

    /// Principal logarithm for z with positive real part.
    pub fn ln(&self) -> Result<Self, IntervalError> {
        if !self.re.is_positive() {
            return Err(IntervalError::Domain { func: "complex log", lo: self.re.lo(), hi: self.re.hi() });
        }
        let modulus = self.norm_sqr().ln()? * RInterval::point(0.5);
        let arg = (self.im / self.re).atan();
        Ok(Self { re: modulus, im: arg })
    }

    /// `1/z`, rejecting z that may contain zero.
    pub fn recip(&self) -> Result<Self, IntervalError> {
        let d = self.norm_sqr();
        if d.contains_zero() {
            return Err(IntervalError::Unbounded);
        }
        Ok(Self { re: self.re.checked_div(d)?, im: (-self.im).checked_div(d)? })
    }

    pub fn checked_div(&self, b: CInterval) -> Result<Self, IntervalError> {
        Ok(*self * b.recip()?)
    }

    pub fn hull(&self, other: &CInterval) -> Self {
        Self { re: self.re.hull(&other.re), im: self.im.hull(&other.im) }
    }
}

impl fmt::Debug for CInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + i{:?}", self.re, self.im)
    }
}

impl Add for CInterval {
    type Output = CInterval;
    fn add(self, b: CInterval) -> CInterval {
        CInterval { re: self.re + b.re, im: self.im + b.im }
    }
}

impl AddAssign for CInterval {
    fn add_assign(&mut self, b: CInterval) {
        *self = *self + b;
    }
}

impl Sub for CInterval {
    type Output = CInterval;
    fn sub(self, b: CInterval) -> CInterval {
        CInterval { re: self.re - b.re, im: self.im - b.im }
    }
}

impl Neg for CInterval {
    type Output = CInterval;
    fn neg(self) -> CInterval {
        CInterval { re: -self.re, im: -self.im }
    }
}

impl Mul for CInterval {
    type Output = CInterval;
    fn mul(self, b: CInterval) -> CInterval {
        CInterval { re: self.re * b.re - self.im * b.im, im: self.re * b.im + self.im * b.re }
    }
}

impl Mul<RInterval> for CInterval {
    type Output = CInterval;
    fn mul(self, k: RInterval) -> CInterval {
        self.scale(k)
    }
}
