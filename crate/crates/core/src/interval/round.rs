//! Directed rounding for binary64 without touching the FPU control word.
//!
//! Each operation computes the round-to-nearest result and recovers the exact
//! rounding error with an error-free transformation (TwoSum, or an FMA
//! residual). The sign of that error tells which neighbour is the correctly
//! directed result. Where the transformation is not exact (overflow, or
//! results deep in the subnormal range) we step outward by one ulp instead,
//! which is always a valid enclosure.

/// Results below this magnitude may have inexact FMA residuals.
const TINY: f64 = 1.0e-290;

#[inline]
pub(crate) fn next_up(x: f64) -> f64 {
    x.next_up()
}

#[inline]
pub(crate) fn next_down(x: f64) -> f64 {
    x.next_down()
}

#[inline]
fn split_by_error(s: f64, err: f64) -> (f64, f64) {
    if err > 0.0 {
        (s, next_up(s))
    } else if err < 0.0 {
        (next_down(s), s)
    } else {
        (s, s)
    }
}

#[inline]
fn widen(s: f64) -> (f64, f64) {
    (next_down(s), next_up(s))
}

/// Rounded-down and rounded-up `a + b`.
#[inline]
pub(crate) fn add(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    if !s.is_finite() {
        return overflowed(s, a.is_infinite() || b.is_infinite());
    }
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    split_by_error(s, err)
}

#[inline]
pub(crate) fn add_down(a: f64, b: f64) -> f64 {
    add(a, b).0
}

#[inline]
pub(crate) fn add_up(a: f64, b: f64) -> f64 {
    add(a, b).1
}

#[inline]
pub(crate) fn sub_down(a: f64, b: f64) -> f64 {
    add(a, -b).0
}

#[inline]
pub(crate) fn sub_up(a: f64, b: f64) -> f64 {
    add(a, -b).1
}

/// Rounded-down and rounded-up `a * b`. Zero times anything (including an
/// infinite endpoint) is zero, as required for interval endpoint products.
#[inline]
pub(crate) fn mul(a: f64, b: f64) -> (f64, f64) {
    if a == 0.0 || b == 0.0 {
        return (0.0, 0.0);
    }
    let p = a * b;
    if !p.is_finite() {
        return overflowed(p, a.is_infinite() || b.is_infinite());
    }
    if p.abs() < TINY {
        return widen(p);
    }
    let err = a.mul_add(b, -p);
    split_by_error(p, err)
}

#[inline]
pub(crate) fn mul_down(a: f64, b: f64) -> f64 {
    mul(a, b).0
}

#[inline]
pub(crate) fn mul_up(a: f64, b: f64) -> f64 {
    mul(a, b).1
}

/// Rounded-down and rounded-up `a / b` for `b != 0`.
#[inline]
pub(crate) fn div(a: f64, b: f64) -> (f64, f64) {
    if a == 0.0 {
        return (0.0, 0.0);
    }
    if b.is_infinite() {
        if a.is_infinite() {
            // inf/inf only arises from unbounded endpoints; be maximally
            // conservative about the sign.
            return (f64::NEG_INFINITY, f64::INFINITY);
        }
        return (0.0, 0.0);
    }
    let q = a / b;
    if !q.is_finite() {
        return overflowed(q, a.is_infinite());
    }
    if q.abs() < TINY || a.abs() < TINY {
        return widen(q);
    }
    // r = a - q*b exactly; sign(a/b - q) = sign(r) * sign(b).
    let r = (-q).mul_add(b, a);
    let err = if b > 0.0 { r } else { -r };
    split_by_error(q, err)
}

#[inline]
pub(crate) fn div_down(a: f64, b: f64) -> f64 {
    div(a, b).0
}

#[inline]
pub(crate) fn div_up(a: f64, b: f64) -> f64 {
    div(a, b).1
}

/// Rounded-down and rounded-up square root of `x >= 0`.
#[inline]
pub(crate) fn sqrt(x: f64) -> (f64, f64) {
    if x == 0.0 || x.is_infinite() {
        return (x, x);
    }
    let s = x.sqrt();
    if x < TINY {
        return (next_down(s).max(0.0), next_up(s));
    }
    let r = (-s).mul_add(s, x);
    split_by_error(s, r)
}

/// Handles a non-finite round-to-nearest result. `exact_inf` is set when an
/// operand was already infinite, in which case the infinity is exact.
#[inline]
fn overflowed(s: f64, exact_inf: bool) -> (f64, f64) {
    if s.is_nan() {
        return (f64::NEG_INFINITY, f64::INFINITY);
    }
    if exact_inf {
        return (s, s);
    }
    if s > 0.0 {
        (f64::MAX, f64::INFINITY)
    } else {
        (f64::NEG_INFINITY, f64::MIN)
    }
}
