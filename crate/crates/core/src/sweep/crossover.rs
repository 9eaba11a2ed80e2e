//! The classical t^{1/4} bound, crossings between bound curves, and the
//! smallest height from which A t^{1/6} log t exceeds |ζ(1/2)|.

use super::SweepError;
use crate::interval::consts::TWO_PI;
use crate::interval::{CInterval, RInterval};
use crate::zeta::{em_zeta, EMParams, ZetaError};

fn check_t(t: RInterval, min: f64) -> Result<(), SweepError> {
    if !(t.lo() >= min) || !t.is_bounded() {
        return Err(SweepError::Domain(format!("need t >= {min}, got {t:?}")));
    }
    Ok(())
}

/// 4 (2π)^{-1/4} t^{1/4}, valid for t >= 0.2.
pub fn lehman_bound(t: RInterval) -> Result<RInterval, SweepError> {
    check_t(t, 0.2)?;
    let quarter = (t / TWO_PI).sqrt().and_then(|r| r.sqrt()).map_err(ZetaError::from)?;
    Ok(RInterval::point(4.0) * quarter)
}

/// A t^{1/6} log t for t >= 1.
pub fn power_log_bound(constant: RInterval, t: RInterval) -> Result<RInterval, SweepError> {
    check_t(t, 1.0)?;
    let sixth = t.pow(RInterval::ratio(1, 6)).map_err(ZetaError::from)?;
    Ok(constant * sixth * t.ln().map_err(ZetaError::from)?)
}

fn sign(x: RInterval) -> Option<i8> {
    if x.lo() > 0.0 {
        Some(1)
    } else if x.hi() < 0.0 {
        Some(-1)
    } else {
        None
    }
}

/// Narrows [lo, hi], on whose ends `d` has certified opposite signs, by
/// bisection until the width is at most `tol` or the sign becomes
/// undecidable near the root. The result still has certified opposite
/// signs at its ends.
pub fn bracket_root(
    d: impl Fn(f64) -> Result<RInterval, SweepError>,
    bracket: RInterval,
    tol: f64,
) -> Result<RInterval, SweepError> {
    let (mut lo, mut hi) = (bracket.lo(), bracket.hi());
    let s_lo = sign(d(lo)?);
    let s_hi = sign(d(hi)?);
    let (Some(s_lo), Some(s_hi)) = (s_lo, s_hi) else { return Err(SweepError::NoSignChange(bracket)) };
    if s_lo == s_hi {
        return Err(SweepError::NoSignChange(bracket));
    }
    while hi - lo > tol {
        let m = lo + (hi - lo) / 2.0;
        if !(lo < m && m < hi) {
            break;
        }
        match sign(d(m)?) {
            Some(s) if s == s_lo => lo = m,
            Some(_) => hi = m,
            None => {
                let (q1, q3) = (lo + (m - lo) / 2.0, m + (hi - m) / 2.0);
                let mut moved = false;
                if sign(d(q1)?) == Some(s_lo) {
                    lo = q1;
                    moved = true;
                }
                if sign(d(q3)?) == Some(s_hi) {
                    hi = q3;
                    moved = true;
                }
                if !moved {
                    break;
                }
            }
        }
    }
    Ok(RInterval::new(lo, hi).expect("ordered"))
}

/// Encloses a crossing of two bound curves inside `bracket` to width
/// at most `tol`.
pub fn crossover(
    f_lo: impl Fn(RInterval) -> Result<RInterval, SweepError>,
    f_hi: impl Fn(RInterval) -> Result<RInterval, SweepError>,
    bracket: RInterval,
    tol: f64,
) -> Result<RInterval, SweepError> {
    let d = |t: f64| {
        let t = RInterval::point(t);
        Ok(f_hi(t)? - f_lo(t)?)
    };
    bracket_root(d, bracket, tol)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinQ {
    pub constant: RInterval,
    /// Enclosure of |ζ(1/2)|.
    pub zeta_half: RInterval,
    /// Enclosure of the Q > 1 with A Q^{1/6} log Q = |ζ(1/2)|; the
    /// inequality holds strictly above it.
    pub q: RInterval,
}

fn zeta_half() -> Result<RInterval, SweepError> {
    let s = CInterval::point(0.5, 0.0);
    Ok(em_zeta(s, EMParams::new(20, 20)?)?.cabs())
}

/// Least Q with |ζ(1/2)| < A Q^{1/6} log Q.
pub fn min_q(constant: RInterval) -> Result<MinQ, SweepError> {
    if !(constant.lo() > 0.0) || !constant.is_bounded() {
        return Err(SweepError::Domain(format!("constant must be positive, got {constant:?}")));
    }
    let z = zeta_half()?;
    let d = |q: f64| Ok(power_log_bound(constant, RInterval::point(q))? - z);
    let mut hi = 2.0;
    while sign(d(hi)?) != Some(1) {
        hi *= 2.0;
        if hi > 1e300 {
            return Err(SweepError::NoSignChange(RInterval::new(1.0, hi).expect("ordered")));
        }
    }
    let q = bracket_root(d, RInterval::new(1.0, hi).expect("ordered"), 0.0)?;
    Ok(MinQ { constant, zeta_half: z, q })
}

/// Whether |ζ(1/2)| < A Q^{1/6} log Q is certified at `q`.
pub fn q_certified(constant: RInterval, q: RInterval) -> Result<bool, SweepError> {
    Ok(zeta_half()?.hi() < power_log_bound(constant, q)?.lo())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lehman_at_two_pi() {
        let v = lehman_bound(TWO_PI).unwrap();
        assert!(v.contains(4.0) && v.width() < 1e-14);
        assert!(lehman_bound(RInterval::point(0.1)).is_err());
    }

    #[test]
    fn identical_curves_have_no_crossing() {
        let f = |t: RInterval| lehman_bound(t);
        let r = crossover(f, f, RInterval::new(200.0, 300.0).unwrap(), 1e-3);
        assert!(matches!(r, Err(SweepError::NoSignChange(_))));
    }

    #[test]
    fn first_crossing() {
        let a = RInterval::ratio(732, 1000);
        let r =
            crossover(|t| power_log_bound(a, t), lehman_bound, RInterval::new(200.0, 300.0).unwrap(), 1e-3).unwrap();
        assert!(r.width() <= 1e-3);
        // Root of 4 (t/2π)^{1/4} = 0.732 t^{1/6} log t from a 40-digit solve.
        assert!(r.contains(226.708_839_903_589_3));
    }

    #[test]
    fn min_q_values() {
        let m = min_q(RInterval::ratio(732, 1000)).unwrap();
        assert!(m.q.contains(4.6772199969696));
        assert!(m.q.width() < 1e-12);
        assert!(q_certified(RInterval::ratio(732, 1000), crate::decimal::parse_interval("4.678").unwrap()).unwrap());
        let ten = min_q(RInterval::point(10.0)).unwrap();
        assert!(ten.q.contains(1.1532747043002712));
        // A chosen so that the crossing is exactly e.
        let e = RInterval::ONE.exp();
        let a = m.zeta_half / e.pow(RInterval::ratio(1, 6)).unwrap();
        let at_e = min_q(a).unwrap();
        assert!(at_e.q.contains(std::f64::consts::E), "{:?}", at_e.q);
    }
}
