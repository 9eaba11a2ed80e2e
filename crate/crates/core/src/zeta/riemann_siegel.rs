//! Riemann–Siegel evaluation of Z(t) for t >= 200.
//!
//! Z(t) = 2 Σ_{n<=N} n^{-1/2} cos(θ(t) - t log n)
//!        + (-1)^{N-1} a^{-1/2} Σ_{k=0}^{K} C_k(p) a^{-k} + R_K(t),
//!
//! where a = (t/2π)^{1/2}, N = ⌊a⌋ and p = a - N.

use super::psi::corrections;
use super::theta::theta;
use super::{tables, ZetaError};
use crate::interval::consts::TWO_PI;
use crate::interval::RInterval;

/// Remainder constants d_K with |R_K(t)| <= d_K t^{-(2K+3)/4} for t >= 200,
/// K = 0..4.
///
/// Source: W. Gabcke, "Neue Herleitung und explizite Restabschätzung der
/// Riemann-Siegel-Formel", Dissertation, Göttingen 1979.
pub const GABCKE: [f64; 5] = [0.127, 0.053, 0.011, 0.031, 0.017];

/// Lower limit of the remainder bounds.
pub const RS_MIN_T: f64 = 200.0;

/// Number of correction terms: C_0 .. C_terms are used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RSParams {
    pub terms: usize,
}

impl RSParams {
    pub fn new(terms: usize) -> Result<Self, ZetaError> {
        if terms > 4 {
            return Err(ZetaError::Parameter(format!("Riemann-Siegel terms must be in 0..=4, got {terms}")));
        }
        Ok(Self { terms })
    }
}

impl Default for RSParams {
    fn default() -> Self {
        Self { terms: 4 }
    }
}

/// Main-sum length ⌊√(t/2π)⌋ if it is constant on `t`.
pub fn main_sum_length(t: RInterval) -> Result<u64, ZetaError> {
    let a = (t / TWO_PI).sqrt()?;
    let lo = a.lo().floor();
    let hi = a.hi().floor();
    if lo != hi {
        return Err(ZetaError::FloorChange { lo: lo as u64, hi: hi as u64 });
    }
    Ok(lo as u64)
}

/// Enclosure of Z(t) for every t in the interval.
pub fn rs_z(t: RInterval, p: RSParams) -> Result<RInterval, ZetaError> {
    let p = RSParams::new(p.terms)?;
    if !(t.lo() >= RS_MIN_T) || !t.is_bounded() {
        return Err(ZetaError::Domain(format!("Riemann-Siegel needs t >= {RS_MIN_T}, got {t:?}")));
    }
    let n = main_sum_length(t)?;
    let a = (t / TWO_PI).sqrt()?;
    let th = theta(t)?;

    let mut main = RInterval::ZERO;
    for k in 1..=n {
        main += tables::inv_sqrt(k) * (th - t * tables::ln(k)).cos();
    }
    main *= RInterval::point(2.0);

    let frac = a - RInterval::from_int(n as i64);
    let c = corrections(frac, p.terms)?;
    let a_inv = RInterval::ONE / a;
    let mut corr = RInterval::ZERO;
    let mut pw = RInterval::ONE;
    for ck in &c {
        corr += *ck * pw;
        pw *= a_inv;
    }
    corr *= a_inv.sqrt()?;
    if n % 2 == 0 {
        corr = -corr;
    }

    let exponent = -((2 * p.terms + 3) as f64) / 4.0;
    let rem = RInterval::point(GABCKE[p.terms]) * RInterval::point(t.lo()).powf(exponent)?;
    Ok(main + corr + RInterval::symmetric(rem.hi()))
}

/// Enclosure of |ζ(1/2 + it)| = |Z(t)|.
pub fn rs_abs_zeta(t: RInterval, p: RSParams) -> Result<RInterval, ZetaError> {
    Ok(rs_z(t, p)?.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        // Z(t) from a 30-digit reference evaluation.
        let cases = [
            (200.0, 5.589_783_623_150_109),
            (300.0, -0.772_987_012_992_304_2),
            (1000.0, 0.997_794_637_521_586_6),
            (5000.0, -0.804_257_236_352_939_9),
        ];
        for (t, want) in cases {
            let z = rs_z(RInterval::point(t), RSParams::default()).unwrap();
            assert!(z.contains(want), "{t}: {z:?} vs {want}");
            assert!(z.width() < 1e-7, "{t}: {z:?}");
        }
    }

    #[test]
    fn fewer_terms_still_contain() {
        for terms in 0..=4 {
            let z = rs_z(RInterval::point(300.0), RSParams::new(terms).unwrap()).unwrap();
            assert!(z.contains(-0.772_987_012_992_304_2), "{terms}: {z:?}");
        }
        assert!(RSParams::new(5).is_err());
    }

    #[test]
    fn floor_change_is_rejected() {
        let t = RInterval::new(1608.0, 1609.0).unwrap();
        assert!(matches!(rs_abs_zeta(t, RSParams::default()), Err(ZetaError::FloorChange { lo: 15, hi: 16 })));
    }

    #[test]
    fn below_validity_range_is_rejected() {
        assert!(matches!(rs_abs_zeta(RInterval::point(150.0), RSParams::default()), Err(ZetaError::Domain(_))));
    }

    #[test]
    fn interval_inputs_widen() {
        let point = rs_abs_zeta(RInterval::point(1000.0), RSParams::default()).unwrap();
        let wide = rs_abs_zeta(RInterval::new(1000.0, 1000.0005).unwrap(), RSParams::default()).unwrap();
        assert!(wide.width() > point.width());
        assert!(point.subset_of(&wide));
    }
}
