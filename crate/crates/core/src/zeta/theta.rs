//! The Riemann–Siegel theta function θ(t) = Im log Γ(1/4 + it/2) - (t/2) log π.
//!
//! log Γ(z) is expanded by Stirling's series with four Bernoulli terms. For
//! Re z > 0 the remainder after m terms satisfies
//!
//!   |R_m(z)| <= |B_{2m+2}| / ((2m+2)(2m+1) |z|^{2m+1}) · sec^{2m+2}(arg(z)/2),
//!
//! and sec^{2m+2}(arg(z)/2) <= 2^{m+1} because |arg z| < π/2.

use super::bernoulli::{abs_bernoulli, scaled_bernoulli};
use super::ZetaError;
use crate::interval::consts::PI;
use crate::interval::{CInterval, RInterval};

const TERMS: usize = 4;

/// Enclosure of θ(t) for t >= 1.
pub fn theta(t: RInterval) -> Result<RInterval, ZetaError> {
    if !(t.lo() >= 1.0) || !t.is_bounded() {
        return Err(ZetaError::Domain(format!("theta needs t >= 1, got {t:?}")));
    }
    let half = RInterval::point(0.5);
    let half_t = t * half;
    let z = CInterval::new(RInterval::point(0.25), half_t);
    let abs2 = z.norm_sqr();
    let ln_abs = abs2.ln()? * half;
    let arg = PI * half - (RInterval::ONE / (RInterval::point(2.0) * t)).atan();
    let ln_pi = PI.ln()?;

    // Im[(z - 1/2) log z - z] - (t/2) log π
    let mut th = half_t * (ln_abs - ln_pi - RInterval::ONE) - RInterval::point(0.25) * arg;

    // Σ B_{2k} / (2k(2k-1)) · Im z^{1-2k}
    let w = z.recip()?;
    let w2 = w * w;
    let mut wp = w;
    for k in 1..=TERMS {
        let two_k = 2 * k as i64;
        // B_{2k}/(2k(2k-1)) = (B_{2k}/(2k)!) · (2k-2)!
        let mut fact = RInterval::ONE;
        for i in 2..=(two_k - 2) {
            fact *= RInterval::from_int(i);
        }
        let coef = scaled_bernoulli(k) * fact;
        th += coef * wp.im;
        wp = wp * w2;
    }

    let m = TERMS as i64;
    let abs_z = abs2.sqrt()?;
    let rem = abs_bernoulli(TERMS + 1) * RInterval::point(2.0).powi(m as i32 + 1)
        / (RInterval::from_int((2 * m + 2) * (2 * m + 1)) * abs_z.powi(2 * m as i32 + 1));
    Ok(th + RInterval::symmetric(rem.hi()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_reference_values() {
        // θ(t) values from a 30-digit reference evaluation.
        let cases = [
            (200.0, 245.651_435_098_988_97),
            (300.0, 429.493_181_599_819_1),
            (1000.0, 2_034.546_428_038_031_5),
            (5000.0, 14_197.897_617_602_197),
        ];
        for (t, want) in cases {
            let th = theta(RInterval::point(t)).unwrap();
            assert!(th.inflate(1e-16 * want).contains(want), "{t}: {th:?} vs {want}");
            assert!(th.width() < 1e-11 * want, "{t}: {th:?}");
        }
    }

    #[test]
    fn rejects_small_t() {
        assert!(theta(RInterval::point(0.5)).is_err());
    }
}
