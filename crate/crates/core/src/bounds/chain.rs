//! The constant chain Y₀ → A₁..A₈ → B₁..B₄ → C₁..C₅ → D₁..D₅ behind
//! |ζ(1/2+it)| <= D₁ t^{1/6} log t + D₂ t^{1/6} + D₃ t^{1/12} + D₄ log t + D₅.

use super::{BoundParams, BoundsError};
use crate::interval::consts::{PI, TWO_PI};
use crate::interval::RInterval;

/// Rigorous enclosures of every constant in the chain. C₃, C₅ and D₅ are
/// signed; nothing is clamped here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantsChain {
    pub y0: RInterval,
    pub a: [RInterval; 8],
    pub b: [RInterval; 4],
    pub c: [RInterval; 5],
    pub d: [RInterval; 5],
}

fn iv(n: i64) -> RInterval {
    RInterval::from_int(n)
}

fn sqrt(x: RInterval) -> Result<RInterval, BoundsError> {
    Ok(x.sqrt()?)
}

/// Computes the chain. Only parameters for which the formulas are undefined
/// (k <= 1, θ <= 0, A₀ <= 0, t₀ <= 1) are rejected; side conditions such as
/// t₀ > A₀⁶(2π)³ are the business of [`super::feasibility`].
pub fn compute_chain(p: &BoundParams) -> Result<ConstantsChain, BoundsError> {
    let BoundParams { k, theta, a0, t0 } = *p;
    if !(k.lo() > 1.0 && theta.lo() > 0.0 && a0.lo() > 0.0 && t0.lo() > 1.0) || !t0.is_bounded() {
        return Err(BoundsError::InvalidParams(format!("chain undefined for {p}")));
    }
    let one = RInterval::ONE;
    let two = iv(2);
    let sqrt2 = sqrt(two)?;
    let ln_k = k.ln()?;
    let sqrt_k = sqrt(k)?;
    let sqrt_a0 = sqrt(a0)?;
    let sqrt_theta = sqrt(theta)?;
    let km1 = k - one;
    let c = t0.pow(RInterval::ratio(1, 3))?;

    let y0 = one + theta / (a0 * c);
    let a1 = two * sqrt2 * km1 * k.sqr() * y0 / (PI * sqrt_a0);
    let a2 = two * km1 * k.sqr() / (PI * a0.sqr());
    let a3 = two * sqrt2 * a0 * sqrt_a0 * y0;
    let inv_block = one / (km1 * a0 * c);
    let shift = theta * k / (km1 * a0 * c);
    let a4 = km1.sqr() * a0.sqr() / (k.sqr() * theta) * (one + inv_block) * (one + shift);
    let a5 = two * km1 * a0 / k * (one + inv_block + shift);
    let k_theta = one + one / (k * theta);
    let a6 = RInterval::ratio(4, 15) * a1 * sqrt_theta * sqrt(k_theta)?;
    let a7 = a2 * theta / iv(6) * k_theta;
    let a8 = iv(4) * a3 / (iv(3) * sqrt_theta);

    let b1 = a4 + a5 * a6;
    let b2 = a5 * a7;
    let b3 = RInterval::ratio(3, 2) * a5;
    let b4 = a5 * a8;

    let (sb1, sb2, sb3, sb4) = (sqrt(b1)?, sqrt(b2)?, sqrt(b3)?, sqrt(b4)?);
    let l = (a0 * sqrt(TWO_PI)?).ln()?;
    let fourth_root_2pi = TWO_PI.powf(0.25)?;
    let geo = one - one / sqrt_k;
    let c1 = sb1 / (iv(6) * ln_k);
    let c2 = sb1 * (one - l / ln_k) + sb2 / sqrt_k / geo;
    let c3 = sb4 * k / (sqrt_a0 * fourth_root_2pi * (sqrt_k - one)) - sb2 * sqrt_a0 * fourth_root_2pi / (k * geo);
    let c4 = sb3 / (iv(6) * ln_k);
    let c5 = sb3 * (one - l / ln_k) - sb4 * sqrt_k / (sqrt_k - one);

    let f = sqrt(k / a0)?;
    let d1 = two * c1 * f;
    let d2 = two * (two * sqrt_a0 + c2 * f);
    let d3 = two * c3 * f;
    let d4 = two * c4 * f;
    let d5 = two
        * (c5 * f - one + RInterval::ratio(77, 100) / t0.powf(0.25)? + RInterval::ratio(162, 100) / t0.powf(0.75)?);

    Ok(ConstantsChain {
        y0,
        a: [a1, a2, a3, a4, a5, a6, a7, a8],
        b: [b1, b2, b3, b4],
        c: [c1, c2, c3, c4, c5],
        d: [d1, d2, d3, d4, d5],
    })
}

/// D₁ t^{1/6} log t + D₂ t^{1/6} + D₃ t^{1/12} + D₄ log t + D₅ for t >= 2.
pub fn theorem_bound_at(c: &ConstantsChain, t: RInterval) -> Result<RInterval, BoundsError> {
    if !(t.lo() >= 2.0) || !t.is_bounded() {
        return Err(BoundsError::InvalidParams(format!("theorem bound needs t >= 2, got {t:?}")));
    }
    let sixth = t.pow(RInterval::ratio(1, 6))?;
    let twelfth = sqrt(sixth)?;
    let ln_t = t.ln()?;
    let [d1, d2, d3, d4, d5] = c.d;
    Ok(d1 * sixth * ln_t + d2 * sixth + d3 * twelfth + d4 * ln_t + d5)
}
