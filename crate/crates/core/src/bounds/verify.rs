//! Side conditions on the parameters and the certificate for t >= t₀.

use std::fmt;

use super::{compute_chain, BoundParams, BoundsError, ConstantsChain};
use crate::interval::consts::TWO_PI;
use crate::interval::RInterval;

/// One named side condition and whether it was rigorously established.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityReport {
    pub checks: Vec<Check>,
}

impl FeasibilityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for FeasibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Checks k > 1, θ > 0, A₀ > 0, k·θ >= 1 and t₀ > A₀⁶(2π)³. The remaining
/// chain denominators (log k, √k - 1, 1 - 1/√k, (k-1)A₀t₀^{1/3}) are
/// positive exactly when these hold.
pub fn feasibility(p: &BoundParams) -> FeasibilityReport {
    let one = RInterval::ONE;
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| checks.push(Check { name, passed, detail });
    push("k > 1", p.k.lo() > 1.0, format!("k = {:?}", p.k));
    push("theta > 0", p.theta.lo() > 0.0, format!("theta = {:?}", p.theta));
    push("a0 > 0", p.a0.lo() > 0.0, format!("a0 = {:?}", p.a0));
    let kt = p.k * p.theta;
    push("k theta >= 1", kt.lo() >= 1.0, format!("k theta = {kt:?}, so every shift M is at least 2"));
    let con1 = p.a0.powi(6) * TWO_PI.powi(3);
    push("t0 > a0^6 (2 pi)^3", con1.certainly_lt(&p.t0), format!("a0^6 (2 pi)^3 = {con1:?}, t0 = {:?}", p.t0));
    let denoms_ok = p.k.lo() > 1.0 && p.a0.lo() > 0.0 && p.t0.lo() > one.hi();
    push("chain denominators positive", denoms_ok, "log k, sqrt(k) - 1, (k - 1) a0 t0^(1/3)".to_string());
    FeasibilityReport { checks }
}

/// Certificate for sup_{t >= t₀} bound(t) / (t^{1/6} log t) <= target.
#[derive(Debug, Clone, PartialEq)]
pub struct LargeTReport {
    pub params: BoundParams,
    pub feasibility: FeasibilityReport,
    pub chain: ConstantsChain,
    /// Upper contributions of D₁, D₂/log t, D₃/(t^{1/12} log t),
    /// D₄/t^{1/6} and D₅/(t^{1/6} log t) on t >= t₀.
    pub terms: [RInterval; 5],
    pub sup: RInterval,
    pub target: RInterval,
}

impl LargeTReport {
    pub fn passed(&self) -> bool {
        self.feasibility.passed() && self.sup.hi() <= self.target.lo()
    }
}

/// Upper contributions of the five ratio terms on t >= t₀. Each non-constant
/// term has the form D·g(t) with g positive and decreasing on t > 1, so it is
/// at most max(D, 0)·g(t₀).
pub fn ratio_terms(chain: &ConstantsChain, t0: RInterval) -> Result<[RInterval; 5], BoundsError> {
    if !(t0.lo() > 1.0) {
        return Err(BoundsError::InvalidParams(format!("ratio terms need t0 > 1, got {t0:?}")));
    }
    let ln_t = t0.ln()?;
    let sixth = t0.pow(RInterval::ratio(1, 6))?;
    let twelfth = sixth.sqrt()?;
    let one = RInterval::ONE;
    let g = [one / ln_t, one / (twelfth * ln_t), one / sixth, one / (sixth * ln_t)];
    let mut terms = [chain.d[0]; 5];
    for i in 1..5 {
        terms[i] = chain.d[i].max(&RInterval::ZERO) * g[i - 1];
    }
    Ok(terms)
}

pub fn verify_large_t(p: &BoundParams, target: RInterval) -> Result<LargeTReport, BoundsError> {
    let feas = feasibility(p);
    if !feas.passed() {
        let names: Vec<_> = feas.failures().map(|c| c.name).collect();
        return Err(BoundsError::Infeasible(names.join(", ")));
    }
    let chain = compute_chain(p)?;
    let terms = ratio_terms(&chain, p.t0)?;
    let sup = terms.iter().copied().sum();
    Ok(LargeTReport { params: *p, feasibility: feas, chain, terms, sup, target })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::theorem_bound_at;

    #[test]
    fn standard_parameters_are_feasible() {
        let r = feasibility(&BoundParams::standard());
        assert!(r.passed(), "{r}");
        let con1 = r.checks.iter().find(|c| c.name.starts_with("t0")).unwrap();
        assert!(con1.detail.contains("3.633"), "{}", con1.detail);
    }

    #[test]
    fn infeasible_cases() {
        let small_t0 = BoundParams::standard().with_t0(RInterval::point(1e5));
        let r = feasibility(&small_t0);
        assert_eq!(r.failures().map(|c| c.name).collect::<Vec<_>>(), vec!["t0 > a0^6 (2 pi)^3"]);
        let k1 = BoundParams::from_points(1.0, 7.5, 3.37, 5.867e9);
        assert!(feasibility(&k1).failures().any(|c| c.name == "k > 1"));
        let small_theta = BoundParams::from_points(1.16, 0.5, 3.37, 5.867e9);
        assert!(feasibility(&small_theta).failures().any(|c| c.name == "k theta >= 1"));
        assert!(verify_large_t(&small_t0, RInterval::point(0.732)).is_err());
    }

    #[test]
    fn standard_certificate() {
        let r = verify_large_t(&BoundParams::standard(), RInterval::point(0.732)).unwrap();
        assert!(r.passed());
        assert!((r.sup.hi() - 0.731969827576823).abs() < 1e-12, "{:?}", r.sup);
        assert_eq!(r.terms[4], RInterval::ZERO);
        let low = verify_large_t(&BoundParams::standard(), RInterval::point(0.5)).unwrap();
        assert!(!low.passed());
        let d1 = r.chain.d[0].lo();
        let below = verify_large_t(&BoundParams::standard(), RInterval::point(d1 - 1e-9)).unwrap();
        assert!(!below.passed());
    }

    #[test]
    fn positive_chain_certificate_is_the_ratio_at_t0() {
        let p = BoundParams::standard();
        let mut chain = compute_chain(&p).unwrap();
        chain.d[4] = RInterval::ONE;
        let terms = ratio_terms(&chain, p.t0).unwrap();
        let sup: RInterval = terms.iter().copied().sum();
        let t0 = p.t0;
        let scale = t0.pow(RInterval::ratio(1, 6)).unwrap() * t0.ln().unwrap();
        let ratio = theorem_bound_at(&chain, t0).unwrap() / scale;
        assert!(ratio.intersects(&sup), "{ratio:?} {sup:?}");
        let report = LargeTReport {
            params: p,
            feasibility: feasibility(&p),
            chain,
            terms,
            sup,
            target: RInterval::point(sup.hi()),
        };
        assert!(report.passed());
        let tight = LargeTReport { target: RInterval::point(sup.hi().next_down()), ..report };
        assert!(!tight.passed());
    }
}
