#![allow(dead_code)]

pub mod fuzz;
pub mod mpfr;
pub mod oracle;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zeta_bound::zeta::{auto_params, em_zeta, rs_abs_zeta, RSParams, ZetaConfig};
use zeta_bound::{CInterval, RInterval};

/// Outcome of comparing the two evaluation methods at random points.
#[derive(Debug, Default)]
pub struct AgreementReport {
    pub points: usize,
    pub disjoint: Vec<f64>,
    pub max_rs_width: f64,
}

/// Evaluates |ζ(1/2+it)| by Euler–Maclaurin and by Riemann–Siegel at
/// `points` random t in [lo, hi] and records every t where the two
/// enclosures fail to intersect.
pub fn em_rs_agreement(points: usize, lo: f64, hi: f64, seed: u64) -> AgreementReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = ZetaConfig::default();
    let mut report = AgreementReport { points, ..Default::default() };
    for _ in 0..points {
        let t = RInterval::point(rng.gen_range(lo..=hi));
        let s = CInterval::new(RInterval::point(0.5), t);
        let em = em_zeta(s, auto_params(&s, cfg.tolerance(), cfg.em_max_terms)).expect("EM evaluates").cabs();
        let rs = rs_abs_zeta(t, RSParams::default()).expect("RS evaluates at a point");
        report.max_rs_width = report.max_rs_width.max(rs.width());
        if !em.intersects(&rs) {
            report.disjoint.push(t.lo());
        }
    }
    report
}
