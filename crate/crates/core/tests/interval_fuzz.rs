mod common;

use common::fuzz::{fuzz_op, FuzzOp};
use common::mpfr::Mpfr;
use zeta_bound::decimal::parse_interval;
use zeta_bound::interval::consts::PI;
use zeta_bound::RInterval;

#[test]
fn every_operation_contains_mpfr_values() {
    for op in FuzzOp::ALL {
        let r = fuzz_op(op, 20_000, 7);
        assert!(r.passed(), "{} failures, first: {:?}", r.failures, r.first_failure);
    }
}

#[test]
fn pi_constant_encloses_mpfr_pi() {
    let pi = Mpfr::pi(256);
    assert!(pi.within(PI.lo(), PI.hi()));
    assert!(PI.width() <= 2.0 * f64::EPSILON * 4.0);
}

#[test]
fn decimal_parsing_encloses_exact_value() {
    for s in ["0.1", "5.867e9", "3.37", "1.16", "7.5", "226.7088", "1e-300", "0.732", "123456789.123456789"] {
        let iv = parse_interval(s).unwrap();
        let exact = Mpfr::from_str(s, 512);
        assert!(exact.within(iv.lo(), iv.hi()), "{s}: {iv:?}");
        assert!(iv.width() <= iv.mag() * f64::EPSILON, "{s}: {iv:?} too wide");
    }
}

#[test]
fn transcendental_widths_stay_tight_on_points() {
    for x in [0.3, 1.0, 2.5, 17.0, 1234.5] {
        let p = RInterval::point(x);
        for r in [p.exp(), p.ln().unwrap(), p.sin(), p.cos(), p.atan(), p.sqrt().unwrap()] {
            assert!(r.width() <= 8.0 * f64::EPSILON * r.mag().max(1e-300), "{x}: {r:?}");
        }
    }
}
