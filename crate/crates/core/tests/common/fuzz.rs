//! Containment fuzzing of interval operations against MPFR.
//!
//! Each trial draws an input interval, picks a point inside it (endpoints
//! included with elevated probability), evaluates the operation on that
//! point in 256-bit MPFR, and checks that the interval result contains the
//! high-precision value.

#![allow(dead_code)]

use super::mpfr::Mpfr;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zeta_bound::RInterval;

const PREC: u32 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FuzzOp {
    Add,
    Sub,
    Mul,
    Div,
    Sqrt,
    Exp,
    Ln,
    Sin,
    Cos,
    Atan,
    Sinh,
    Cosh,
    Pow,
}

impl FuzzOp {
    pub const ALL: [FuzzOp; 13] = [
        FuzzOp::Add,
        FuzzOp::Sub,
        FuzzOp::Mul,
        FuzzOp::Div,
        FuzzOp::Sqrt,
        FuzzOp::Exp,
        FuzzOp::Ln,
        FuzzOp::Sin,
        FuzzOp::Cos,
        FuzzOp::Atan,
        FuzzOp::Sinh,
        FuzzOp::Cosh,
        FuzzOp::Pow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FuzzOp::Add => "add",
            FuzzOp::Sub => "sub",
            FuzzOp::Mul => "mul",
            FuzzOp::Div => "div",
            FuzzOp::Sqrt => "sqrt",
            FuzzOp::Exp => "exp",
            FuzzOp::Ln => "ln",
            FuzzOp::Sin => "sin",
            FuzzOp::Cos => "cos",
            FuzzOp::Atan => "atan",
            FuzzOp::Sinh => "sinh",
            FuzzOp::Cosh => "cosh",
            FuzzOp::Pow => "pow",
        }
    }
}

#[derive(Debug, Clone)]
pub struct FuzzReport {
    pub op: FuzzOp,
    pub trials: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Random double with magnitude spread over `10^lo_exp ..= 10^hi_exp`.
fn scaled(rng: &mut ChaCha8Rng, lo_exp: f64, hi_exp: f64, signed: bool) -> f64 {
    let m = 10f64.powf(rng.gen_range(lo_exp..=hi_exp)) * rng.gen_range(0.1..1.0);
    if signed && rng.gen_bool(0.5) {
        -m
    } else {
        m
    }
}

/// Interval around `c`, from a point up to a relative width of about 1.
fn around(rng: &mut ChaCha8Rng, c: f64) -> RInterval {
    let kind = rng.gen_range(0..4);
    let w = match kind {
        0 => 0.0,
        1 => c.abs() * f64::EPSILON * rng.gen_range(1.0..64.0),
        2 => c.abs() * 10f64.powf(rng.gen_range(-12.0..-3.0)),
        _ => c.abs() * rng.gen_range(0.0..1.0),
    };
    // Stays on the sign of c, so positive centres give positive intervals.
    let lo = c - w * rng.gen_range(0.0..0.5);
    let hi = c + w * rng.gen_range(0.0..1.0);
    RInterval::new(lo.min(hi), lo.max(hi)).expect("finite endpoints")
}

/// A point of `x`, an endpoint with probability 1/2.
fn pick(rng: &mut ChaCha8Rng, x: RInterval) -> f64 {
    match rng.gen_range(0..4) {
        0 => x.lo(),
        1 => x.hi(),
        _ => {
            let p = x.lo() + rng.gen_range(0.0..=1.0) * (x.hi() - x.lo());
            p.clamp(x.lo(), x.hi())
        }
    }
}

struct Case {
    inputs: Vec<(RInterval, f64)>,
    result: RInterval,
    exact: Mpfr,
}

fn draw(op: FuzzOp, rng: &mut ChaCha8Rng) -> Case {
    let mp = |x: f64| Mpfr::from_f64(x, PREC);
    match op {
        FuzzOp::Add | FuzzOp::Sub | FuzzOp::Mul | FuzzOp::Div => {
            let (ca, cb) = (scaled(rng, -30.0, 30.0, true), scaled(rng, -30.0, 30.0, true));
            let a = around(rng, ca);
            let b = around(rng, cb);
            let b = if op == FuzzOp::Div && b.contains_zero() { RInterval::point(b.hi().max(1e-30)) } else { b };
            let (x, y) = (pick(rng, a), pick(rng, b));
            let (result, exact) = match op {
                FuzzOp::Add => (a + b, mp(x).add(&mp(y))),
                FuzzOp::Sub => (a - b, mp(x).sub(&mp(y))),
                FuzzOp::Mul => (a * b, mp(x).mul(&mp(y))),
                _ => (a.checked_div(b).expect("divisor excludes zero"), mp(x).div(&mp(y))),
            };
            Case { inputs: vec![(a, x), (b, y)], result, exact }
        }
        FuzzOp::Pow => {
            let (ca, cb) = (scaled(rng, -5.0, 5.0, false), rng.gen_range(-20.0..20.0));
            let a = around(rng, ca);
            let b = around(rng, cb);
            let (x, y) = (pick(rng, a), pick(rng, b));
            let result = a.pow(b).expect("positive base");
            Case { inputs: vec![(a, x), (b, y)], result, exact: mp(x).pow(&mp(y)) }
        }
        _ => {
            let c = match op {
                FuzzOp::Sqrt | FuzzOp::Ln => scaled(rng, -300.0, 300.0, false),
                FuzzOp::Exp => rng.gen_range(-700.0..700.0),
                FuzzOp::Sinh | FuzzOp::Cosh => {
                    if rng.gen_bool(0.5) {
                        rng.gen_range(-700.0..700.0)
                    } else {
                        scaled(rng, -8.0, 0.0, true)
                    }
                }
                FuzzOp::Atan => scaled(rng, -20.0, 20.0, true),
                _ => {
                    if rng.gen_bool(0.5) {
                        rng.gen_range(-10.0..10.0)
                    } else {
                        scaled(rng, -8.0, 12.0, true)
                    }
                }
            };
            let a = around(rng, c);
            let x = pick(rng, a);
            let (result, exact) = match op {
                FuzzOp::Sqrt => (a.sqrt().expect("non-negative"), mp(x).sqrt()),
                FuzzOp::Ln => (a.ln().expect("positive"), mp(x).ln()),
                FuzzOp::Exp => (a.exp(), mp(x).exp()),
                FuzzOp::Sin => (a.sin(), mp(x).sin()),
                FuzzOp::Cos => (a.cos(), mp(x).cos()),
                FuzzOp::Atan => (a.atan(), mp(x).atan()),
                FuzzOp::Sinh => (a.sinh(), mp(x).sinh()),
                _ => (a.cosh(), mp(x).cosh()),
            };
            Case { inputs: vec![(a, x)], result, exact }
        }
    }
}

/// Runs `trials` random containment checks for `op`.
pub fn fuzz_op(op: FuzzOp, trials: u64, seed: u64) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (op as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut failures = 0;
    let mut first_failure = None;
    for _ in 0..trials {
        let case = draw(op, &mut rng);
        if !case.exact.within(case.result.lo(), case.result.hi()) {
            failures += 1;
            if first_failure.is_none() {
                first_failure = Some(format!(
                    "{}: inputs {:?} gave {:?}, exact value {:e}",
                    op.name(),
                    case.inputs,
                    case.result,
                    case.exact.to_f64()
                ));
            }
        }
    }
    FuzzReport { op, trials, failures, first_failure }
}
