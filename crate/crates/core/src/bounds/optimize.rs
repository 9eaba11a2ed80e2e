//! Grid plus pattern search over (k, θ, A₀) minimising the certified ratio.

use rayon::prelude::*;

use super::{verify_large_t, BoundParams, BoundsError, LargeTReport};
use crate::interval::RInterval;

/// Closed ranges for k, θ and A₀.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamBox {
    pub k: (f64, f64),
    pub theta: (f64, f64),
    pub a0: (f64, f64),
}

impl ParamBox {
    pub fn point(k: f64, theta: f64, a0: f64) -> Self {
        Self { k: (k, k), theta: (theta, theta), a0: (a0, a0) }
    }

    fn ranges(&self) -> [(f64, f64); 3] {
        [self.k, self.theta, self.a0]
    }

    fn validate(&self) -> Result<(), BoundsError> {
        for (lo, hi) in self.ranges() {
            if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
                return Err(BoundsError::InvalidParams(format!("bad search range [{lo}, {hi}]")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct OptimizeResult {
    pub params: BoundParams,
    pub report: LargeTReport,
    pub evaluations: usize,
}

impl OptimizeResult {
    /// The certified constant.
    pub fn constant(&self) -> f64 {
        self.report.sup.hi()
    }
}

fn objective(x: [f64; 3], t0: RInterval) -> Option<(f64, LargeTReport)> {
    let p = BoundParams::from_points(x[0], x[1], x[2], 1.0).with_t0(t0);
    // The target only affects the verdict, not the certified supremum.
    let r = verify_large_t(&p, RInterval::point(f64::MAX)).ok()?;
    let v = r.sup.hi();
    v.is_finite().then_some((v, r))
}

/// Lower value wins; ties go to the lexicographically smallest (k, θ, A₀).
fn better(a: &(f64, [f64; 3]), b: &(f64, [f64; 3])) -> bool {
    a.0 < b.0 || (a.0 == b.0 && a.1.partial_cmp(&b.1) == Some(std::cmp::Ordering::Less))
}

/// Evaluates a `grid`³ lattice in parallel, then refines the best point by
/// a compass search whose step halves on every unsuccessful sweep. The
/// objective is the certified supremum from [`verify_large_t`], so the result
/// is always a certificate. Deterministic for fixed inputs.
pub fn optimize_params(bx: &ParamBox, t0: RInterval, grid: usize) -> Result<OptimizeResult, BoundsError> {
    bx.validate()?;
    let grid = grid.max(1);
    let ranges = bx.ranges();
    let axis = |i: usize, g: usize| -> f64 {
        let (lo, hi) = ranges[i];
        if grid == 1 || lo == hi {
            lo
        } else {
            lo + (hi - lo) * g as f64 / (grid - 1) as f64
        }
    };
    let points: Vec<[f64; 3]> = (0..grid * grid * grid)
        .map(|i| [axis(0, i / (grid * grid)), axis(1, (i / grid) % grid), axis(2, i % grid)])
        .collect();
    let scored: Vec<Option<(f64, [f64; 3])>> =
        points.par_iter().map(|x| objective(*x, t0).map(|(v, _)| (v, *x))).collect();
    let mut evaluations = scored.len();
    let mut best = scored
        .into_iter()
        .flatten()
        .reduce(|a, b| if better(&b, &a) { b } else { a })
        .ok_or(BoundsError::NoFeasiblePoint)?;

    let mut step: [f64; 3] = std::array::from_fn(|i| {
        let (lo, hi) = ranges[i];
        (hi - lo) / (grid.max(2) - 1) as f64 / 2.0
    });
    for _ in 0..200 {
        if step.iter().enumerate().all(|(i, s)| *s <= 1e-9 * ranges[i].1.abs().max(1.0)) {
            break;
        }
        let mut moves = Vec::new();
        for i in 0..3 {
            for dir in [-1.0, 1.0] {
                let mut x = best.1;
                x[i] = (x[i] + dir * step[i]).clamp(ranges[i].0, ranges[i].1);
                if x != best.1 {
                    moves.push(x);
                }
            }
        }
        let trial: Vec<Option<(f64, [f64; 3])>> =
            moves.par_iter().map(|x| objective(*x, t0).map(|(v, _)| (v, *x))).collect();
        evaluations += trial.len();
        let improved = trial.into_iter().flatten().fold(None::<(f64, [f64; 3])>, |acc, c| match acc {
            Some(a) if !better(&c, &a) => Some(a),
            _ => Some(c),
        });
        match improved {
            Some(c) if better(&c, &best) && c.0 < best.0 => best = c,
            _ => step.iter_mut().for_each(|s| *s /= 2.0),
        }
    }
    let (_, report) = objective(best.1, t0).expect("best point was feasible");
    Ok(OptimizeResult { params: report.params, report, evaluations })
}
