//! Dyadic blocks X_j = A₀ k^j t^{1/3} and direct spot-checks of the block
//! estimate |S_j|² <= B₁k^j t^{2/3} + B₂t^{2/3} + B₃k^j t^{1/3} + B₄k^{2j} t^{1/3}.

use std::fmt;

use super::{compute_chain, BoundParams, BoundsError};
use crate::interval::consts::TWO_PI;
use crate::interval::{CInterval, RInterval};

/// Block j covers N_{j-1} < n <= N_j with N_j = ⌊X_j⌋, and uses the shift
/// M = ⌊k^j θ⌋ + 1 in the differencing step.
///
/// Floors are stored as (⌊lo⌋, ⌊hi⌋) of the enclosure, so an X_j that sits
/// on an integer (t = 10⁶ gives X₀ = 337) keeps both candidates and every
/// check covers both.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DyadicBlock {
    pub j: u32,
    pub x_prev: RInterval,
    pub x: RInterval,
    pub n_prev: (u64, u64),
    pub n: (u64, u64),
    pub modulus: (u64, u64),
}

impl DyadicBlock {
    /// Candidate (N_{j-1}, N_j) pairs with a non-empty range.
    pub fn candidates(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        (self.n_prev.0..=self.n_prev.1)
            .flat_map(move |a| (self.n.0..=self.n.1).map(move |b| (a, b)))
            .filter(|(a, b)| b > a)
    }

    pub fn is_empty(&self) -> bool {
        self.candidates().next().is_none()
    }
}

fn floors(x: RInterval) -> Result<(u64, u64), BoundsError> {
    let (a, b) = (x.lo().floor(), x.hi().floor());
    if !(a >= 0.0 && b - a <= 1.0) {
        return Err(BoundsError::InvalidParams(format!("enclosure {x:?} too wide to locate its floor")));
    }
    Ok((a as u64, b as u64))
}

fn sqrt_t_over_2pi(t: RInterval) -> Result<RInterval, BoundsError> {
    Ok((t / TWO_PI).sqrt()?)
}

/// All blocks j >= 1 with X_{j-1} < √(t/2π), including empty ones. The list
/// is empty when A₀ t^{1/3} >= √(t/2π).
pub fn blocks_for(p: &BoundParams, t: RInterval) -> Result<Vec<DyadicBlock>, BoundsError> {
    let cube = t.pow(RInterval::ratio(1, 3))?;
    let root = sqrt_t_over_2pi(t)?;
    let mut out = Vec::new();
    let mut x_prev = p.a0 * cube;
    let mut kj = RInterval::ONE;
    for j in 1u32.. {
        if !x_prev.certainly_lt(&root) {
            if x_prev.intersects(&root) {
                return Err(BoundsError::InvalidParams(format!(
                    "X_{} = {x_prev:?} meets sqrt(t/2pi) = {root:?}",
                    j - 1
                )));
            }
            break;
        }
        kj *= p.k;
        let x = p.a0 * kj * cube;
        let block = DyadicBlock {
            j,
            x_prev,
            x,
            n_prev: floors(x_prev)?,
            n: floors(x)?,
            modulus: {
                let (a, b) = floors(kj * p.theta)?;
                (a + 1, b + 1)
            },
        };
        out.push(block);
        x_prev = x;
    }
    Ok(out)
}

/// Enclosure of max_{1<=L<=len} |Σ_{n=offset+1}^{offset+L} e^{-it log n}|.
pub fn block_sum_max(t: RInterval, offset: u64, len: u64) -> RInterval {
    let mut acc = CInterval::ZERO;
    let mut best = RInterval::ZERO;
    for n in (offset + 1)..=(offset + len) {
        let ln = RInterval::from_int(n as i64).ln().expect("n >= 1");
        acc += CInterval::cis(-(t * ln));
        best = best.max(&acc.cabs());
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BlockStatus {
    Pass,
    Fail,
    /// N_j = N_{j-1}: nothing to check.
    Empty,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlockReport {
    pub t: RInterval,
    pub block: DyadicBlock,
    /// Enclosure of max_L |S_j|².
    pub direct: RInterval,
    /// Enclosure of the B-form.
    pub bound: RInterval,
    /// ((1/6) log t - log(A₀√(2π)))/log k + 1, which j may not exceed.
    pub j_limit: RInterval,
    pub status: BlockStatus,
}

impl fmt::Display for BlockReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t = {} j = {} n in ({}, {}] M = {}: |S_j|^2 <= {:.6e}, bound >= {:.6e} [{:?}]",
            self.t.mid(),
            self.block.j,
            self.block.n_prev.0,
            self.block.n.1,
            self.block.modulus.1,
            self.direct.hi(),
            self.bound.lo(),
            self.status
        )
    }
}

/// Checks block j at height t. The constants are computed with t₀ replaced by
/// min(t₀, t), since the estimate at height t only needs t >= t₀.
pub fn check_block_bound(p: &BoundParams, t: RInterval, j: u32) -> Result<BlockReport, BoundsError> {
    let blocks = blocks_for(p, t)?;
    let block = *blocks.iter().find(|b| b.j == j).ok_or_else(|| {
        BoundsError::InvalidParams(format!("no block j = {j} at t = {t:?} ({} blocks)", blocks.len()))
    })?;
    report_for(p, t, block)
}

fn report_for(p: &BoundParams, t: RInterval, block: DyadicBlock) -> Result<BlockReport, BoundsError> {
    let local = if t.hi() < p.t0.lo() { p.with_t0(t) } else { *p };
    let chain = compute_chain(&local)?;
    let [b1, b2, b3, b4] = chain.b;
    let kj = p.k.powi(block.j as i32);
    let third = t.pow(RInterval::ratio(1, 3))?;
    let two_thirds = third.sqr();
    let bound = b1 * kj * two_thirds + b2 * two_thirds + b3 * kj * third + b4 * kj.sqr() * third;
    let j_limit = (t.ln()? / 6.0 - (p.a0 * TWO_PI.sqrt()?).ln()?) / p.k.ln()? + RInterval::ONE;
    let (direct, status) = if block.is_empty() {
        (RInterval::ZERO, BlockStatus::Empty)
    } else {
        let s = block_max(t, &block).sqr();
        let ok = s.hi() <= bound.lo() && RInterval::from_int(block.j as i64).certainly_le(&j_limit);
        (s, if ok { BlockStatus::Pass } else { BlockStatus::Fail })
    };
    Ok(BlockReport { t, block, direct, bound, j_limit, status })
}

/// max_L |S_j| over every candidate floor pair.
fn block_max(t: RInterval, block: &DyadicBlock) -> RInterval {
    block.candidates().map(|(a, b)| block_sum_max(t, a, b - a)).fold(RInterval::ZERO, |m, x| m.max(&x))
}

/// Reports for every block at height t; empty below t = A₀⁶(2π)³.
pub fn check_all_blocks(p: &BoundParams, t: RInterval) -> Result<Vec<BlockReport>, BoundsError> {
    blocks_for(p, t)?.into_iter().map(|b| report_for(p, t, b)).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartialSummationReport {
    /// |Σ_{A₀t^{1/3} < n <= √(t/2π)} n^{-1/2-it}|.
    pub direct: RInterval,
    /// Σ_j X_{j-1}^{-1/2} max_L |S_j|.
    pub bound: RInterval,
}

impl PartialSummationReport {
    pub fn passed(&self) -> bool {
        self.direct.hi() <= self.bound.lo()
    }
}

/// Compares the tail of the main sum with its block-wise partial-summation
/// bound.
pub fn partial_summation_check(p: &BoundParams, t: RInterval) -> Result<PartialSummationReport, BoundsError> {
    let blocks = blocks_for(p, t)?;
    let Some(first) = blocks.first() else {
        return Err(BoundsError::InvalidParams(format!("no blocks at t = {t:?}")));
    };
    let (last_lo, last_hi) = floors(sqrt_t_over_2pi(t)?)?;
    let term = |n: u64| -> Result<CInterval, BoundsError> {
        let ni = RInterval::from_int(n as i64);
        Ok(CInterval::cis(-(t * ni.ln()?)).scale(RInterval::ONE / ni.sqrt()?))
    };
    // Sum over the common range, then hull over the candidate end points.
    let mut core = CInterval::ZERO;
    for n in (first.n_prev.1 + 1)..=last_lo {
        core += term(n)?;
    }
    let mut direct: Option<RInterval> = None;
    for start in first.n_prev.0..=first.n_prev.1 {
        for end in last_lo..=last_hi {
            let mut s = core;
            for n in (start + 1)..=first.n_prev.1 {
                s += term(n)?;
            }
            for n in (last_lo + 1)..=end {
                s += term(n)?;
            }
            let v = s.cabs();
            direct = Some(direct.map_or(v, |d| d.hull(&v)));
        }
    }
    let mut bound = RInterval::ZERO;
    for b in &blocks {
        bound += block_max(t, b) / b.x_prev.sqrt()?;
    }
    Ok(PartialSummationReport { direct: direct.expect("one candidate"), bound })
}

/// 2√x - 1, an upper bound for Σ_{n<=x} n^{-1/2} when x >= 1.
pub fn trivial_sum_bound(x: RInterval) -> Result<RInterval, BoundsError> {
    if !(x.lo() >= 1.0) {
        return Err(BoundsError::InvalidParams(format!("need x >= 1, got {x:?}")));
    }
    Ok(RInterval::point(2.0) * x.sqrt()? - RInterval::ONE)
}
