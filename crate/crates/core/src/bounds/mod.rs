//! The explicit bound |ζ(1/2+it)| <= A t^{1/6} log t for t >= t₀: the
//! parameter set, the constant chain, its certificate, block spot-checks and
//! parameter search.

mod blocks;
mod chain;
mod optimize;
mod params;
mod verify;

pub use blocks::{
    block_sum_max, blocks_for, check_all_blocks, check_block_bound, partial_summation_check, trivial_sum_bound,
    BlockReport, BlockStatus, DyadicBlock, PartialSummationReport,
};
pub use chain::{compute_chain, theorem_bound_at, ConstantsChain};
pub use optimize::{optimize_params, OptimizeResult, ParamBox};
pub use params::{shortest_decimal, BoundParams};
pub use verify::{feasibility, ratio_terms, verify_large_t, Check, FeasibilityReport, LargeTReport};

use crate::decimal::ParseDecimalError;
use crate::interval::IntervalError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BoundsError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("no feasible point in the search box")]
    NoFeasiblePoint,
    #[error("parameter file: {0}")]
    Parse(String),
    #[error(transparent)]
    Decimal(#[from] ParseDecimalError),
    #[error(transparent)]
    Interval(#[from] IntervalError),
}
