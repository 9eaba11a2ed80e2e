//! Rigorous enclosures of |ζ(1/2+it)| and the machinery behind an explicit
//! bound of the form |ζ(1/2+it)| <= A t^(1/6) log t.
//!
//! The crate is organised bottom-up:
//!
//! * [`interval`]: outward-rounded real and complex interval arithmetic.
//! * [`zeta`]: Euler–Maclaurin and Riemann–Siegel enclosures on the critical line.
//! * [`expsum`]: exponential sums and the three estimates feeding the bound.
//! * [`bounds`]: the constant chain, its certificate for large t, and parameter search.
//! * [`sweep`]: range verification, record sweeps, crossovers and minimal Q.

// Guards are written as !(x > y) so that NaN fails them too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod cli;
pub mod decimal;
pub mod expsum;
pub mod interval;
pub mod sweep;
pub mod zeta;

pub use interval::{arith, elem, ArithOp, CInterval, ElemFn, IntervalError, RInterval};
