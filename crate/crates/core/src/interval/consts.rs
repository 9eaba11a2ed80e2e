//! Mathematical constants as outward-rounded binary64 intervals.
//!
//! Each pair is (largest double below, smallest double above) the true value,
//! generated offline at 300-bit precision. Splits used for argument reduction
//! carry exact leading parts, so products with small integers stay exact.

// The endpoints bracket the true values, so the lower one equals the std
// constant by construction.
#![allow(clippy::approx_constant)]

use super::RInterval;

pub const PI: RInterval = RInterval::raw(3.141592653589793, 3.1415926535897936);
pub const TWO_PI: RInterval = RInterval::raw(6.283185307179586, 6.283185307179587);
pub const LN2: RInterval = RInterval::raw(0.6931471805599453, 0.6931471805599454);
pub const INV_LN2: RInterval = RInterval::raw(1.4426950408889634, 1.4426950408889636);
pub const TWO_OVER_PI: RInterval = RInterval::raw(0.6366197723675813, 0.6366197723675814);

/// pi/2 = HALF_PI_1 + HALF_PI_2 + HALF_PI_3, with the first two parts exact
/// 26-bit values.
pub(crate) const HALF_PI_1: f64 = 1.5707963109016418;
pub(crate) const HALF_PI_2: f64 = 1.5893254712295857e-08;
pub(crate) const HALF_PI_3: RInterval = RInterval::raw(6.123233995736765e-17, 6.123233995736766e-17);

/// ln 2 = LN2_1 + LN2_2, with LN2_1 an exact 32-bit value.
pub(crate) const LN2_1: f64 = 0.6931471803691238;
pub(crate) const LN2_2: RInterval = RInterval::raw(1.9082149292705877e-10, 1.908214929270588e-10);
