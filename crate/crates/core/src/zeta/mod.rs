//! Rigorous enclosures of ζ on the critical line.
//!
//! [`abs_zeta_half`] picks the method: Riemann–Siegel when t >= 200 and the
//! main-sum length ⌊√(t/2π)⌋ is constant over the interval, Euler–Maclaurin
//! otherwise.

mod bernoulli;
mod euler_maclaurin;
mod psi;
mod riemann_siegel;
mod tables;
mod theta;

use std::fmt;
use std::sync::OnceLock;

pub use bernoulli::scaled_bernoulli;
pub use euler_maclaurin::{auto_params, em_zeta, remainder_bound, EMParams};
pub use psi::corrections as rs_corrections;
pub use riemann_siegel::{main_sum_length, rs_abs_zeta, rs_z, RSParams, GABCKE, RS_MIN_T};
pub use theta::theta;

pub(crate) use euler_maclaurin::int_pow_neg;

use crate::interval::{CInterval, IntervalError, RInterval};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ZetaError {
    #[error("s interval contains the pole s = 1")]
    Pole,
    #[error("argument outside the supported domain: {0}")]
    Domain(String),
    #[error("invalid truncation parameters: {0}")]
    Parameter(String),
    #[error("main-sum length changes inside the interval ({lo} -> {hi})")]
    FloorChange { lo: u64, hi: u64 },
    #[error("argument interval too wide for the correction models (width {0})")]
    ArgumentTooWide(f64),
    #[error(transparent)]
    Interval(#[from] IntervalError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    EulerMaclaurin,
    RiemannSiegel,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::EulerMaclaurin => "EM",
            Method::RiemannSiegel => "RS",
        })
    }
}

/// `value` contains |ζ(1/2+it)| for every t in `t_range`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaEnclosure {
    pub t_range: RInterval,
    pub value: RInterval,
    pub method: Method,
}

/// Evaluation settings shared by the dispatcher.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaConfig {
    /// Euler–Maclaurin truncation is refined until its remainder bound is
    /// below 2^-tolerance_bits.
    pub tolerance_bits: u32,
    /// Upper limit on the Euler–Maclaurin main-sum length.
    pub em_max_terms: u64,
    pub rs: RSParams,
}

pub const PRECISION_ENV: &str = "ZETA_BOUND_PRECISION";

impl Default for ZetaConfig {
    fn default() -> Self {
        Self { tolerance_bits: 60, em_max_terms: 1 << 22, rs: RSParams::default() }
    }
}

impl ZetaConfig {
    /// Default settings, with the tolerance overridden by
    /// `ZETA_BOUND_PRECISION` (bits) when set.
    pub fn from_env() -> Self {
        let mut cfg = Self::default();
        if let Some(bits) = std::env::var(PRECISION_ENV).ok().and_then(|v| v.trim().parse::<u32>().ok()) {
            cfg.tolerance_bits = bits.clamp(8, 1000);
        }
        cfg
    }

    pub fn tolerance(&self) -> f64 {
        2f64.powi(-(self.tolerance_bits.min(1000) as i32))
    }
}

fn global_config() -> &'static ZetaConfig {
    static C: OnceLock<ZetaConfig> = OnceLock::new();
    C.get_or_init(ZetaConfig::from_env)
}

/// Encloses |ζ(1/2+it)| over `t`, with settings from the environment.
pub fn abs_zeta_half(t: RInterval) -> Result<ZetaEnclosure, ZetaError> {
    abs_zeta_half_with(t, global_config())
}

pub fn abs_zeta_half_with(t: RInterval, cfg: &ZetaConfig) -> Result<ZetaEnclosure, ZetaError> {
    if !(t.lo() >= 0.1) || !t.is_bounded() {
        return Err(ZetaError::Domain(format!("need t >= 0.1, got {t:?}")));
    }
    if t.lo() >= RS_MIN_T {
        match rs_abs_zeta(t, cfg.rs) {
            Ok(value) => return Ok(ZetaEnclosure { t_range: t, value, method: Method::RiemannSiegel }),
            Err(ZetaError::FloorChange { .. }) | Err(ZetaError::ArgumentTooWide(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let s = CInterval::new(RInterval::point(0.5), t);
    let p = auto_params(&s, cfg.tolerance(), cfg.em_max_terms);
    let value = em_zeta(s, p)?.cabs();
    Ok(ZetaEnclosure { t_range: t, value, method: Method::EulerMaclaurin })
}

/// Picks the method the dispatcher would use, without evaluating.
pub fn dispatch_method(t: RInterval) -> Method {
    if t.lo() >= RS_MIN_T && main_sum_length(t).is_ok() && t.width() < 1.0 {
        Method::RiemannSiegel
    } else {
        Method::EulerMaclaurin
    }
}
