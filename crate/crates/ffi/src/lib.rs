//! C ABI over `zeta_bound`.
//!
//! Every fallible function returns a [`ZbStatus`]; on anything other than
//! `ZB_STATUS_OK` the message is available from [`zb_last_error`] on the same
//! thread. Handles are opaque and must be released with their `_free`
//! function. Real arguments are taken as exact binary64 values.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use zeta_bound::bounds::{self, BoundParams, BoundsError};
use zeta_bound::sweep::{self, RecordFile, SweepConfig, SweepError};
use zeta_bound::zeta::{self, Method, ZetaError};
use zeta_bound::RInterval;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Domain = 3,
    Infeasible = 4,
    Io = 5,
    Parse = 6,
    Internal = 7,
}

/// Closed interval [lo, hi].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZbInterval {
    pub lo: f64,
    pub hi: f64,
}

impl From<RInterval> for ZbInterval {
    fn from(x: RInterval) -> Self {
        Self { lo: x.lo(), hi: x.hi() }
    }
}

/// Parameter set (k, theta, a0, t0).
pub struct ZbParams(BoundParams);

/// Record list loaded from, or written to, a record file.
pub struct ZbRecords(RecordFile);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(ZbStatus, String);

impl From<ZetaError> for Failure {
    fn from(e: ZetaError) -> Self {
        let status = match e {
            ZetaError::Parameter(_) => ZbStatus::InvalidArgument,
            _ => ZbStatus::Domain,
        };
        Failure(status, e.to_string())
    }
}

impl From<BoundsError> for Failure {
    fn from(e: BoundsError) -> Self {
        let status = match e {
            BoundsError::Infeasible(_) | BoundsError::NoFeasiblePoint => ZbStatus::Infeasible,
            BoundsError::Parse(_) | BoundsError::Decimal(_) => ZbStatus::Parse,
            _ => ZbStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<SweepError> for Failure {
    fn from(e: SweepError) -> Self {
        let status = match e {
            SweepError::Io(_) => ZbStatus::Io,
            SweepError::Format(_) => ZbStatus::Parse,
            SweepError::Zeta(_) | SweepError::Domain(_) => ZbStatus::Domain,
            _ => ZbStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(ZbStatus::InvalidArgument, msg.into())
}

fn null(name: &str) -> Failure {
    Failure(ZbStatus::NullPointer, format!("{name} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ZbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            ZbStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            ZbStatus::Internal
        }
    }
}

fn interval(lo: f64, hi: f64) -> Result<RInterval, Failure> {
    RInterval::new(lo, hi).map_err(|e| invalid(e.to_string()))
}

unsafe fn out_ref<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(name))
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(ZbStatus::Parse, format!("{name} is not UTF-8")))
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn zb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Encloses |zeta(1/2+it)| for all t in [t_lo, t_hi]. `method` receives 0
/// for Euler-Maclaurin and 1 for Riemann-Siegel; it may be null.
///
/// # Safety
/// `out` must be valid for writes; `method` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn zb_abs_zeta_half(t_lo: f64, t_hi: f64, out: *mut ZbInterval, method: *mut u32) -> ZbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let z = zeta::abs_zeta_half(interval(t_lo, t_hi)?)?;
        *out = z.value.into();
        if let Some(m) = method.as_mut() {
            *m = match z.method {
                Method::EulerMaclaurin => 0,
                Method::RiemannSiegel => 1,
            };
        }
        Ok(())
    })
}

/// Parses four decimal strings into a parameter handle.
///
/// # Safety
/// Strings must be nul-terminated; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zb_params_new(
    k: *const c_char,
    theta: *const c_char,
    a0: *const c_char,
    t0: *const c_char,
    out: *mut *mut ZbParams,
) -> ZbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let p = BoundParams::from_decimals(
            str_arg(k, "k")?,
            str_arg(theta, "theta")?,
            str_arg(a0, "a0")?,
            str_arg(t0, "t0")?,
        )?;
        *out = Box::into_raw(Box::new(ZbParams(p)));
        Ok(())
    })
}

/// Parses `key = value` text with keys k, theta, a0, t0.
///
/// # Safety
/// `text` must be nul-terminated; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zb_params_parse(text: *const c_char, out: *mut *mut ZbParams) -> ZbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let p = BoundParams::parse(str_arg(text, "text")?)?;
        *out = Box::into_raw(Box::new(ZbParams(p)));
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zb_params_free(p: *mut ZbParams) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Writes whether every side condition holds.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zb_params_feasible(p: *const ZbParams, out: *mut bool) -> ZbStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("params"))?;
        *out_ref(out, "out")? = bounds::feasibility(&p.0).passed();
        Ok(())
    })
}

/// Writes enclosures of D1..D5 to `out[0..5]`.
///
/// # Safety
/// `p` must be a live handle; `out` must have room for five intervals.
#[no_mangle]
pub unsafe extern "C" fn zb_chain_d(p: *const ZbParams, out: *mut ZbInterval) -> ZbStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("params"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let chain = bounds::compute_chain(&p.0)?;
        for (i, d) in chain.d.iter().enumerate() {
            *out.add(i) = (*d).into();
        }
        Ok(())
    })
}

/// Certifies sup over t >= t0 of bound(t) / (t^(1/6) log t) <= target.
///
/// # Safety
/// `p` must be a live handle; `sup` and `passed` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zb_verify_large_t(
    p: *const ZbParams,
    target: f64,
    sup: *mut ZbInterval,
    passed: *mut bool,
) -> ZbStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("params"))?;
        let (sup, passed) = (out_ref(sup, "sup")?, out_ref(passed, "passed")?);
        let r = bounds::verify_large_t(&p.0, RInterval::point(target))?;
        *sup = r.sup.into();
        *passed = r.passed();
        Ok(())
    })
}

/// Certifies |zeta(1/2+it)| < constant t^(1/6) log t on [lo, hi].
///
/// # Safety
/// `passed` must be valid for writes; `failures` may be null.
#[no_mangle]
pub unsafe extern "C" fn zb_verify_range(
    lo: f64,
    hi: f64,
    constant: f64,
    piece_width: f64,
    max_depth: u32,
    passed: *mut bool,
    failures: *mut u64,
) -> ZbStatus {
    guard(|| {
        let passed = out_ref(passed, "passed")?;
        let cfg = SweepConfig { piece_width, max_depth, ..SweepConfig::default() };
        let r = sweep::verify_range(lo, hi, RInterval::point(constant), &cfg)?;
        *passed = r.passed();
        if let Some(f) = failures.as_mut() {
            *f = r.failures.len() as u64;
        }
        Ok(())
    })
}

/// Runs a record sweep over [lo, hi], writes the file at `path` and returns
/// the records.
///
/// # Safety
/// `path` must be nul-terminated; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zb_records_sweep(
    lo: f64,
    hi: f64,
    piece_width: f64,
    path: *const c_char,
    out: *mut *mut ZbRecords,
) -> ZbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let path = str_arg(path, "path")?;
        let cfg = SweepConfig { piece_width, ..SweepConfig::default() };
        let f = sweep::record_sweep(lo, hi, &cfg, Path::new(path))?;
        *out = Box::into_raw(Box::new(ZbRecords(f)));
        Ok(())
    })
}

/// # Safety
/// `path` must be nul-terminated; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zb_records_read(path: *const c_char, out: *mut *mut ZbRecords) -> ZbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let f = sweep::read_records(Path::new(str_arg(path, "path")?))?;
        *out = Box::into_raw(Box::new(ZbRecords(f)));
        Ok(())
    })
}

/// Number of records; 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zb_records_len(r: *const ZbRecords) -> usize {
    r.as_ref().map_or(0, |r| r.0.records.len())
}

/// # Safety
/// `r` must be a live handle; `a` and `y` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zb_records_get(r: *const ZbRecords, index: usize, a: *mut f64, y: *mut f64) -> ZbStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("records"))?;
        let rec = r.0.records.get(index).ok_or_else(|| invalid(format!("index {index} out of range")))?;
        *out_ref(a, "a")? = rec.a;
        *out_ref(y, "y")? = rec.y;
        Ok(())
    })
}

/// Four-decimal constant covering the records in [lo, hi).
///
/// # Safety
/// `r` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zb_records_table_constant(r: *const ZbRecords, lo: f64, hi: f64, out: *mut f64) -> ZbStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("records"))?;
        *out_ref(out, "out")? = sweep::table_constant(&r.0, lo, hi)?.value();
        Ok(())
    })
}

/// # Safety
/// `r` must be null or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zb_records_free(r: *mut ZbRecords) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Encloses 4 (t/2 pi)^(1/4).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zb_lehman_bound(t: f64, out: *mut ZbInterval) -> ZbStatus {
    guard(|| {
        *out_ref(out, "out")? = sweep::lehman_bound(interval(t, t)?)?.into();
        Ok(())
    })
}

/// Crossing of 4 (t/2 pi)^(1/4) and constant t^(1/6) log t in [lo, hi].
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zb_crossover(lo: f64, hi: f64, constant: f64, tol: f64, out: *mut ZbInterval) -> ZbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let a = RInterval::point(constant);
        let x = sweep::crossover(|t| sweep::power_log_bound(a, t), sweep::lehman_bound, interval(lo, hi)?, tol)?;
        *out = x.into();
        Ok(())
    })
}

/// Least Q with |zeta(1/2)| < constant Q^(1/6) log Q.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zb_min_q(constant: f64, out: *mut ZbInterval) -> ZbStatus {
    guard(|| {
        *out_ref(out, "out")? = sweep::min_q(RInterval::point(constant))?.q.into();
        Ok(())
    })
}
