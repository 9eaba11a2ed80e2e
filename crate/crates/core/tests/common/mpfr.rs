//! Minimal safe wrapper over the system MPFR library, used as an independent
//! high-precision oracle.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::ffi::{c_char, c_int, c_long, c_ulong, CString};
use std::mem::MaybeUninit;

#[repr(C)]
struct RawMpfr {
    prec: c_long,
    sign: c_int,
    exp: c_long,
    d: *mut u64,
}

const RNDN: c_int = 0;

#[link(name = "mpfr")]
extern "C" {
    fn mpfr_init2(x: *mut RawMpfr, prec: c_long);
    fn mpfr_clear(x: *mut RawMpfr);
    fn mpfr_set_d(x: *mut RawMpfr, d: f64, rnd: c_int) -> c_int;
    fn mpfr_set_str(x: *mut RawMpfr, s: *const c_char, base: c_int, rnd: c_int) -> c_int;
    fn mpfr_set(x: *mut RawMpfr, y: *const RawMpfr, rnd: c_int) -> c_int;
    fn mpfr_get_d(x: *const RawMpfr, rnd: c_int) -> f64;
    fn mpfr_cmp_d(x: *const RawMpfr, d: f64) -> c_int;
    fn mpfr_nan_p(x: *const RawMpfr) -> c_int;
    fn mpfr_add(r: *mut RawMpfr, a: *const RawMpfr, b: *const RawMpfr, rnd: c_int) -> c_int;
    fn mpfr_sub(r: *mut RawMpfr, a: *const RawMpfr, b: *const RawMpfr, rnd: c_int) -> c_int;
    fn mpfr_mul(r: *mut RawMpfr, a: *const RawMpfr, b: *const RawMpfr, rnd: c_int) -> c_int;
    fn mpfr_div(r: *mut RawMpfr, a: *const RawMpfr, b: *const RawMpfr, rnd: c_int) -> c_int;
    fn mpfr_sqrt(r: *mut RawMpfr, a: *const RawMpfr, rnd: c_int) -> c_int;
    fn mpfr_exp(r: *mut RawMpfr, a: *const RawMpfr, rnd: c_int) -> c_int;
    fn mpfr_log(r: *mut RawMpfr, a: *const RawMpfr, rnd: c_int) -> c_int;
    fn mpfr_sin(r: *mut RawMpfr, a: *const RawMpfr, rnd: c_int) -> c_int;
    fn mpfr_cos(r: *mut RawMpfr, a: *const RawMpfr, rnd: c_int) -> c_int;
    fn mpfr_atan(r: *mut RawMpfr, a: *const RawMpfr, rnd: c_int) -> c_int;
    fn mpfr_sinh(r: *mut RawMpfr, a: *const RawMpfr, rnd: c_int) -> c_int;
    fn mpfr_cosh(r: *mut RawMpfr, a: *const RawMpfr, rnd: c_int) -> c_int;
    fn mpfr_pow(r: *mut RawMpfr, a: *const RawMpfr, b: *const RawMpfr, rnd: c_int) -> c_int;
    fn mpfr_const_pi(r: *mut RawMpfr, rnd: c_int) -> c_int;
    fn mpfr_zeta_ui(r: *mut RawMpfr, n: c_ulong, rnd: c_int) -> c_int;
}

/// Arbitrary-precision real with round-to-nearest operations.
pub struct Mpfr {
    raw: RawMpfr,
}

unsafe impl Send for Mpfr {}

impl Drop for Mpfr {
    fn drop(&mut self) {
        unsafe { mpfr_clear(&mut self.raw) }
    }
}

impl Mpfr {
    pub fn new(prec: u32) -> Self {
        let mut raw = MaybeUninit::<RawMpfr>::uninit();
        unsafe {
            mpfr_init2(raw.as_mut_ptr(), prec as c_long);
            Self { raw: raw.assume_init() }
        }
    }

    pub fn prec(&self) -> u32 {
        self.raw.prec as u32
    }

    pub fn from_f64(x: f64, prec: u32) -> Self {
        let mut r = Self::new(prec);
        unsafe { mpfr_set_d(&mut r.raw, x, RNDN) };
        r
    }

    pub fn from_str(s: &str, prec: u32) -> Self {
        let mut r = Self::new(prec);
        let c = CString::new(s).unwrap();
        let rc = unsafe { mpfr_set_str(&mut r.raw, c.as_ptr(), 10, RNDN) };
        assert_eq!(rc, 0, "bad number {s:?}");
        r
    }

    pub fn pi(prec: u32) -> Self {
        let mut r = Self::new(prec);
        unsafe { mpfr_const_pi(&mut r.raw, RNDN) };
        r
    }

    /// ζ(n) for an integer n >= 2.
    pub fn zeta_ui(n: u64, prec: u32) -> Self {
        let mut r = Self::new(prec);
        unsafe { mpfr_zeta_ui(&mut r.raw, n as c_ulong, RNDN) };
        r
    }

    pub fn to_f64(&self) -> f64 {
        unsafe { mpfr_get_d(&self.raw, RNDN) }
    }

    pub fn is_nan(&self) -> bool {
        unsafe { mpfr_nan_p(&self.raw) != 0 }
    }

    /// Exact comparison with a double.
    pub fn cmp_f64(&self, d: f64) -> Ordering {
        unsafe { mpfr_cmp_d(&self.raw, d) }.cmp(&0)
    }

    /// Whether lo <= self <= hi exactly.
    pub fn within(&self, lo: f64, hi: f64) -> bool {
        !self.is_nan() && self.cmp_f64(lo) != Ordering::Less && self.cmp_f64(hi) != Ordering::Greater
    }

    fn unary(&self, f: unsafe extern "C" fn(*mut RawMpfr, *const RawMpfr, c_int) -> c_int) -> Self {
        let mut r = Self::new(self.prec());
        unsafe { f(&mut r.raw, &self.raw, RNDN) };
        r
    }

    fn binary(
        &self,
        o: &Mpfr,
        f: unsafe extern "C" fn(*mut RawMpfr, *const RawMpfr, *const RawMpfr, c_int) -> c_int,
    ) -> Self {
        let mut r = Self::new(self.prec().max(o.prec()));
        unsafe { f(&mut r.raw, &self.raw, &o.raw, RNDN) };
        r
    }

    pub fn add(&self, o: &Mpfr) -> Self {
        self.binary(o, mpfr_add)
    }
    pub fn sub(&self, o: &Mpfr) -> Self {
        self.binary(o, mpfr_sub)
    }
    pub fn mul(&self, o: &Mpfr) -> Self {
        self.binary(o, mpfr_mul)
    }
    pub fn div(&self, o: &Mpfr) -> Self {
        self.binary(o, mpfr_div)
    }
    pub fn pow(&self, o: &Mpfr) -> Self {
        self.binary(o, mpfr_pow)
    }
    pub fn sqrt(&self) -> Self {
        self.unary(mpfr_sqrt)
    }
    pub fn exp(&self) -> Self {
        self.unary(mpfr_exp)
    }
    pub fn ln(&self) -> Self {
        self.unary(mpfr_log)
    }
    pub fn sin(&self) -> Self {
        self.unary(mpfr_sin)
    }
    pub fn cos(&self) -> Self {
        self.unary(mpfr_cos)
    }
    pub fn atan(&self) -> Self {
        self.unary(mpfr_atan)
    }
    pub fn sinh(&self) -> Self {
        self.unary(mpfr_sinh)
    }
    pub fn cosh(&self) -> Self {
        self.unary(mpfr_cosh)
    }

    pub fn add_f64(&self, x: f64) -> Self {
        self.add(&Mpfr::from_f64(x, self.prec()))
    }
    pub fn mul_f64(&self, x: f64) -> Self {
        self.mul(&Mpfr::from_f64(x, self.prec()))
    }
    pub fn neg(&self) -> Self {
        Mpfr::from_f64(0.0, self.prec()).sub(self)
    }
}

impl Clone for Mpfr {
    fn clone(&self) -> Self {
        let mut r = Self::new(self.prec());
        unsafe { mpfr_set(&mut r.raw, &self.raw, RNDN) };
        r
    }
}

/// Complex number over [`Mpfr`].
#[derive(Clone)]
pub struct MpComplex {
    pub re: Mpfr,
    pub im: Mpfr,
}

impl MpComplex {
    pub fn new(re: Mpfr, im: Mpfr) -> Self {
        Self { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Self::new(Mpfr::from_f64(0.0, prec), Mpfr::from_f64(0.0, prec))
    }

    pub fn add(&self, o: &MpComplex) -> Self {
        Self::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn mul(&self, o: &MpComplex) -> Self {
        Self::new(self.re.mul(&o.re).sub(&self.im.mul(&o.im)), self.re.mul(&o.im).add(&self.im.mul(&o.re)))
    }

    pub fn scale(&self, k: &Mpfr) -> Self {
        Self::new(self.re.mul(k), self.im.mul(k))
    }

    pub fn div(&self, o: &MpComplex) -> Self {
        let den = o.re.mul(&o.re).add(&o.im.mul(&o.im));
        let re = self.re.mul(&o.re).add(&self.im.mul(&o.im)).div(&den);
        let im = self.im.mul(&o.re).sub(&self.re.mul(&o.im)).div(&den);
        Self::new(re, im)
    }

    pub fn abs(&self) -> Mpfr {
        self.re.mul(&self.re).add(&self.im.mul(&self.im)).sqrt()
    }

    /// n^{-s} = exp(-s log n) for an integer n >= 1.
    pub fn int_pow_neg(n: u64, s: &MpComplex) -> Self {
        let p = s.re.prec();
        let ln = Mpfr::from_f64(n as f64, p).ln();
        let mag = s.re.mul(&ln).neg().exp();
        let ang = s.im.mul(&ln).neg();
        Self::new(mag.mul(&ang.cos()), mag.mul(&ang.sin()))
    }
}
