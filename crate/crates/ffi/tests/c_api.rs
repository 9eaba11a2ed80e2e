use std::ffi::{CStr, CString};
use std::ptr;

use zeta_bound_ffi::*;

fn last_error() -> String {
    let p = zb_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn zeta_enclosure_and_method() {
    let mut out = ZbInterval { lo: 0.0, hi: 0.0 };
    let mut method = 9u32;
    let st = unsafe { zb_abs_zeta_half(2.0, 2.0, &mut out, &mut method) };
    assert_eq!(st, ZbStatus::Ok);
    assert!(out.lo <= 0.5396331256461449 && 0.5396331256461448 <= out.hi);
    assert_eq!(method, 0);
    let st = unsafe { zb_abs_zeta_half(1000.0, 1000.0, &mut out, &mut method) };
    assert_eq!(st, ZbStatus::Ok);
    assert_eq!(method, 1);
    assert!(zb_last_error().is_null());
}

#[test]
fn errors_are_reported() {
    let mut out = ZbInterval { lo: 0.0, hi: 0.0 };
    assert_eq!(unsafe { zb_abs_zeta_half(3.0, 2.0, &mut out, ptr::null_mut()) }, ZbStatus::InvalidArgument);
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { zb_abs_zeta_half(2.0, 2.0, ptr::null_mut(), ptr::null_mut()) }, ZbStatus::NullPointer);
    assert_eq!(last_error(), "out is null");
    assert_eq!(unsafe { zb_lehman_bound(0.1, &mut out) }, ZbStatus::Domain);
}

#[test]
fn parameter_handles() {
    let s = |x: &str| CString::new(x).unwrap();
    let (k, th, a0, t0) = (s("1.16"), s("7.5"), s("3.37"), s("5.867e9"));
    let mut p: *mut ZbParams = ptr::null_mut();
    assert_eq!(unsafe { zb_params_new(k.as_ptr(), th.as_ptr(), a0.as_ptr(), t0.as_ptr(), &mut p) }, ZbStatus::Ok);
    let mut feasible = false;
    assert_eq!(unsafe { zb_params_feasible(p, &mut feasible) }, ZbStatus::Ok);
    assert!(feasible);
    let mut d = [ZbInterval { lo: 0.0, hi: 0.0 }; 5];
    assert_eq!(unsafe { zb_chain_d(p, d.as_mut_ptr()) }, ZbStatus::Ok);
    assert!(d[0].hi <= 0.732 && d[4].hi < 0.0);
    let (mut sup, mut passed) = (ZbInterval { lo: 0.0, hi: 0.0 }, false);
    assert_eq!(unsafe { zb_verify_large_t(p, 0.732, &mut sup, &mut passed) }, ZbStatus::Ok);
    assert!(passed && sup.hi < 0.732);
    unsafe { zb_params_free(p) };

    let text = s("k = 1.16\ntheta = 7.5\na0 = 3.37\nt0 = 1e5\n");
    let mut q: *mut ZbParams = ptr::null_mut();
    assert_eq!(unsafe { zb_params_parse(text.as_ptr(), &mut q) }, ZbStatus::Ok);
    assert_eq!(unsafe { zb_verify_large_t(q, 0.732, &mut sup, &mut passed) }, ZbStatus::Infeasible);
    unsafe { zb_params_free(q) };

    let bad = s("k = x");
    assert_eq!(unsafe { zb_params_parse(bad.as_ptr(), &mut q) }, ZbStatus::Parse);
    unsafe { zb_params_free(ptr::null_mut()) };
}

#[test]
fn records_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let path = CString::new(dir.path().join("rec.txt").to_str().unwrap()).unwrap();
    let mut r: *mut ZbRecords = ptr::null_mut();
    assert_eq!(unsafe { zb_records_sweep(2.0, 2.5, 1.0 / 1024.0, path.as_ptr(), &mut r) }, ZbStatus::Ok);
    let n = unsafe { zb_records_len(r) };
    assert!(n >= 1);
    let mut back: *mut ZbRecords = ptr::null_mut();
    assert_eq!(unsafe { zb_records_read(path.as_ptr(), &mut back) }, ZbStatus::Ok);
    assert_eq!(unsafe { zb_records_len(back) }, n);
    let (mut a, mut y) = (0.0, 0.0);
    assert_eq!(unsafe { zb_records_get(back, 0, &mut a, &mut y) }, ZbStatus::Ok);
    assert_eq!(a, 2.0);
    assert_eq!(unsafe { zb_records_get(back, n, &mut a, &mut y) }, ZbStatus::InvalidArgument);
    let mut c = 0.0;
    assert_eq!(unsafe { zb_records_table_constant(back, 2.0, 2.5, &mut c) }, ZbStatus::Ok);
    assert!(c > 0.5 && c < 1.0, "{c}");
    unsafe {
        zb_records_free(r);
        zb_records_free(back);
    }
    let missing = CString::new(dir.path().join("none.txt").to_str().unwrap()).unwrap();
    assert_eq!(unsafe { zb_records_read(missing.as_ptr(), &mut back) }, ZbStatus::Io);
}

#[test]
fn sweeps_and_crossings() {
    let (mut passed, mut failures) = (false, 99u64);
    assert_eq!(
        unsafe { zb_verify_range(100.0, 101.0, 0.732, 1.0 / 1024.0, 20, &mut passed, &mut failures) },
        ZbStatus::Ok
    );
    assert!(passed);
    assert_eq!(failures, 0);
    let mut x = ZbInterval { lo: 0.0, hi: 0.0 };
    assert_eq!(unsafe { zb_crossover(200.0, 300.0, 0.732, 1e-3, &mut x) }, ZbStatus::Ok);
    assert!(x.lo <= 226.7088 && 226.7088 <= x.hi && x.hi - x.lo <= 1e-3);
    assert_eq!(unsafe { zb_min_q(0.732, &mut x) }, ZbStatus::Ok);
    assert!(x.lo > 4.6 && x.hi <= 4.678);
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/zeta_bound.h");
    let src = include_str!("../src/lib.rs");
    for line in src.lines().filter(|l| l.contains("extern \"C\" fn zb_")) {
        let name = line.split("fn ").nth(1).unwrap().split('(').next().unwrap();
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct ZbParams ZbParams;"));
    assert!(header.contains("ZB_STATUS_OK = 0"));
}
