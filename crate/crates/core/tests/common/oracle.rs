//! Reference evaluations that share no code with the library.

#![allow(dead_code)]

use super::mpfr::{MpComplex, Mpfr};

/// ζ(s) by Euler–Maclaurin summation in MPFR with `n` terms and `k`
/// Bernoulli corrections. B_{2j} is taken from ζ(2j) via
/// B_{2j} = (-1)^{j+1} 2 (2j)! ζ(2j) / (2π)^{2j}, so B_{2j}/(2j)! is
/// (-1)^{j+1} 2 ζ(2j) / (2π)^{2j}.
pub fn em_zeta(s: &MpComplex, n: u64, k: u64) -> MpComplex {
    let p = s.re.prec();
    let mut sum = MpComplex::zero(p);
    for m in 1..n {
        sum = sum.add(&MpComplex::int_pow_neg(m, s));
    }
    let n_pow = MpComplex::int_pow_neg(n, s);
    let big_n = Mpfr::from_f64(n as f64, p);
    let s_minus_1 = MpComplex::new(s.re.add_f64(-1.0), s.im.clone());
    sum = sum.add(&n_pow.scale(&big_n).div(&s_minus_1));
    sum = sum.add(&n_pow.scale(&Mpfr::from_f64(0.5, p)));
    let two_pi = Mpfr::pi(p).mul_f64(2.0);
    let inv_n = Mpfr::from_f64(1.0, p).div(&big_n);
    let inv_n2 = inv_n.mul(&inv_n);
    let mut rising = s.clone();
    let mut pow = n_pow.scale(&inv_n);
    for j in 1..=k {
        let sign = if j % 2 == 1 { 2.0 } else { -2.0 };
        let b = Mpfr::zeta_ui(2 * j, p).mul_f64(sign).div(&two_pi.pow(&Mpfr::from_f64((2 * j) as f64, p)));
        sum = sum.add(&rising.mul(&pow).scale(&b));
        let a1 = MpComplex::new(s.re.add_f64((2 * j - 1) as f64), s.im.clone());
        let a2 = MpComplex::new(s.re.add_f64((2 * j) as f64), s.im.clone());
        rising = rising.mul(&a1).mul(&a2);
        pow = pow.scale(&inv_n2);
    }
    sum
}

/// |ζ(1/2+it)| with truncation generous enough for 30+ correct digits
/// when t <= 2000.
pub fn abs_zeta_half(t: f64) -> f64 {
    let p = 256;
    let s = MpComplex::new(Mpfr::from_f64(0.5, p), Mpfr::from_f64(t, p));
    let n = (t.abs() as u64) + 40;
    em_zeta(&s, n, 40).abs().to_f64()
}

/// |ζ(1/2+it)| as an MPFR value.
pub fn abs_zeta_half_mp(t: f64, prec: u32) -> Mpfr {
    let s = MpComplex::new(Mpfr::from_f64(0.5, prec), Mpfr::from_f64(t, prec));
    let n = (t.abs() as u64) + 40;
    em_zeta(&s, n, 40).abs()
}
