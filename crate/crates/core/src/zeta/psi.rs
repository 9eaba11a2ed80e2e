//! Riemann–Siegel correction coefficients C_0 .. C_4 as rigorous Taylor models.
//!
//! With Ψ(p) = cos(2π(p² - p - 1/16)) / cos(2πp),
//!
//!   C_0 = Ψ
//!   C_1 = -Ψ'''/(96π²)
//!   C_2 = Ψ''/(64π²) + Ψ⁽⁶⁾/(18432π⁴)
//!   C_3 = -Ψ'/(64π²) - Ψ⁽⁵⁾/(3840π⁴) - Ψ⁽⁹⁾/(5308416π⁶)
//!   C_4 = Ψ/(128π²) + 19Ψ⁽⁴⁾/(24576π⁴) + 11Ψ⁽⁸⁾/(5898240π⁶) + Ψ⁽¹²⁾/(2038431744π⁸)
//!
//! Ψ is entire (the zeros of cos 2πp at p = 1/4 + k/2 are cancelled by the
//! numerator), so around each centre c = j/8 it has a Taylor series whose
//! coefficients obey the Cauchy bound |a_n| <= M ρ^{-n}, where M bounds |Ψ| on
//! the circle |p - c| = ρ. The coefficients are computed by series division
//! and intersected with that bound, which keeps the recurrence from blowing
//! up. Each C_k is then a polynomial in u = p - c of degree [`DEGREE`] plus a
//! tail bound valid for |u| <= [`RADIUS`].

use std::sync::OnceLock;

use super::ZetaError;
use crate::interval::consts::{PI, TWO_PI};
use crate::interval::RInterval;

/// Number of Taylor coefficients of Ψ kept at each centre.
const COEFFS: usize = 64;
/// Highest derivative order appearing in C_0..C_4.
const MAX_DERIV: usize = 12;
/// Degree of the per-coefficient polynomials.
const DEGREE: usize = COEFFS - 1 - MAX_DERIV;
/// Largest |p - c| the models accept. Centres are 1/8 apart.
pub const RADIUS: f64 = 0.07;
const CENTRES: usize = 9;
const ARCS: usize = 512;

struct Model {
    centre: f64,
    poly: Vec<Vec<RInterval>>,
    tail: Vec<f64>,
}

fn models() -> &'static Vec<Model> {
    static M: OnceLock<Vec<Model>> = OnceLock::new();
    M.get_or_init(|| (0..CENTRES).map(|j| build_model(j as f64 / 8.0)).collect())
}

/// (derivative order, weight) pairs for each C_k.
fn weights() -> Vec<Vec<(usize, RInterval)>> {
    let p2 = PI.sqr();
    let p4 = p2.sqr();
    let p6 = p4 * p2;
    let p8 = p4.sqr();
    let w = |num: i64, den: i64, pw: RInterval| RInterval::from_int(num) / (RInterval::from_int(den) * pw);
    vec![
        vec![(0, RInterval::ONE)],
        vec![(3, w(-1, 96, p2))],
        vec![(2, w(1, 64, p2)), (6, w(1, 18432, p4))],
        vec![(1, w(-1, 64, p2)), (5, w(-1, 3840, p4)), (9, w(-1, 5308416, p6))],
        vec![(0, w(1, 128, p2)), (4, w(19, 24576, p4)), (8, w(11, 5898240, p6)), (12, w(1, 2038431744, p8))],
    ]
}

/// Exact cos and sin of k π/4.
fn quarter_pi_cos_sin(k: i64) -> (RInterval, RInterval) {
    let s2 = RInterval::point(0.5).sqrt().expect("positive");
    let z = RInterval::ZERO;
    let o = RInterval::ONE;
    match k.rem_euclid(8) {
        0 => (o, z),
        1 => (s2, s2),
        2 => (z, o),
        3 => (-s2, s2),
        4 => (-o, z),
        5 => (-s2, -s2),
        6 => (z, -o),
        _ => (s2, -s2),
    }
}

/// Taylor coefficients of numerator and denominator of Ψ at `c`, up to `len`.
fn numerator_denominator(c: f64, len: usize) -> (Vec<RInterval>, Vec<RInterval>) {
    let ci = RInterval::point(c);
    // g(c+u) = cos(A + B u + C u²)
    let a = TWO_PI * (ci.sqr() - ci - RInterval::point(0.0625));
    let b = TWO_PI * (RInterval::point(2.0) * ci - RInterval::ONE);
    let cc = TWO_PI;
    let (sin_a, cos_a) = a.sin_cos();
    let f = [cos_a, -sin_a, -cos_a, sin_a];
    let mut bm = vec![RInterval::ONE; len];
    let mut cl = vec![RInterval::ONE; len];
    for i in 1..len {
        bm[i] = bm[i - 1] * b / RInterval::from_int(i as i64);
        cl[i] = cl[i - 1] * cc / RInterval::from_int(i as i64);
    }
    let mut g = vec![RInterval::ZERO; len];
    for (n, gn) in g.iter_mut().enumerate() {
        let mut acc = RInterval::ZERO;
        let mut l = 0;
        while 2 * l <= n {
            let m = n - 2 * l;
            acc += bm[m] * cl[l] * f[(m + l) % 4];
            l += 1;
        }
        *gn = acc;
    }
    // h(c+u) = cos(2πc + 2πu) = Σ (2π)^n/n! cos(2πc + nπ/2) u^n
    let (cos0, sin0) = quarter_pi_cos_sin((c * 8.0).round() as i64);
    let hf = [cos0, -sin0, -cos0, sin0];
    let mut h = vec![RInterval::ZERO; len];
    let mut pw = RInterval::ONE;
    for (n, hn) in h.iter_mut().enumerate() {
        if n > 0 {
            pw = pw * TWO_PI / RInterval::from_int(n as i64);
        }
        *hn = pw * hf[n % 4];
    }
    (g, h)
}

/// Upper bound for |Ψ| on the circle |p - c| = rho.
fn circle_bound(c: f64, rho: f64) -> f64 {
    let mut m: f64 = 0.0;
    let rho_i = RInterval::point(rho);
    let two_pi = TWO_PI;
    for i in 0..ARCS {
        let phi = RInterval::new(i as f64, (i + 1) as f64).unwrap() * TWO_PI / RInterval::from_int(ARCS as i64);
        let (s, co) = phi.sin_cos();
        let x = RInterval::point(c) + rho_i * co;
        let y = rho_i * s;
        // |cos w| <= cosh(Im w), Im w = 2π y (2x - 1)
        let im_w = two_pi * y * (RInterval::point(2.0) * x - RInterval::ONE);
        let num = im_w.cosh().hi();
        // |cos(2π(x+iy))|² = cos²(2πx) + sinh²(2πy)
        let den2 = (two_pi * x).cos().sqr() + (two_pi * y).sinh().sqr();
        assert!(den2.lo() > 0.0, "denominator of Ψ may vanish on the circle around {c}");
        let bound = RInterval::point(num) / den2.sqrt().expect("positive").lo();
        m = m.max(bound.hi());
    }
    m
}

fn build_model(c: f64) -> Model {
    let quarter = (c - 0.25).abs() < 1e-12 || (c - 0.75).abs() < 1e-12;
    let rho = if quarter { 0.75 } else { 0.5 };
    let m = circle_bound(c, rho);
    let (mut g, mut h) = numerator_denominator(c, COEFFS + 1);
    if quarter {
        // Both series vanish at u = 0; divide through by u.
        g.remove(0);
        h.remove(0);
    }
    let mut a: Vec<RInterval> = Vec::with_capacity(COEFFS);
    let rho_inv = RInterval::ONE / RInterval::point(rho);
    let mut cauchy = RInterval::point(m);
    for n in 0..COEFFS {
        let mut acc = g[n];
        for k in 1..=n {
            acc -= h[k] * a[n - k];
        }
        let v = acc.checked_div(h[0]).expect("leading denominator coefficient is nonzero");
        let boxed = RInterval::symmetric(cauchy.hi());
        a.push(v.intersect(&boxed).unwrap_or(boxed));
        cauchy *= rho_inv;
    }

    let weights = weights();
    let mut poly = Vec::with_capacity(weights.len());
    let mut tail = Vec::with_capacity(weights.len());
    let r = RInterval::point(RADIUS);
    let q_base = r * rho_inv;
    for w in &weights {
        let mut coeffs = vec![RInterval::ZERO; DEGREE + 1];
        for (n, cn) in coeffs.iter_mut().enumerate() {
            let mut acc = RInterval::ZERO;
            for &(j, wj) in w {
                // a_{n+j} (n+j)!/n!
                let mut f = RInterval::ONE;
                for i in (n + 1)..=(n + j) {
                    f *= RInterval::from_int(i as i64);
                }
                acc += wj * a[n + j] * f;
            }
            *cn = acc;
        }
        // Σ_{n>D} (n+j)!/n! M ρ^{-(n+j)} r^n: the term ratio is at most
        // (D+j+2)/(D+2) · r/ρ for n > D, so the tail is geometric.
        let mut t = RInterval::ZERO;
        for &(j, wj) in w {
            let d = DEGREE as i64;
            let mut f = RInterval::ONE;
            for i in (d + 2)..=(d + 1 + j as i64) {
                f *= RInterval::from_int(i);
            }
            let first = f * RInterval::point(m) * rho_inv.powi(j as i32) * q_base.powi(DEGREE as i32 + 1);
            let q = RInterval::from_int(d + j as i64 + 2) / RInterval::from_int(d + 2) * q_base;
            assert!(q.hi() < 1.0);
            t += wj.abs() * first / (RInterval::ONE - q);
        }
        poly.push(coeffs);
        tail.push(t.hi());
    }
    Model { centre: c, poly, tail }
}

/// Enclosures of C_0(p) .. C_{terms}(p) for p in [0, 1].
pub fn corrections(p: RInterval, terms: usize) -> Result<Vec<RInterval>, ZetaError> {
    assert!(terms <= 4);
    if !(p.lo() >= -RADIUS && p.hi() <= 1.0 + RADIUS) {
        return Err(ZetaError::Domain(format!("correction argument {p:?} outside [0, 1]")));
    }
    let j = (p.mid() * 8.0).round().clamp(0.0, (CENTRES - 1) as f64) as usize;
    let model = &models()[j];
    let u = p - RInterval::point(model.centre);
    if u.mag() > RADIUS {
        return Err(ZetaError::ArgumentTooWide(p.width()));
    }
    let mut out = Vec::with_capacity(terms + 1);
    for k in 0..=terms {
        let coeffs = &model.poly[k];
        let mut acc = RInterval::ZERO;
        for c in coeffs.iter().rev() {
            acc = acc * u + *c;
        }
        out.push(acc + RInterval::symmetric(model.tail[k]));
    }
    Ok(out)
}

/// Direct enclosure of Ψ(p), valid where cos 2πp is bounded away from zero.
#[cfg(test)]
fn psi_direct(p: RInterval) -> Option<RInterval> {
    let num = (TWO_PI * (p.sqr() - p - RInterval::point(0.0625))).cos();
    let den = (TWO_PI * p).cos();
    num.checked_div(den).ok()
}
