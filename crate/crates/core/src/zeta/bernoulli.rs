//! Enclosures of B_{2k} / (2k)!.

use std::sync::OnceLock;

use crate::interval::consts::TWO_PI;
use crate::interval::RInterval;

/// B_2 .. B_20 as exact fractions.
const SMALL: [(i64, i64); 10] =
    [(1, 6), (-1, 30), (1, 42), (-1, 30), (5, 66), (-691, 2730), (7, 6), (-3617, 510), (43867, 798), (-174611, 330)];

pub const MAX_INDEX: usize = 120;

/// B_{2k} / (2k)! for 1 <= k <= MAX_INDEX.
///
/// Beyond the tabulated fractions we use
/// B_{2k}/(2k)! = (-1)^(k+1) 2 zeta(2k) / (2 pi)^(2k), with zeta(2k) enclosed
/// by its first ten terms plus the integral tail bound 10^(1-2k)/(2k-1).
pub fn scaled_bernoulli(k: usize) -> RInterval {
    static TABLE: OnceLock<Vec<RInterval>> = OnceLock::new();
    assert!((1..=MAX_INDEX).contains(&k), "Bernoulli index {k} out of range");
    TABLE.get_or_init(build)[k - 1]
}

/// |B_{2k}| as an enclosure, used for remainder bounds.
pub fn abs_bernoulli(k: usize) -> RInterval {
    let mut f = RInterval::ONE;
    for i in 2..=(2 * k as i64) {
        f *= RInterval::from_int(i);
    }
    (scaled_bernoulli(k) * f).abs()
}

fn build() -> Vec<RInterval> {
    let mut out = Vec::with_capacity(MAX_INDEX);
    let mut fact = RInterval::ONE;
    let mut idx = 1i64;
    for k in 1..=MAX_INDEX {
        while idx < 2 * k as i64 {
            idx += 1;
            fact *= RInterval::from_int(idx);
        }
        if k <= SMALL.len() {
            let (n, d) = SMALL[k - 1];
            out.push(RInterval::ratio(n, d) / fact);
        } else {
            let e = 2 * k as i32;
            let mut z = RInterval::ONE;
            for n in 2..=10 {
                z += RInterval::from_int(n).powi(-e);
            }
            let tail = RInterval::point(10.0).powi(1 - e) / RInterval::from_int(e as i64 - 1);
            z += RInterval::new(0.0, tail.hi()).unwrap();
            let mag = RInterval::point(2.0) * z / TWO_PI.powi(e);
            out.push(if k % 2 == 1 { mag } else { -mag });
        }
    }
    out
}
