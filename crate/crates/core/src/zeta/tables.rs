//! Cached enclosures of ln n and n^(-1/2) for small integers.

use std::sync::OnceLock;

use crate::interval::RInterval;

const SIZE: usize = 1 << 16;

struct Tables {
    ln: Vec<RInterval>,
    inv_sqrt: Vec<RInterval>,
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| {
        let mut ln = Vec::with_capacity(SIZE);
        let mut inv_sqrt = Vec::with_capacity(SIZE);
        ln.push(RInterval::ENTIRE);
        inv_sqrt.push(RInterval::ENTIRE);
        for n in 1..SIZE {
            ln.push(compute_ln(n as u64));
            inv_sqrt.push(compute_inv_sqrt(n as u64));
        }
        Tables { ln, inv_sqrt }
    })
}

fn compute_ln(n: u64) -> RInterval {
    RInterval::from_int(n as i64).ln().expect("n >= 1")
}

fn compute_inv_sqrt(n: u64) -> RInterval {
    RInterval::ONE / RInterval::from_int(n as i64).sqrt().expect("n >= 1")
}

/// ln n for n >= 1.
pub fn ln(n: u64) -> RInterval {
    debug_assert!(n >= 1);
    if (n as usize) < SIZE {
        tables().ln[n as usize]
    } else {
        compute_ln(n)
    }
}

/// n^(-1/2) for n >= 1.
pub fn inv_sqrt(n: u64) -> RInterval {
    debug_assert!(n >= 1);
    if (n as usize) < SIZE {
        tables().inv_sqrt[n as usize]
    } else {
        compute_inv_sqrt(n)
    }
}
