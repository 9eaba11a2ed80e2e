//! Exact conversions between decimal strings and binary64 intervals.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::interval::RInterval;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a decimal number: {0:?}")]
pub struct ParseDecimalError(pub String);

/// A finite decimal `(-1)^neg * digits * 10^exp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decimal {
    pub neg: bool,
    pub digits: BigUint,
    pub exp: i64,
}

impl Decimal {
    pub fn parse(s: &str) -> Result<Self, ParseDecimalError> {
        let err = || ParseDecimalError(s.to_string());
        let t = s.trim();
        let (neg, body) = match t.as_bytes().first() {
            Some(b'-') => (true, &t[1..]),
            Some(b'+') => (false, &t[1..]),
            _ => (false, t),
        };
        let (mant, exp_part) = match body.find(['e', 'E']) {
            Some(i) => (&body[..i], Some(&body[i + 1..])),
            None => (body, None),
        };
        let mut exp: i64 = match exp_part {
            Some(e) => e.parse().map_err(|_| err())?,
            None => 0,
        };
        let (int_part, frac_part) = match mant.find('.') {
            Some(i) => (&mant[..i], &mant[i + 1..]),
            None => (mant, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(err());
        }
        if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let all: String = format!("{int_part}{frac_part}");
        exp -= frac_part.len() as i64;
        let digits = if all.is_empty() { BigUint::zero() } else { all.parse::<BigUint>().map_err(|_| err())? };
        Ok(Self { neg, digits, exp })
    }

    /// Exact rational value as `num / den` with `den > 0`.
    fn as_fraction(&self) -> (BigInt, BigInt) {
        let sign = if self.neg { Sign::Minus } else { Sign::Plus };
        let d = BigInt::from_biguint(sign, self.digits.clone());
        if self.exp >= 0 {
            (d * pow10(self.exp as u64), BigInt::one())
        } else {
            (d, pow10((-self.exp) as u64))
        }
    }
}

fn pow10(e: u64) -> BigInt {
    num_traits::pow(BigInt::from(10u8), e as usize)
}

/// Exact rational value of a finite double as `num / den`.
fn f64_fraction(x: f64) -> (BigInt, BigInt) {
    let bits = x.to_bits();
    let neg = bits >> 63 == 1;
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (m, e) = if exp == 0 { (frac, -1074) } else { (frac | (1u64 << 52), exp - 1075) };
    let mut num = BigInt::from(m);
    if neg {
        num = -num;
    }
    if e >= 0 {
        (num << e as usize, BigInt::one())
    } else {
        (num, BigInt::one() << (-e) as usize)
    }
}

fn cmp_f64_decimal(x: f64, d: &(BigInt, BigInt)) -> Ordering {
    let (xn, xd) = f64_fraction(x);
    (xn * &d.1).cmp(&(&d.0 * xd))
}

/// Smallest interval of doubles containing the decimal value of `s`.
pub fn parse_interval(s: &str) -> Result<RInterval, ParseDecimalError> {
    let dec = Decimal::parse(s)?;
    let nearest: f64 = s.trim().parse().map_err(|_| ParseDecimalError(s.to_string()))?;
    if nearest.is_infinite() {
        return Ok(if nearest > 0.0 {
            RInterval::new(f64::MAX, f64::INFINITY).unwrap()
        } else {
            RInterval::new(f64::NEG_INFINITY, f64::MIN).unwrap()
        });
    }
    let frac = dec.as_fraction();
    let r = match cmp_f64_decimal(nearest, &frac) {
        Ordering::Equal => RInterval::point(nearest),
        Ordering::Greater => RInterval::new(nearest.next_down(), nearest).unwrap(),
        Ordering::Less => RInterval::new(nearest, nearest.next_up()).unwrap(),
    };
    Ok(r)
}

/// Exact decimal expansion of a finite double.
pub fn exact_decimal(x: f64) -> Decimal {
    let (num, den) = f64_fraction(x);
    let neg = num.sign() == Sign::Minus;
    let mag = num.magnitude().clone();
    // den is a power of two 2^k; multiply by 5^k to make it 10^k.
    let k = den.bits() - 1;
    if k == 0 {
        return Decimal { neg, digits: mag, exp: 0 };
    }
    let digits = mag * num_traits::pow(BigUint::from(5u8), k as usize);
    Decimal { neg, digits, exp: -(k as i64) }
}

/// Rounds to `sig` significant digits in the direction given by `up`
/// (toward +inf when true) and formats the result. Values with a decimal
/// exponent in [-5, 15) are printed positionally, others in scientific form.
pub fn round_sci(d: &Decimal, sig: usize, up: bool) -> String {
    if d.digits.is_zero() {
        return "0".to_string();
    }
    let s = d.digits.to_str_radix(10);
    let n = s.len();
    let mut exp = d.exp;
    let mut kept: BigUint = if n > sig {
        let head: BigUint = s[..sig].parse().unwrap();
        let dropped_nonzero = s[sig..].bytes().any(|b| b != b'0');
        exp += (n - sig) as i64;
        // Away from zero for (up, positive) and (down, negative).
        if dropped_nonzero && (up != d.neg) {
            head + 1u8
        } else {
            head
        }
    } else {
        d.digits.clone()
    };
    let mut ks = kept.to_str_radix(10);
    if ks.len() > sig {
        // Carry produced an extra digit (e.g. 999 -> 1000).
        kept /= 10u8;
        exp += 1;
        ks = kept.to_str_radix(10);
    }
    let ks = ks.trim_end_matches('0');
    let trimmed_zeros = kept.to_str_radix(10).len() - ks.len();
    let exp = exp + trimmed_zeros as i64;
    let digits = if ks.is_empty() { "0" } else { ks };
    // Value = digits * 10^exp; leading digit position:
    let sci_exp = exp + digits.len() as i64 - 1;
    let sign = if d.neg { "-" } else { "" };
    if (-5..15).contains(&sci_exp) {
        if exp >= 0 {
            format!("{sign}{digits}{}", "0".repeat(exp as usize))
        } else {
            let point = digits.len() as i64 + exp;
            if point > 0 {
                let p = point as usize;
                format!("{sign}{}.{}", &digits[..p], &digits[p..])
            } else {
                format!("{sign}0.{}{}", "0".repeat((-point) as usize), digits)
            }
        }
    } else if digits.len() == 1 {
        format!("{sign}{digits}e{sci_exp}")
    } else {
        format!("{sign}{}.{}e{sci_exp}", &digits[..1], &digits[1..])
    }
}

/// Shortest decimal string that parses back to exactly `x`.
pub fn roundtrip(x: f64) -> String {
    format!("{x:e}")
}

/// Smallest multiple of `10^-places` that is `>= x`, computed exactly.
pub fn ceil_places(x: f64, places: u32) -> Decimal {
    let (num, den) = f64_fraction(x);
    let scaled = num * pow10(places as u64);
    let (q, r) = (&scaled / &den, &scaled % &den);
    let q = if r.sign() == Sign::Plus { q + 1 } else { q };
    let neg = q.sign() == Sign::Minus;
    Decimal { neg, digits: q.magnitude().clone(), exp: -(places as i64) }
}

/// Formats a decimal with exactly `places` digits after the point.
pub fn format_fixed(d: &Decimal, places: u32) -> String {
    let shift = -d.exp - places as i64;
    let digits = if shift > 0 {
        &d.digits / num_traits::pow(BigUint::from(10u8), shift as usize)
    } else {
        &d.digits * num_traits::pow(BigUint::from(10u8), (-shift) as usize)
    };
    let mut s = digits.to_str_radix(10);
    let p = places as usize;
    if s.len() <= p {
        s = format!("{}{}", "0".repeat(p + 1 - s.len()), s);
    }
    let (int, frac) = s.split_at(s.len() - p);
    let sign = if d.neg && !d.digits.is_zero() { "-" } else { "" };
    if p == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}
