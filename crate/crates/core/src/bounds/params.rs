//! Parameter sets (k, θ, A₀, t₀) and their key = value text form.

use std::fmt;

use super::BoundsError;
use crate::decimal::{exact_decimal, parse_interval};
use crate::interval::RInterval;

/// Block ratio `k`, shift scale `theta`, initial block scale `a0` and the
/// starting height `t0`. Each value is an enclosure of the decimal it was
/// read from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundParams {
    pub k: RInterval,
    pub theta: RInterval,
    pub a0: RInterval,
    pub t0: RInterval,
}

impl BoundParams {
    pub fn new(k: RInterval, theta: RInterval, a0: RInterval, t0: RInterval) -> Self {
        Self { k, theta, a0, t0 }
    }

    pub fn from_points(k: f64, theta: f64, a0: f64, t0: f64) -> Self {
        Self::new(RInterval::point(k), RInterval::point(theta), RInterval::point(a0), RInterval::point(t0))
    }

    /// Parses each value as an exact decimal.
    pub fn from_decimals(k: &str, theta: &str, a0: &str, t0: &str) -> Result<Self, BoundsError> {
        Ok(Self::new(parse_interval(k)?, parse_interval(theta)?, parse_interval(a0)?, parse_interval(t0)?))
    }

    /// k = 1.16, θ = 7.5, A₀ = 3.37, t₀ = 5.867e9.
    pub fn standard() -> Self {
        Self::from_decimals("1.16", "7.5", "3.37", "5.867e9").expect("valid literals")
    }

    pub fn with_t0(mut self, t0: RInterval) -> Self {
        self.t0 = t0;
        self
    }

    /// Reads `key = value` lines with keys k, theta, a0, t0. Blank lines and
    /// lines starting with '#' are ignored.
    pub fn parse(text: &str) -> Result<Self, BoundsError> {
        let mut vals: [Option<RInterval>; 4] = [None; 4];
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| BoundsError::Parse(format!("line {}: expected key = value", no + 1)))?;
            let slot = match key.trim() {
                "k" => 0,
                "theta" => 1,
                "a0" => 2,
                "t0" => 3,
                other => return Err(BoundsError::Parse(format!("line {}: unknown key {other:?}", no + 1))),
            };
            if vals[slot].is_some() {
                return Err(BoundsError::Parse(format!("line {}: duplicate key {:?}", no + 1, key.trim())));
            }
            vals[slot] = Some(parse_interval(value)?);
        }
        let get = |i: usize, name: &str| vals[i].ok_or_else(|| BoundsError::Parse(format!("missing key {name}")));
        Ok(Self::new(get(0, "k")?, get(1, "theta")?, get(2, "a0")?, get(3, "t0")?))
    }

    pub fn to_text(&self) -> String {
        format!(
            "k = {}\ntheta = {}\na0 = {}\nt0 = {}\n",
            shortest_decimal(self.k),
            shortest_decimal(self.theta),
            shortest_decimal(self.a0),
            shortest_decimal(self.t0)
        )
    }
}

impl fmt::Display for BoundParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k = {}, theta = {}, a0 = {}, t0 = {}",
            shortest_decimal(self.k),
            shortest_decimal(self.theta),
            shortest_decimal(self.a0),
            shortest_decimal(self.t0)
        )
    }
}

/// Shortest scientific decimal whose tightest enclosure is `x` itself. Points
/// that no short decimal hits exactly are written in full; wider intervals
/// fall back to the midpoint.
pub fn shortest_decimal(x: RInterval) -> String {
    let m = x.mid();
    for p in 0..18 {
        let s = format!("{m:.p$e}");
        if parse_interval(&s).is_ok_and(|y| y == x) {
            return s;
        }
    }
    if x.is_point() {
        let d = exact_decimal(m);
        return format!("{}{}e{}", if d.neg { "-" } else { "" }, d.digits, d.exp);
    }
    format!("{m:e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip() {
        let p = BoundParams::standard();
        let text = p.to_text();
        assert!(text.contains("k = 1.16e0"), "{text}");
        assert_eq!(BoundParams::parse(&text).unwrap(), p);
        let q = BoundParams::from_points(1.1234567890123, 7.0, 3.0, 1e9);
        assert_eq!(BoundParams::parse(&q.to_text()).unwrap(), q);
    }

    #[test]
    fn parse_errors() {
        assert!(BoundParams::parse("k = 1.16\ntheta = 7.5\na0 = 3.37").is_err());
        assert!(BoundParams::parse("k = 1.16\nk = 1.2").is_err());
        assert!(BoundParams::parse("q = 1").is_err());
        assert!(BoundParams::parse("k 1.16").is_err());
        let ok = BoundParams::parse("# comment\n\nk=1.16\ntheta = 7.5\na0= 3.37\nt0 =5.867e9\n").unwrap();
        assert_eq!(ok, BoundParams::standard());
    }
}
