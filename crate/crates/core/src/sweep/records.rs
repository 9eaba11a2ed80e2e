//! Record sweeps: pieces whose |ζ| upper bound beats every earlier piece.
//!
//! File format:
//!
//! ```text
//! # zeta-records v1 range=[lo,hi] piece=w
//! a y
//! ```
//!
//! with `a` strictly increasing and `y` strictly increasing, every number in
//! shortest round-trip form.

use std::fs;
use std::path::Path;

use rayon::prelude::*;

use super::{partition, power_log_bound, SweepConfig, SweepError, CHUNK};
use crate::decimal::{ceil_places, format_fixed, Decimal};
use crate::interval::RInterval;
use crate::zeta::{abs_zeta_half_with, ZetaError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Record {
    /// Left end of the piece.
    pub a: f64,
    /// Upper end of the |ζ| enclosure on the piece.
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RecordFile {
    pub lo: f64,
    pub hi: f64,
    pub piece: f64,
    pub records: Vec<Record>,
}

impl RecordFile {
    pub fn to_text(&self) -> String {
        let mut s = format!("# zeta-records v1 range=[{},{}] piece={}\n", self.lo, self.hi, self.piece);
        for r in &self.records {
            s.push_str(&format!("{} {}\n", r.a, r.y));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, SweepError> {
        let bad = |msg: String| SweepError::Format(msg);
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("empty file".into()))?;
        let rest = header
            .strip_prefix("# zeta-records v1 range=[")
            .ok_or_else(|| bad(format!("unrecognised header {header:?}")))?;
        let (range, piece) =
            rest.split_once("] piece=").ok_or_else(|| bad(format!("unrecognised header {header:?}")))?;
        let (lo, hi) = range.split_once(',').ok_or_else(|| bad(format!("bad range {range:?}")))?;
        let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad(format!("bad number {s:?}")));
        let (lo, hi, piece) = (num(lo)?, num(hi)?, num(piece)?);
        let mut records: Vec<Record> = Vec::new();
        for (i, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let (Some(a), Some(y), None) = (it.next(), it.next(), it.next()) else {
                return Err(bad(format!("line {}: expected \"a y\"", i + 2)));
            };
            let r = Record { a: num(a)?, y: num(y)? };
            if let Some(prev) = records.last() {
                if !(r.a > prev.a && r.y > prev.y) {
                    return Err(bad(format!("line {}: records must increase in a and y", i + 2)));
                }
            }
            records.push(r);
        }
        Ok(Self { lo, hi, piece, records })
    }
}

/// Upper ends of the enclosures on every piece of [lo, hi], then a left to
/// right pass keeping the strict running maxima.
pub fn collect_records(lo: f64, hi: f64, cfg: &SweepConfig) -> Result<Vec<Record>, SweepError> {
    cfg.validate()?;
    if !(lo >= 2.0 && lo < hi && hi.is_finite()) {
        return Err(SweepError::Domain(format!("need 2 <= lo < hi, got [{lo}, {hi}]")));
    }
    let pieces = partition(lo, hi, cfg.piece_width);
    let mut records = Vec::new();
    let mut best = f64::NEG_INFINITY;
    let chunk = (CHUNK as usize) * rayon::current_num_threads();
    for group in pieces.chunks(chunk) {
        let ys: Vec<Result<f64, SweepError>> = group
            .par_iter()
            .map(|&(a, b)| {
                let t = RInterval::new(a, b).map_err(ZetaError::from)?;
                Ok(abs_zeta_half_with(t, &cfg.zeta)?.value.hi())
            })
            .collect();
        for (&(a, _), y) in group.iter().zip(ys) {
            let y = y?;
            if y > best {
                best = y;
                records.push(Record { a, y });
            }
        }
    }
    Ok(records)
}

/// Runs [`collect_records`] and writes the record file to `path`.
pub fn record_sweep(lo: f64, hi: f64, cfg: &SweepConfig, path: &Path) -> Result<RecordFile, SweepError> {
    let records = collect_records(lo, hi, cfg)?;
    let file = RecordFile { lo, hi, piece: cfg.piece_width, records };
    write_records(path, &file)?;
    Ok(file)
}

pub fn write_records(path: &Path, file: &RecordFile) -> Result<(), SweepError> {
    fs::write(path, file.to_text())?;
    Ok(())
}

pub fn read_records(path: &Path) -> Result<RecordFile, SweepError> {
    RecordFile::parse(&fs::read_to_string(path)?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableConstant {
    pub lo: f64,
    pub hi: f64,
    pub records_used: usize,
    /// Enclosure of the largest y / (a^{1/6} log a).
    pub max_ratio: RInterval,
    /// Piece start where the largest ratio occurs.
    pub at: f64,
    /// max_ratio.hi rounded up to four decimals.
    pub constant: Decimal,
}

impl TableConstant {
    pub fn text(&self) -> String {
        format_fixed(&self.constant, 4)
    }

    pub fn value(&self) -> f64 {
        self.text().parse().expect("formatted decimal")
    }
}

/// Four-decimal ceiling of the largest record ratio among pieces starting
/// in [lo, hi). The records must come from a sweep that started at `lo`:
/// a later piece can only fail to be a record by lying below an earlier one,
/// and its ratio is then smaller too, but only if that earlier piece is in
/// range.
pub fn table_constant(file: &RecordFile, lo: f64, hi: f64) -> Result<TableConstant, SweepError> {
    if file.lo != lo {
        return Err(SweepError::Domain(format!("records start at {} but the range starts at {lo}", file.lo)));
    }
    if hi > file.hi {
        return Err(SweepError::Domain(format!("records end at {} before {hi}", file.hi)));
    }
    let mut best: Option<(RInterval, f64)> = None;
    let mut used = 0;
    for r in file.records.iter().filter(|r| r.a >= lo && r.a < hi) {
        used += 1;
        let g = power_log_bound(RInterval::ONE, RInterval::point(r.a))?;
        let ratio = RInterval::point(r.y) / g;
        if best.is_none_or(|(b, _)| ratio.hi() > b.hi()) {
            best = Some((ratio, r.a));
        }
    }
    let (max_ratio, at) = best.ok_or(SweepError::NoRecords { lo, hi })?;
    Ok(TableConstant { lo, hi, records_used: used, max_ratio, at, constant: ceil_places(max_ratio.hi(), 4) })
}
