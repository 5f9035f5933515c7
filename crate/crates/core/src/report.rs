//! Verification reports: per-cutoff records, verdict, and their CSV and JSON
//! encodings. Every number is written with 17 significant digits so the
//! binary64 value round-trips exactly.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::value::RawValue;

use crate::ComplexValue;

/// Relative tolerance used when none is given.
pub const DEFAULT_TOLERANCE: f64 = 1e-4;

/// Errors below `NOISE_FLOOR · |rhs|` are treated as rounding noise by the
/// slope fit and the monotonicity check.
pub const NOISE_FLOOR: f64 = 1e-12;

/// CSV header shared by all reports.
pub const CSV_HEADER: &str = "V,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportRecord {
    pub cutoff: u64,
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    pub abs_err: f64,
    pub rel_err: f64,
}

impl ReportRecord {
    pub fn new(cutoff: u64, lhs: ComplexValue, rhs: ComplexValue) -> ReportRecord {
        let abs_err = (lhs - rhs).norm();
        ReportRecord { cutoff, lhs, rhs, abs_err, rel_err: abs_err / rhs.norm() }
    }

    fn is_noise(&self) -> bool {
        self.abs_err.is_nan() || self.abs_err <= NOISE_FLOOR * self.rhs.norm()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    /// Which identity was checked, for example `gamma`.
    pub identity: String,
    pub records: Vec<ReportRecord>,
    pub tolerance: f64,
    pub passed: bool,
    /// Least-squares slope of `ln abs_err` against `ln V`.
    pub slope: Option<f64>,
}

/// `{:.16e}`, the shortest fixed-width form that round-trips binary64.
pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_number(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() { format_number(x) } else { "null".into() };
    RawValue::from_string(text).expect("valid JSON number")
}

#[derive(Serialize)]
struct JsonRecord {
    #[serde(rename = "V")]
    cutoff: u64,
    lhs_re: Box<RawValue>,
    lhs_im: Box<RawValue>,
    rhs_re: Box<RawValue>,
    rhs_im: Box<RawValue>,
    abs_err: Box<RawValue>,
    rel_err: Box<RawValue>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    identity: &'a str,
    verdict: &'static str,
    tolerance: Box<RawValue>,
    slope: Box<RawValue>,
    records: Vec<JsonRecord>,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>, records: Vec<ReportRecord>, tolerance: f64) -> VerificationReport {
        let slope = fit_slope(&records);
        let mut report = VerificationReport { identity: identity.into(), records, tolerance, passed: false, slope };
        report.passed = report.judge();
        report
    }

    fn judge(&self) -> bool {
        self.final_record().is_some_and(|r| r.rel_err <= self.tolerance)
    }

    /// The same records judged against another tolerance.
    pub fn with_tolerance(mut self, tolerance: f64) -> VerificationReport {
        self.tolerance = tolerance;
        self.passed = self.judge();
        self
    }

    pub fn final_record(&self) -> Option<&ReportRecord> {
        self.records.last()
    }

    pub fn final_rel_err(&self) -> f64 {
        self.final_record().map_or(f64::NAN, |r| r.rel_err)
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn max_abs_err(&self) -> f64 {
        self.records.iter().map(|r| r.abs_err).fold(0.0, f64::max)
    }

    /// Whether `abs_err` never increases from record `skip` on, ignoring
    /// steps where both errors are at rounding level.
    pub fn is_monotone_after(&self, skip: usize) -> bool {
        self.records
            .windows(2)
            .skip(skip.saturating_sub(1))
            .all(|w| w[1].abs_err <= w[0].abs_err || (w[0].is_noise() && w[1].is_noise()))
    }

    /// Slope between consecutive records; `None` for the first row and
    /// where either error is at rounding level.
    pub fn local_slopes(&self) -> Vec<Option<f64>> {
        std::iter::once(None)
            .chain(self.records.windows(2).map(|w| {
                if w[0].is_noise() || w[1].is_noise() {
                    None
                } else {
                    Some((w[1].abs_err / w[0].abs_err).ln() / (w[1].cutoff as f64 / w[0].cutoff as f64).ln())
                }
            }))
            .collect()
    }

    fn csv_row(r: &ReportRecord) -> String {
        [r.lhs.re, r.lhs.im, r.rhs.re, r.rhs.im, r.abs_err, r.rel_err].iter().fold(
            r.cutoff.to_string(),
            |mut row, &x| {
                row.push(',');
                row.push_str(&format_number(x));
                row
            },
        )
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.records {
            out.push_str(&Self::csv_row(r));
            out.push('\n');
        }
        out
    }

    /// CSV with an extra `slope` column of local slopes (empty where
    /// undefined).
    pub fn to_convergence_csv(&self) -> String {
        let mut out = format!("{CSV_HEADER},slope\n");
        for (r, s) in self.records.iter().zip(self.local_slopes()) {
            let slope = s.map(format_number).unwrap_or_default();
            let _ = writeln!(out, "{},{slope}", Self::csv_row(r));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let report = JsonReport {
            identity: &self.identity,
            verdict: self.verdict(),
            tolerance: json_number(self.tolerance),
            slope: self.slope.map_or_else(|| json_number(f64::NAN), json_number),
            records: self
                .records
                .iter()
                .map(|r| JsonRecord {
                    cutoff: r.cutoff,
                    lhs_re: json_number(r.lhs.re),
                    lhs_im: json_number(r.lhs.im),
                    rhs_re: json_number(r.rhs.re),
                    rhs_im: json_number(r.rhs.im),
                    abs_err: json_number(r.abs_err),
                    rel_err: json_number(r.rel_err),
                })
                .collect(),
        };
        let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
        text.push('\n');
        text
    }
}

/// Least-squares slope of `ln abs_err` on `ln V` over records above the
/// noise floor; needs at least two such records.
pub fn fit_slope(records: &[ReportRecord]) -> Option<f64> {
    let points: Vec<(f64, f64)> = records
        .iter()
        .filter(|r| !r.is_noise() && r.abs_err.is_finite())
        .map(|r| ((r.cutoff as f64).ln(), r.abs_err.ln()))
        .collect();
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}
