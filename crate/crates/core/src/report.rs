//! Summary metrics for contact numbers: the excess `c - 3n` and the ratio
//! `(6n - c) / n^(2/3)`, with a comparison against the known asymptotic
//! interval for that ratio.

use std::fmt;

use thiserror::Error;

/// Asymptotic lower bound on `(6n - c(n)) / n^(2/3)`.
pub const ASYMPTOTIC_LOWER: f64 = 0.926;
/// Asymptotic upper bound on `(6n - c(n)) / n^(2/3)`.
pub const ASYMPTOTIC_UPPER: f64 = 7.862;

pub const ASYMPTOTIC_NOTE: &str = "asymptotic reference, valid for n -> infinity, not a constraint at finite n";

pub const TSV_HEADER: &str = "n\tc\tc_minus_3n\tratio\tratio_full";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error("ball count must be at least 1")]
    NoBalls,
    #[error("{c} contacts among {n} balls is impossible (at most {max})", max = 6 * .n)]
    TooManyContacts { n: usize, c: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub n: usize,
    pub c: usize,
    pub excess: i64,
    pub ratio: f64,
    pub ratio_display: String,
}

impl ReportRow {
    pub fn to_tsv(&self) -> String {
        format!("{}\t{}\t{}\t{}\t{:.9}", self.n, self.c, self.excess, self.ratio_display, self.ratio)
    }
}

/// `n^(2/3)`, exact for perfect cubes.
fn two_thirds_power(n: usize) -> f64 {
    let r = (n as f64).cbrt();
    let whole = r.round();
    let root = if (whole as usize).pow(3) == n { whole } else { r };
    root * root
}

fn check(n: usize, c: usize) -> Result<(), ReportError> {
    if n == 0 {
        return Err(ReportError::NoBalls);
    }
    if c > 6 * n {
        return Err(ReportError::TooManyContacts { n, c });
    }
    Ok(())
}

pub fn metrics_row(n: usize, c: usize) -> Result<ReportRow, ReportError> {
    check(n, c)?;
    let ratio = (6 * n - c) as f64 / two_thirds_power(n);
    Ok(ReportRow { n, c, excess: c as i64 - 3 * n as i64, ratio, ratio_display: format!("{ratio:.1}") })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Relation {
    Below,
    Inside,
    Above,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Below => "below",
            Relation::Inside => "inside",
            Relation::Above => "above",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub lower: f64,
    pub upper: f64,
    pub ratio: f64,
    pub relation: Relation,
    pub note: &'static str,
}

pub fn bound_check(n: usize, c: usize) -> Result<BoundCheck, ReportError> {
    let row = metrics_row(n, c)?;
    let relation = if row.ratio <= ASYMPTOTIC_LOWER {
        Relation::Below
    } else if row.ratio >= ASYMPTOTIC_UPPER {
        Relation::Above
    } else {
        Relation::Inside
    };
    Ok(BoundCheck {
        lower: ASYMPTOTIC_LOWER,
        upper: ASYMPTOTIC_UPPER,
        ratio: row.ratio,
        relation,
        note: ASYMPTOTIC_NOTE,
    })
}

/// Tab-separated table, one row per `(n, c)`, header first.
pub fn summary_table(rows: &[(usize, usize)]) -> Result<String, ReportError> {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for &(n, c) in rows {
        out.push_str(&metrics_row(n, c)?.to_tsv());
        out.push('\n');
    }
    Ok(out)
}
