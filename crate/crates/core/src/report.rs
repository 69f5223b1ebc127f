//! Certification reports for a single 0/1 matrix.
//!
//! Rationals are carried as reduced `p/q` strings (integers print without a
//! denominator). The 4-place decimal next to each value is for reading only.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::binary::Matrix01;
use crate::certify::{verdict_from_lagrange, Verdict, VerdictKind};
use crate::error::{Error, Result};
use crate::geometry::{geometry_report, GeometryReport};
use crate::linalg::Rational;
use crate::simplex::{border_01, lagrange_data};

pub const TOOL_VERSION: &str = concat!("detcert ", env!("CARGO_PKG_VERSION"));

/// Renders `r` with `places` decimals, rounding half to even.
pub fn decimal_round_half_even(r: &Rational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let num = r.numer().abs() * &scale;
    let den = r.denom();
    let (mut q, rem) = num.div_rem(den);
    let twice = rem * 2u32;
    if twice > *den || (twice == *den && q.is_odd()) {
        q += 1u32;
    }
    let digits = q.to_string();
    let places = places as usize;
    let padded = format!("{digits:0>width$}", width = places + 1);
    let (int_part, frac_part) = padded.split_at(padded.len() - places);
    let sign = if r.is_negative() && !q.is_zero() { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalValue {
    pub exact: String,
    pub decimal: String,
}

impl RationalValue {
    pub fn new(r: &Rational) -> Self {
        RationalValue {
            exact: r.to_string(),
            decimal: decimal_round_half_even(r, 4),
        }
    }

    pub fn value(&self) -> std::result::Result<Rational, String> {
        self.exact
            .parse()
            .map_err(|e| format!("bad rational '{}': {e}", self.exact))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub kind: String,
    pub witness_rows: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub order: usize,
    pub det: String,
    pub row_sums: Vec<RationalValue>,
    pub axial_diameters: Vec<RationalValue>,
    pub alpha: RationalValue,
    pub xi: RationalValue,
    pub verdict: VerdictJson,
    /// Order of the ±1 matrix the 0/1 input was derived from, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduced_from_pm1_order: Option<usize>,
    pub tool_version: String,
}

/// Verdict and geometry of the simplex spanned by a 0/1 matrix and the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub verdict: Verdict,
    pub geometry: GeometryReport,
}

pub fn analyze(m: &Matrix01) -> Result<Analysis> {
    let det = m.det();
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let a = border_01(m);
    let l = lagrange_data(&a)?;
    let verdict = verdict_from_lagrange(&l, det)?;
    let geometry = geometry_report(&l, &a.vertices());
    Ok(Analysis { verdict, geometry })
}

impl Report {
    pub fn from_analysis(analysis: &Analysis) -> Self {
        let v = &analysis.verdict;
        let g = &analysis.geometry;
        Report {
            order: v.sums.order(),
            det: v.det_value.to_string(),
            row_sums: v.sums.sums.iter().map(RationalValue::new).collect(),
            axial_diameters: g.axial_diameters.iter().map(RationalValue::new).collect(),
            alpha: RationalValue::new(&g.alpha),
            xi: RationalValue::new(&g.xi),
            verdict: VerdictJson {
                kind: v.kind.as_str().to_string(),
                witness_rows: v.witness_rows.clone(),
            },
            reduced_from_pm1_order: None,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn verdict_kind(&self) -> Option<VerdictKind> {
        match self.verdict.kind.as_str() {
            "NotMaximal" => Some(VerdictKind::NotMaximal),
            "NecessaryConditionHolds" => Some(VerdictKind::NecessaryConditionHolds),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "order: {}", self.order);
        if let Some(k) = self.reduced_from_pm1_order {
            let _ = writeln!(out, "derived from ±1 matrix of order {k}");
        }
        let _ = writeln!(out, "det: {}", self.det);
        let _ = writeln!(out, "row sums (i: exact ~ decimal):");
        for (i, s) in self.row_sums.iter().enumerate() {
            let _ = writeln!(out, "  {}: {} ~ {}", i + 1, s.exact, s.decimal);
        }
        let _ = writeln!(out, "axial diameters:");
        for (i, d) in self.axial_diameters.iter().enumerate() {
            let _ = writeln!(out, "  {}: {} ~ {}", i + 1, d.exact, d.decimal);
        }
        let _ = writeln!(out, "alpha: {} ~ {}", self.alpha.exact, self.alpha.decimal);
        let _ = writeln!(out, "xi: {} ~ {}", self.xi.exact, self.xi.decimal);
        let _ = writeln!(out, "verdict: {}", self.verdict.kind);
        if !self.verdict.witness_rows.is_empty() {
            let rows: Vec<String> = self
                .verdict
                .witness_rows
                .iter()
                .map(usize::to_string)
                .collect();
            let _ = writeln!(out, "witness rows: {}", rows.join(", "));
        }
        out
    }
}
