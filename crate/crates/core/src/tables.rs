//! Relative-error tables for the two-sided approximation of
//! F_ν(x) = I_ν(x) L_{ν−1}(x) − I_{ν−1}(x) L_ν(x).
//!
//! With c₀ = √π 2^{ν−1} Γ(ν+½),
//!
//! * Lb_ν(x) = x^{ν−1} I_{ν+1}(x) / c₀,
//! * Ub_ν(x) = Lb_ν(x) · (1 + (1 − I_{ν+3}(x)/I_{ν+1}(x)) / (2ν+1)),
//!
//! and Lb < F < Ub for ν > −1/2. Table T1 holds (F − Lb)/F, table T2 holds
//! (Ub − F)/F.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integrals::struve_bessel_f;
use crate::scaled::ScaledReal;
use crate::specfun::{gamma_scaled, i_value};

pub const TABLE_NU: [f64; 6] = [-0.25, 0.0, 2.5, 5.0, 7.5, 10.0];
pub const TABLE_X: [f64; 7] = [0.5, 5.0, 10.0, 15.0, 25.0, 50.0, 100.0];
/// Allowed |computed − reference| after rounding.
pub const TABLE_TOL: f64 = 5e-4;

const REFERENCE_CSV: &str = include_str!("../fixtures/reference_tables.csv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Table {
    T1,
    T2,
}

impl std::str::FromStr for Table {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" | "T1" | "t1" => Ok(Table::T1),
            "2" | "T2" | "t2" => Ok(Table::T2),
            _ => Err(Error::OutOfDomain(format!("unknown table `{s}` (expected 1 or 2)"))),
        }
    }
}

impl std::fmt::Display for Table {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Table::T1 => "T1",
            Table::T2 => "T2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TableCell {
    pub table: Table,
    pub nu: f64,
    pub x: f64,
    /// Rounded half-to-even to 4 decimals.
    pub rel_err: f64,
    /// Unrounded value.
    pub raw: f64,
    /// Published value for this cell, when the grid point is tabulated.
    pub reference: Option<f64>,
}

impl TableCell {
    /// |rel_err − reference|
    pub fn diff(&self) -> Option<f64> {
        self.reference.map(|r| (self.rel_err - r).abs())
    }
}

/// Rounds half-to-even at 4 decimals.
pub fn round4(v: f64) -> f64 {
    (v * 1e4).round_ties_even() / 1e4
}

/// (F − Lb)/F and (Ub − F)/F at one point.
pub fn relative_errors(nu: f64, x: f64) -> Result<(f64, f64)> {
    let f = struve_bessel_f(nu, x)?.value;
    let c0 = gamma_scaled(nu + 0.5).mul_exp((nu - 1.0) * std::f64::consts::LN_2) * PI.sqrt();
    let i1 = i_value(nu + 1.0, x);
    let lb = ScaledReal::exp((nu - 1.0) * x.ln()) * i1 / c0;
    let corr = 1.0 - (i_value(nu + 3.0, x) / i1).to_f64();
    let ub = lb * (1.0 + corr / (2.0 * nu + 1.0));
    Ok((((f - lb) / f).to_f64(), ((ub - f) / f).to_f64()))
}

/// The reference cells shipped with the crate.
pub fn reference_cells() -> Vec<(Table, f64, f64, f64)> {
    #[derive(Deserialize)]
    struct Row {
        table: Table,
        nu: f64,
        x: f64,
        rel_err: f64,
    }
    csv::Reader::from_reader(REFERENCE_CSV.as_bytes())
        .deserialize::<Row>()
        .map(|r| {
            let r = r.expect("reference table fixture is well-formed");
            (r.table, r.nu, r.x, r.rel_err)
        })
        .collect()
}

fn reference_for(table: Table, nu: f64, x: f64) -> Option<f64> {
    reference_cells().into_iter().find(|c| c.0 == table && c.1 == nu && c.2 == x).map(|c| c.3)
}

/// The 6×7 grid of `table`, rows ν ∈ [`TABLE_NU`], columns x ∈ [`TABLE_X`].
pub fn reproduce_table(table: Table) -> Vec<TableCell> {
    let pts: Vec<(f64, f64)> = TABLE_NU.iter().flat_map(|&nu| TABLE_X.iter().map(move |&x| (nu, x))).collect();
    crate::par_map(&pts, |&(nu, x)| {
        let (t1, t2) = relative_errors(nu, x).expect("table grid lies inside the F_nu domain");
        let raw = match table {
            Table::T1 => t1,
            Table::T2 => t2,
        };
        TableCell { table, nu, x, rel_err: round4(raw), raw, reference: reference_for(table, nu, x) }
    })
}
