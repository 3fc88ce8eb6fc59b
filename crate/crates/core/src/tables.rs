//! Renders the published integer tables of the census family and flattens
//! them into sequences.
//!
//! Four tables are coefficient triangles indexed by `(n, k)` (rows end at
//! the last nonzero coefficient, and the all-zero `k = 0` column is kept,
//! matching the printed originals); four are square arrays indexed by
//! `(n, r)`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::closed_forms::{
    b_n0, coeff_k1, coeff_k2, degree_formula, leading_coeff, special_row, SpecialRow,
};
use crate::polynomial::IntPolynomial;

/// The eight published tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableName {
    /// Coefficients of `B(n, 0)`, a shifted binomial triangle.
    Bn0k,
    /// Coefficients of `B(n, 1)`.
    Bn1k,
    /// Coefficients of `B(n, 2)`, the twist-knot shadows.
    Bn2k,
    /// Coefficients of the diagonal `B(n, n)`.
    Bnnk,
    /// One-circle state counts `nr + 1`.
    Bnr1,
    /// Two-circle state counts.
    Bnr2,
    /// Leading coefficients of `B(n, r)`.
    Leading,
    /// Degrees `d(n, r)`.
    Degree,
}

/// Table shape: coefficient triangle over `k`, or square array over `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Triangle,
    Square,
}

impl TableName {
    pub const ALL: [Self; 8] = [
        Self::Bn0k,
        Self::Bn1k,
        Self::Bn2k,
        Self::Bnnk,
        Self::Bnr1,
        Self::Bnr2,
        Self::Leading,
        Self::Degree,
    ];

    pub fn kind(self) -> TableKind {
        match self {
            Self::Bn0k | Self::Bn1k | Self::Bn2k | Self::Bnnk => TableKind::Triangle,
            Self::Bnr1 | Self::Bnr2 | Self::Leading | Self::Degree => TableKind::Square,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Self::Bn0k => "bn0k",
            Self::Bn1k => "bn1k",
            Self::Bn2k => "bn2k",
            Self::Bnnk => "bnnk",
            Self::Bnr1 => "bnr1",
            Self::Bnr2 => "bnr2",
            Self::Leading => "leading",
            Self::Degree => "degree",
        }
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Rejected table name token.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnknownTable;

impl fmt::Display for UnknownTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown table name (expected one of bn0k, bn1k, bn2k, bnnk, bnr1, bnr2, leading, degree)")
    }
}

impl core::error::Error for UnknownTable {}

impl FromStr for TableName {
    type Err = UnknownTable;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|name| name.token() == s)
            .ok_or(UnknownTable)
    }
}

/// A table plus the number of rows to materialize. Square tables are
/// rendered `rows x rows`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableSpec {
    pub name: TableName,
    pub rows: u32,
}

impl TableSpec {
    /// The printed window: eight rows.
    pub fn new(name: TableName) -> Self {
        Self { name, rows: 8 }
    }
}

/// Reading order when flattening a table into a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReadOrder {
    ByRows,
    ByAntidiagonals,
}

/// Rejected reading-order token.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnknownOrder;

impl fmt::Display for UnknownOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown reading order (expected by-rows or by-antidiagonals)")
    }
}

impl core::error::Error for UnknownOrder {}

impl FromStr for ReadOrder {
    type Err = UnknownOrder;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "by-rows" => Ok(Self::ByRows),
            "by-antidiagonals" => Ok(Self::ByAntidiagonals),
            _ => Err(UnknownOrder),
        }
    }
}

/// The polynomial whose coefficients form row `n` of a triangle table.
fn row_polynomial(name: TableName, n: u32) -> IntPolynomial {
    match name {
        TableName::Bn0k => b_n0(n),
        TableName::Bn1k => special_row(SpecialRow::R1, n),
        TableName::Bn2k => special_row(SpecialRow::R2, n),
        TableName::Bnnk => special_row(SpecialRow::Diagonal, n),
        _ => unreachable!("square tables have no row polynomial"),
    }
}

fn triangle_row(name: TableName, n: u32) -> Vec<BigInt> {
    row_polynomial(name, n).coeffs().to_vec()
}

fn square_entry(name: TableName, n: u32, r: u32) -> BigInt {
    match name {
        TableName::Bnr1 => coeff_k1(n, r),
        TableName::Bnr2 => coeff_k2(n, r),
        TableName::Leading => {
            leading_coeff(n.into(), r.into()).expect("finite indices always have a leading term")
        }
        TableName::Degree => BigInt::from(degree_formula(n, r)),
        _ => unreachable!("triangle tables have no square entries"),
    }
}

/// Materializes the table. Triangle rows run from `k = 0` to the last
/// nonzero coefficient; square tables are `rows x rows`.
pub fn render_table(spec: &TableSpec) -> Vec<Vec<BigInt>> {
    match spec.name.kind() {
        TableKind::Triangle => (0..spec.rows)
            .map(|n| triangle_row(spec.name, n))
            .collect(),
        TableKind::Square => (0..spec.rows)
            .map(|n| (0..spec.rows).map(|r| square_entry(spec.name, n, r)).collect())
            .collect(),
    }
}

/// Flattens a table into its first `terms` entries in the given reading
/// order.
///
/// Triangles are read over their ragged rows; square arrays extend without
/// bound along antidiagonals, while row order keeps the printed
/// eight-column window (a row-by-row reading of an unbounded square never
/// leaves row zero).
pub fn emit_sequence(name: TableName, terms: usize, order: ReadOrder) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(terms);
    match (name.kind(), order) {
        (TableKind::Triangle, ReadOrder::ByRows) => {
            let mut n = 0;
            while out.len() < terms {
                out.extend(triangle_row(name, n));
                n += 1;
            }
        }
        (TableKind::Triangle, ReadOrder::ByAntidiagonals) => {
            let mut rows: Vec<Vec<BigInt>> = Vec::new();
            let mut d = 0;
            while out.len() < terms {
                for n in 0..=d {
                    if rows.len() == n {
                        rows.push(triangle_row(name, n as u32));
                    }
                    let k = d - n;
                    if let Some(v) = rows[n].get(k) {
                        out.push(v.clone());
                    }
                }
                d += 1;
            }
        }
        (TableKind::Square, ReadOrder::ByRows) => {
            let mut n = 0;
            while out.len() < terms {
                out.extend((0..8).map(|r| square_entry(name, n, r)));
                n += 1;
            }
        }
        (TableKind::Square, ReadOrder::ByAntidiagonals) => {
            let mut d = 0;
            while out.len() < terms {
                out.extend((0..=d).map(|n| square_entry(name, n, d - n)));
                d += 1;
            }
        }
    }
    out.truncate(terms);
    out
}
