//! Text renderings: polynomials as coefficient lists or human-readable
//! sums, tables as csv/tsv/markdown, sequences as indexed lines.
//!
//! All output is LF-terminated UTF-8 with no trailing whitespace; golden
//! tests compare bytes.

use std::fmt::Write as _;

use clap::ValueEnum;
use kstates_core::tables::TableKind;
use kstates_core::{BigInt, IntPolynomial};

/// Ascending space-separated coefficient list; the zero polynomial prints
/// as `0`.
pub fn format_coeffs(p: &IntPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = p.coeffs().iter().map(BigInt::to_string).collect();
    parts.join(" ")
}

/// Parses a whitespace-separated coefficient list. Reformatting the result
/// with [`format_coeffs`] reproduces any list this accepts, up to
/// normalization of trailing zeros.
pub fn parse_coeffs(s: &str) -> Option<IntPolynomial> {
    let coeffs: Option<Vec<BigInt>> = s.split_whitespace().map(|t| t.parse().ok()).collect();
    let coeffs = coeffs?;
    if coeffs.is_empty() {
        return None;
    }
    Some(IntPolynomial::from_coeffs(coeffs))
}

/// Readable sum in ascending powers, like `5x + 8x^2 + 3x^3`.
pub fn format_human(p: &IntPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        let repr = c.to_string();
        if repr == "0" {
            continue;
        }
        let (negative, magnitude) = match repr.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, repr.as_str()),
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if k == 0 || magnitude != "1" {
            out.push_str(magnitude);
        }
        match k {
            0 => {}
            1 => out.push('x'),
            _ => {
                let _ = write!(out, "x^{k}");
            }
        }
    }
    out
}

/// `k count` lines for every nonzero coefficient, ascending in `k`.
pub fn format_histogram(p: &IntPolynomial) -> String {
    let mut lines = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.to_string() != "0" {
            lines.push(format!("{k} {c}"));
        }
    }
    lines.join("\n")
}

/// `index value` lines, zero-based.
pub fn format_sequence(values: &[BigInt]) -> String {
    let lines: Vec<String> = values
        .iter()
        .enumerate()
        .map(|(i, v)| format!("{i} {v}"))
        .collect();
    lines.join("\n")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum TableFormat {
    #[default]
    Csv,
    Tsv,
    Markdown,
}

/// Renders a table matrix. Csv and tsv emit bare delimited values; the
/// markdown form adds the row-index column under a `n \ k` or `n \ r`
/// corner header.
pub fn format_table(matrix: &[Vec<BigInt>], kind: TableKind, format: TableFormat) -> String {
    match format {
        TableFormat::Csv => delimited(matrix, ","),
        TableFormat::Tsv => delimited(matrix, "\t"),
        TableFormat::Markdown => markdown(matrix, kind),
    }
}

fn delimited(matrix: &[Vec<BigInt>], sep: &str) -> String {
    let lines: Vec<String> = matrix
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
            cells.join(sep)
        })
        .collect();
    lines.join("\n")
}

fn markdown(matrix: &[Vec<BigInt>], kind: TableKind) -> String {
    let corner = match kind {
        TableKind::Triangle => "n \\ k",
        TableKind::Square => "n \\ r",
    };
    let width = matrix.iter().map(Vec::len).max().unwrap_or(0);
    let mut lines = Vec::with_capacity(matrix.len() + 2);

    let mut header: Vec<String> = vec![corner.into()];
    header.extend((0..width).map(|j| j.to_string()));
    lines.push(pipe_row(&header));
    lines.push(pipe_row(&vec!["---".into(); width + 1]));

    for (n, row) in matrix.iter().enumerate() {
        let mut cells: Vec<String> = vec![n.to_string()];
        cells.extend(row.iter().map(BigInt::to_string));
        cells.resize(width + 1, String::new());
        lines.push(pipe_row(&cells));
    }
    lines.join("\n")
}

fn pipe_row(cells: &[String]) -> String {
    let mut line = String::from("|");
    for cell in cells {
        line.push(' ');
        line.push_str(cell);
        if cell.is_empty() {
            // Keep the line free of doubled spaces and trailing blanks.
            line.pop();
        }
        line.push_str(" |");
    }
    line
}
