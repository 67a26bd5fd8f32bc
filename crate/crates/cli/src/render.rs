//! Text encodings of polynomials: dense vectors, sparse term lists, LaTeX and
//! the frozen JSON records.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use phipq::SparsePoly;

use crate::error::CliError;

/// Dense output refuses polynomials with more than this many coefficients
/// unless `--max-degree` says otherwise.
pub const DEFAULT_MAX_DEGREE: u64 = 999_999;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Dense,
    Sparse,
    Latex,
    Json,
}

/// `[1, -1, 1]`
pub fn dense(coeffs: &[i64]) -> String {
    let body: Vec<String> = coeffs.iter().map(i64::to_string).collect();
    format!("[{}]", body.join(", "))
}

/// `0:1 1:-1 2:1`, ascending; the zero polynomial is `0:0`.
pub fn sparse(poly: &SparsePoly) -> String {
    if poly.is_zero() {
        return "0:0".into();
    }
    let body: Vec<String> = poly
        .terms()
        .iter()
        .map(|(e, c)| format!("{e}:{c}"))
        .collect();
    body.join(" ")
}

/// Descending exponents, unit coefficients elided: `X^{8} - X^{7} + X - 1`.
pub fn latex(poly: &SparsePoly) -> String {
    if poly.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, &(exp, coeff)) in poly.terms().iter().rev().enumerate() {
        match (i, coeff < 0) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let magnitude = coeff.unsigned_abs();
        if magnitude != 1 || exp == 0 {
            out.push_str(&magnitude.to_string());
        }
        match exp {
            0 => {}
            1 => out.push('X'),
            _ => out.push_str(&format!("X^{{{exp}}}")),
        }
    }
    out
}

pub fn parse_dense(text: &str) -> Result<SparsePoly, CliError> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| CliError::Parse(format!("not a dense vector: {text}")))?;
    let coeffs = inner
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Parse(format!("bad coefficient in {text}: {e}")))?;
    Ok(SparsePoly::from_dense(&coeffs))
}

pub fn parse_sparse(text: &str) -> Result<SparsePoly, CliError> {
    let terms = text
        .split_whitespace()
        .map(|term| {
            let (e, c) = term
                .split_once(':')
                .ok_or_else(|| CliError::Parse(format!("bad term `{term}`")))?;
            let e = e
                .parse::<u64>()
                .map_err(|err| CliError::Parse(format!("`{term}`: {err}")))?;
            let c = c
                .parse::<i64>()
                .map_err(|err| CliError::Parse(format!("`{term}`: {err}")))?;
            Ok((e, c))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(SparsePoly::from_terms(terms)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiRecord {
    pub p: u64,
    pub q: u64,
    pub method: String,
    pub degree: u64,
    pub coeffs: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorEntry {
    pub label: String,
    pub coeffs: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub a: u64,
    pub b: u64,
    pub swapped: bool,
    pub factors: Vec<FactorEntry>,
}

pub fn to_json<T: Serialize>(record: &T) -> String {
    serde_json::to_string(record).expect("records serialize infallibly")
}

/// Parses a record and writes it back out; the result should equal the input.
pub fn reemit_json<T>(text: &str) -> Result<String, CliError>
where
    T: Serialize + for<'de> Deserialize<'de>,
{
    let record: T = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(to_json(&record))
}
