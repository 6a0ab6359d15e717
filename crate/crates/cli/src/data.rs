//! JSON formats for construction data.
//!
//! A mu file assigns fiber coefficient vectors to base pairs,
//!
//! ```json
//! { "fiber_dim": 4, "terms": [ { "i": 1, "j": 2, "value": ["1", "0", "0", "0"] } ] }
//! ```
//!
//! and a representation file assigns a fiber matrix to base generators,
//!
//! ```json
//! { "fiber_dim": 4, "generators": [ { "index": 1, "matrix": [["0", ...], ...] } ] }
//! ```
//!
//! Indices are 1-based and rationals are strings, as in the algebra JSON
//! schema. Omitted pairs and generators are zero.

use hyperlie_core::construct::{MuForm, Representation};
use hyperlie_core::rational::{parse_rational, Rational};
use hyperlie_core::Matrix;
use serde::Deserialize;

#[derive(Deserialize)]
struct MuFile {
    fiber_dim: usize,
    #[serde(default)]
    terms: Vec<MuTerm>,
}

#[derive(Deserialize)]
struct MuTerm {
    i: usize,
    j: usize,
    value: Vec<String>,
}

#[derive(Deserialize)]
struct RhoFile {
    fiber_dim: usize,
    #[serde(default)]
    generators: Vec<RhoGenerator>,
}

#[derive(Deserialize)]
struct RhoGenerator {
    index: usize,
    matrix: Vec<Vec<String>>,
}

fn parse_values(strings: &[String]) -> Result<Vec<Rational>, String> {
    strings
        .iter()
        .map(|s| parse_rational(s).map_err(|e| format!("bad rational '{s}': {e}")))
        .collect()
}

/// Parses mu data against a base of dimension `base_dim`.
pub fn parse_mu(text: &str, base_dim: usize) -> Result<MuForm, String> {
    let file: MuFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let mut mu = MuForm::new(base_dim, file.fiber_dim);
    for term in &file.terms {
        let in_range = |k: usize| (1..=base_dim).contains(&k);
        if !in_range(term.i) || !in_range(term.j) || term.i == term.j {
            return Err(format!(
                "term (i={}, j={}) is not a pair of distinct indices in 1..={base_dim}",
                term.i, term.j
            ));
        }
        if term.value.len() != file.fiber_dim {
            return Err(format!(
                "value of term (i={}, j={}) has length {}, expected fiber_dim {}",
                term.i,
                term.j,
                term.value.len(),
                file.fiber_dim
            ));
        }
        mu.set(term.i - 1, term.j - 1, parse_values(&term.value)?);
    }
    Ok(mu)
}

/// Parses representation data against a base of dimension `base_dim`.
pub fn parse_rho(text: &str, base_dim: usize) -> Result<Representation, String> {
    let file: RhoFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let r = file.fiber_dim;
    let mut rho = Representation::zero(base_dim, r);
    for gen in &file.generators {
        if !(1..=base_dim).contains(&gen.index) {
            return Err(format!(
                "generator index {} is not in 1..={base_dim}",
                gen.index
            ));
        }
        if gen.matrix.len() != r || gen.matrix.iter().any(|row| row.len() != r) {
            return Err(format!(
                "matrix of generator {} is not {r}x{r}",
                gen.index
            ));
        }
        let mut rows = Vec::with_capacity(r);
        for row in &gen.matrix {
            rows.push(parse_values(row)?);
        }
        rho.set_generator(gen.index - 1, Matrix::from_rows(rows, r));
    }
    Ok(rho)
}
