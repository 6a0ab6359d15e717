//! Text and JSON formats for algebra specifications.
//!
//! The text format is a line-oriented structure-equation DSL:
//!
//! ```text
//! name n8
//! dim 8
//! de8 = e12 - e34
//! J1 e1 = e2
//! J1 e2 = -e1
//! ...
//! ```
//!
//! A line `de<k> = <terms>` lists the value of the Chevalley-Eilenberg
//! differential on e^k as a signed rational combination of basis 2-forms
//! e^{ij}. Under the convention d a(x, y) = -a([x, y]), the term +c e^{ij}
//! contributes c[i][j][k] = -c, so `de8 = e12 - e34` means [e1, e2] = -e8
//! and [e3, e4] = e8. Pair indices are single digits juxtaposed; indices of
//! 10 or more are braced, as in `e{10}{11}` or `e1{12}`. `de<k> = 0` states
//! the differential vanishes; omitted targets default to zero. Lines
//! `J<a> e<i> = <combination>` give the columns of the three complex
//! structure candidates; single indices may be written plain (`e10`). The
//! J block is optional as a whole, but once any J line appears all three
//! matrices must be fully specified. `name <text>` and `notes <text>` carry
//! metadata, `dim <n>` must precede all structure lines, blank lines and
//! lines starting with `#` are ignored.
//!
//! The JSON format carries the same content with explicit brackets:
//! `{"dim": n, "name": ..., "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}],
//! "J": [rows x 3]}`. Indices are 1-based in both formats and rationals are
//! always strings. Serialization of either format is deterministic, and
//! parse(serialize(spec)) returns the spec unchanged.

use crate::error::HyperlieError;
use crate::hyper::{HypercomplexLieAlgebra, HypercomplexStructure};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::rational::{format_combination, format_rational, parse_rational, Rational};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

/// A parse failure with its 1-based position in the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Parsed algebra specification. Brackets are stored 0-based with i < j;
/// `brackets[(i, j)][k]` is the coefficient of e_k in [e_i, e_j], and zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub name: String,
    pub notes: Option<String>,
    pub dim: usize,
    pub brackets: BTreeMap<(usize, usize), BTreeMap<usize, Rational>>,
    pub j: Option<[Matrix; 3]>,
}

impl AlgebraSpec {
    pub fn from_hypercomplex(h: &HypercomplexLieAlgebra) -> AlgebraSpec {
        let n = h.dim();
        let mut brackets: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut coeffs = BTreeMap::new();
                for (k, c) in h.algebra.bracket_basis(i, j).into_iter().enumerate() {
                    if !c.is_zero() {
                        coeffs.insert(k, c);
                    }
                }
                if !coeffs.is_empty() {
                    brackets.insert((i, j), coeffs);
                }
            }
        }
        AlgebraSpec {
            name: h.name.clone(),
            notes: None,
            dim: n,
            brackets,
            j: Some([
                h.structure.j(1).clone(),
                h.structure.j(2).clone(),
                h.structure.j(3).clone(),
            ]),
        }
    }

    pub fn to_lie_algebra(&self) -> LieAlgebra {
        let mut g = LieAlgebra::new(self.dim);
        for (&(i, j), coeffs) in &self.brackets {
            let list: Vec<(usize, Rational)> =
                coeffs.iter().map(|(&k, c)| (k, c.clone())).collect();
            g.set_bracket(i, j, &list);
        }
        g
    }

    /// Builds the full hypercomplex candidate; errors when the spec carries
    /// no complex structures.
    pub fn to_hypercomplex(&self) -> Result<HypercomplexLieAlgebra, HyperlieError> {
        let Some([j1, j2, j3]) = self.j.clone() else {
            return Err(HyperlieError::Unsupported(
                "input defines no complex structures (J1, J2, J3)".to_string(),
            ));
        };
        Ok(HypercomplexLieAlgebra::new(
            self.name.clone(),
            self.to_lie_algebra(),
            HypercomplexStructure::new(j1, j2, j3),
        ))
    }

    /// Deterministic text form: metadata, every `de<k>` line in ascending k
    /// (zeros included), then the J columns in ascending (alpha, column)
    /// order when structures are present.
    pub fn to_dsl(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("name {}\n", self.name));
        if let Some(notes) = &self.notes {
            out.push_str(&format!("notes {notes}\n"));
        }
        out.push_str(&format!("dim {}\n", self.dim));
        for k in 0..self.dim {
            let mut terms: Vec<(usize, usize, Rational)> = Vec::new();
            for (&(i, j), coeffs) in &self.brackets {
                if let Some(c) = coeffs.get(&k) {
                    terms.push((i + 1, j + 1, -c.clone()));
                }
            }
            out.push_str(&format!("de{} = {}\n", k + 1, render_two_form(&terms)));
        }
        if let Some(j) = &self.j {
            for (idx, m) in j.iter().enumerate() {
                for col in 0..self.dim {
                    out.push_str(&format!(
                        "J{} e{} = {}\n",
                        idx + 1,
                        col + 1,
                        format_combination(&m.column(col))
                    ));
                }
            }
        }
        out
    }

    /// Deterministic JSON form matching the documented schema.
    pub fn to_json(&self) -> String {
        let brackets: Vec<JsonBracket> = self
            .brackets
            .iter()
            .map(|(&(i, j), coeffs)| JsonBracket {
                i: i + 1,
                j: j + 1,
                coeffs: coeffs
                    .iter()
                    .map(|(&k, c)| ((k + 1).to_string(), format_rational(c)))
                    .collect(),
            })
            .collect();
        let j = self.j.as_ref().map(|mats| {
            mats.iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|r| m.row(r).iter().map(format_rational).collect())
                        .collect()
                })
                .collect()
        });
        let doc = JsonAlgebra {
            dim: self.dim,
            name: self.name.clone(),
            notes: self.notes.clone(),
            brackets,
            j,
        };
        serde_json::to_string_pretty(&doc).expect("spec serializes to JSON")
    }
}

fn index_token(i: usize) -> String {
    if i >= 10 {
        format!("{{{i}}}")
    } else {
        i.to_string()
    }
}

/// Renders a list of (i, j, m) terms as `m e{ij}` summands, or "0".
fn render_two_form(terms: &[(usize, usize, Rational)]) -> String {
    let mut out = String::new();
    for (i, j, m) in terms {
        if m.is_zero() {
            continue;
        }
        if out.is_empty() {
            if m.is_negative() {
                out.push('-');
            }
        } else if m.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = m.abs();
        if !mag.is_one() {
            out.push_str(&format_rational(&mag));
            out.push(' ');
        }
        out.push_str(&format!("e{}{}", index_token(*i), index_token(*j)));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

struct Scanner<'a> {
    line: &'a [u8],
    line_no: usize,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(line: &'a str, line_no: usize) -> Self {
        Scanner {
            line: line.as_bytes(),
            line_no,
            pos: 0,
        }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line_no,
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.line.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.line.len()
    }

    fn parse_usize(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.line[start..self.pos])
            .expect("digits are valid utf8")
            .parse()
            .map_err(|_| self.err("number out of range"))
    }

    fn parse_digits(&mut self) -> Result<num_bigint::BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        Ok(std::str::from_utf8(&self.line[start..self.pos])
            .expect("digits are valid utf8")
            .parse()
            .expect("digit runs parse as integers"))
    }

    /// Unsigned rational: digits, optionally '/' digits.
    fn parse_coefficient(&mut self) -> Result<Rational, ParseError> {
        let p = self.parse_digits()?;
        if self.eat(b'/') {
            let q = self.parse_digits()?;
            if q.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(Rational::new(p, q))
        } else {
            Ok(Rational::from_integer(p))
        }
    }

    /// A basis index inside a pair: one digit, or a braced number.
    fn parse_pair_index(&mut self, dim: usize) -> Result<usize, ParseError> {
        let idx = if self.eat(b'{') {
            let n = self.parse_usize()?;
            self.expect(b'}')?;
            n
        } else {
            match self.bump() {
                Some(c) if c.is_ascii_digit() => (c - b'0') as usize,
                _ => return Err(self.err("expected a basis index")),
            }
        };
        if idx == 0 || idx > dim {
            return Err(self.err(format!("basis index {idx} out of range for dim {dim}")));
        }
        Ok(idx)
    }

    /// A standalone basis index: a plain number or a braced number.
    fn parse_single_index(&mut self, dim: usize) -> Result<usize, ParseError> {
        let idx = if self.eat(b'{') {
            let n = self.parse_usize()?;
            self.expect(b'}')?;
            n
        } else {
            self.parse_usize()?
        };
        if idx == 0 || idx > dim {
            return Err(self.err(format!("basis index {idx} out of range for dim {dim}")));
        }
        Ok(idx)
    }
}

/// Parses the structure-equation DSL.
pub fn parse_dsl(text: &str) -> Result<AlgebraSpec, ParseError> {
    let mut name: Option<String> = None;
    let mut notes: Option<String> = None;
    let mut dim: Option<usize> = None;
    let mut brackets: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
    let mut seen_de: Vec<bool> = Vec::new();
    let mut j_cols: [Vec<Option<Vec<Rational>>>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    let mut any_j = false;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim_end();
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = line.len() - trimmed.len();
        let mut sc = Scanner::new(line, line_no);
        sc.pos = indent;

        if let Some(rest) = keyword(trimmed, "name") {
            set_meta(&mut name, rest, &sc, "name")?;
        } else if let Some(rest) = keyword(trimmed, "notes") {
            set_meta(&mut notes, rest, &sc, "notes")?;
        } else if let Some(rest) = keyword(trimmed, "dim") {
            if dim.is_some() {
                return Err(sc.err("duplicate 'dim' declaration"));
            }
            let mut dsc = Scanner::new(rest.trim(), line_no);
            dsc.pos = 0;
            let n = dsc
                .parse_usize()
                .map_err(|_| sc.err("expected a dimension after 'dim'"))?;
            dsc.skip_ws();
            if !dsc.at_end() {
                return Err(sc.err("unexpected input after the dimension"));
            }
            if n == 0 {
                return Err(sc.err("dimension must be positive"));
            }
            dim = Some(n);
            seen_de = vec![false; n];
            for cols in &mut j_cols {
                *cols = vec![None; n];
            }
        } else if trimmed.starts_with("de") {
            let n = dim.ok_or_else(|| sc.err("'dim' must be declared before structure equations"))?;
            sc.pos += 2;
            let k = sc.parse_usize()?;
            if k == 0 || k > n {
                return Err(sc.err(format!("target index {k} out of range for dim {n}")));
            }
            if seen_de[k - 1] {
                return Err(sc.err(format!("duplicate structure equation for de{k}")));
            }
            seen_de[k - 1] = true;
            sc.skip_ws();
            sc.expect(b'=')?;
            sc.skip_ws();
            parse_two_form(&mut sc, n, k - 1, &mut brackets)?;
        } else if trimmed.starts_with('J') {
            let n = dim.ok_or_else(|| sc.err("'dim' must be declared before structure lines"))?;
            sc.pos += 1;
            let alpha = match sc.bump() {
                Some(c @ b'1'..=b'3') => (c - b'0') as usize,
                _ => return Err(sc.err("J index must be 1, 2, or 3")),
            };
            sc.skip_ws();
            sc.expect(b'e')?;
            let col = sc.parse_single_index(n)?;
            sc.skip_ws();
            sc.expect(b'=')?;
            sc.skip_ws();
            let v = parse_vector(&mut sc, n)?;
            if j_cols[alpha - 1][col - 1].is_some() {
                return Err(sc.err(format!("duplicate line for J{alpha} e{col}")));
            }
            j_cols[alpha - 1][col - 1] = Some(v);
            any_j = true;
        } else {
            return Err(sc.err(
                "unrecognized line (expected name, notes, dim, de<k>, or J<a>)",
            ));
        }
    }

    let Some(dim) = dim else {
        return Err(ParseError {
            line: last_line + 1,
            column: 1,
            message: "missing 'dim' declaration".to_string(),
        });
    };
    // Drop entries that cancelled to zero.
    for coeffs in brackets.values_mut() {
        coeffs.retain(|_, c| !c.is_zero());
    }
    brackets.retain(|_, coeffs| !coeffs.is_empty());

    let j = if any_j {
        let mut mats = Vec::with_capacity(3);
        for (a, cols) in j_cols.iter().enumerate() {
            let mut m = Matrix::zeros(dim, dim);
            for (c, col) in cols.iter().enumerate() {
                let Some(v) = col else {
                    return Err(ParseError {
                        line: last_line + 1,
                        column: 1,
                        message: format!("J{} is missing a line for column e{}", a + 1, c + 1),
                    });
                };
                m.set_column(c, v);
            }
            mats.push(m);
        }
        Some([mats[0].clone(), mats[1].clone(), mats[2].clone()])
    } else {
        None
    };

    Ok(AlgebraSpec {
        name: name.unwrap_or_else(|| "unnamed".to_string()),
        notes,
        dim,
        brackets,
        j,
    })
}

fn keyword<'a>(line: &'a str, word: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(word)?;
    if rest.is_empty() {
        Some("")
    } else if rest.starts_with(' ') || rest.starts_with('\t') {
        Some(rest)
    } else {
        None
    }
}

fn set_meta(
    slot: &mut Option<String>,
    rest: &str,
    sc: &Scanner,
    what: &str,
) -> Result<(), ParseError> {
    let value = rest.trim();
    if value.is_empty() {
        return Err(sc.err(format!("missing value after '{what}'")));
    }
    if slot.is_some() {
        return Err(sc.err(format!("duplicate '{what}' declaration")));
    }
    *slot = Some(value.to_string());
    Ok(())
}

/// Parses the right side of a `de<k>` line and accumulates bracket
/// coefficients: the term m e^{ij} contributes c[i][j][k] = -m.
fn parse_two_form(
    sc: &mut Scanner,
    dim: usize,
    k: usize,
    brackets: &mut BTreeMap<(usize, usize), BTreeMap<usize, Rational>>,
) -> Result<(), ParseError> {
    if sc.peek() == Some(b'0') {
        sc.bump();
        sc.skip_ws();
        if !sc.at_end() {
            return Err(sc.err("unexpected input after '0'"));
        }
        return Ok(());
    }
    let mut negative = false;
    if sc.eat(b'-') {
        negative = true;
    } else {
        sc.eat(b'+');
    }
    loop {
        sc.skip_ws();
        let mut coeff = if matches!(sc.peek(), Some(c) if c.is_ascii_digit()) {
            let c = sc.parse_coefficient()?;
            sc.skip_ws();
            c
        } else {
            Rational::one()
        };
        if negative {
            coeff = -coeff;
        }
        sc.expect(b'e')
            .map_err(|e| ParseError {
                message: "expected a basis pair like e12 or e{10}{11}".to_string(),
                ..e
            })?;
        let i = sc.parse_pair_index(dim)?;
        let j = sc.parse_pair_index(dim)?;
        if i == j {
            return Err(sc.err(format!("repeated basis index e{i}{i} in pair")));
        }
        // m e^{ij} with i > j is m e^{ji} negated; c[i][j][k] = -m.
        let (a, b, m) = if i < j {
            (i - 1, j - 1, coeff)
        } else {
            (j - 1, i - 1, -coeff)
        };
        *brackets
            .entry((a, b))
            .or_default()
            .entry(k)
            .or_insert_with(Rational::zero) += -m;
        sc.skip_ws();
        if sc.at_end() {
            return Ok(());
        }
        negative = match sc.bump() {
            Some(b'+') => false,
            Some(b'-') => true,
            _ => {
                sc.pos -= 1;
                return Err(sc.err("expected '+' or '-' between terms"));
            }
        };
    }
}

/// Parses a signed combination of single basis vectors, e.g. `e2 - 1/2 e5`.
fn parse_vector(sc: &mut Scanner, dim: usize) -> Result<Vec<Rational>, ParseError> {
    let mut v = vec![Rational::zero(); dim];
    if sc.peek() == Some(b'0') {
        sc.bump();
        sc.skip_ws();
        if !sc.at_end() {
            return Err(sc.err("unexpected input after '0'"));
        }
        return Ok(v);
    }
    let mut negative = false;
    if sc.eat(b'-') {
        negative = true;
    } else {
        sc.eat(b'+');
    }
    loop {
        sc.skip_ws();
        let mut coeff = if matches!(sc.peek(), Some(c) if c.is_ascii_digit()) {
            let c = sc.parse_coefficient()?;
            sc.skip_ws();
            c
        } else {
            Rational::one()
        };
        if negative {
            coeff = -coeff;
        }
        sc.expect(b'e')
            .map_err(|e| ParseError {
                message: "expected a basis vector like e2".to_string(),
                ..e
            })?;
        let i = sc.parse_single_index(dim)?;
        v[i - 1] += coeff;
        sc.skip_ws();
        if sc.at_end() {
            return Ok(v);
        }
        negative = match sc.bump() {
            Some(b'+') => false,
            Some(b'-') => true,
            _ => {
                sc.pos -= 1;
                return Err(sc.err("expected '+' or '-' between terms"));
            }
        };
    }
}

#[derive(Serialize, Deserialize)]
struct JsonAlgebra {
    dim: usize,
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    notes: Option<String>,
    #[serde(default)]
    brackets: Vec<JsonBracket>,
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none")]
    j: Option<Vec<Vec<Vec<String>>>>,
}

#[derive(Serialize, Deserialize)]
struct JsonBracket {
    i: usize,
    j: usize,
    coeffs: BTreeMap<String, String>,
}

fn json_err(message: impl Into<String>) -> ParseError {
    ParseError {
        line: 1,
        column: 1,
        message: message.into(),
    }
}

/// Parses the JSON format.
pub fn parse_json(text: &str) -> Result<AlgebraSpec, ParseError> {
    let doc: JsonAlgebra = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line().max(1),
        column: e.column().max(1),
        message: e.to_string(),
    })?;
    let n = doc.dim;
    if n == 0 {
        return Err(json_err("dim must be positive"));
    }
    let mut brackets: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
    for (pos, entry) in doc.brackets.iter().enumerate() {
        let at = |msg: String| json_err(format!("brackets[{pos}]: {msg}"));
        if entry.i == 0 || entry.i > n || entry.j == 0 || entry.j > n {
            return Err(at(format!(
                "pair ({}, {}) out of range for dim {n}",
                entry.i, entry.j
            )));
        }
        if entry.i == entry.j {
            return Err(at(format!("pair ({}, {}) has equal indices", entry.i, entry.j)));
        }
        let flip = entry.i > entry.j;
        let key = if flip {
            (entry.j - 1, entry.i - 1)
        } else {
            (entry.i - 1, entry.j - 1)
        };
        if brackets.contains_key(&key) {
            return Err(at(format!(
                "duplicate bracket for pair ({}, {})",
                key.0 + 1,
                key.1 + 1
            )));
        }
        let mut coeffs = BTreeMap::new();
        for (ks, cs) in &entry.coeffs {
            let k: usize = ks
                .parse()
                .map_err(|_| at(format!("malformed target index '{ks}'")))?;
            if k == 0 || k > n {
                return Err(at(format!("target index {k} out of range for dim {n}")));
            }
            let mut c = parse_rational(cs).map_err(|e| at(e))?;
            if flip {
                c = -c;
            }
            if !c.is_zero() {
                coeffs.insert(k - 1, c);
            }
        }
        if !coeffs.is_empty() {
            brackets.insert(key, coeffs);
        }
    }
    let j = match doc.j {
        None => None,
        Some(mats) => {
            if mats.len() != 3 {
                return Err(json_err(format!(
                    "J must hold exactly 3 matrices, got {}",
                    mats.len()
                )));
            }
            let mut out = Vec::with_capacity(3);
            for (a, rows) in mats.iter().enumerate() {
                if rows.len() != n {
                    return Err(json_err(format!(
                        "J[{}] has {} rows, expected {n}",
                        a + 1,
                        rows.len()
                    )));
                }
                let mut m = Matrix::zeros(n, n);
                for (r, row) in rows.iter().enumerate() {
                    if row.len() != n {
                        return Err(json_err(format!(
                            "J[{}] row {} has {} entries, expected {n}",
                            a + 1,
                            r + 1,
                            row.len()
                        )));
                    }
                    for (c, s) in row.iter().enumerate() {
                        let v = parse_rational(s)
                            .map_err(|e| json_err(format!("J[{}][{}][{}]: {e}", a + 1, r + 1, c + 1)))?;
                        if !v.is_zero() {
                            m[(r, c)] = v;
                        }
                    }
                }
                out.push(m);
            }
            Some([out[0].clone(), out[1].clone(), out[2].clone()])
        }
    };
    Ok(AlgebraSpec {
        name: doc.name,
        notes: doc.notes,
        dim: n,
        brackets,
        j,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::{int, rat};

    #[test]
    fn single_de_line_sign_convention() {
        let spec = parse_dsl("dim 12\nde9 = -e56\n").unwrap();
        let g = spec.to_lie_algebra();
        // de^9 = -e^56 means [e5, e6] = e9.
        let mut expected = vec![int(0); 12];
        expected[8] = int(1);
        assert_eq!(g.bracket_basis(4, 5), expected);
    }

    #[test]
    fn zero_line_and_omitted_lines_agree() {
        let a = parse_dsl("dim 4\nde1 = 0\n").unwrap();
        let b = parse_dsl("dim 4\n").unwrap();
        assert_eq!(a.brackets, b.brackets);
    }

    #[test]
    fn braced_and_mixed_indices() {
        let spec = parse_dsl("dim 12\nde9 = e{10}{11} + 2 e1{12}\n").unwrap();
        let g = spec.to_lie_algebra();
        assert_eq!(g.c(9, 10, 8), &int(-1));
        assert_eq!(g.c(0, 11, 8), &int(-2));
    }

    #[test]
    fn reversed_pairs_normalize() {
        let a = parse_dsl("dim 8\nde8 = e12 - e34\n").unwrap();
        let b = parse_dsl("dim 8\nde8 = -e21 + e43\n").unwrap();
        assert_eq!(a.brackets, b.brackets);
    }

    #[test]
    fn rational_coefficients() {
        let spec = parse_dsl("dim 4\nde4 = 1/2 e12 - 3 e13\n").unwrap();
        let g = spec.to_lie_algebra();
        assert_eq!(g.c(0, 1, 3), &rat(-1, 2));
        assert_eq!(g.c(0, 2, 3), &int(3));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_dsl("dim 8\nde8 = e11\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("repeated"));

        let err = parse_dsl("dim 8\nde9 = e12\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("out of range"));

        let err = parse_dsl("dim 8\nde8 = e12\nde8 = e34\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("duplicate"));

        let err = parse_dsl("de8 = e12\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("dim"));

        let err = parse_dsl("dim 8\nwhat is this\n").unwrap_err();
        assert_eq!(err.line, 2);

        let err = parse_dsl("dim 8\nde8 = e12 e34\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 11));
    }

    #[test]
    fn missing_j_column_is_reported() {
        let text = "dim 4\nJ1 e1 = e2\n";
        let err = parse_dsl(text).unwrap_err();
        assert!(err.message.contains("J1 is missing"));
    }

    #[test]
    fn dsl_round_trip_on_catalog() {
        for name in catalog::names() {
            let h = catalog::entry(&name).unwrap();
            let spec = AlgebraSpec::from_hypercomplex(&h);
            let reparsed = parse_dsl(&spec.to_dsl()).unwrap();
            assert_eq!(reparsed, spec, "{name} DSL round trip");
            assert_eq!(reparsed.to_hypercomplex().unwrap(), h);
        }
    }

    #[test]
    fn json_round_trip_on_catalog() {
        for name in catalog::names() {
            let h = catalog::entry(&name).unwrap();
            let spec = AlgebraSpec::from_hypercomplex(&h);
            let reparsed = parse_json(&spec.to_json()).unwrap();
            assert_eq!(reparsed, spec, "{name} JSON round trip");
        }
    }

    #[test]
    fn serialized_n8_contains_the_expected_line() {
        let h = catalog::entry("n8").unwrap();
        let text = AlgebraSpec::from_hypercomplex(&h).to_dsl();
        assert!(text.contains("de8 = e12 - e34"));
        assert!(text.contains("de1 = 0"));
        assert!(text.contains("J1 e1 = e2"));
        assert!(text.contains("J1 e2 = -e1"));
    }

    #[test]
    fn json_rejects_bad_shapes() {
        let err = parse_json("{\"dim\": 0, \"name\": \"x\"}").unwrap_err();
        assert!(err.message.contains("positive"));
        let err = parse_json("{\"dim\": 4, \"name\": \"x\", \"brackets\": [{\"i\": 1, \"j\": 9, \"coeffs\": {}}]}")
            .unwrap_err();
        assert!(err.message.contains("out of range"));
        let err = parse_json("not json").unwrap_err();
        assert!(err.line >= 1);
    }

    #[test]
    fn json_without_structures_converts_to_lie_only() {
        let spec = parse_json("{\"dim\": 4, \"name\": \"a\", \"brackets\": []}").unwrap();
        assert!(spec.j.is_none());
        assert!(spec.to_hypercomplex().is_err());
        assert_eq!(spec.to_lie_algebra().dim(), 4);
    }
}
