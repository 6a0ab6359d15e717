//! Exact rational scalars.
//!
//! All arithmetic in this crate runs over `Rational`, an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. There is no
//! floating point anywhere; equality of computed quantities is literal
//! equality of reduced fractions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` (optional sign, no whitespace inside the token).
///
/// Rejects empty input, zero denominators, and anything that is not a pair
/// of decimal integers.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".to_string());
    }
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(Rational::from_integer)
            .map_err(|_| format!("malformed integer '{s}'")),
        Some((p, q)) => {
            let p: BigInt = p
                .parse()
                .map_err(|_| format!("malformed numerator '{p}'"))?;
            let q: BigInt = q
                .parse()
                .map_err(|_| format!("malformed denominator '{q}'"))?;
            if q.is_zero() {
                return Err(format!("zero denominator in '{s}'"));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Renders a rational as `"p/q"`, or just `"p"` when the denominator is 1.
/// The output is stable and parses back to the same value.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats a vector as a signed combination of basis vectors, 1-based:
/// `"-1/4 e9"`, `"e1 + 2 e3"`, or `"0"`.
pub fn format_combination(v: &[Rational]) -> String {
    let mut out = String::new();
    for (idx, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !mag.is_one() {
            out.push_str(&format_rational(&mag));
            out.push(' ');
        }
        out.push_str(&format!("e{}", idx + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
