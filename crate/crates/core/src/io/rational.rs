//! Text forms of exact rationals: integers, `p/q` fractions and finite
//! decimals on input; rounded decimals and `p/q` on output.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty number")]
    Empty,
    #[error("malformed number {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

fn parse_int(text: &str, whole: &str) -> Result<BigInt, RationalParseError> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(RationalParseError::Malformed(whole.to_string()));
    }
    text.parse()
        .map_err(|_| RationalParseError::Malformed(whole.to_string()))
}

/// Parses `"70"`, `"-3"`, `"137/2"` or `"0.25"` exactly.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let t = text.trim();
    if t.is_empty() {
        return Err(RationalParseError::Empty);
    }
    if let Some((p, q)) = t.split_once('/') {
        let p = parse_int(p.trim(), t)?;
        let q = parse_int(q.trim(), t)?;
        if q.is_zero() {
            return Err(RationalParseError::ZeroDenominator(t.to_string()));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(RationalParseError::Malformed(t.to_string()));
        }
        let negative = int.starts_with('-');
        let int_digits = int.strip_prefix(['+', '-']).unwrap_or(int);
        let int_part = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            parse_int(int_digits, t)?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part: BigInt = frac.parse().expect("ascii digits");
        let magnitude = Rational::new(int_part * &scale + frac_part, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    Ok(Rational::from_integer(parse_int(t, t)?))
}

/// Decimal expansion rounded half-to-even at `digits` places.
///
/// ```
/// use wmpower::io::format_decimal;
/// use wmpower::Rational;
/// assert_eq!(format_decimal(&Rational::new(1.into(), 3.into()), 2), "0.33");
/// assert_eq!(format_decimal(&Rational::new(5.into(), 32.into()), 4), "0.1562");
/// ```
pub fn format_decimal(value: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = value.abs() * Rational::from_integer(scale.clone());
    let (mut q, r) = scaled.numer().div_rem(scaled.denom());
    match (r.clone() * 2u32).cmp(scaled.denom()) {
        Ordering::Greater => q += 1u32,
        Ordering::Equal if q.is_odd() => q += 1u32,
        _ => {}
    }
    let sign = if value.is_negative() && !q.is_zero() {
        "-"
    } else {
        ""
    };
    let (int, frac) = q.div_rem(&scale);
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits)
}

/// `p/q` in lowest terms, or the bare integer.
pub fn format_exact(value: &Rational) -> String {
    value.to_string()
}
