//! Exact rationals: the desk-scale model of the reals.
//!
//! `=` and `≠` on [`Rat`] are decidable; `a ≠ b` iff `|a - b| > 0`.

use std::str::FromStr;

use num_rational::Ratio;
use thiserror::Error;

use crate::{Error, Result, Scalar};

/// Exact rational with an `i64` numerator and a positive `i64` denominator,
/// always kept in lowest terms.
pub type Rat = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatParseError {
    #[error("malformed rational `{0}`: expected `p` or `p/q`")]
    Syntax(String),
    #[error("rational `{0}` has a zero denominator")]
    ZeroDenominator(String),
    #[error("rational `{0}` overflows 64-bit integers")]
    Overflow(String),
    #[error("rational `{text}` is not in canonical form; write `{canonical}`")]
    NonCanonical { text: String, canonical: String },
}

fn parse_int(text: &str, whole: &str) -> Result<i64, RatParseError> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(RatParseError::Syntax(whole.to_string()));
    }
    i64::from_str(text).map_err(|_| RatParseError::Overflow(whole.to_string()))
}

/// Parses `p` or `p/q` and reduces it. The denominator must be positive.
pub fn parse_rat(text: &str) -> Result<Rat, RatParseError> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => {
            if d.starts_with('-') {
                return Err(RatParseError::Syntax(text.to_string()));
            }
            (parse_int(n, text)?, parse_int(d, text)?)
        }
        None => (parse_int(text, text)?, 1),
    };
    if den == 0 {
        return Err(RatParseError::ZeroDenominator(text.to_string()));
    }
    Ok(Rat::new(num, den))
}

/// Like [`parse_rat`] but rejects any spelling other than the canonical one
/// (`p` when the denominator is 1, otherwise `p/q` in lowest terms).
pub fn parse_canonical_rat(text: &str) -> Result<Rat, RatParseError> {
    let r = parse_rat(text)?;
    let canonical = r.to_string();
    if canonical != text {
        return Err(RatParseError::NonCanonical {
            text: text.to_string(),
            canonical,
        });
    }
    Ok(r)
}

/// `Some(|a - b|)` when `a ≠ b`, `None` when they are equal.
pub fn apart<S: Scalar>(a: &S, b: &S) -> Option<S> {
    a.gap(b)
}

/// Which disjunct of cotransitivity was chosen, with its gap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotrans<S> {
    /// `z ≠ a`
    ApartFromFirst(S),
    /// `z ≠ b`
    ApartFromSecond(S),
}

/// Given `a ≠ b` and any `z`, picks `z ≠ a` or `z ≠ b`.
///
/// The larger gap wins; equal gaps pick `z ≠ a`.
pub fn cotrans<S: Scalar>(a: &S, b: &S, z: &S) -> Result<Cotrans<S>> {
    if apart(a, b).is_none() {
        return Err(Error::PreconditionViolated(format!(
            "cotransitivity needs {a} ≠ {b}"
        )));
    }
    let ga = (z.clone() - a.clone()).abs();
    let gb = (z.clone() - b.clone()).abs();
    // |a-b| > 0 forces one of the gaps to be positive.
    if ga >= gb {
        Ok(Cotrans::ApartFromFirst(ga))
    } else {
        Ok(Cotrans::ApartFromSecond(gb))
    }
}
