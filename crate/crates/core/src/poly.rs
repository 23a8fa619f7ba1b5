//! Dense polynomials `a_0 + a_1 t + ... + a_d t^d` and their text format.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::{CoeffRing, Rational};

/// A polynomial with trailing zero coefficients trimmed, so `a_d != 0`
/// unless the polynomial is identically zero.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<R = Rational> {
    coeffs: Vec<R>,
}

impl<R: CoeffRing> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(a: R) -> Self {
        Self::new(vec![a])
    }

    /// Coefficients `a_0..=a_d`; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// `a_i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, a| acc * x.clone() + a.clone())
    }

    /// Checks the conditions every Riordan array of this crate relies on,
    /// returning the degree `d`.
    pub fn proper_degree(&self) -> Result<usize> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        if self.coeffs[0].is_zero() {
            return Err(Error::ImproperArray);
        }
        Ok(d)
    }
}

impl Poly<Rational> {
    /// Maps the coefficients into another coefficient ring.
    pub fn lift<S: CoeffRing>(&self) -> Poly<S> {
        Poly::new(self.coeffs.iter().cloned().map(S::from_rational).collect())
    }
}

/// Parses one rational token: an optionally signed integer or `p/q`.
/// Decimal notation is rejected so every input stays exact.
pub fn parse_rational(token: &str) -> Result<Rational> {
    let t = token.trim().replace('\u{2212}', "-");
    let err = |reason: &str| Error::Parse {
        input: token.to_string(),
        reason: reason.to_string(),
    };
    if t.is_empty() {
        return Err(err("empty token"));
    }
    if t.contains(['.', 'e', 'E']) {
        return Err(err("decimals are not accepted, write the value as p/q"));
    }
    let t = t.strip_prefix('+').unwrap_or(&t);
    if t.starts_with('+') || t.contains(char::is_whitespace) {
        return Err(err("malformed rational"));
    }
    Rational::from_str(t).map_err(|e| err(&e.to_string()))
}

impl FromStr for Poly<Rational> {
    type Err = Error;

    /// Comma-separated coefficients `a0,a1,...,ad`.
    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }
}

impl<R: CoeffRing> fmt::Display for Poly<R> {
    /// Writes the comma-separated text format; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}
