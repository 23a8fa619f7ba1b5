//! Coefficient rings for series and polynomials.
//!
//! Two rings are supported: the rationals, and the rationals extended by a
//! nilpotent parameter `c` (the truncated polynomial ring `Q[c]/(c^K)`).
//! The second one lets first- and higher-order coefficients in `c` be read
//! off exactly without any symbolic machinery.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Truncation degree used for [`ParamPoly`] when nothing else is requested.
pub const DEFAULT_PARAM_DEGREE: usize = 4;

/// A commutative ring with unity usable as series coefficients.
pub trait CoeffRing:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_rational(q: Rational) -> Self;

    /// Multiplicative inverse, or `None` when the element is not a unit.
    fn try_inverse(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }
}

impl CoeffRing for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Shorthand for building a rational from a small numerator and denominator.
///
/// Panics when `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Converts an exact rational to the nearest `f64`.
pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or_else(|| {
        // numerator or denominator overflowed f64 on its own
        let n = q.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = q.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Element of `Q[c]/(c^K)`: a polynomial in the parameter `c` whose terms of
/// degree `K` and above are dropped by every ring operation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamPoly<const K: usize> {
    coeffs: Vec<Rational>,
}

impl<const K: usize> ParamPoly<K> {
    const NONEMPTY: () = assert!(K >= 1, "ParamPoly needs K >= 1");

    /// Builds an element from its components `[c^0, c^1, ...]`; components
    /// beyond `c^(K-1)` are dropped and missing ones are zero.
    pub fn from_components(mut coeffs: Vec<Rational>) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::NONEMPTY;
        coeffs.resize(K, Rational::zero());
        ParamPoly { coeffs }
    }

    pub fn constant(q: Rational) -> Self {
        Self::from_components(vec![q])
    }

    /// The parameter `c` itself (zero when `K = 1`).
    pub fn param() -> Self {
        Self::from_components(vec![Rational::zero(), Rational::one()])
    }

    /// Coefficient of `c^j`; zero for `j >= K`.
    pub fn component(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn components(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree_bound() -> usize {
        K
    }
}

impl<const K: usize> fmt::Debug for ParamPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly<{K}>({self})")
    }
}

impl<const K: usize> fmt::Display for ParamPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, q) in self.coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let mag = q.abs();
            if wrote {
                f.write_str(if q.is_negative() { " - " } else { " + " })?;
            } else if q.is_negative() {
                f.write_str("-")?;
            }
            match j {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if j == 1 {
                        f.write_str("c")?;
                    } else {
                        write!(f, "c^{j}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<const K: usize> Add for ParamPoly<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let coeffs = self
            .coeffs
            .into_iter()
            .zip(rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        ParamPoly { coeffs }
    }
}

impl<const K: usize> Sub for ParamPoly<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let coeffs = self
            .coeffs
            .into_iter()
            .zip(rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        ParamPoly { coeffs }
    }
}

impl<const K: usize> Neg for ParamPoly<K> {
    type Output = Self;
    fn neg(self) -> Self {
        ParamPoly {
            coeffs: self.coeffs.into_iter().map(|a| -a).collect(),
        }
    }
}

impl<const K: usize> Mul for ParamPoly<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = vec![Rational::zero(); K];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(K - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        ParamPoly { coeffs: out }
    }
}

impl<const K: usize> Zero for ParamPoly<K> {
    fn zero() -> Self {
        Self::from_components(Vec::new())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl<const K: usize> One for ParamPoly<K> {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl<const K: usize> CoeffRing for ParamPoly<K> {
    fn from_rational(q: Rational) -> Self {
        Self::constant(q)
    }

    /// A unit iff its `c^0` component is nonzero; the inverse is solved
    /// component by component.
    fn try_inverse(&self) -> Option<Self> {
        let head_inv = self.coeffs[0].try_inverse()?;
        let mut inv: Vec<Rational> = Vec::with_capacity(K);
        inv.push(head_inv.clone());
        for j in 1..K {
            let acc = (1..=j).fold(Rational::zero(), |acc, i| {
                acc + &self.coeffs[i] * &inv[j - i]
            });
            inv.push(-(acc * &head_inv));
        }
        Some(ParamPoly { coeffs: inv })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P4 = ParamPoly<4>;

    #[test]
    fn nilpotent_truncation() {
        let c = P4::param();
        let c3 = c.clone() * c.clone() * c.clone();
        assert_eq!(c3.component(3), int(1));
        assert!((c3 * c).is_zero());
    }

    #[test]
    fn inverse_of_one_minus_c() {
        let u = P4::one() - P4::param();
        let inv = u.try_inverse().unwrap();
        // 1/(1-c) = 1 + c + c^2 + c^3 mod c^4
        assert_eq!(inv.components(), &[int(1), int(1), int(1), int(1)]);
        assert_eq!(u * inv, P4::one());
    }

    #[test]
    fn param_multiple_is_not_a_unit() {
        assert!(P4::param().try_inverse().is_none());
        assert!(int(0).try_inverse().is_none());
    }

    #[test]
    fn display() {
        let x = P4::from_components(vec![int(14), int(-21), int(3)]);
        assert_eq!(x.to_string(), "14 - 21*c + 3*c^2");
        assert_eq!(P4::zero().to_string(), "0");
        assert_eq!((-P4::param()).to_string(), "-c");
    }

    #[test]
    fn k_one_collapses_to_rationals() {
        let c = ParamPoly::<1>::param();
        assert!(c.is_zero());
    }
}
