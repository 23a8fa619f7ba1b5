//! Truncated formal power series over a [`CoeffRing`].
//!
//! A [`Series`] stores the coefficients of `t^0 .. t^(N-1)` densely together
//! with the truncation order `N`. Binary operations return the minimum of
//! the operand orders; nothing is ever extended implicitly, so callers ask
//! for the order they need up front.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{CoeffRing, Rational};

#[derive(Clone, PartialEq, Debug)]
pub struct Series<R = Rational> {
    coeffs: Vec<R>,
}

impl<R: CoeffRing> Series<R> {
    /// Series whose order is the number of coefficients given.
    pub fn new(coeffs: Vec<R>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Series { coeffs })
    }

    fn from_vec(coeffs: Vec<R>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Result<Self> {
        Self::new(vec![R::zero(); order])
    }

    pub fn one(order: usize) -> Result<Self> {
        Self::monomial(R::one(), 0, order)
    }

    /// `a * t^k` truncated to `order`.
    pub fn monomial(a: R, k: usize, order: usize) -> Result<Self> {
        let mut s = Self::zero(order)?;
        if k < order {
            s.coeffs[k] = a;
        }
        Ok(s)
    }

    pub fn from_poly(p: &Poly<R>, order: usize) -> Result<Self> {
        let mut s = Self::zero(order)?;
        for (slot, a) in s.coeffs.iter_mut().zip(p.coeffs()) {
            *slot = a.clone();
        }
        Ok(s)
    }

    /// `1/(1 - t^(d+1))`: coefficient `n` is one iff `(d+1) | n`.
    pub fn geometric(d: usize, order: usize) -> Result<Self> {
        let coeffs = (0..order)
            .map(|n| if n % (d + 1) == 0 { R::one() } else { R::zero() })
            .collect();
        Self::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `[t^n] f`; fails when `n` is at or past the truncation order.
    pub fn coeff(&self, n: usize) -> Result<&R> {
        self.coeffs.get(n).ok_or(Error::TruncationExceeded {
            index: n,
            order: self.order(),
        })
    }

    /// Drops everything from `t^order` on. Raising the order is an error.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptySeries);
        }
        if order > self.order() {
            return Err(Error::TruncationExceeded {
                index: order - 1,
                order: self.order(),
            });
        }
        Ok(Self::from_vec(self.coeffs[..order].to_vec()))
    }

    pub fn scale(&self, a: &R) -> Self {
        Self::from_vec(self.coeffs.iter().map(|c| c.clone() * a.clone()).collect())
    }

    /// `t * f`, which is known one order further than `f`.
    pub fn mul_t(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(R::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_vec(coeffs)
    }

    /// `f / t` for `f(0) = 0`, known one order less than `f`.
    pub fn div_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain("f/t needs f(0) = 0".into()));
        }
        Self::new(self.coeffs[1..].to_vec())
    }

    /// Multiplicative inverse by the usual triangular recurrence.
    pub fn recip(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(Error::SingularSeries)?;
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let acc = (1..=k).fold(R::zero(), |acc, j| {
                acc + self.coeffs[j].clone() * out[k - j].clone()
            });
            out.push(-(acc * inv0.clone()));
        }
        Ok(Self::from_vec(out))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order()).expect("order >= 1");
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `f(g(t))` for `g(0) = 0`, by Horner's rule on truncated products.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::CompositionOrder);
        }
        let order = self.order().min(g.order());
        let g = g.truncate(order)?;
        let mut acc = Self::zero(order)?;
        for a in self.coeffs[..order].iter().rev() {
            acc = &acc * &g;
            acc.coeffs[0] = acc.coeffs[0].clone() + a.clone();
        }
        Ok(acc)
    }

    /// Compositional inverse `hbar` with `h(hbar(t)) = hbar(h(t)) = t`.
    ///
    /// Solves `sum_j h_j [t^n] hbar^j = [n = 1]` for `hbar_n` one
    /// coefficient at a time. `[t^n] hbar^j` for `j >= 2` only involves
    /// `hbar_1..hbar_(n-1)`, so the system is triangular. Only powers up to
    /// the last nonzero coefficient of `h` are tracked.
    pub fn revert(&self) -> Result<Self> {
        let n_order = self.order();
        if !self.coeffs[0].is_zero() || n_order < 2 {
            return Err(Error::ReversionDomain);
        }
        let h1_inv = self.coeffs[1]
            .try_inverse()
            .ok_or(Error::ReversionDomain)?;
        let top = self
            .coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(1);

        // powers[j][m] = [t^m] hbar^j, j = 1..=top; index 0 unused.
        let mut powers: Vec<Vec<R>> = vec![vec![R::zero(); n_order]; top + 1];
        for n in 1..n_order {
            for j in (2..=top.min(n)).rev() {
                let mut acc = R::zero();
                for i in 1..=(n + 1 - j) {
                    let g = &powers[1][i];
                    let prev = &powers[j - 1][n - i];
                    if !g.is_zero() && !prev.is_zero() {
                        acc = acc + g.clone() * prev.clone();
                    }
                }
                powers[j][n] = acc;
            }
            let mut rhs = if n == 1 { R::one() } else { R::zero() };
            for j in 2..=top.min(n) {
                rhs = rhs - self.coeffs[j].clone() * powers[j][n].clone();
            }
            powers[1][n] = rhs * h1_inv.clone();
        }
        Ok(Self::from_vec(powers.swap_remove(1)))
    }
}

impl<R: CoeffRing> Add for &Series<R> {
    type Output = Series<R>;
    fn add(self, rhs: Self) -> Series<R> {
        Series::from_vec(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<R: CoeffRing> Sub for &Series<R> {
    type Output = Series<R>;
    fn sub(self, rhs: Self) -> Series<R> {
        Series::from_vec(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<R: CoeffRing> Neg for &Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        Series::from_vec(self.coeffs.iter().map(|a| -a.clone()).collect())
    }
}

/// Cauchy product truncated to the smaller order.
impl<R: CoeffRing> Mul for &Series<R> {
    type Output = Series<R>;
    fn mul(self, rhs: Self) -> Series<R> {
        let order = self.order().min(rhs.order());
        let mut out = vec![R::zero(); order];
        for (i, a) in self.coeffs[..order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Series::from_vec(out)
    }
}

impl<R: CoeffRing> fmt::Display for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order())
    }
}
