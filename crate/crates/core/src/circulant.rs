//! The circulant matrix of `p`, the orbit of `p`'s coefficient vector under
//! it, and its diagonalization by the Fourier matrix.
//!
//! Everything about `V` itself (powers, orbits, orders, determinants) is
//! exact. Eigenvalues and the DFT are irrational in general and are handled
//! in `f64` complex arithmetic.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::riordan::RiordanArray;
use crate::ring::{to_f64, Rational};

/// Search bound for orbit periods and matrix orders.
pub const DEFAULT_ORDER_CAP: usize = 360;

/// `|λ| = 1` tolerance used to skip the exact order search.
const UNIT_MODULUS_TOL: f64 = 1e-9;

/// Cyclic right rotation `(v_0, ..., v_{n-1}) -> (v_{n-1}, v_0, ..., v_{n-2})`.
pub fn shift<T: Clone>(v: &[T]) -> Vec<T> {
    let mut out = v.to_vec();
    out.rotate_right(1);
    out
}

/// An `n x n` circulant whose row `i` is the `i`-th right rotation of the
/// first row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantMatrix {
    first_row: Vec<Rational>,
}

#[derive(Serialize)]
struct CirculantDump {
    n: usize,
    first_row: Vec<String>,
}

impl CirculantMatrix {
    pub fn new(first_row: Vec<Rational>) -> Result<Self> {
        if first_row.is_empty() {
            return Err(Error::Domain("a circulant needs at least one entry".into()));
        }
        Ok(CirculantMatrix { first_row })
    }

    /// `V_p` with first row `(a_d, a_{d-1}, ..., a_0)`.
    pub fn of(p: &Poly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Self::new(p.coeffs().iter().rev().cloned().collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut row = vec![Rational::zero(); n];
        row[0] = Rational::one();
        CirculantMatrix { first_row: row }
    }

    pub fn size(&self) -> usize {
        self.first_row.len()
    }

    pub fn first_row(&self) -> &[Rational] {
        &self.first_row
    }

    /// Entry `(i, j)`, which only depends on `(j - i) mod n`.
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        let n = self.size();
        &self.first_row[(j + n - i % n) % n]
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let n = self.size();
        let mut rows = Vec::with_capacity(n);
        let mut row = self.first_row.clone();
        for _ in 0..n {
            rows.push(row.clone());
            row = shift(&row);
        }
        rows
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        let n = self.size();
        assert_eq!(v.len(), n, "vector length must match the matrix size");
        (0..n)
            .map(|i| {
                (0..n).fold(Rational::zero(), |acc, j| acc + self.entry(i, j) * &v[j])
            })
            .collect()
    }

    /// Product of two circulants of the same size, itself circulant.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.size();
        assert_eq!(n, other.size());
        let first_row = (0..n)
            .map(|j| {
                (0..n).fold(Rational::zero(), |acc, m| {
                    acc + &self.first_row[m] * other.entry(m, j)
                })
            })
            .collect();
        CirculantMatrix { first_row }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut acc = Self::identity(self.size());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.first_row[0].is_one() && self.first_row[1..].iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Rational {
        &self.first_row[0] * Rational::from_integer(BigInt::from(self.size()))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination on the
    /// row-scaled integer matrix.
    pub fn determinant(&self) -> Rational {
        let dense = self.to_dense();
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = dense
            .iter()
            .map(|row| {
                let l = row
                    .iter()
                    .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                scale *= &l;
                row.iter()
                    .map(|q| q.numer() * (&l / q.denom()))
                    .collect()
            })
            .collect();
        Rational::new(bareiss_det(&mut m), scale)
    }

    pub fn to_json(&self) -> String {
        let dump = CirculantDump {
            n: self.size(),
            first_row: self.first_row.iter().map(ToString::to_string).collect(),
        };
        serde_json::to_string_pretty(&dump).expect("plain data serializes")
    }
}

fn bareiss_det(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Exact `V^n (a_0, ..., a_d)^T`.
pub fn orbit(p: &Poly, n: usize) -> Result<Vec<Rational>> {
    let v = CirculantMatrix::of(p)?;
    let mut x = p.coeffs().to_vec();
    for _ in 0..n {
        x = v.apply(&x);
    }
    Ok(x)
}

/// Successive orbit points `n = 0..=nmax`.
pub fn orbit_points(p: &Poly, nmax: usize) -> Result<Vec<Vec<Rational>>> {
    let v = CirculantMatrix::of(p)?;
    let mut x = p.coeffs().to_vec();
    let mut out = Vec::with_capacity(nmax + 1);
    out.push(x.clone());
    for _ in 0..nmax {
        x = v.apply(&x);
        out.push(x.clone());
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitBridgeReport {
    /// Iterates `0..=nmax` compared.
    pub checked: usize,
    /// `blocks[n]` is the periodic block of column `n + 1`, equal to orbit point `n`.
    pub blocks: Vec<Vec<Rational>>,
}

/// Compares orbit point `n` with the periodic block of column `n + 1` of an
/// independently built array, for `n = 0..=nmax`.
pub fn verify_theorem2(p: &Poly, nmax: usize) -> Result<OrbitBridgeReport> {
    if nmax == 0 {
        return Err(Error::Domain("nmax must be at least 1".into()));
    }
    let d = p.proper_degree()?;
    let rows = 1 + nmax * (d + 1) + d + 1;
    let arr = RiordanArray::build(p, rows, nmax + 2)?;
    let points = orbit_points(p, nmax)?;
    let mut blocks = Vec::with_capacity(nmax + 1);
    for (n, point) in points.into_iter().enumerate() {
        let block = arr.periodic_block(n + 1)?;
        if block != point {
            return Err(Error::violation(
                "orbit/periodic block correspondence",
                format!(
                    "n = {n}: orbit {} vs block {}",
                    fmt_vec(&point),
                    fmt_vec(&block)
                ),
            ));
        }
        blocks.push(block);
    }
    Ok(OrbitBridgeReport {
        checked: nmax + 1,
        blocks,
    })
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// `e^{2 pi i m / n}` with the exponent reduced mod `n` first.
pub fn root_of_unity(m: usize, n: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * ((m % n) as f64) / n as f64)
}

/// The unitary DFT matrix with entries `xi^{jk} / sqrt(n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierMatrix {
    entries: Vec<Vec<Complex64>>,
}

pub type ComplexMatrix = Vec<Vec<Complex64>>;

impl FourierMatrix {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let s = 1.0 / (n as f64).sqrt();
        let entries = (0..n)
            .map(|j| (0..n).map(|k| root_of_unity(j * k, n) * s).collect())
            .collect();
        FourierMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &ComplexMatrix {
        &self.entries
    }

    /// `F^*`, the conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.entries[j][i].conj()).collect())
            .collect()
    }
}

pub fn complex_matmul(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// `max |A_ij - I_ij|`.
pub fn max_dev_from_identity(a: &ComplexMatrix) -> f64 {
    let mut worst = 0.0f64;
    for (i, row) in a.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            let target = if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
            worst = worst.max((z - target).norm());
        }
    }
    worst
}

fn to_complex(v: &CirculantMatrix) -> ComplexMatrix {
    v.to_dense()
        .iter()
        .map(|row| row.iter().map(|q| Complex64::new(to_f64(q), 0.0)).collect())
        .collect()
}

/// Eigenvalues of `V_p`, in the diagonal order fixed by the Fourier matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenData {
    /// `λ_k = xi^{dk} p(xi^{-k})`, `xi = e^{2 pi i/(d+1)}`.
    pub eigenvalues: Vec<Complex64>,
    /// `λ_0 = p(1)`, exactly.
    pub lambda0: Rational,
}

#[derive(Serialize)]
struct EigenDump {
    lambda0: String,
    eigenvalues: Vec<ReIm>,
}

#[derive(Serialize)]
struct ReIm {
    re: f64,
    im: f64,
}

impl EigenData {
    pub fn to_json(&self) -> String {
        let dump = EigenDump {
            lambda0: self.lambda0.to_string(),
            eigenvalues: self
                .eigenvalues
                .iter()
                .map(|z| ReIm { re: z.re, im: z.im })
                .collect(),
        };
        serde_json::to_string_pretty(&dump).expect("plain data serializes")
    }
}

/// Values of the representer polynomial `Z^d p(1/Z)` at the `(d+1)`-th
/// roots of unity.
pub fn eigenvalues(p: &Poly) -> Result<EigenData> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    let n = d + 1;
    let coeffs: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
    let lambda0 = p.eval(&Rational::one());
    let mut eigenvalues: Vec<Complex64> = (0..n)
        .map(|k| {
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &a)| root_of_unity((d - i) * k, n) * a)
                .sum()
        })
        .collect();
    eigenvalues[0] = Complex64::new(to_f64(&lambda0), 0.0);
    Ok(EigenData {
        eigenvalues,
        lambda0,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalizationReport {
    /// Diagonal of `F^* V F`.
    pub diagonal: Vec<Complex64>,
    pub max_off_diagonal: f64,
    /// Largest `|(F^* V F)_kk - λ_k|`.
    pub max_eigen_error: f64,
}

/// Computes `F^* V F` numerically and checks it is `diag(λ_0, ..., λ_d)`.
pub fn verify_diagonalization(p: &Poly, tol: f64) -> Result<DiagonalizationReport> {
    if !(tol > 0.0) {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    let v = CirculantMatrix::of(p)?;
    let eig = eigenvalues(p)?;
    let f = FourierMatrix::new(v.size());
    let d = complex_matmul(&complex_matmul(&f.adjoint(), &to_complex(&v)), f.entries());
    let mut max_off = 0.0f64;
    let mut max_err = 0.0f64;
    for (i, row) in d.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            if i == j {
                max_err = max_err.max((z - eig.eigenvalues[i]).norm());
            } else {
                max_off = max_off.max(z.norm());
            }
        }
    }
    let report = DiagonalizationReport {
        diagonal: (0..d.len()).map(|i| d[i][i]).collect(),
        max_off_diagonal: max_off,
        max_eigen_error: max_err,
    };
    if max_off >= tol || max_err >= tol {
        return Err(Error::violation(
            "Fourier diagonalization",
            format!("off-diagonal {max_off:e}, eigenvalue error {max_err:e}, tolerance {tol:e}"),
        ));
    }
    Ok(report)
}

/// Orbit point `n` from the eigenvalues:
/// `V^n a = (1/(d+1)) M (λ_0^{n+1}, ..., λ_d^{n+1})^T` with
/// `M_{jk} = xi^{(j+1)k}`, i.e. the unnormalized Fourier matrix with its
/// first row moved to the bottom.
pub fn closed_form_orbit(p: &Poly, n: usize) -> Result<Vec<Complex64>> {
    let eig = eigenvalues(p)?;
    let size = eig.eigenvalues.len();
    let powers: Vec<Complex64> = eig
        .eigenvalues
        .iter()
        .map(|l| l.powu(n as u32 + 1))
        .collect();
    Ok((0..size)
        .map(|j| {
            powers
                .iter()
                .enumerate()
                .map(|(k, lp)| root_of_unity((j + 1) * k, size) * lp)
                .sum::<Complex64>()
                / size as f64
        })
        .collect())
}

/// Smallest `m` in `1..=cap` with `V^m a = a` for the coefficient vector `a`.
///
/// Every eigen-component of the orbit carries a nonzero weight, so a periodic
/// orbit needs each eigenvalue to be zero or of modulus one; other inputs
/// return `None` without iterating.
pub fn orbit_period(p: &Poly, cap: usize) -> Result<Option<usize>> {
    let eig = eigenvalues(p)?;
    let l0 = eig.lambda0.abs();
    if !(l0.is_zero() || l0.is_one())
        || eig.eigenvalues.iter().any(|l| {
            let r = l.norm();
            r > UNIT_MODULUS_TOL && (r - 1.0).abs() > UNIT_MODULUS_TOL
        })
    {
        return Ok(None);
    }
    let v = CirculantMatrix::of(p)?;
    let start = p.coeffs().to_vec();
    let mut x = start.clone();
    for m in 1..=cap {
        x = v.apply(&x);
        if x == start {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Smallest `m` in `1..=cap` with `V^m = I`. Skips the exact search when some
/// eigenvalue is visibly off the unit circle.
pub fn matrix_order(p: &Poly, cap: usize) -> Result<Option<usize>> {
    let eig = eigenvalues(p)?;
    if eig
        .eigenvalues
        .iter()
        .any(|l| (l.norm() - 1.0).abs() > UNIT_MODULUS_TOL)
    {
        return Ok(None);
    }
    let v = CirculantMatrix::of(p)?;
    let mut acc = v.clone();
    for m in 1..=cap {
        if acc.is_identity() {
            return Ok(Some(m));
        }
        acc = acc.compose(&v);
    }
    Ok(None)
}
