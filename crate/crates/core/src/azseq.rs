//! A- and Z-sequences of the array, and the Catalan numbers inside them.
//!
//! With `hbar` the compositional inverse of `t p(t)`, the Z-sequence has
//! generating function `hbar^d` and the A-sequence `t / hbar`. Every
//! computation here goes through [`Series::revert`]; closed forms only
//! appear as checks.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::riordan::{tp_series, RiordanArray};
use crate::ring::{CoeffRing, ParamPoly, Rational};
use crate::series::Series;

/// A- and Z-sequence generating functions, all truncated to `order` terms.
#[derive(Clone, Debug, PartialEq)]
pub struct AZPair<R = Rational> {
    pub z: Series<R>,
    pub a: Series<R>,
    pub hbar: Series<R>,
    pub order: usize,
}

/// Computes `hbar`, `Z = hbar^d` and `A = t/hbar` to `order` terms.
///
/// `Z` is also computed as `(g(hbar) - 1) / (hbar g(hbar))` with
/// `g = 1/(1 - t^(d+1))`, and the two results must agree.
pub fn az_sequences<R: CoeffRing>(p: &Poly<R>, order: usize) -> Result<AZPair<R>> {
    if order < 2 {
        return Err(Error::Domain("A/Z order must be at least 2".into()));
    }
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if p.coeff(0).is_zero() {
        return Err(Error::ReversionDomain);
    }
    // hbar/t loses one order, so work one order higher
    let m = order + 1;
    let hbar = tp_series(p, m)?.revert()?;
    let hbar_over_t = hbar.div_t()?;
    let a = hbar_over_t.recip()?;
    let z = hbar.pow(d as u32).truncate(order)?;

    let g = Series::geometric(d, m)?.compose(&hbar)?;
    let num = (&g - &Series::one(m)?).div_t()?;
    let den = &hbar_over_t * &g.truncate(order)?;
    let z_unsimplified = &num * &den.recip()?;
    if z_unsimplified != z {
        let n = (0..order)
            .find(|&i| z_unsimplified.coeffs()[i] != z.coeffs()[i])
            .unwrap_or(0);
        return Err(Error::violation(
            "Z = hbar^d",
            format!(
                "coefficient of t^{n}: {} vs {}",
                z_unsimplified.coeffs()[n],
                z.coeffs()[n]
            ),
        ));
    }
    Ok(AZPair {
        z,
        a,
        hbar: hbar.truncate(order)?,
        order,
    })
}

impl AZPair<Rational> {
    pub fn to_json(&self, p: &Poly) -> String {
        let strs = |s: &Series| s.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>();
        let v = json!({
            "p": p.to_string(),
            "N": self.order,
            "A": strs(&self.a),
            "Z": strs(&self.z),
        });
        serde_json::to_string_pretty(&v).expect("plain data serializes")
    }
}

/// `binomial(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigInt {
    let n_big = BigInt::from(n);
    num_integer::binomial(BigInt::from(2 * n), n_big.clone()) / (n_big + 1)
}

pub fn catalan_table(m: usize) -> Vec<BigInt> {
    (0..=m).map(catalan).collect()
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

fn big(q: BigInt) -> Rational {
    Rational::from_integer(q)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalanReport {
    pub checked: usize,
    pub az: AZPair,
}

/// For `p = a + bt` checks `[t^(n+1)] Z = (-a/b) C_n (-b/a^2)^(n+1)` and
/// `[t^(n+1)] A = -a C_n (-b/a^2)^(n+1)` for `n = 0..=order-2`, plus
/// `A(0) = a`.
pub fn verify_catalan_forms(a: &Rational, b: &Rational, order: usize) -> Result<CatalanReport> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Domain("Catalan forms need a*b != 0".into()));
    }
    let p = Poly::new(vec![a.clone(), b.clone()]);
    let az = az_sequences(&p, order)?;
    if az.a.coeffs()[0] != *a {
        return Err(Error::violation("A(0) = a", az.a.coeffs()[0].to_string()));
    }
    let x = -b / (a * a);
    let mut checked = 1;
    for n in 0..=order - 2 {
        let term = big(catalan(n)) * x.pow(n as i32 + 1);
        let want_z = -a / b * &term;
        let want_a = -a * &term;
        let (got_z, got_a) = (&az.z.coeffs()[n + 1], &az.a.coeffs()[n + 1]);
        if *got_z != want_z || *got_a != want_a {
            return Err(Error::violation(
                "Catalan closed form",
                format!("t^{}: Z = {got_z} (want {want_z}), A = {got_a} (want {want_a})", n + 1),
            ));
        }
        checked += 2;
    }
    Ok(CatalanReport { checked, az })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RogersReport {
    pub rows: usize,
    pub checked: usize,
}

/// Checks `C[n+1][k+1] = sum_j A_j C[n][k+j]` and
/// `C[n+1][0] = sum_j Z_j C[n][j]` on the leading `rows x rows` corner.
pub fn verify_rogers(p: &Poly, rows: usize) -> Result<RogersReport> {
    if rows < 2 {
        return Err(Error::Domain("Rogers check needs at least 2 rows".into()));
    }
    let arr = RiordanArray::build(p, rows, rows)?;
    let az = az_sequences(p, rows)?;
    let (a, z) = (az.a.coeffs(), az.z.coeffs());
    let c = |i: usize, k: usize| arr.entry(i, k);
    let mut checked = 0;
    for n in 0..rows - 1 {
        for k in 0..rows {
            let (seq, first) = if k == 0 { (z, 0) } else { (a, k - 1) };
            let rhs = (first..rows).fold(Rational::zero(), |acc, col| {
                acc + &seq[col - first] * c(n, col)
            });
            if *c(n + 1, k) != rhs {
                return Err(Error::violation(
                    "Rogers recurrence",
                    format!("row {}, column {k}: {} vs {rhs}", n + 1, c(n + 1, k)),
                ));
            }
            checked += 1;
        }
    }
    Ok(RogersReport { rows, checked })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Theorem6Report {
    /// c-linear part of `[t^(n+2)] A` for `n = 0..=n_max`.
    pub values: Vec<Rational>,
}

/// `(-b)^n / a^(2n+2) * binomial(2n+1, n+1)`.
pub fn theorem6_rhs(a: &Rational, b: &Rational, n: usize) -> Rational {
    (-b).pow(n as i32) / a.pow(2 * n as i32 + 2) * big(binomial(2 * n + 1, n + 1))
}

/// Builds `p = a + bt + ct^2` over `Q[c]/(c^2)` and compares the c-linear
/// part of `[t^(n+2)] A` with [`theorem6_rhs`] for `n = 0..=n_max`.
pub fn theorem6_check(a: &Rational, b: &Rational, n_max: usize) -> Result<Theorem6Report> {
    if a.is_zero() {
        return Err(Error::Domain("a must be nonzero".into()));
    }
    let p = Poly::new(vec![
        ParamPoly::<2>::constant(a.clone()),
        ParamPoly::constant(b.clone()),
        ParamPoly::param(),
    ]);
    let az = az_sequences(&p, n_max + 3)?;
    let mut values = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let got = az.a.coeffs()[n + 2].component(1);
        let want = theorem6_rhs(a, b, n);
        if got != want {
            return Err(Error::violation(
                "c-derivative of A",
                format!("t^{}: {got} vs {want}", n + 2),
            ));
        }
        values.push(got);
    }
    Ok(Theorem6Report { values })
}

/// `A(t)` for `p = 1 + t + ct^2`, with `c^K = 0`.
pub fn csum_expansion<const K: usize>(order: usize) -> Result<Series<ParamPoly<K>>> {
    let p = Poly::new(vec![ParamPoly::one(), ParamPoly::one(), ParamPoly::param()]);
    Ok(az_sequences(&p, order)?.a)
}

pub const MAX_PARAM_DEGREE: usize = 8;

/// Coefficient table of [`csum_expansion`]: row `n` holds the coefficients
/// of `c^0 .. c^(k-1)` in `[t^n] A`. `k` ranges over `1..=8`.
pub fn csum_table(order: usize, k: usize) -> Result<Vec<Vec<Rational>>> {
    fn rows<const K: usize>(order: usize) -> Result<Vec<Vec<Rational>>> {
        Ok(csum_expansion::<K>(order)?
            .coeffs()
            .iter()
            .map(|c| c.components().to_vec())
            .collect())
    }
    match k {
        1 => rows::<1>(order),
        2 => rows::<2>(order),
        3 => rows::<3>(order),
        4 => rows::<4>(order),
        5 => rows::<5>(order),
        6 => rows::<6>(order),
        7 => rows::<7>(order),
        8 => rows::<8>(order),
        _ => Err(Error::Domain(format!(
            "c-degree must be between 1 and {MAX_PARAM_DEGREE}, got {k}"
        ))),
    }
}

pub fn table_to_csv(table: &[Vec<Rational>]) -> String {
    let k = table.first().map_or(0, Vec::len);
    let mut out = String::from("n");
    for j in 0..k {
        out.push_str(&format!(",c^{j}"));
    }
    out.push('\n');
    for (n, row) in table.iter().enumerate() {
        out.push_str(&n.to_string());
        for q in row {
            out.push_str(&format!(",{q}"));
        }
        out.push('\n');
    }
    out
}

/// Absolute values of the `c^j` column for `t^from ..= t^to`, as integers.
pub fn csum_column(j: usize, from: usize, to: usize) -> Result<Vec<BigInt>> {
    let table = csum_table(to + 1, (j + 1).max(2))?;
    table[from..=to]
        .iter()
        .map(|row| {
            let q = &row[j];
            if q.is_integer() {
                Ok(q.abs().to_integer())
            } else {
                Err(Error::Domain(format!("non-integer coefficient {q}")))
            }
        })
        .collect()
}
