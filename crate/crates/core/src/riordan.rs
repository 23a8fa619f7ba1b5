//! The Riordan array `(1/(1 - t^(d+1)), t p(t))` and its eventual column
//! periodicity.
//!
//! Column `k` has generating function `(t p(t))^k / (1 - t^(d+1))`. Past
//! index `1 + (k-1)(d+1)` every column repeats with period `d + 1`; the
//! repeating `d + 1` entries are the column's *periodic block*.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{CoeffRing, Rational};
use crate::series::Series;

#[derive(Clone, Debug, PartialEq)]
pub struct RiordanArray<R = Rational> {
    p: Poly<R>,
    degree: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<R>>,
}

/// Result of checking eventual periodicity of one column.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodReport<R = Rational> {
    pub column: usize,
    /// `d + 1`.
    pub period: usize,
    /// First index of the periodic tail.
    pub start: usize,
    pub block: Vec<R>,
    /// Smallest divisor of `d + 1` the tail is periodic with over the
    /// checked window.
    pub prime_period: usize,
    /// Number of full periods compared.
    pub verified_depth: usize,
}

/// First row index of the periodic tail of column `k`: `1 + (k-1)(d+1)`,
/// and `0` for the zeroth column, which is periodic from the start.
pub fn periodic_start(degree: usize, k: usize) -> usize {
    if k == 0 {
        0
    } else {
        1 + (k - 1) * (degree + 1)
    }
}

/// `t p(t)` as a series of the given order.
pub(crate) fn tp_series<R: CoeffRing>(p: &Poly<R>, order: usize) -> Result<Series<R>> {
    Ok(Series::from_poly(p, order)?.mul_t().truncate(order)?)
}

/// Generating function of column `k`, truncated to `order` terms.
pub fn column_gf<R: CoeffRing>(p: &Poly<R>, k: usize, order: usize) -> Result<Series<R>> {
    let d = p.proper_degree()?;
    let power = tp_series(p, order)?.pow(k as u32);
    Ok(&power * &Series::geometric(d, order)?)
}

impl<R: CoeffRing> RiordanArray<R> {
    /// Builds the leading `rows x cols` corner. Columns are produced by the
    /// recurrence `column(k+1) = column(k) * t p(t)`.
    pub fn build(p: &Poly<R>, rows: usize, cols: usize) -> Result<Self> {
        let degree = p.proper_degree()?;
        if rows == 0 {
            return Err(Error::EmptySeries);
        }
        let tp = tp_series(p, rows)?;
        let mut column = Series::geometric(degree, rows)?;
        let mut entries = vec![Vec::with_capacity(cols); rows];
        for k in 0..cols {
            if k > 0 {
                column = &column * &tp;
            }
            for (row, c) in entries.iter_mut().zip(column.coeffs()) {
                row.push(c.clone());
            }
        }
        Ok(RiordanArray {
            p: p.clone(),
            degree,
            rows,
            cols,
            entries,
        })
    }

    pub fn p(&self) -> &Poly<R> {
        &self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Vec<R>] {
        &self.entries
    }

    /// `C_{i,k}`. Panics when out of range.
    pub fn entry(&self, i: usize, k: usize) -> &R {
        &self.entries[i][k]
    }

    pub fn column(&self, k: usize) -> Vec<R> {
        self.entries.iter().map(|row| row[k].clone()).collect()
    }

    fn need_rows(&self, needed: usize) -> Result<()> {
        if self.rows < needed {
            return Err(Error::InsufficientRows {
                rows: self.rows,
                needed,
            });
        }
        Ok(())
    }

    fn need_col(&self, k: usize) -> Result<()> {
        if k >= self.cols {
            return Err(Error::Domain(format!(
                "column {k} requested from an array with {} columns",
                self.cols
            )));
        }
        Ok(())
    }

    /// The `d + 1` entries starting at row `1 + (k-1)(d+1)` of column `k >= 1`.
    pub fn periodic_block(&self, k: usize) -> Result<Vec<R>> {
        if k == 0 {
            return Err(Error::Domain("periodic blocks are indexed from column 1".into()));
        }
        self.need_col(k)?;
        let start = periodic_start(self.degree, k);
        self.need_rows(start + self.degree + 1)?;
        Ok((start..=start + self.degree)
            .map(|i| self.entries[i][k].clone())
            .collect())
    }

    /// Sum of the entries of column `k >= 1` above its periodic tail, i.e.
    /// rows `0..=(k-1)(d+1)`. For `d = 1, 2` this is the column sum before
    /// periodicity tabulated for the linear and quadratic examples; other
    /// degrees use the same start index.
    pub fn head_sum(&self, k: usize) -> Result<R> {
        if k == 0 {
            return Err(Error::Domain("head sums are indexed from column 1".into()));
        }
        self.need_col(k)?;
        let last = (k - 1) * (self.degree + 1);
        self.need_rows(last + 1)?;
        Ok(self.entries[..=last]
            .iter()
            .fold(R::zero(), |acc, row| acc + row[k].clone()))
    }
}

/// Smallest divisor `q` of `period` with `seq[i] == seq[i + q]` on the window.
pub(crate) fn prime_period<R: PartialEq>(seq: &[R], period: usize) -> usize {
    (1..=period)
        .filter(|q| period % q == 0)
        .find(|&q| seq.iter().zip(&seq[q.min(seq.len())..]).all(|(a, b)| a == b))
        .unwrap_or(period)
}

/// Checks `C_{s+n,k} = C_{s+(d+1)+n,k}` for `n < reps (d+1)` with
/// `s = 1 + (k-1)(d+1)`, building exactly as many rows as that needs.
pub fn verify_theorem1<R: CoeffRing>(
    p: &Poly<R>,
    k: usize,
    reps: usize,
) -> Result<PeriodReport<R>> {
    if reps < 2 {
        return Err(Error::Domain("at least two repetitions are required".into()));
    }
    let d = p.proper_degree()?;
    let period = d + 1;
    let start = periodic_start(d, k);
    let order = start + (reps + 1) * period;
    let column = column_gf(p, k, order)?;
    let c = column.coeffs();
    for n in 0..reps * period {
        if c[start + n] != c[start + period + n] {
            return Err(Error::violation(
                "eventual periodicity",
                format!(
                    "column {k}: C[{}] = {} but C[{}] = {}",
                    start + n,
                    c[start + n],
                    start + period + n,
                    c[start + period + n]
                ),
            ));
        }
    }
    let tail = &c[start..];
    Ok(PeriodReport {
        column: k,
        period,
        start,
        block: tail[..period].to_vec(),
        prime_period: prime_period(tail, period),
        verified_depth: reps,
    })
}

/// JSON form of an exact array.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArrayDump {
    pub p: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl RiordanArray<Rational> {
    pub fn to_dump(&self) -> ArrayDump {
        ArrayDump {
            p: self.p.to_string(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_dump()).expect("plain data serializes")
    }

    /// Parses a dump and rebuilds the array from `p`, rejecting dumps whose
    /// entries disagree with the rebuilt ones.
    pub fn from_json(text: &str) -> Result<Self> {
        let dump: ArrayDump = serde_json::from_str(text).map_err(|e| Error::Parse {
            input: "array JSON".into(),
            reason: e.to_string(),
        })?;
        let p: Poly = dump.p.parse()?;
        let arr = Self::build(&p, dump.rows, dump.cols)?;
        if arr.to_dump().entries != dump.entries {
            return Err(Error::Domain("entries do not match the array of p".into()));
        }
        Ok(arr)
    }

    /// One line per row, entries as `p/q` separated by commas.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}
