//! Orbit dynamics for linear and quadratic `p`, and horizontal periodicity.
//!
//! Orbits are rotated so that the eigenvector `(1, ..., 1)` of `V_p` becomes
//! the last coordinate axis. In those coordinates the linear orbit is
//! diagonal and the quadratic one is a planar scaling-rotation times an
//! axial scaling. Rotated quantities involve `sqrt 2`, `sqrt 3`, `sqrt 6` and
//! are `f64`; the exact orbit from [`crate::circulant`] is the reference they
//! are checked against.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::circulant::{self, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::riordan::{self, RiordanArray};
use crate::ring::{int, rat, to_f64, Rational};

/// Orthogonal matrix of determinant one taking `(0, ..., 0, sqrt(d+1))` to
/// `(1, ..., 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RotationMatrix {
    entries: Vec<Vec<f64>>,
}

impl RotationMatrix {
    /// Clockwise rotation of the plane by `pi/4`.
    pub fn linear() -> Self {
        let s = FRAC_1_SQRT_2;
        RotationMatrix {
            entries: vec![vec![s, s], vec![-s, s]],
        }
    }

    pub fn quadratic() -> Self {
        let (s6, s2, s3) = (1.0 / 6f64.sqrt(), FRAC_1_SQRT_2, 1.0 / 3f64.sqrt());
        RotationMatrix {
            entries: vec![
                vec![s6, -s2, s3],
                vec![s6, s2, s3],
                vec![-(2.0f64 / 3.0).sqrt(), 0.0, s3],
            ],
        }
    }

    pub fn for_degree(d: usize) -> Result<Self> {
        match d {
            1 => Ok(Self::linear()),
            2 => Ok(Self::quadratic()),
            _ => Err(Error::Domain(format!(
                "rotated coordinates exist for degree 1 and 2 only, not {d}"
            ))),
        }
    }

    pub fn entries(&self) -> &[Vec<f64>] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `R^{-1} v = R^T v`.
    pub fn apply_inverse(&self, v: &[f64]) -> Vec<f64> {
        let n = self.size();
        (0..n)
            .map(|j| (0..n).map(|i| self.entries[i][j] * v[i]).sum())
            .collect()
    }
}

/// Rotated coordinates `R^{-1} x` of an exact orbit point.
pub fn rotate_exact(point: &[Rational]) -> Result<Vec<f64>> {
    let r = RotationMatrix::for_degree(point.len().saturating_sub(1))?;
    let v: Vec<f64> = point.iter().map(to_f64).collect();
    Ok(r.apply_inverse(&v))
}

/// Long-run fate of the orbit. Limits are in standard coordinates.
#[derive(Clone, Debug, PartialEq)]
pub enum OrbitKind {
    FixedPoint,
    ConvergesToPoint(Vec<Rational>),
    EscapesToInfinity,
    /// Even and odd iterates converge to different points.
    SplitsTwoLimits {
        even: Vec<Rational>,
        odd: Vec<Rational>,
    },
    SplitsTwoUnboundedBranches,
    OnCylinder,
    PeriodicOrbit(usize),
}

impl OrbitKind {
    pub fn name(&self) -> &'static str {
        match self {
            OrbitKind::FixedPoint => "FixedPoint",
            OrbitKind::ConvergesToPoint(_) => "ConvergesToPoint",
            OrbitKind::EscapesToInfinity => "EscapesToInfinity",
            OrbitKind::SplitsTwoLimits { .. } => "SplitsTwoLimits",
            OrbitKind::SplitsTwoUnboundedBranches => "SplitsTwoUnboundedBranches",
            OrbitKind::OnCylinder => "OnCylinder",
            OrbitKind::PeriodicOrbit(_) => "PeriodicOrbit",
        }
    }
}

/// Power curve `|y~| = C |x~|^exponent` through the rotated linear orbit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PowerCurve {
    pub exponent: f64,
    pub constant: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearDiagnostics {
    /// `a + b`.
    pub lambda0: Rational,
    /// `b - a`.
    pub lambda1: Rational,
    pub curve: Option<PowerCurve>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxialBehavior {
    Escapes,
    ConvergesToPlane,
    Stays,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlanarBehavior {
    Contracts,
    OnCylinder,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticDiagnostics {
    /// `|a + b + c|`.
    pub zscale: Rational,
    /// `a^2 + b^2 + c^2 - ab - ac - bc`.
    pub r_squared: Rational,
    pub r: f64,
    /// `None` in the degenerate case `a = b = c`.
    pub cos_theta: Option<f64>,
    pub sin_theta: Option<f64>,
    pub spirals: u8,
    pub axial: AxialBehavior,
    pub planar: PlanarBehavior,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Diagnostics {
    Linear(LinearDiagnostics),
    Quadratic(QuadraticDiagnostics),
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitClassification {
    pub kind: OrbitKind,
    pub diagnostics: Diagnostics,
}

fn strs(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

impl OrbitClassification {
    pub fn to_json_value(&self) -> serde_json::Value {
        let mut out = json!({ "kind": self.kind.name() });
        let obj = out.as_object_mut().expect("object literal");
        match &self.kind {
            OrbitKind::ConvergesToPoint(l) => {
                obj.insert("limit".into(), json!(strs(l)));
            }
            OrbitKind::SplitsTwoLimits { even, odd } => {
                obj.insert("limit_even".into(), json!(strs(even)));
                obj.insert("limit_odd".into(), json!(strs(odd)));
            }
            OrbitKind::PeriodicOrbit(m) => {
                obj.insert("period".into(), json!(m));
            }
            _ => {}
        }
        match &self.diagnostics {
            Diagnostics::Linear(l) => {
                obj.insert("degree".into(), json!(1));
                obj.insert("lambda0".into(), json!(l.lambda0.to_string()));
                obj.insert("lambda1".into(), json!(l.lambda1.to_string()));
                if let Some(c) = l.curve {
                    obj.insert("curve_exponent".into(), json!(c.exponent));
                    obj.insert("curve_constant".into(), json!(c.constant));
                }
            }
            Diagnostics::Quadratic(q) => {
                obj.insert("degree".into(), json!(2));
                obj.insert("zscale".into(), json!(q.zscale.to_string()));
                obj.insert("r_squared".into(), json!(q.r_squared.to_string()));
                obj.insert("r".into(), json!(q.r));
                obj.insert("cos_theta".into(), json!(q.cos_theta));
                obj.insert("spirals".into(), json!(q.spirals));
                obj.insert("axial".into(), json!(format!("{:?}", q.axial)));
                obj.insert("planar".into(), json!(format!("{:?}", q.planar)));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("plain data serializes")
    }
}

/// `(-(b-a)^{n+1}/sqrt 2, (a+b)^{n+1}/sqrt 2)`.
pub fn rotated_orbit_linear(a: &Rational, b: &Rational, n: usize) -> [f64; 2] {
    let e = n as i32 + 1;
    let l0 = (a + b).pow(e);
    let l1 = (b - a).pow(e);
    [-to_f64(&l1) * FRAC_1_SQRT_2, to_f64(&l0) * FRAC_1_SQRT_2]
}

/// Exponent `ln|a+b| / ln|b-a|` and constant `C = sqrt(2)^(exponent - 1)` of
/// the curve `|y~| = C |x~|^exponent` carrying the rotated orbit.
pub fn curve_constant_linear(a: &Rational, b: &Rational) -> Result<PowerCurve> {
    let l0 = (a + b).abs();
    let l1 = (b - a).abs();
    if l0.is_zero() || l1.is_zero() || l1.is_one() {
        return Err(Error::Domain(
            "curve exponent needs a+b != 0, b-a != 0 and |b-a| != 1".into(),
        ));
    }
    let exponent = to_f64(&l0).ln() / to_f64(&l1).ln();
    Ok(PowerCurve {
        exponent,
        constant: 2f64.sqrt().powf(exponent - 1.0),
    })
}

/// Samples of the linear power curve, parametrized so that parameter
/// `n + 1` lands on orbit point `n` when both eigenvalues are positive; for
/// negative eigenvalues the orbit visits the mirror images of the curve.
pub fn linear_curve_points(a: &Rational, b: &Rational, params: &[f64]) -> Vec<[f64; 2]> {
    let l0 = to_f64(&(a + b));
    let l1 = to_f64(&(b - a));
    params
        .iter()
        .map(|&s| {
            [
                -l1.signum() * l1.abs().powf(s) * FRAC_1_SQRT_2,
                l0.signum() * l0.abs().powf(s) * FRAC_1_SQRT_2,
            ]
        })
        .collect()
}

/// Standard-coordinate limit of one eigen-component `lambda^{n+1}` as
/// `n -> inf` along even (`odd = false`) or odd iterates. Only meaningful
/// for `|lambda| <= 1`.
fn component_limit(lambda: &Rational, odd: bool) -> Rational {
    if lambda.abs() < Rational::one() {
        Rational::zero()
    } else if lambda.is_one() {
        Rational::one()
    } else if odd {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn cmp_one(q: &Rational) -> std::cmp::Ordering {
    q.abs().cmp(&Rational::one())
}

pub fn classify_linear(a: &Rational, b: &Rational) -> Result<OrbitClassification> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Domain("linear classification needs a*b != 0".into()));
    }
    use std::cmp::Ordering::*;
    let p = Poly::new(vec![a.clone(), b.clone()]);
    let l0 = a + b;
    let l1 = b - a;
    let curve = if l0.abs() < Rational::one() && l1.abs() < Rational::one() {
        curve_constant_linear(a, b).ok()
    } else {
        None
    };
    let diagnostics = Diagnostics::Linear(LinearDiagnostics {
        lambda0: l0.clone(),
        lambda1: l1.clone(),
        curve,
    });

    let kind = match circulant::orbit_period(&p, DEFAULT_ORDER_CAP)? {
        Some(1) => OrbitKind::FixedPoint,
        Some(m) => OrbitKind::PeriodicOrbit(m),
        None => match (cmp_one(&l0), cmp_one(&l1)) {
            (Less, Less) => OrbitKind::ConvergesToPoint(vec![Rational::zero(); 2]),
            (Greater, _) | (_, Greater) => {
                // |a+b| = |b-a| would force a = 0 or b = 0
                let dominant = if l0.abs() > l1.abs() { &l0 } else { &l1 };
                if dominant.is_negative() {
                    OrbitKind::SplitsTwoUnboundedBranches
                } else {
                    OrbitKind::EscapesToInfinity
                }
            }
            _ => {
                // one eigenvalue is +-1, the other inside the unit disc
                let point = |odd: bool| {
                    let u = component_limit(&l0, odd);
                    let v = component_limit(&l1, odd);
                    let half = rat(1, 2);
                    vec![&half * (&u - &v), &half * (u + v)]
                };
                if l0 == -Rational::one() || l1 == -Rational::one() {
                    OrbitKind::SplitsTwoLimits {
                        even: point(false),
                        odd: point(true),
                    }
                } else {
                    OrbitKind::ConvergesToPoint(point(false))
                }
            }
        },
    };
    Ok(OrbitClassification { kind, diagnostics })
}

/// The top-left 2x2 block `[[(2c-a-b)/2, (b-a) sqrt3/2], [(a-b) sqrt3/2, (2c-a-b)/2]]`.
fn planar_block(a: &Rational, b: &Rational, c: &Rational) -> [[f64; 2]; 2] {
    let diag = to_f64(&((int(2) * c - a - b) / int(2)));
    let off = to_f64(&(b - a)) * 3f64.sqrt() / 2.0;
    [[diag, off], [-off, diag]]
}

/// Rotated orbit point `n`: the planar block to the `n`-th power applied to
/// `((a+b-2c)/sqrt6, (b-a)/sqrt2)`, and `(a+b+c)^{n+1}/sqrt3` on the axis.
pub fn rotated_orbit_quadratic(a: &Rational, b: &Rational, c: &Rational, n: usize) -> [f64; 3] {
    let m = planar_block(a, b, c);
    let mut x = to_f64(&(a + b - int(2) * c)) / 6f64.sqrt();
    let mut y = to_f64(&(b - a)) * FRAC_1_SQRT_2;
    for _ in 0..n {
        let nx = m[0][0] * x + m[0][1] * y;
        let ny = m[1][0] * x + m[1][1] * y;
        x = nx;
        y = ny;
    }
    let z = to_f64(&(a + b + c).pow(n as i32 + 1)) / 3f64.sqrt();
    [x, y, z]
}

pub fn quadratic_r_squared(a: &Rational, b: &Rational, c: &Rational) -> Rational {
    a * a + b * b + c * c - a * b - a * c - b * c
}

/// `(cos theta, sin theta)` of the planar block, `None` when `a = b = c`.
/// `sin theta` carries the sign of `b - a`.
pub fn quadratic_angle(a: &Rational, b: &Rational, c: &Rational) -> Option<(f64, f64)> {
    let r2 = quadratic_r_squared(a, b, c);
    if r2.is_zero() {
        return None;
    }
    let r = to_f64(&r2).sqrt();
    let cos = (to_f64(&(int(2) * c - a - b)) / (2.0 * r)).clamp(-1.0, 1.0);
    let sin = to_f64(&(b - a)) * 3f64.sqrt() / (2.0 * r);
    Some((cos, sin))
}

pub fn classify_quadratic(a: &Rational, b: &Rational, c: &Rational) -> Result<OrbitClassification> {
    use std::cmp::Ordering::*;
    let p = Poly::new(vec![a.clone(), b.clone(), c.clone()]);
    if p.degree() != Some(2) || a.is_zero() {
        return Err(Error::Domain(
            "quadratic classification needs a != 0 and c != 0".into(),
        ));
    }
    let s = a + b + c;
    let zscale = s.abs();
    let r_squared = quadratic_r_squared(a, b, c);
    let angle = quadratic_angle(a, b, c);
    let axial = match cmp_one(&s) {
        Greater => AxialBehavior::Escapes,
        Less => AxialBehavior::ConvergesToPlane,
        Equal => AxialBehavior::Stays,
    };
    let planar = match r_squared.cmp(&Rational::one()) {
        Greater => PlanarBehavior::Unbounded,
        Less => PlanarBehavior::Contracts,
        Equal => PlanarBehavior::OnCylinder,
    };
    let diagnostics = Diagnostics::Quadratic(QuadraticDiagnostics {
        zscale: zscale.clone(),
        r: to_f64(&r_squared).sqrt(),
        r_squared: r_squared.clone(),
        cos_theta: angle.map(|(c, _)| c),
        sin_theta: angle.map(|(_, s)| s),
        spirals: if angle.is_some_and(|(c, _)| c < 0.0) { 2 } else { 1 },
        axial,
        planar,
    });

    let third = rat(1, 3);
    let kind = match circulant::orbit_period(&p, DEFAULT_ORDER_CAP)? {
        Some(1) => OrbitKind::FixedPoint,
        Some(m) => OrbitKind::PeriodicOrbit(m),
        None => match (axial, planar) {
            (AxialBehavior::Escapes, _) | (_, PlanarBehavior::Unbounded) => {
                if planar != PlanarBehavior::Unbounded && s.is_negative() {
                    OrbitKind::SplitsTwoUnboundedBranches
                } else {
                    OrbitKind::EscapesToInfinity
                }
            }
            (_, PlanarBehavior::OnCylinder) => OrbitKind::OnCylinder,
            (AxialBehavior::ConvergesToPlane, PlanarBehavior::Contracts) => {
                OrbitKind::ConvergesToPoint(vec![Rational::zero(); 3])
            }
            (AxialBehavior::Stays, PlanarBehavior::Contracts) => {
                if s.is_one() {
                    OrbitKind::ConvergesToPoint(vec![third; 3])
                } else {
                    OrbitKind::SplitsTwoLimits {
                        even: vec![-third.clone(); 3],
                        odd: vec![third; 3],
                    }
                }
            }
        },
    };
    Ok(OrbitClassification { kind, diagnostics })
}

/// One sampled helical curve; `sign` is `-1` for the negated branch.
#[derive(Clone, Debug, PartialEq)]
pub struct HelixBranch {
    pub sign: i8,
    /// `(t, [x~, y~, z~])`.
    pub points: Vec<(f64, [f64; 3])>,
}

/// Samples the helical curve(s) carrying the rotated quadratic orbit.
///
/// With `cos theta >= 0` one curve holds every orbit point at `t = n`. With
/// `cos theta < 0` the planar rotation is written as `-1` times a rotation
/// by the acute angle `phi` (`cos phi = |cos theta|`, `sin phi = -sin theta`),
/// and two curves are returned: even iterates lie on the first, odd ones on
/// the negated second. For `a + b + c < 0` the axial coordinate at
/// non-integer `t` is the real part of the principal power.
pub fn helix_points(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    ts: &[f64],
) -> Result<Vec<HelixBranch>> {
    let (cos, sin) = quadratic_angle(a, b, c)
        .ok_or_else(|| Error::Domain("helix needs a, b, c not all equal".into()))?;
    let r = to_f64(&quadratic_r_squared(a, b, c)).sqrt();
    let (phi_cos, phi_sin, two) = if cos < 0.0 { (-cos, -sin, true) } else { (cos, sin, false) };
    let phi = phi_sin.atan2(phi_cos);
    let u = to_f64(&(a + b - int(2) * c));
    let v = 3f64.sqrt() * to_f64(&(b - a));
    let s = to_f64(&(a + b + c));
    let (s6, s3) = (6f64.sqrt(), 3f64.sqrt());
    let sample = |t: f64, sign: f64| -> [f64; 3] {
        let rt = r.powf(t);
        let (st, ct) = (phi * t).sin_cos();
        let x = sign * rt * (u * ct + v * st) / s6;
        let y = sign * rt * (-u * st + v * ct) / s6;
        let z = if s >= 0.0 {
            s.powf(t + 1.0)
        } else {
            s.abs().powf(t + 1.0) * (PI * (t + 1.0)).cos()
        } / s3;
        [x, y, z]
    };
    let mut branches = vec![HelixBranch {
        sign: 1,
        points: ts.iter().map(|&t| (t, sample(t, 1.0))).collect(),
    }];
    if two {
        branches.push(HelixBranch {
            sign: -1,
            points: ts.iter().map(|&t| (t, sample(t, -1.0))).collect(),
        });
    }
    Ok(branches)
}

/// The array with every column cut down to its periodic blocks.
#[derive(Clone, Debug, PartialEq)]
pub struct AbbreviatedArray {
    /// Entry `k` is the number of dropped leading terms of column `k`:
    /// `1 + (d+1)(k-1)` for `k >= 1`, `0` for `k = 0`.
    pub dropped: Vec<usize>,
    /// Periodic block of each column; column 0 is `(1, 0, ..., 0)`.
    pub blocks: Vec<Vec<Rational>>,
    pub block_reps: usize,
    /// Orbit period of the coefficient vector, when found under the cap.
    pub horizontal_prime_period: Option<usize>,
    /// Least common period of the column blocks `k >= 1`.
    pub vertical_prime_period: usize,
}

impl AbbreviatedArray {
    /// Rows of the abbreviated matrix below the dropped-count row.
    pub fn body(&self) -> Vec<Vec<Rational>> {
        let d1 = self.blocks.first().map_or(0, Vec::len);
        (0..d1 * self.block_reps)
            .map(|i| self.blocks.iter().map(|b| b[i % d1].clone()).collect())
            .collect()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Builds the abbreviated array for columns `0..cols`, reading each block off
/// the exact Riordan array and checking it against the circulant orbit.
pub fn abbreviated_array(p: &Poly, cols: usize, block_reps: usize) -> Result<AbbreviatedArray> {
    let d = p.proper_degree()?;
    if cols == 0 || block_reps == 0 {
        return Err(Error::Domain("cols and block_reps must be positive".into()));
    }
    let period = d + 1;
    let rows = riordan::periodic_start(d, cols.saturating_sub(1)) + period;
    let arr = RiordanArray::build(p, rows.max(period), cols)?;
    let orbit = circulant::orbit_points(p, cols.saturating_sub(2))?;

    let mut first = vec![Rational::zero(); period];
    first[0] = Rational::one();
    let mut blocks = vec![first];
    let mut dropped = vec![0];
    let mut vertical = 1;
    for k in 1..cols {
        let block = arr.periodic_block(k)?;
        if block != orbit[k - 1] {
            return Err(Error::violation(
                "orbit/periodic block correspondence",
                format!("column {k}"),
            ));
        }
        let twice: Vec<_> = block.iter().chain(&block).cloned().collect();
        let q = riordan::prime_period(&twice, period);
        vertical = vertical / gcd(vertical, q) * q;
        dropped.push(riordan::periodic_start(d, k));
        blocks.push(block);
    }
    Ok(AbbreviatedArray {
        dropped,
        blocks,
        block_reps,
        horizontal_prime_period: circulant::orbit_period(p, DEFAULT_ORDER_CAP)?,
        vertical_prime_period: vertical,
    })
}

/// Head sums of columns `1..=kmax`.
pub fn head_sums(p: &Poly, kmax: usize) -> Result<Vec<Rational>> {
    let d = p.proper_degree()?;
    let arr = RiordanArray::build(p, (kmax.max(1) - 1) * (d + 1) + 1, kmax + 1)?;
    (1..=kmax).map(|k| arr.head_sum(k)).collect()
}

/// `(-1 + 2t + 2t^2)/3`, whose circulant has order 6.
pub fn order_six_example() -> Poly {
    Poly::new(vec![rat(-1, 3), rat(2, 3), rat(2, 3)])
}

#[derive(Clone, Debug, PartialEq)]
pub struct Prop5Report {
    pub matrix_order: usize,
    /// Head sums of columns 1..=6.
    pub cycle: Vec<Rational>,
    /// Number of `(k, n)` equalities checked.
    pub checked: usize,
}

/// Checks, for `p = (-1 + 2t + 2t^2)/3`, that `V_p` has order 6 and that the
/// head sum of column `k + 6n` equals that of column `k` for `k = 1..=6`,
/// `n = 1..=n_max`, with the cycle `(0, -1/3, -2/3, -2/3, -1/3, 0)`.
pub fn verify_prop5(n_max: usize) -> Result<Prop5Report> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let p = order_six_example();
    let order = circulant::matrix_order(&p, DEFAULT_ORDER_CAP)?;
    if order != Some(6) {
        return Err(Error::violation("order-6 circulant", format!("order {order:?}")));
    }
    let sums = head_sums(&p, 6 + 6 * n_max)?;
    let expected = vec![int(0), rat(-1, 3), rat(-2, 3), rat(-2, 3), rat(-1, 3), int(0)];
    if sums[..6] != expected[..] {
        return Err(Error::violation(
            "head-sum cycle",
            format!("got {}", strs(&sums[..6]).join(", ")),
        ));
    }
    let mut checked = 0;
    for k in 1..=6 {
        for n in 1..=n_max {
            let (lhs, rhs) = (&sums[k - 1], &sums[k + 6 * n - 1]);
            if lhs != rhs {
                return Err(Error::violation(
                    "head-sum periodicity",
                    format!("column {k}: {lhs} vs column {}: {rhs}", k + 6 * n),
                ));
            }
            checked += 1;
        }
    }
    Ok(Prop5Report {
        matrix_order: 6,
        cycle: expected,
        checked,
    })
}
