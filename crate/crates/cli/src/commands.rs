use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};

use riordan_core::azseq::{self, az_sequences};
use riordan_core::circulant;
use riordan_core::dynamics;
use riordan_core::poly::parse_rational;
use riordan_core::riordan::{column_gf, periodic_start, verify_theorem1};
use riordan_core::ring::to_f64;
use riordan_core::{Poly, Rational, RiordanArray};
use riordan_oeis::{OeisClient, OeisError, DEFAULT_OFFSETS};

use crate::render::{self, float, strings, Format};
use crate::{Check, Command, Source};

pub struct Outcome {
    pub text: String,
    /// Set when a checked claim did not hold; the text still holds the report.
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            failure: None,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Violation(String),
    Unavailable(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Unavailable(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Violation(m) | CliError::Unavailable(m) => m,
        }
    }
}

impl From<riordan_core::Error> for CliError {
    fn from(e: riordan_core::Error) -> Self {
        if e.is_violation() {
            CliError::Violation(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<OeisError> for CliError {
    fn from(e: OeisError) -> Self {
        if e.is_unavailable() {
            CliError::Unavailable(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_poly(s: &str) -> Result<Poly> {
    Ok(s.parse()?)
}

fn require_poly(p: &Option<String>) -> Result<Poly> {
    parse_poly(p.as_deref().ok_or_else(|| usage("--poly is required"))?)
}

pub fn emit(text: &str, out: Option<&Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn run(cmd: &Command, format: Format) -> Result<Outcome> {
    match cmd {
        Command::Array { p, rows, cols } => array(&parse_poly(&p.poly)?, *rows, *cols, format),
        Command::Column { p, k, reps } => column(&parse_poly(&p.poly)?, *k, *reps, format),
        Command::Orbit {
            p,
            nmax,
            rotated,
            curve,
            samples,
        } => orbit(&parse_poly(&p.poly)?, *nmax, *rotated, *curve, *samples, format),
        Command::Classify { p } => classify(&parse_poly(&p.poly)?, format),
        Command::Abbreviated { p, cols, reps } => {
            abbreviated(&parse_poly(&p.poly)?, *cols, *reps, format)
        }
        Command::Az {
            poly,
            order,
            csum,
            cdeg,
        } => {
            if *csum {
                csum_table(*order, *cdeg, format)
            } else {
                az(&require_poly(poly)?, *order, format)
            }
        }
        Command::Verify { poly, which } => verify(poly, which, format),
        Command::Oeis {
            id,
            from,
            terms,
            a,
            b,
            nmax,
        } => oeis(id, *from, terms.as_deref(), a, b, *nmax, format),
    }
}

fn array(p: &Poly, rows: usize, cols: usize, format: Format) -> Result<Outcome> {
    let arr = RiordanArray::build(p, rows, cols)?;
    let text = match format {
        Format::Json => format!("{}\n", arr.to_json()),
        Format::Csv => arr.to_csv(),
        Format::Table => {
            let body: Vec<Vec<String>> = arr.entries().iter().map(|r| strings(r)).collect();
            render::table(&[], &body)
        }
    };
    Ok(Outcome::ok(text))
}

fn column(p: &Poly, k: usize, reps: usize, format: Format) -> Result<Outcome> {
    let rep = verify_theorem1(p, k, reps)?;
    let d = p.proper_degree()?;
    let start = periodic_start(d, k);
    let terms = column_gf(p, k, start + reps * (d + 1))?.into_coeffs();
    let head: Rational = terms[..start].iter().sum();
    let rows: Vec<Vec<String>> = terms
        .iter()
        .enumerate()
        .map(|(n, v)| vec![n.to_string(), v.to_string()])
        .collect();
    let summary = json!({
        "p": p.to_string(),
        "k": k,
        "period": rep.period,
        "start": rep.start,
        "block": strings(&rep.block),
        "prime_period": rep.prime_period,
        "head_sum": head.to_string(),
    });
    let text = match format {
        Format::Json => {
            let mut v = summary;
            v["terms"] = json!(strings(&terms));
            render::json(&v)
        }
        Format::Csv => render::csv(&["n".into(), "value".into()], &rows),
        Format::Table => format!(
            "{}\n{}",
            render::table(&["n".into(), "value".into()], &rows),
            render::pairs(Format::Table, &summary)
        ),
    };
    Ok(Outcome::ok(text))
}

fn coord_names(d: usize) -> Vec<String> {
    if d <= 2 {
        ["x", "y", "z"][..=d].iter().map(|s| s.to_string()).collect()
    } else {
        (0..=d).map(|i| format!("x{i}")).collect()
    }
}

fn linear_quadratic(p: &Poly) -> Result<(usize, Vec<Rational>)> {
    let d = p.proper_degree()?;
    if !(1..=2).contains(&d) {
        return Err(usage(format!(
            "rotated coordinates and curves need degree 1 or 2, p has degree {d}"
        )));
    }
    Ok((d, p.coeffs().to_vec()))
}

fn orbit(
    p: &Poly,
    nmax: usize,
    rotated: bool,
    curve: bool,
    samples: usize,
    format: Format,
) -> Result<Outcome> {
    let d = p.proper_degree()?;
    let names = coord_names(d);
    let mut point_rows: Vec<Vec<String>> = Vec::with_capacity(nmax + 1);
    if rotated || curve {
        let (d, c) = linear_quadratic(p)?;
        for n in 0..=nmax {
            let pt: Vec<f64> = if d == 1 {
                dynamics::rotated_orbit_linear(&c[0], &c[1], n).to_vec()
            } else {
                dynamics::rotated_orbit_quadratic(&c[0], &c[1], &c[2], n).to_vec()
            };
            let mut row = vec![n.to_string()];
            row.extend(pt.into_iter().map(float));
            point_rows.push(row);
        }
    } else {
        for (n, pt) in circulant::orbit_points(p, nmax)?.iter().enumerate() {
            let mut row = vec![n.to_string()];
            row.extend(strings(pt));
            point_rows.push(row);
        }
    }
    let mut point_headers = vec!["n".to_string()];
    point_headers.extend(names.iter().cloned());

    let mut curve_headers = vec!["t".to_string()];
    curve_headers.extend(names.iter().cloned());
    curve_headers.push("branch".into());
    let mut curve_rows: Vec<Vec<String>> = Vec::new();
    let mut curve_info = Value::Null;
    if curve {
        if samples == 0 {
            return Err(usage("--samples must be positive"));
        }
        let (d, c) = linear_quadratic(p)?;
        let steps = nmax * samples;
        let ts: Vec<f64> = (0..=steps).map(|i| i as f64 / samples as f64).collect();
        if d == 1 {
            // parameter n + 1 corresponds to orbit point n
            let params: Vec<f64> = ts.iter().map(|t| t + 1.0).collect();
            for (s, pt) in params.iter().zip(dynamics::linear_curve_points(&c[0], &c[1], &params)) {
                curve_rows.push(vec![float(s - 1.0), float(pt[0]), float(pt[1]), "0".into()]);
            }
            if let Ok(pc) = dynamics::curve_constant_linear(&c[0], &c[1]) {
                curve_info = json!({"exponent": pc.exponent, "constant": pc.constant});
            }
        } else {
            let branches = dynamics::helix_points(&c[0], &c[1], &c[2], &ts)?;
            for (b, branch) in branches.iter().enumerate() {
                for (t, pt) in &branch.points {
                    let mut row = vec![float(*t)];
                    row.extend(pt.iter().map(|x| float(*x)));
                    row.push(b.to_string());
                    curve_rows.push(row);
                }
            }
            curve_info = json!({"branches": branches.len()});
        }
    }

    let text = match format {
        Format::Json => {
            let mut v = json!({
                "p": p.to_string(),
                "rotated": rotated || curve,
                "columns": point_headers,
                "points": point_rows,
            });
            if curve {
                v["curve"] = json!({
                    "columns": curve_headers,
                    "rows": curve_rows,
                    "info": curve_info,
                });
            }
            render::json(&v)
        }
        Format::Csv if curve => render::csv(&curve_headers, &curve_rows),
        Format::Csv => render::csv(&point_headers, &point_rows),
        Format::Table => {
            let mut s = render::table(&point_headers, &point_rows);
            if curve {
                s.push('\n');
                s.push_str(&render::table(&curve_headers, &curve_rows));
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn classify(p: &Poly, format: Format) -> Result<Outcome> {
    let c = p.coeffs();
    let cl = match p.degree() {
        Some(1) => dynamics::classify_linear(&c[0], &c[1])?,
        Some(2) => dynamics::classify_quadratic(&c[0], &c[1], &c[2])?,
        _ => return Err(usage("classification needs a polynomial of degree 1 or 2")),
    };
    let mut v = cl.to_json_value();
    v["p"] = json!(p.to_string());
    Ok(Outcome::ok(match format {
        Format::Json => render::json(&v),
        f => render::pairs(f, &v),
    }))
}

fn abbreviated(p: &Poly, cols: usize, reps: usize, format: Format) -> Result<Outcome> {
    let ab = dynamics::abbreviated_array(p, cols, reps)?;
    let dropped = strings(&ab.dropped);
    let body: Vec<Vec<String>> = ab.body().iter().map(|r| strings(r)).collect();
    let text = match format {
        Format::Json => render::json(&json!({
            "p": p.to_string(),
            "dropped": ab.dropped,
            "blocks": ab.blocks.iter().map(|b| strings(b)).collect::<Vec<_>>(),
            "block_reps": ab.block_reps,
            "horizontal_prime_period": ab.horizontal_prime_period,
            "vertical_prime_period": ab.vertical_prime_period,
        })),
        Format::Csv => render::csv(&dropped, &body),
        Format::Table => {
            let mut s = render::table(&dropped, &body);
            let h = ab
                .horizontal_prime_period
                .map_or("none".to_string(), |m| m.to_string());
            s.push_str(&format!(
                "horizontal prime period: {h}\nvertical prime period: {}\n",
                ab.vertical_prime_period
            ));
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn az(p: &Poly, order: usize, format: Format) -> Result<Outcome> {
    let pair = az_sequences(p, order)?;
    let rows: Vec<Vec<String>> = (0..order)
        .map(|n| {
            vec![
                n.to_string(),
                pair.a.coeffs()[n].to_string(),
                pair.z.coeffs()[n].to_string(),
            ]
        })
        .collect();
    let headers = ["n".to_string(), "A".into(), "Z".into()];
    Ok(Outcome::ok(match format {
        Format::Json => format!("{}\n", pair.to_json(p)),
        f => render::tabular(f, &headers, &rows),
    }))
}

fn csum_table(order: usize, cdeg: usize, format: Format) -> Result<Outcome> {
    let table = azseq::csum_table(order, cdeg)?;
    Ok(Outcome::ok(match format {
        Format::Csv => azseq::table_to_csv(&table),
        Format::Json => render::json(&json!({
            "p": "1,1,c",
            "N": order,
            "K": cdeg,
            "rows": table.iter().map(|r| strings(r)).collect::<Vec<_>>(),
        })),
        Format::Table => {
            let mut headers = vec!["n".to_string()];
            headers.extend((0..cdeg).map(|j| format!("c^{j}")));
            let rows: Vec<Vec<String>> = table
                .iter()
                .enumerate()
                .map(|(n, r)| std::iter::once(n.to_string()).chain(strings(r)).collect())
                .collect();
            render::table(&headers, &rows)
        }
    }))
}

/// `a` and `b` of a polynomial of degree at most one.
fn linear_coeffs(p: &Poly) -> Result<(Rational, Rational)> {
    if p.degree().is_some_and(|d| d > 1) {
        return Err(usage("this check takes --poly \"a,b\""));
    }
    Ok((p.coeff(0), p.coeff(1)))
}

fn verify(poly: &Option<String>, which: &Check, format: Format) -> Result<Outcome> {
    let (name, details) = match which {
        Check::Theorem1 { kmax, reps } => {
            let p = require_poly(poly)?;
            let reports = (0..=*kmax)
                .map(|k| verify_theorem1(&p, k, *reps))
                .collect::<std::result::Result<Vec<_>, _>>();
            (
                "theorem1",
                reports.map(|r| {
                    json!({
                        "p": p.to_string(),
                        "columns": r.len(),
                        "period": r[0].period,
                        "starts": r.iter().map(|x| x.start).collect::<Vec<_>>(),
                        "prime_periods": r.iter().map(|x| x.prime_period).collect::<Vec<_>>(),
                        "reps": reps,
                    })
                }),
            )
        }
        Check::Theorem2 { nmax } => {
            let p = require_poly(poly)?;
            let r = circulant::verify_theorem2(&p, *nmax);
            ("theorem2", r.map(|r| json!({"p": p.to_string(), "checked": r.checked})))
        }
        Check::Prop5 { nmax } => {
            let example = dynamics::order_six_example();
            if let Some(s) = poly {
                if parse_poly(s)? != example {
                    return Err(usage(format!("prop5 is stated for p = {example}")));
                }
            }
            let r = dynamics::verify_prop5(*nmax);
            (
                "prop5",
                r.map(|r| {
                    json!({
                        "p": example.to_string(),
                        "matrix_order": r.matrix_order,
                        "cycle": strings(&r.cycle),
                        "checked": r.checked,
                    })
                }),
            )
        }
        Check::Rogers { rows } => {
            let p = require_poly(poly)?;
            let r = azseq::verify_rogers(&p, *rows);
            ("rogers", r.map(|r| json!({"p": p.to_string(), "rows": r.rows, "checked": r.checked})))
        }
        Check::Theorem6 { nmax } => {
            let (a, b) = linear_coeffs(&require_poly(poly)?)?;
            let r = azseq::theorem6_check(&a, &b, *nmax);
            (
                "theorem6",
                r.map(|r| json!({"a": a.to_string(), "b": b.to_string(), "values": strings(&r.values)})),
            )
        }
        Check::Catalan { order } => {
            let (a, b) = linear_coeffs(&require_poly(poly)?)?;
            let r = azseq::verify_catalan_forms(&a, &b, *order);
            (
                "catalan",
                r.map(|r| json!({"a": a.to_string(), "b": b.to_string(), "checked": r.checked})),
            )
        }
        Check::Fourier { tol } => {
            let p = require_poly(poly)?;
            let tol = to_f64(&parse_rational(tol)?);
            let r = circulant::verify_diagonalization(&p, tol);
            (
                "fourier",
                r.map(|r| {
                    json!({
                        "p": p.to_string(),
                        "max_off_diagonal": r.max_off_diagonal,
                        "max_eigen_error": r.max_eigen_error,
                    })
                }),
            )
        }
    };
    let (mut v, failure) = match details {
        Ok(v) => (v, None),
        Err(e) if e.is_violation() => (json!({"detail": e.to_string()}), Some(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    let obj = v.as_object_mut().expect("reports are objects");
    obj.insert("check".into(), json!(name));
    obj.insert("status".into(), json!(if failure.is_some() { "fail" } else { "pass" }));
    let text = match format {
        Format::Json => render::json(&v),
        f => render::pairs(f, &v),
    };
    Ok(Outcome { text, failure })
}

fn integers(v: &[Rational]) -> Result<Vec<BigInt>> {
    v.iter()
        .map(|q| {
            if q.is_integer() {
                Ok(q.to_integer())
            } else {
                Err(usage(format!("{q} is not an integer")))
            }
        })
        .collect()
}

fn oeis(
    id: &str,
    from: Option<Source>,
    terms: Option<&str>,
    a: &str,
    b: &str,
    nmax: usize,
    format: Format,
) -> Result<Outcome> {
    let terms: Vec<BigInt> = match (from, terms) {
        (Some(_), Some(_)) | (None, None) => {
            return Err(usage("pass exactly one of --from and --terms"))
        }
        (None, Some(t)) => t
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<BigInt>()
                    .map_err(|_| usage(format!("`{s}` is not an integer")))
            })
            .collect::<Result<_>>()?,
        (Some(Source::Theorem6), None) => {
            let (a, b) = (parse_rational(a)?, parse_rational(b)?);
            integers(&azseq::theorem6_check(&a, &b, nmax)?.values)?
        }
        (Some(Source::Csum1), None) => azseq::csum_column(1, 2, nmax + 2)?,
        (Some(Source::Csum2), None) => azseq::csum_column(2, 4, nmax + 4)?,
        (Some(Source::Catalan), None) => azseq::catalan_table(nmax),
    };
    let report = OeisClient::from_env().check_sequence(&terms, id, DEFAULT_OFFSETS)?;
    let v = serde_json::to_value(&report).expect("report serializes");
    let failure = (!report.is_match()).then(|| {
        format!(
            "sequence does not match {} (matched {} of {} terms)",
            report.id,
            report.matched_prefix,
            terms.len()
        )
    });
    let text = match format {
        Format::Json => render::json(&v),
        f => render::pairs(f, &v),
    };
    Ok(Outcome { text, failure })
}
