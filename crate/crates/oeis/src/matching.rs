use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::bfile::BFile;
use crate::error::{OeisError, Result};

pub const DEFAULT_OFFSETS: RangeInclusive<i64> = 0..=3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Match,
    /// First disagreement; `expected` is `None` past the end of the b-file.
    Mismatch {
        position: usize,
        expected: Option<String>,
        got: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchReport {
    pub id: String,
    #[serde(serialize_with = "as_strings")]
    pub offered: Vec<BigInt>,
    pub matched_prefix: usize,
    /// b-file index aligned with the first offered term.
    pub offset: i64,
    /// Whether absolute values were compared.
    pub sign_stripped: bool,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// Where the b-file came from: `fixture`, `cache` or `network`.
    pub source: String,
}

fn as_strings<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl MatchReport {
    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }
}

fn align(terms: &[BigInt], bfile: &BFile, offset: i64, strip: bool) -> (usize, Verdict) {
    for (i, t) in terms.iter().enumerate() {
        let got = if strip { t.abs() } else { t.clone() };
        match bfile.get(offset + i as i64) {
            Some(v) if *v == got => continue,
            expected => {
                return (
                    i,
                    Verdict::Mismatch {
                        position: i,
                        expected: expected.map(ToString::to_string),
                        got: got.to_string(),
                    },
                )
            }
        }
    }
    (terms.len(), Verdict::Match)
}

/// Tries every offset in `offsets`, first with the terms as given and then
/// with absolute values when some term is negative. Returns the first full
/// match, otherwise the alignment with the longest matching prefix.
pub fn match_terms(
    terms: &[BigInt],
    bfile: &BFile,
    offsets: RangeInclusive<i64>,
    source: &str,
) -> Result<MatchReport> {
    if terms.is_empty() {
        return Err(OeisError::NoTerms);
    }
    let signed = terms.iter().any(Signed::is_negative);
    let strips: &[bool] = if signed { &[false, true] } else { &[false] };
    let mut best: Option<MatchReport> = None;
    for &strip in strips {
        for offset in offsets.clone() {
            let (matched_prefix, verdict) = align(terms, bfile, offset, strip);
            let report = MatchReport {
                id: bfile.id.clone(),
                offered: terms.to_vec(),
                matched_prefix,
                offset,
                sign_stripped: strip,
                verdict,
                source: source.to_string(),
            };
            if report.is_match() {
                return Ok(report);
            }
            if best.as_ref().is_none_or(|b| report.matched_prefix > b.matched_prefix) {
                best = Some(report);
            }
        }
    }
    Ok(best.expect("offset range is non-empty"))
}
