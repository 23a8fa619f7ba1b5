use std::fmt;

use num_bigint::BigInt;

use crate::error::{OeisError, Result};

/// A parsed b-file. Comment and blank lines are kept with their position so
/// that [`BFile::serialize`] reproduces the input exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub id: String,
    entries: Vec<(i64, BigInt)>,
    /// Original spelling of each data line when it is not `"{index} {value}"`.
    raw: Vec<Option<String>>,
    /// `(k, line)`: a non-data line appearing before entry `k`.
    extras: Vec<(usize, String)>,
    trailing_newline: bool,
}

impl BFile {
    pub fn from_entries(id: &str, entries: Vec<(i64, BigInt)>) -> Result<Self> {
        for w in entries.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(OeisError::Parse {
                    line: 0,
                    reason: format!("index {} does not follow {}", w[1].0, w[0].0),
                });
            }
        }
        Ok(BFile {
            id: id.to_string(),
            raw: vec![None; entries.len()],
            entries,
            extras: Vec::new(),
            trailing_newline: true,
        })
    }

    /// Parses `index value` lines; `#` lines and blank lines are skipped.
    pub fn parse(id: &str, text: &str) -> Result<Self> {
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        let mut raw = Vec::new();
        let mut extras = Vec::new();
        let body = text.strip_suffix('\n');
        let trailing_newline = body.is_some();
        let body = body.unwrap_or(text);
        if body.is_empty() && !trailing_newline {
            return Ok(BFile {
                id: id.to_string(),
                entries,
                raw,
                extras,
                trailing_newline,
            });
        }
        for (i, line) in body.split('\n').enumerate() {
            let lineno = i + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                extras.push((entries.len(), line.to_string()));
                continue;
            }
            let err = |reason: String| OeisError::Parse {
                line: lineno,
                reason,
            };
            let mut parts = trimmed.split_whitespace();
            let (Some(idx), Some(val), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(err(format!("expected `index value`, got `{trimmed}`")));
            };
            let idx: i64 = idx
                .parse()
                .map_err(|_| err(format!("index `{idx}` is not an integer")))?;
            let val: BigInt = val
                .parse()
                .map_err(|_| err(format!("value `{val}` is not an integer")))?;
            if let Some((prev, _)) = entries.last() {
                if idx <= *prev {
                    return Err(err(format!("index {idx} does not follow {prev}")));
                }
            }
            let canonical = line == format!("{idx} {val}");
            raw.push((!canonical).then(|| line.to_string()));
            entries.push((idx, val));
        }
        Ok(BFile {
            id: id.to_string(),
            entries,
            raw,
            extras,
            trailing_newline,
        })
    }

    pub fn entries(&self) -> &[(i64, BigInt)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first_index(&self) -> Option<i64> {
        self.entries.first().map(|e| e.0)
    }

    pub fn get(&self, index: i64) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&index, |e| e.0)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn serialize(&self) -> String {
        let mut lines: Vec<String> = Vec::with_capacity(self.entries.len() + self.extras.len());
        let mut extras = self.extras.iter().peekable();
        for (k, (idx, val)) in self.entries.iter().enumerate() {
            while let Some((_, line)) = extras.next_if(|(pos, _)| *pos == k) {
                lines.push(line.clone());
            }
            match &self.raw[k] {
                Some(line) => lines.push(line.clone()),
                None => lines.push(format!("{idx} {val}")),
            }
        }
        lines.extend(extras.map(|(_, l)| l.clone()));
        let mut out = lines.join("\n");
        if self.trailing_newline {
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}
