use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use crate::bfile::BFile;
use crate::error::{OeisError, Result};
use crate::matching::{match_terms, MatchReport};

pub const DEFAULT_BASE_URL: &str = "https://oeis.org";

const FIXTURES: &[(&str, &str)] = &[
    ("A000108", include_str!("../fixtures/b000108.txt")),
    ("A001700", include_str!("../fixtures/b001700.txt")),
    ("A002740", include_str!("../fixtures/b002740.txt")),
    ("A088218", include_str!("../fixtures/b088218.txt")),
];

/// Ids with a b-file shipped in this crate.
pub fn fixture_ids() -> Vec<&'static str> {
    FIXTURES.iter().map(|(id, _)| *id).collect()
}

pub fn fixture(id: &str) -> Option<BFile> {
    FIXTURES
        .iter()
        .find(|(fid, _)| *fid == id)
        .map(|(fid, text)| BFile::parse(fid, text).expect("shipped fixtures parse"))
}

/// Checks the `A` + six digits form and normalizes the letter case.
pub fn normalize_id(id: &str) -> Result<String> {
    let id = id.trim();
    let digits = id.strip_prefix(['A', 'a']).unwrap_or("");
    if digits.len() == 6 && digits.bytes().all(|b| b.is_ascii_digit()) {
        Ok(format!("A{digits}"))
    } else {
        Err(OeisError::InvalidId(id.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClientConfig {
    /// Never touch the network; only shipped fixtures are served.
    pub offline: bool,
    pub cache_dir: Option<PathBuf>,
    pub base_url: String,
    pub timeout: Duration,
}

impl Default for ClientConfig {
    fn default() -> Self {
        ClientConfig {
            offline: false,
            cache_dir: None,
            base_url: DEFAULT_BASE_URL.to_string(),
            timeout: Duration::from_secs(20),
        }
    }
}

impl ClientConfig {
    /// Reads `OEIS_OFFLINE`, `OEIS_CACHE_DIR` and `OEIS_BASE_URL`.
    pub fn from_env() -> Self {
        let var = |k: &str| std::env::var(k).ok().filter(|v| !v.is_empty());
        ClientConfig {
            offline: var("OEIS_OFFLINE").is_some_and(|v| v != "0"),
            cache_dir: var("OEIS_CACHE_DIR").map(PathBuf::from),
            base_url: var("OEIS_BASE_URL").unwrap_or_else(|| DEFAULT_BASE_URL.to_string()),
            ..Default::default()
        }
    }
}

/// Serves b-files from the shipped fixtures, then the on-disk cache, then
/// the network.
#[derive(Clone, Debug)]
pub struct OeisClient {
    config: ClientConfig,
}

impl OeisClient {
    pub fn new(config: ClientConfig) -> Self {
        OeisClient { config }
    }

    pub fn from_env() -> Self {
        Self::new(ClientConfig::from_env())
    }

    pub fn config(&self) -> &ClientConfig {
        &self.config
    }

    /// The b-file and where it came from.
    pub fn fetch(&self, id: &str) -> Result<(BFile, &'static str)> {
        let id = normalize_id(id)?;
        if let Some(b) = fixture(&id) {
            return Ok((b, "fixture"));
        }
        if self.config.offline {
            return Err(OeisError::Unavailable {
                id,
                reason: "offline mode and no shipped fixture".into(),
            });
        }
        if let Some(path) = self.cache_path(&id) {
            if let Ok(text) = std::fs::read_to_string(&path) {
                if let Ok(b) = BFile::parse(&id, &text) {
                    return Ok((b, "cache"));
                }
            }
        }
        let text = self.download(&id)?;
        let b = BFile::parse(&id, &text)?;
        self.store(&id, &text)?;
        Ok((b, "network"))
    }

    pub fn check_sequence(
        &self,
        terms: &[num_bigint::BigInt],
        id: &str,
        offsets: std::ops::RangeInclusive<i64>,
    ) -> Result<MatchReport> {
        if terms.is_empty() {
            return Err(OeisError::NoTerms);
        }
        let (bfile, source) = self.fetch(id)?;
        match_terms(terms, &bfile, offsets, source)
    }

    pub fn url(&self, id: &str) -> String {
        format!(
            "{}/{id}/b{}.txt",
            self.config.base_url.trim_end_matches('/'),
            &id[1..]
        )
    }

    fn cache_path(&self, id: &str) -> Option<PathBuf> {
        self.config
            .cache_dir
            .as_ref()
            .map(|d| d.join(format!("b{}.txt", &id[1..])))
    }

    fn download(&self, id: &str) -> Result<String> {
        let unavailable = |reason: String| OeisError::Unavailable {
            id: id.to_string(),
            reason,
        };
        let agent: ureq::Agent = ureq::Agent::config_builder()
            .timeout_global(Some(self.config.timeout))
            .build()
            .into();
        let mut response = agent
            .get(&self.url(id))
            .call()
            .map_err(|e| unavailable(e.to_string()))?;
        response
            .body_mut()
            .read_to_string()
            .map_err(|e| unavailable(e.to_string()))
    }

    /// Writes to a temporary file in the cache directory and renames it into
    /// place, so concurrent readers never see a partial file.
    fn store(&self, id: &str, text: &str) -> Result<()> {
        let (Some(dir), Some(path)) = (self.config.cache_dir.as_ref(), self.cache_path(id)) else {
            return Ok(());
        };
        let cache_err = |e: std::io::Error| OeisError::Cache(e.to_string());
        std::fs::create_dir_all(dir).map_err(cache_err)?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(cache_err)?;
        tmp.write_all(text.as_bytes()).map_err(cache_err)?;
        tmp.persist(&path).map_err(|e| cache_err(e.error))?;
        Ok(())
    }
}
