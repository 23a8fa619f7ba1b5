//! OEIS b-file parsing and sequence cross-checks.
//!
//! Lookups are offline-first: the b-files of a few sequences ship with the
//! crate, other ids are read from an optional on-disk cache or downloaded.
//! Configuration comes from `OEIS_OFFLINE`, `OEIS_CACHE_DIR` and
//! `OEIS_BASE_URL`.

pub mod bfile;
pub mod client;
pub mod error;
pub mod matching;

pub use bfile::BFile;
pub use client::{ClientConfig, OeisClient};
pub use error::{OeisError, Result};
pub use matching::{match_terms, MatchReport, Verdict, DEFAULT_OFFSETS};
