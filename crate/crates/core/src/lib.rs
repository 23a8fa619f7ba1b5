//! Exact Riordan arrays of the form `(1/(1 - t^(d+1)), t p(t))`.
//!
//! The crate builds the arrays over exact rationals, checks the eventual
//! periodicity of their columns, relates the periodic blocks to the orbit
//! of `p`'s coefficient vector under a circulant matrix, classifies that
//! orbit for linear and quadratic `p`, and computes the A- and Z-sequences
//! of the array through series reversion.

pub mod azseq;
pub mod circulant;
pub mod dynamics;
pub mod error;
pub mod poly;
pub mod riordan;
pub mod ring;
pub mod series;

pub use azseq::AZPair;
pub use dynamics::{OrbitClassification, OrbitKind};
pub use error::{Error, Result};
pub use poly::Poly;
pub use riordan::{PeriodReport, RiordanArray};
pub use ring::{CoeffRing, ParamPoly, Rational};
pub use series::Series;
