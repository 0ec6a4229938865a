//! Exact q-series engine for (k,j)-colored partitions.
//!
//! A (k,j)-colored partition is a partition whose parts carry one of `k`
//! colors, with at most `j` distinct colors on any one part size. The crate
//! provides:
//!
//! - [`series`], [`poly`], [`products`]: truncated power series and finite
//!   polynomials over the integers or `Z/mZ`, Pochhammer products and
//!   Gaussian binomials.
//! - [`colored`]: generating functions and enumeration oracles for
//!   overpartitions, k-colored and (k,j)-colored partitions.
//! - [`congruence`]: progression scans mod 27 for nine colors and the
//!   mod-`p^2` identity for `c_{2p,p}`.
//! - [`boxes`]: box partitions by number of part sizes, the colored
//!   coefficient arrays, and the unimodality scanner.
//!
//! All arithmetic is exact. Every function is generic over a
//! [`Coefficient`]; the aliases below fix the usual choices.

pub mod boxes;
pub mod colored;
pub mod congruence;
pub mod error;
pub mod json;
pub mod partition;
pub mod poly;
pub mod products;
pub mod scalar;
pub mod series;

pub use num_bigint::BigInt;

pub use error::{Error, Result};
pub use partition::PartitionFreq;
pub use poly::QPolynomial;
pub use scalar::Coefficient;
pub use series::TruncatedSeries;

/// Exact series with arbitrary-precision coefficients.
pub type Series = TruncatedSeries<BigInt>;
/// Series for residue-ring work with moduli below 2^31.
pub type Series64 = TruncatedSeries<i64>;
pub type QPoly = QPolynomial<BigInt>;
pub type ColorArray = boxes::array::ColorCoefficientArray<BigInt>;
