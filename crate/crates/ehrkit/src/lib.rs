//! Exact Ehrhart series and polynomials of order polytopes of finite posets.
//!
//! Everything is computed in exact arbitrary-precision arithmetic. The crate
//! has three layers:
//!
//! * posets and their compositions ([`poset`], [`builders`], [`ops`]),
//! * the linear-extension engine and lattice-point oracle ([`extensions`]),
//! * closed-form counting formulas with independent enumeration oracles
//!   (plane partitions, non-intersecting path systems, tableaux, multiset
//!   descents, Stirling numbers).
//!
//! A small expression language ([`dsl`]) builds posets from text, and
//! [`verify`] checks computed sequences against bundled b-file fixtures.

pub mod binom;
pub mod builders;
pub mod dsl;
pub mod error;
pub mod config;
pub mod extensions;
pub mod ferrers;
pub mod fixture;
pub mod grids;
pub mod iso;
pub mod lgv;
pub mod matrix;
pub mod multiset;
pub mod ops;
pub mod partitions;
pub mod poly;
pub mod poset;
pub mod products;
pub mod riordan;
pub mod series;
pub mod series_text;
pub mod stirling;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use poly::{IntPoly, RatPoly};
pub use poset::Poset;
pub use series::EhrSeries;
