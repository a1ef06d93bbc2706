//! Exact enumeration of twenty-vertex configurations with DWBC3 boundary
//! conditions and of domino tilings of Aztec triangles.
//!
//! Partition functions are computed as determinants of truncated
//! generating-function matrices ([`genfun`], [`matdet`]), recounted by
//! independent transfer-matrix oracles ([`oracles`]) and cross-checked by the
//! identity suite in [`verify`].

pub mod exactcore;
pub mod genfun;
pub mod matdet;
pub mod oracles;
pub mod report;
pub mod verify;
pub mod series;

mod error;
pub use error::{Error, Result};
