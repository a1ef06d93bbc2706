//! Direct combinatorial counters that never use the determinant machinery.
//!
//! * [`count_schroder`] and [`m_entry_oracle`] count single Schröder paths.
//! * [`count_dt`] counts families of vertex-disjoint Schröder paths, i.e.
//!   domino tilings of Aztec triangles, by a frontier sweep in `x`.
//! * [`count_20v`] counts osculating-path configurations of the
//!   twenty-vertex model with a vertex-by-vertex transfer sweep.

mod boundary;
mod dt;
mod schroder;
mod twenty;

pub use boundary::{pentagon_bottoms, BoundaryEdge, BoundarySpec, Direction, EdgeKind, Side};
pub use dt::{count_dt, count_dt_gamma, count_dt_weighted, dt_forbidden_vertices, DT_MAX_N};
pub use schroder::{count_schroder, enumerate_paths, m_entry_oracle, tuple_count_dt, SchroderStep};
pub use twenty::{calibrate_dwbc3, count_20v, count_20v_with, TWENTY_MAX_N};

use serde::{Deserialize, Serialize};

use crate::exactcore::Ring;

/// Which model an oracle count belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Model {
    #[serde(rename = "20v")]
    TwentyVertex,
    #[serde(rename = "dt")]
    DominoTriangle,
}

/// The refinement statistic a count is split by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Statistic {
    /// Row `k ∈ 1..=2n−1` at which a path first enters the last column; index `k−1`.
    LastColumnEntry,
    /// Distance `k ∈ 0..n` of the top path's first visit to `x+y = 4n−2` from its endpoint.
    DiagonalFirstHit,
}

/// An exact count with its refinement.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleCount<W: Ring> {
    pub model: Model,
    pub n: usize,
    pub k: usize,
    pub total: W,
    pub refined: Vec<W>,
    /// For the 20V model, the refinement split by entry step: horizontal, then diagonal.
    pub split: Option<(Vec<W>, Vec<W>)>,
    pub statistic: Statistic,
}

impl<W: Ring> OracleCount<W> {
    /// Whether the refined vector sums to the total. An unrefined count has an empty vector.
    pub fn is_consistent(&self) -> bool {
        if self.refined.is_empty() {
            return self.split.is_none();
        }
        let s = self.refined.iter().fold(W::zero(), |acc, x| acc.plus(x));
        let split_ok = self.split.as_ref().is_none_or(|(h, d)| {
            h.len() == self.refined.len() && h.iter().zip(d).zip(&self.refined).all(|((a, b), r)| a.plus(b) == *r)
        });
        s == self.total && split_ok
    }
}
