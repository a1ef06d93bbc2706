//! Boundary edge occupancies for the twenty-vertex sweep, kept as data.
//!
//! The pentagon `P_{n,k}` is drawn with rows `1..=2n−1` counted from the
//! bottom and columns `1..=n` from the left. Column `j` holds rows
//! `b_j..=2n−1` where `b_j = max(n+1−j, n−k)`. Every vertex `(j, r)` has
//! in-edges from the left `(j−1, r)`, from the upper left `(j−1, r+1)` and from
//! above `(j, r+1)`, and the matching out-edges to the right, lower right and
//! below. An edge with one end outside the pentagon is a boundary edge.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    W,
    N,
    E,
    S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Horizontal,
    Diagonal,
    Vertical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    In,
    Out,
}

/// One boundary edge, named by the domain vertex it touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundaryEdge {
    pub side: Side,
    pub kind: EdgeKind,
    pub direction: Direction,
    pub column: usize,
    pub row: usize,
    pub occupied: bool,
}

/// Occupancy of every boundary edge of `P_{n,k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundarySpec {
    pub n: usize,
    pub k: usize,
    pub edges: Vec<BoundaryEdge>,
}

/// Lowest row of each column, `b_1..=b_n`.
pub fn pentagon_bottoms(n: usize, k: usize) -> Result<Vec<usize>> {
    if n == 0 || k >= n {
        return Err(Error::UnsupportedTruncation { model: "20v", n, k });
    }
    Ok((1..=n).map(|j| (n + 1 - j).max(n - k)).collect())
}

fn contains(bottoms: &[usize], top: usize, j: usize, r: usize) -> bool {
    j >= 1 && j <= bottoms.len() && r >= bottoms[j - 1] && r <= top
}

/// The boundary edges of `P_{n,k}` with their sides, occupancies unset.
fn geometry(n: usize, k: usize) -> Result<Vec<(Side, EdgeKind, Direction, usize, usize)>> {
    let b = pentagon_bottoms(n, k)?;
    let top = 2 * n - 1;
    let mut out = Vec::new();
    for j in 1..=n {
        for r in b[j - 1]..=top {
            use {Direction::*, EdgeKind::*};
            if !contains(&b, top, j - 1, r) {
                out.push((if j == 1 { Side::W } else { Side::S }, Horizontal, In, j, r));
            }
            if !contains(&b, top, j - 1, r + 1) {
                let side = if j == 1 {
                    Side::W
                } else if r == top {
                    Side::N
                } else {
                    Side::S
                };
                out.push((side, Diagonal, In, j, r));
            }
            if r == top {
                out.push((Side::N, Vertical, In, j, r));
            }
            if !contains(&b, top, j + 1, r) {
                out.push((if j == n { Side::E } else { Side::S }, Horizontal, Out, j, r));
            }
            if r == 0 || !contains(&b, top, j + 1, r - 1) {
                out.push((if j == n { Side::E } else { Side::S }, Diagonal, Out, j, r));
            }
            if r == b[j - 1] {
                out.push((Side::S, Vertical, Out, j, r));
            }
        }
    }
    Ok(out)
}

impl BoundarySpec {
    /// DWBC3: paths enter through every horizontal edge on the W side and
    /// leave through the vertical edge at the foot of every column.
    pub fn dwbc3(n: usize, k: usize) -> Result<Self> {
        let edges = geometry(n, k)?
            .into_iter()
            .map(|(side, kind, direction, column, row)| BoundaryEdge {
                side,
                kind,
                direction,
                column,
                row,
                occupied: matches!(
                    (side, kind, direction),
                    (Side::W, EdgeKind::Horizontal, Direction::In) | (Side::S, EdgeKind::Vertical, Direction::Out)
                ),
            })
            .collect();
        Ok(BoundarySpec { n, k, edges })
    }

    /// Checks that the edge list is exactly the boundary of `P_{n,k}`.
    pub fn validate(&self) -> Result<()> {
        let mut want = geometry(self.n, self.k)?;
        let mut have: Vec<_> = self.edges.iter().map(|e| (e.side, e.kind, e.direction, e.column, e.row)).collect();
        let key = |e: &(Side, EdgeKind, Direction, usize, usize)| (e.3, e.4, e.1 as u8, e.2 as u8, e.0 as u8);
        want.sort_by_key(key);
        have.sort_by_key(key);
        if want != have {
            let missing = want.iter().find(|e| !have.contains(e));
            let extra = have.iter().find(|e| !want.contains(e));
            return Err(Error::Boundary(format!(
                "edge list does not match the boundary of P_{{{},{}}} (missing {:?}, unexpected {:?})",
                self.n, self.k, missing, extra
            )));
        }
        let ins = self.edges.iter().filter(|e| e.occupied && e.direction == Direction::In).count();
        let outs = self.edges.iter().filter(|e| e.occupied && e.direction == Direction::Out).count();
        if ins != outs {
            return Err(Error::Boundary(format!("{ins} occupied entries but {outs} occupied exits")));
        }
        Ok(())
    }

    /// Occupancy of a boundary edge; `None` if the edge is interior.
    pub fn occupied(&self, kind: EdgeKind, direction: Direction, column: usize, row: usize) -> Option<bool> {
        self.edges
            .iter()
            .find(|e| e.kind == kind && e.direction == direction && e.column == column && e.row == row)
            .map(|e| e.occupied)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("boundary specs always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let spec: BoundarySpec =
            serde_json::from_str(s).map_err(|e| Error::Boundary(format!("invalid boundary JSON: {e}")))?;
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bottoms() {
        assert_eq!(pentagon_bottoms(3, 2).unwrap(), vec![3, 2, 1]);
        assert_eq!(pentagon_bottoms(3, 0).unwrap(), vec![3, 3, 3]);
        assert_eq!(pentagon_bottoms(4, 1).unwrap(), vec![4, 3, 3, 3]);
        assert!(pentagon_bottoms(3, 3).is_err());
    }

    #[test]
    fn defaults_validate_and_round_trip() {
        for n in 1..=5 {
            for k in 0..n {
                let s = BoundarySpec::dwbc3(n, k).unwrap();
                s.validate().unwrap();
                let back = BoundarySpec::from_json(&s.to_json()).unwrap();
                assert_eq!(back, s);
                let sources = s.edges.iter().filter(|e| e.occupied && e.side == Side::W).count();
                assert_eq!(sources, n);
            }
        }
    }

    #[test]
    fn rejects_tampering() {
        let mut s = BoundarySpec::dwbc3(3, 2).unwrap();
        s.edges.pop();
        assert!(s.validate().is_err());
        let mut s = BoundarySpec::dwbc3(3, 2).unwrap();
        s.edges.iter_mut().find(|e| e.side == Side::N).unwrap().occupied = true;
        assert!(s.validate().is_err());
        assert!(BoundarySpec::from_json("{").is_err());
    }
}
