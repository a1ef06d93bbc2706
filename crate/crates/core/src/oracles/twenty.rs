use std::collections::HashMap;

use super::boundary::{pentagon_bottoms, BoundarySpec, Direction, EdgeKind};
use super::{Model, OracleCount, Statistic};
use crate::exactcore::Int;
use crate::{Error, Result};

/// Largest `n` accepted by the twenty-vertex sweep.
pub const TWENTY_MAX_N: usize = 8;

const TAG_SHIFT: u32 = 56;
const STATE_MASK: u64 = (1 << TAG_SHIFT) - 1;

/// Configurations on `P_{n,k}` with DWBC3 boundaries.
///
/// With `refined`, the count is split by the row at which a path first enters
/// the last column, and by whether it enters horizontally or diagonally.
pub fn count_20v(n: usize, k: usize, refined: bool) -> Result<OracleCount<Int>> {
    count_20v_with(&BoundarySpec::dwbc3(n, k)?, refined)
}

/// Configurations on `P_{n,k}` for an arbitrary boundary specification.
pub fn count_20v_with(spec: &BoundarySpec, refined: bool) -> Result<OracleCount<Int>> {
    let (n, k) = (spec.n, spec.k);
    if n == 0 || n > TWENTY_MAX_N {
        return Err(Error::OracleBound { model: "20v", n, max: TWENTY_MAX_N });
    }
    spec.validate()?;
    let bottoms = pentagon_bottoms(n, k)?;
    let top = 2 * n - 1;
    let d_bit = |r: usize| 1u64 << (2 * n + r);
    let h_bit = |r: usize| 1u64 << r;
    let carry = 1u64 << (4 * n);
    let pending = 1u64 << (4 * n + 1);
    let bit = |s: u64, b: u64| (s & b != 0) as u8;

    let mut frontier: HashMap<u64, Int> = HashMap::new();
    frontier.insert(0, Int::from(1));
    for j in 1..=n {
        let b = bottoms[j - 1];
        for r in (b..=top).rev() {
            let h_in_b = spec.occupied(EdgeKind::Horizontal, Direction::In, j, r);
            let d_in_b = spec.occupied(EdgeKind::Diagonal, Direction::In, j, r);
            let v_in_b = spec.occupied(EdgeKind::Vertical, Direction::In, j, r);
            let h_out_b = spec.occupied(EdgeKind::Horizontal, Direction::Out, j, r);
            let d_out_b = spec.occupied(EdgeKind::Diagonal, Direction::Out, j, r);
            let v_out_b = spec.occupied(EdgeKind::Vertical, Direction::Out, j, r);
            let mut next: HashMap<u64, Int> = HashMap::with_capacity(frontier.len() * 2);
            for (&key, w) in &frontier {
                let s = key & STATE_MASK;
                let tag = key >> TAG_SHIFT;
                let h_in = h_in_b.map_or(bit(s, h_bit(r)), u8::from);
                let d_in = d_in_b.map_or(bit(s, d_bit(r)), u8::from);
                let v_in = v_in_b.map_or(bit(s, carry), u8::from);
                let inflow = h_in + d_in + v_in;
                // Consume this row's slots; the diagonal from the vertex above lands here.
                let mut base = s & !(h_bit(r) | d_bit(r) | carry | pending);
                if s & pending != 0 {
                    base |= d_bit(r);
                }
                for out in 0u8..8 {
                    let (h_out, d_out, v_out) = (out & 1, (out >> 1) & 1, (out >> 2) & 1);
                    if h_out + d_out + v_out != inflow {
                        continue;
                    }
                    if h_out_b.is_some_and(|o| u8::from(o) != h_out)
                        || d_out_b.is_some_and(|o| u8::from(o) != d_out)
                        || v_out_b.is_some_and(|o| u8::from(o) != v_out)
                    {
                        continue;
                    }
                    let mut ns = base;
                    if h_out == 1 && h_out_b.is_none() {
                        ns |= h_bit(r);
                    }
                    if d_out == 1 && d_out_b.is_none() {
                        ns |= pending;
                    }
                    if v_out == 1 && v_out_b.is_none() {
                        ns |= carry;
                    }
                    let mut nt = tag;
                    if refined && j == n && v_in == 0 && v_out == 1 {
                        nt = 1 + 2 * (r as u64 - 1) + u64::from(d_in);
                    }
                    if r == b && ns & pending != 0 {
                        ns = (ns & !pending) | d_bit(r - 1);
                    }
                    let e = next.entry(ns | (nt << TAG_SHIFT)).or_insert_with(|| Int::from(0));
                    *e += w;
                }
            }
            frontier = next;
        }
    }

    let rows = 2 * n - 1;
    let mut total = Int::from(0);
    let mut horiz = vec![Int::from(0); rows];
    let mut diag = vec![Int::from(0); rows];
    for (key, w) in frontier {
        total += &w;
        let tag = key >> TAG_SHIFT;
        if tag > 0 {
            let idx = ((tag - 1) / 2) as usize;
            if (tag - 1) % 2 == 0 {
                horiz[idx] += &w;
            } else {
                diag[idx] += &w;
            }
        }
    }
    let (refined_vec, split) = if refined {
        (horiz.iter().zip(&diag).map(|(a, b)| a + b).collect(), Some((horiz, diag)))
    } else {
        (vec![], None)
    };
    Ok(OracleCount {
        model: Model::TwentyVertex,
        n,
        k,
        total,
        refined: refined_vec,
        split,
        statistic: Statistic::LastColumnEntry,
    })
}

/// Checks the default boundary transcription against the known small counts.
pub fn calibrate_dwbc3() -> Result<()> {
    let quadrangle = [1, 4, 60, 3328];
    let square = [1, 3, 29, 901];
    for n in 1..=4 {
        let q = count_20v(n, n - 1, false)?.total;
        let p = count_20v(n, 0, false)?.total;
        if q != Int::from(quadrangle[n - 1]) || p != Int::from(square[n - 1]) {
            return Err(Error::Boundary(format!(
                "calibration failure at n = {n}: quadrangle {q} (want {}), square {p} (want {})",
                quadrangle[n - 1],
                square[n - 1]
            )));
        }
    }
    let r = count_20v(2, 1, true)?.refined;
    if r != [1, 2, 1].map(Int::from) {
        return Err(Error::Boundary(format!("calibration failure: refined n = 2 gives {r:?}")));
    }
    Ok(())
}
