use std::collections::HashMap;

use super::{Model, OracleCount, Statistic};
use crate::exactcore::{Int, Ring, UniPoly};
use crate::{Error, Result};

/// Largest `n` accepted by the DT frontier sweep.
pub const DT_MAX_N: usize = 10;

const REMOVED: i32 = i32::MIN;

/// Vertices a path family must avoid to realize the truncated triangle `T_{n,k}`.
pub fn dt_forbidden_vertices(n: usize, k: usize) -> Result<Vec<(i64, i64)>> {
    let m = n as i64;
    if k + 1 == n {
        Ok(vec![])
    } else if k + 2 == n {
        Ok(vec![(m, 3 * m - 2)])
    } else if k + 3 == n {
        Ok(vec![(m, 3 * m - 2), (m - 1, 3 * m - 3), (m + 1, 3 * m - 3)])
    } else {
        Err(Error::UnsupportedTruncation { model: "dt", n, k })
    }
}

/// Plain count on `T_{n,k}`, refined by the top path's first hit of `x+y = 4n−2`.
pub fn count_dt(n: usize, k: usize) -> Result<OracleCount<Int>> {
    count_dt_weighted(n, k, 0, &Int::from(1))
}

/// Count with weight `γ` per horizontal step, as polynomials in `γ`.
pub fn count_dt_gamma(n: usize, k: usize) -> Result<OracleCount<UniPoly<Int>>> {
    count_dt_weighted(n, k, 0, &UniPoly::x())
}

/// General sweep: weight `h` per horizontal step, top endpoint shifted by `(−shift, shift)`.
///
/// With `shift > 0` the total is the family count with the moved endpoint and the
/// refinement is not meaningful, so only the first hit at or beyond the shift is tagged.
pub fn count_dt_weighted<W: Ring>(n: usize, k: usize, shift: usize, h: &W) -> Result<OracleCount<W>> {
    if n == 0 || n > DT_MAX_N {
        return Err(Error::OracleBound { model: "dt", n, max: DT_MAX_N });
    }
    if shift >= n {
        return Err(Error::Precondition(format!("endpoint shift {shift} must be below n = {n}")));
    }
    let forbidden = dt_forbidden_vertices(n, k)?;
    let m = n as i32;
    let mut ends: Vec<(i32, i32)> = (0..m).map(|j| (2 * j + 1, 2 * j + 1)).collect();
    let s = shift as i32;
    ends[n - 1] = (2 * m - 1 - s, 2 * m - 1 + s);
    let last_x = ends.iter().map(|e| e.0).max().unwrap();
    let diag = 4 * m - 2;

    // State: per path `2y + flying` or REMOVED, plus the tag (−1 while unset).
    let start: Vec<i32> = (0..m).map(|i| 2 * (2 * i)).collect();
    let mut frontier: HashMap<(Vec<i32>, i32), W> = HashMap::new();
    frontier.insert((start, -1), W::one());

    for x in 0..last_x {
        let nx = x + 1;
        let mut next: HashMap<(Vec<i32>, i32), W> = HashMap::new();
        for ((state, tag), w) in &frontier {
            let mut buf = Vec::with_capacity(n);
            extend(
                &Ctx { n, nx, ends: &ends, forbidden: &forbidden, h, diag, top: 2 * m - 1 },
                state,
                *tag,
                w,
                &mut buf,
                &mut next,
            );
        }
        frontier = next;
    }

    let mut total = W::zero();
    let mut refined = vec![W::zero(); n];
    for ((state, tag), w) in frontier {
        debug_assert!(state.iter().all(|&c| c == REMOVED));
        total = total.plus(&w);
        if tag >= 0 {
            refined[tag as usize] = refined[tag as usize].plus(&w);
        }
    }
    Ok(OracleCount {
        model: Model::DominoTriangle,
        n,
        k,
        total,
        refined,
        split: None,
        statistic: Statistic::DiagonalFirstHit,
    })
}

struct Ctx<'a, W> {
    n: usize,
    nx: i32,
    ends: &'a [(i32, i32)],
    forbidden: &'a [(i64, i64)],
    h: &'a W,
    diag: i32,
    top: i32,
}

fn reachable(from_x: i32, y: i32, end: (i32, i32)) -> bool {
    let rest = end.0 - from_x;
    rest >= 0 && (end.1 - y).abs() <= rest
}

/// Height used for ordering: a flying path sits at its take-off height.
fn height(code: i32) -> i32 {
    code.div_euclid(2)
}

fn extend<W: Ring>(
    ctx: &Ctx<W>,
    state: &[i32],
    tag: i32,
    w: &W,
    buf: &mut Vec<i32>,
    out: &mut HashMap<(Vec<i32>, i32), W>,
) {
    let i = buf.len();
    if i == ctx.n {
        let mut tag = tag;
        let mut key = buf.clone();
        let top = ctx.n - 1;
        let c = key[top];
        if tag < 0 && c != REMOVED && c % 2 == 0 && ctx.nx + c / 2 == ctx.diag {
            tag = c / 2 - ctx.top;
        }
        for (p, code) in key.iter_mut().enumerate() {
            if *code != REMOVED && ctx.ends[p].0 == ctx.nx {
                *code = REMOVED;
            }
        }
        let e = out.entry((key, tag)).or_insert_with(W::zero);
        *e = e.plus(w);
        return;
    }
    let code = state[i];
    if code == REMOVED {
        buf.push(REMOVED);
        extend(ctx, state, tag, w, buf, out);
        buf.pop();
        return;
    }
    let y = height(code);
    let prev = buf[..i].iter().rev().find(|&&c| c != REMOVED).map(|&c| height(c));
    let end = ctx.ends[i];
    let mut options: [(i32, bool, bool); 3] = [(0, false, false); 3];
    let mut count = 0;
    if code % 2 == 1 {
        options[0] = (y, false, false);
        count = 1;
    } else {
        for (dy, flying) in [(1, false), (-1, false), (0, true)] {
            options[count] = (y + dy, flying, flying);
            count += 1;
        }
    }
    for &(ny, flying, weighted) in &options[..count] {
        if prev.is_some_and(|p| p >= ny) {
            continue;
        }
        let land_x = if flying { ctx.nx + 1 } else { ctx.nx };
        if !reachable(land_x, ny, end) {
            continue;
        }
        if ctx.nx == end.0 && (flying || ny != end.1) {
            continue;
        }
        if !flying && ctx.forbidden.contains(&(ctx.nx as i64, ny as i64)) {
            continue;
        }
        let ww = if weighted { w.times(ctx.h) } else { w.clone() };
        buf.push(2 * ny + flying as i32);
        extend(ctx, state, tag, &ww, buf, out);
        buf.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::tuple_count_dt;

    const Z: [i64; 6] = [1, 4, 60, 3328, 678912, 489023232];

    #[test]
    fn totals() {
        for n in 1..=5 {
            let c = count_dt(n, n - 1).unwrap();
            assert_eq!(c.total, Int::from(Z[n - 1]), "n={n}");
            assert!(c.is_consistent());
        }
    }

    #[test]
    fn refined_n3() {
        let c = count_dt(3, 2).unwrap();
        assert_eq!(c.refined, vec![Int::from(37), Int::from(19), Int::from(4)]);
    }

    #[test]
    fn last_refined_entry_is_previous_total() {
        for n in 2..=5 {
            let c = count_dt(n, n - 1).unwrap();
            assert_eq!(c.refined[n - 1], Int::from(Z[n - 2]));
        }
    }

    #[test]
    fn agrees_with_tuple_enumeration() {
        for n in 1..=3 {
            assert_eq!(count_dt(n, n - 1).unwrap().total, tuple_count_dt(n).unwrap());
        }
    }

    #[test]
    fn shifted_endpoints_telescope() {
        for n in 2..=4 {
            let plain = count_dt(n, n - 1).unwrap();
            let w: Vec<Int> = (0..n)
                .map(|s| count_dt_weighted(n, n - 1, s, &Int::from(1)).unwrap().total)
                .chain(std::iter::once(Int::from(0)))
                .collect();
            for k in 0..n {
                assert_eq!(&w[k] - &w[k + 1], plain.refined[k], "n={n} k={k}");
            }
        }
    }

    #[test]
    fn truncations() {
        for n in 2..=5 {
            let t = count_dt(n, n - 2).unwrap().total;
            assert_eq!(t, Int::from(Z[n - 1] - Z[n - 2]), "n={n}");
        }
        assert_eq!(count_dt(3, 0).unwrap().total, Int::from(29));
        assert!(count_dt(5, 1).is_err());
    }

    #[test]
    fn gamma_weights() {
        let c = count_dt_gamma(2, 1).unwrap();
        assert_eq!(c.total, UniPoly::from_i64s(&[2, 2]));
        assert_eq!(c.total.eval(&Int::from(1)), Int::from(4));
        for n in 1..=4 {
            let c = count_dt_gamma(n, n - 1).unwrap();
            assert!(c.is_consistent());
            assert_eq!(c.total.eval(&Int::from(1)), Int::from(Z[n - 1]));
        }
    }

    #[test]
    fn bounds() {
        assert!(count_dt(0, 0).is_err());
        assert!(count_dt(DT_MAX_N + 1, DT_MAX_N).is_err());
    }
}
