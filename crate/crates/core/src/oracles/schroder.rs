use std::collections::HashSet;

use crate::exactcore::Int;
use crate::{Error, Result};

/// One step of a Schröder path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchroderStep {
    Up,
    Down,
    Horizontal,
}

impl SchroderStep {
    pub const ALL: [SchroderStep; 3] = [SchroderStep::Up, SchroderStep::Down, SchroderStep::Horizontal];

    pub fn vector(self) -> (i64, i64) {
        match self {
            SchroderStep::Up => (1, 1),
            SchroderStep::Down => (1, -1),
            SchroderStep::Horizontal => (2, 0),
        }
    }
}

/// Number of unconstrained Schröder paths from the origin to `(dx, dy)`.
pub fn count_schroder(dx: i64, dy: i64) -> Result<Int> {
    if dx < 0 || dy.abs() > dx || (dx - dy).rem_euclid(2) != 0 {
        return Err(Error::Precondition(format!(
            "no Schröder path reaches ({dx}, {dy}): need dx ≥ |dy| and dx − dy even"
        )));
    }
    let dx = dx as usize;
    let off = dx as i64;
    let width = 2 * dx + 1;
    // table[x][y + off]
    let mut table = vec![vec![Int::from(0); width]; dx + 1];
    table[0][dx] = Int::from(1);
    for x in 1..=dx {
        for yi in 0..width {
            let y = yi as i64 - off;
            let mut acc = Int::from(0);
            if y - 1 >= -off {
                acc += &table[x - 1][(y - 1 + off) as usize];
            }
            if y + 1 <= off {
                acc += &table[x - 1][(y + 1 + off) as usize];
            }
            if x >= 2 {
                acc += &table[x - 2][yi];
            }
            table[x][yi] = acc;
        }
    }
    Ok(table[dx][(dy + off) as usize].clone())
}

/// Paths from `(0, 2i)` to `(2j+1, 2j+1)`.
pub fn m_entry_oracle(i: usize, j: usize) -> Int {
    let dx = 2 * j as i64 + 1;
    let dy = dx - 2 * i as i64;
    if dy.abs() > dx {
        return Int::from(0);
    }
    count_schroder(dx, dy).expect("parity holds by construction")
}

/// All Schröder paths between two points, each as its list of visited vertices.
pub fn enumerate_paths(start: (i64, i64), end: (i64, i64)) -> Vec<Vec<(i64, i64)>> {
    fn go(cur: (i64, i64), end: (i64, i64), path: &mut Vec<(i64, i64)>, out: &mut Vec<Vec<(i64, i64)>>) {
        if cur == end {
            out.push(path.clone());
            return;
        }
        for step in SchroderStep::ALL {
            let (sx, sy) = step.vector();
            let next = (cur.0 + sx, cur.1 + sy);
            let rest = end.0 - next.0;
            if rest < 0 || (end.1 - next.1).abs() > rest {
                continue;
            }
            path.push(next);
            go(next, end, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    if end.0 >= start.0 && (end.1 - start.1).abs() <= end.0 - start.0 && (end.0 + end.1 - start.0 - start.1) % 2 == 0 {
        go(start, end, &mut vec![start], &mut out);
    }
    out
}

/// Vertex-disjoint path tuples for the Aztec triangle, by exhaustive enumeration.
///
/// Exponential; intended only as a cross-check for `n ≤ 3`.
pub fn tuple_count_dt(n: usize) -> Result<Int> {
    if n > 3 {
        return Err(Error::OracleBound { model: "dt-tuples", n, max: 3 });
    }
    let families: Vec<Vec<Vec<(i64, i64)>>> = (0..n)
        .map(|i| enumerate_paths((0, 2 * i as i64), (2 * i as i64 + 1, 2 * i as i64 + 1)))
        .collect();
    fn go(families: &[Vec<Vec<(i64, i64)>>], used: &mut HashSet<(i64, i64)>, level: usize) -> u64 {
        if level == families.len() {
            return 1;
        }
        let mut total = 0;
        for p in &families[level] {
            if p.iter().any(|v| used.contains(v)) {
                continue;
            }
            used.extend(p.iter().copied());
            total += go(families, used, level + 1);
            for v in p {
                used.remove(v);
            }
        }
        total
    }
    Ok(Int::from(go(&families, &mut HashSet::new(), 0)))
}
