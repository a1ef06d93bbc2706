//! SVG of a non-intersecting Schröder path family on the Aztec triangle.

use std::fmt::Write;

use aztec20v_core::oracles::DT_MAX_N;

use crate::Failure;

const UNIT: f64 = 24.0;
const MARGIN: f64 = 20.0;

/// Path `i` runs from `(0, 2i)`: one up step, then `i` horizontal steps to `(2i+1, 2i+1)`.
fn family(n: usize) -> Vec<Vec<(i64, i64)>> {
    (0..n as i64)
        .map(|i| {
            let mut p = vec![(0, 2 * i), (1, 2 * i + 1)];
            for s in 1..=i {
                p.push((1 + 2 * s, 2 * i + 1));
            }
            p
        })
        .collect()
}

pub fn dt_family_svg(n: usize) -> Result<String, Failure> {
    if n == 0 || n > DT_MAX_N {
        return Err(Failure::config(format!("render supports 1 ≤ n ≤ {DT_MAX_N}, got {n}")));
    }
    let w = 2 * n as i64 - 1;
    let h = 4 * n as i64 - 2;
    let px = |x: i64| MARGIN + x as f64 * UNIT;
    let py = |y: i64| MARGIN + (h - y) as f64 * UNIT;
    let mut s = String::new();
    let width = 2.0 * MARGIN + w as f64 * UNIT;
    let height = 2.0 * MARGIN + h as f64 * UNIT;
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#).unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    // The line x + y = 4n − 2 where the top path first lands.
    let m = n as i64;
    writeln!(
        s,
        r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#bbb" stroke-dasharray="4 3"/>"##,
        px(m),
        py(3 * m - 2),
        px(w),
        py(w)
    )
    .unwrap();
    for x in 0..=w {
        for y in 0..=h {
            if (x + y) % 2 == 0 && x + y <= h && y <= x + 2 * (m - 1) {
                writeln!(s, r##"<circle cx="{}" cy="{}" r="1.8" fill="#888"/>"##, px(x), py(y)).unwrap();
            }
        }
    }
    for path in family(n) {
        let pts: Vec<String> = path.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
        writeln!(s, r##"<polyline points="{}" fill="none" stroke="#c33" stroke-width="2.5"/>"##, pts.join(" ")).unwrap();
        let (x0, y0) = path[0];
        let (x1, y1) = *path.last().unwrap();
        writeln!(s, r##"<circle cx="{}" cy="{}" r="3.5" fill="#333"/>"##, px(x0), py(y0)).unwrap();
        writeln!(s, r##"<circle cx="{}" cy="{}" r="3.5" fill="#333"/>"##, px(x1), py(y1)).unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_is_disjoint_and_well_formed() {
        for n in 1..=6 {
            let f = family(n);
            let mut seen = std::collections::HashSet::new();
            for (i, p) in f.iter().enumerate() {
                let i = i as i64;
                assert_eq!(p[0], (0, 2 * i));
                assert_eq!(*p.last().unwrap(), (2 * i + 1, 2 * i + 1));
                for w in p.windows(2) {
                    let d = (w[1].0 - w[0].0, w[1].1 - w[0].1);
                    assert!(matches!(d, (1, 1) | (1, -1) | (2, 0)));
                }
                for v in p {
                    assert!(seen.insert(*v));
                }
            }
        }
    }

    #[test]
    fn svg_shape() {
        let s = dt_family_svg(3).unwrap();
        assert!(s.starts_with("<svg") && s.ends_with("</svg>\n"));
        assert_eq!(s.matches("<polyline").count(), 3);
        assert!(dt_family_svg(0).is_err());
    }
}
