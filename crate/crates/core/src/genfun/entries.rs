//! Explicit matrix entries, the product formula and the constant-term integrand.

use crate::exactcore::{binomial, factorial, Int, QuadRat, Rat, Ring};
use crate::series::{constant_term, LaurentMulti};
use crate::Result;

/// `2^i·C(i+2j+1, 2j+1) − C(i−1, 2j+1)`, with `C(m, p) = 0` for `−1 ≤ m < p`.
pub fn entry_binom(i: usize, j: usize) -> Int {
    let p = 2 * j as i64 + 1;
    let first = (Int::from(1) << i) * binomial(i as i64 + p, p);
    // The only negative upper index is m = −1 at i = 0, below every p ≥ 1.
    let second = if i == 0 { Int::from(0) } else { binomial(i as i64 - 1, p) };
    first - second
}

/// `θ_m(x) = 2^{x/2}/m! · (x+1)(x+2)…(x+m)`.
fn theta(m: u64, x: i64) -> QuadRat {
    let rising = (1..=m as i64).fold(Int::from(1), |acc, k| acc * (x + k));
    let r = Rat::new(rising, factorial(m)).expect("nonzero factorial");
    QuadRat::pow2_half(x).times(&QuadRat::from(r))
}

/// `θ_{2j+1}(i) + θ_{2j+1}(−i)` in ℚ(√2).
pub fn entry_theta(i: usize, j: usize) -> QuadRat {
    let m = 2 * j as u64 + 1;
    theta(m, i as i64).plus(&theta(m, -(i as i64)))
}

/// `2^{n(n−1)/2} Π_{i<n} (4i+2)!/(n+2i+1)!`, exactly.
pub fn conjecture_value(n: usize) -> Rat {
    let mut acc = Rat::from(Int::from(1) << (n * n.saturating_sub(1) / 2));
    for i in 0..n as u64 {
        let r = Rat::new(factorial(4 * i + 2), factorial(n as u64 + 2 * i + 1)).expect("nonzero factorial");
        acc = acc * r;
    }
    acc
}

/// Constant term in `x_1..x_n` of
/// `Π_{i<j} (x_j−x_i)(1+x_i+x_j−x_i x_j) / Π_i x_i^{2i−1} (1−x_i)^n`.
///
/// The Vandermonde factor is oriented as `x_j − x_i`; the opposite
/// orientation multiplies the result by `(−1)^{n(n−1)/2}`.
///
/// Variable `x_i` lives in the window `[−(2i−1), 0]`; `(1−x_i)^{−n}` is needed
/// only to degree `2i−1`.
pub fn ct_quadrangle(n: usize) -> Result<Rat> {
    let windows: Vec<(i64, i64)> = (1..=n as i64).map(|i| (-(2 * i - 1), 0)).collect();
    let start = LaurentMulti::monomial(windows.clone(), windows.iter().map(|w| w.0).collect(), Rat::one())?;
    let unit = |k: usize, e: i64| {
        let mut v = vec![0; n];
        v[k] = e;
        v
    };
    let mut factors = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            factors.push(LaurentMulti::polynomial(n, vec![(unit(b, 1), Rat::one()), (unit(a, 1), Rat::integer(-1))]));
            let mut both = vec![0; n];
            both[a] = 1;
            both[b] = 1;
            factors.push(LaurentMulti::polynomial(
                n,
                vec![
                    (vec![0; n], Rat::one()),
                    (unit(a, 1), Rat::one()),
                    (unit(b, 1), Rat::one()),
                    (both, Rat::integer(-1)),
                ],
            ));
        }
    }
    for (a, w) in windows.iter().enumerate() {
        let terms = (0..=-w.0)
            .map(|k| (unit(a, k), Rat::from(binomial(k + n as i64 - 1, n as i64 - 1))))
            .collect();
        factors.push(LaurentMulti::polynomial(n, terms));
    }
    constant_term(&start, &factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_entries() {
        assert_eq!(entry_binom(0, 0), Int::from(1));
        assert_eq!(entry_binom(1, 0), Int::from(4));
        assert_eq!(entry_binom(1, 1), Int::from(8));
    }

    #[test]
    fn theta_entries() {
        let q = |a: i64, b: i64| QuadRat::new(Rat::integer(a), Rat::integer(b));
        assert_eq!(entry_theta(0, 0), q(2, 0));
        assert_eq!(entry_theta(1, 0), q(0, 2));
        assert_eq!(entry_theta(1, 1), q(0, 4));
    }

    #[test]
    fn product_formula() {
        let got: Vec<Rat> = (1..=5).map(conjecture_value).collect();
        let want: Vec<Rat> = [1, 4, 60, 3328, 678912].iter().map(|&v| Rat::integer(v)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn constant_terms() {
        assert_eq!(ct_quadrangle(1).unwrap(), Rat::integer(1));
        assert_eq!(ct_quadrangle(2).unwrap(), Rat::integer(4));
        assert_eq!(ct_quadrangle(3).unwrap(), Rat::integer(60));
        assert_eq!(ct_quadrangle(4).unwrap(), Rat::integer(3328));
    }
}
