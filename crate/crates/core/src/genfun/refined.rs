//! Refined generators: the formal variable enters only the `v^{n−1}` column.

use super::{closed_form, GenSpec};
use crate::exactcore::{Rat, Ring, UniPoly};
use crate::series::{BiSeries, Poly2, RatFun2, USeries};
use crate::{Error, Result};

type P = UniPoly<Rat>;

fn lift(s: &USeries<Rat>) -> USeries<P> {
    s.map(|c| P::constant(c.clone()))
}

fn plain(spec: GenSpec, orders: (usize, usize)) -> Result<BiSeries<Rat>> {
    closed_form(&spec).expect("closed form").expand(orders)
}

/// `((1+c·u)/(1−u))^{2n}` to `order`.
fn ratio_power(c: &Rat, n: usize, order: usize) -> Result<USeries<Rat>> {
    let num = USeries::new(vec![Rat::one(), c.clone()], order);
    let den = USeries::from_i64s(&[1, -1], order);
    Ok(num.div(&den)?.pow(2 * n as u32))
}

/// `φ = τ^n (1−u)² / ((τ−u)(1−τu))` times `K`, to `order`.
///
/// Expands `τ^{order+1}/(τ−u)` as a polynomial in `τ`, then divides the
/// product by `τ^{order+1}`; any coefficient that cannot be divided is a
/// negative power of `τ`.
fn k_phi(n: usize, k: &USeries<Rat>, order: usize) -> Result<USeries<P>> {
    let top = order + 1;
    let a = USeries::new((0..=order).map(|m| P::monomial(Rat::one(), top - 1 - m)).collect(), order);
    let b = USeries::new((0..=order).map(|m| P::monomial(Rat::one(), m)).collect(), order);
    let c = lift(&USeries::from_i64s(&[1, -2, 1], order)).scale(&P::monomial(Rat::one(), n));
    let scaled = lift(k).times(&a.times(&b).times(&c));
    let mut out = Vec::with_capacity(order + 1);
    for (row, p) in scaled.coeffs().iter().enumerate() {
        if p.valuation().is_some_and(|v| v < top) {
            return Err(Error::NegativePowerLeak { column: n - 1, row });
        }
        out.push(P::new(p.coeffs().iter().skip(top).cloned().collect()));
    }
    Ok(USeries::new(out, order))
}

fn replace_column(base: &BiSeries<Rat>, col_index: usize, col: &USeries<P>) -> BiSeries<P> {
    let mut s = base.map(|c| P::constant(c.clone()));
    for (i, c) in col.coeffs().iter().enumerate() {
        s.set(i, col_index, c.clone());
    }
    s
}

pub(super) fn g20v_ref(n: usize, orders: (usize, usize)) -> Result<BiSeries<P>> {
    let g = plain(GenSpec::G20V, orders)?;
    let k = ratio_power(&Rat::one(), n, orders.0)?;
    let kphi = k_phi(n, &k, orders.0)?;
    let col = lift(&g.column(n - 1).minus(&k)).plus(&kphi);
    Ok(replace_column(&g, n - 1, &col))
}

/// The 6V generator with its last column multiplied by `(1+τ)^{n−1}`.
pub(super) fn g6v_ref_scaled(n: usize, orders: (usize, usize)) -> Result<BiSeries<P>> {
    let g = plain(GenSpec::G20V, orders)?;
    let k = ratio_power(&Rat::one(), n, orders.0)?;
    let kphi = k_phi(n, &k, orders.0)?;
    let scale = P::from_i64s(&[1, 1]).pow((n - 1) as u32);
    let two = P::constant(Rat::integer(2)).pow((n - 1) as u32);
    let col = lift(&g.column(n - 1).minus(&k)).scale(&scale).plus(&kphi.scale(&two));
    Ok(replace_column(&g, n - 1, &col))
}

/// `(t−1) Σ_{k≥0} t^k x^{k+1}` for a series `x` with `x(0) = 0`.
fn t_geometric(x: &USeries<Rat>) -> USeries<P> {
    let order = x.order();
    let x = lift(x);
    let mut acc = USeries::zero(order);
    let mut power = x.clone();
    for k in 0..order {
        acc = acc.plus(&power.scale(&P::monomial(Rat::one(), k)));
        power = power.times(&x);
    }
    acc.scale(&P::from_i64s(&[-1, 1]))
}

/// `u/α_+(γ; u)` where `α_+ = (1 + u + √(1 + 2(1+2γ)u + u²))/2`, with the root series.
pub(crate) fn u_over_alpha_plus(gamma: &Rat, order: usize) -> Result<(USeries<Rat>, USeries<Rat>, USeries<Rat>)> {
    let disc = USeries::new(vec![Rat::one(), Rat::integer(2) * (Rat::one() + Rat::integer(2) * gamma), Rat::one()], order);
    let root = disc.sqrt()?;
    let half = Rat::frac(1, 2);
    let one_u = USeries::from_i64s(&[1, 1], order);
    let alpha_plus = one_u.plus(&root).scale(&half);
    let x = if gamma.is_one() {
        // u/α_+ = −α_− since α_+·α_− = −u.
        one_u.minus(&root).scale(&half).negated()
    } else {
        USeries::var(order).div(&alpha_plus)?
    };
    Ok((x, alpha_plus, root))
}

pub(super) fn fdt_gamma_ref(n: usize, gamma: &Rat, orders: (usize, usize)) -> Result<BiSeries<P>> {
    let base = plain(GenSpec::FDTGammaAt(gamma.clone()), orders)?;
    let (x, alpha_plus, root) = u_over_alpha_plus(gamma, orders.0)?;
    let prefactor = alpha_plus.pow(2 * n as u32).div(&root)?;
    let extra = lift(&prefactor).times(&t_geometric(&x));
    let col = lift(&base.column(n - 1)).plus(&extra);
    Ok(replace_column(&base, n - 1, &col))
}

pub(super) fn bar_f_gamma_ref(n: usize, gamma: &Rat, orders: (usize, usize)) -> Result<BiSeries<P>> {
    let g = gamma.clone();
    let num = Poly2::from_terms(vec![(0, 0, Rat::one()), (2, 0, g.clone())])
        .times(&Poly2::from_terms(vec![(0, 0, Rat::one()), (1, 0, Rat::integer(2) * &g), (2, 0, -&g)]));
    let left = Poly2::from_terms(vec![(0, 0, Rat::one()), (2, 1, -(&g * &g))]);
    let one_gu_sq = Poly2::from_terms(vec![(0, 0, Rat::one()), (1, 0, g.clone())]).pow(2);
    let right = super::poly_u(&[1, -2, 1]).minus(&one_gu_sq.times(&Poly2::v()));
    let base = RatFun2::new(num, left.times(&right)).expand(orders)?;
    let k = ratio_power(gamma, n, orders.0)?;
    let extra = lift(&k).times(&t_geometric(&USeries::var(orders.0)));
    let col = lift(&base.column(n - 1)).plus(&extra);
    Ok(replace_column(&base, n - 1, &col))
}

#[cfg(test)]
mod tests {
    use super::super::{make, GenSeries};
    use super::*;

    fn formal(spec: GenSpec, orders: (usize, usize)) -> BiSeries<P> {
        make(&spec, orders).unwrap().formal().unwrap().clone()
    }

    fn at(s: &BiSeries<P>, x: i64) -> BiSeries<Rat> {
        s.map(|p| p.eval(&Rat::integer(x)))
    }

    #[test]
    fn refined_20v_column_for_n2() {
        let s = formal(GenSpec::G20VRef { n: 2 }, (1, 1));
        assert_eq!(s.coeff(0, 1).unwrap(), &P::from_i64s(&[0, 1]));
        assert_eq!(s.coeff(1, 1).unwrap(), &P::from_i64s(&[1, 6, 1]));
    }

    #[test]
    fn formal_variable_at_one_is_unrefined() {
        for n in 1..=6 {
            let o = (n - 1, n - 1);
            let g = plain(GenSpec::G20V, o).unwrap();
            assert_eq!(at(&formal(GenSpec::G20VRef { n }, o), 1), g);
            let mut g6 = at(&formal(GenSpec::G6VRef { n }, o), 1);
            let s = Rat::integer(2).pow((n - 1) as u32);
            for i in 0..n {
                let c = g6.at(i, n - 1).checked_div(&s).unwrap();
                g6.set(i, n - 1, c);
            }
            assert_eq!(g6, g);
            assert_eq!(at(&formal(GenSpec::FDTRef { n }, o), 1), plain(GenSpec::FDT, o).unwrap());
        }
    }

    #[test]
    fn only_the_last_column_is_formal() {
        for n in 1..=5 {
            let s = formal(GenSpec::G20VRef { n }, (n - 1, n - 1));
            for ((i, j), c) in s.coefficients() {
                if j + 1 < n {
                    assert!(c.is_constant(), "({i},{j})");
                } else {
                    let deg = c.degree().unwrap();
                    let low = c.valuation().unwrap();
                    assert!(deg <= n - 1 + i && low + i >= n - 1, "n={n} row {i}: {c}");
                }
            }
        }
    }

    #[test]
    fn rows_past_the_size_leak_negative_powers() {
        assert_eq!(make(&GenSpec::G20VRef { n: 2 }, (2, 1)), Err(Error::NegativePowerLeak { column: 1, row: 2 }));
        assert!(matches!(make(&GenSpec::G6VRef { n: 3 }, (4, 2)), Err(Error::NegativePowerLeak { .. })));
    }

    #[test]
    fn two_routes_to_u_over_alpha_plus() {
        let (x, alpha, _) = u_over_alpha_plus(&Rat::one(), 8).unwrap();
        assert_eq!(x, USeries::var(8).div(&alpha).unwrap());
    }

    #[test]
    fn dt_refined_is_gamma_one() {
        let o = (3, 3);
        assert_eq!(
            make(&GenSpec::FDTRef { n: 4 }, o).unwrap(),
            make(&GenSpec::FDTGammaRef { n: 4, gamma: Rat::one() }, o).unwrap()
        );
        assert!(matches!(make(&GenSpec::FDTRef { n: 4 }, o).unwrap(), GenSeries::Formal { .. }));
    }
}
