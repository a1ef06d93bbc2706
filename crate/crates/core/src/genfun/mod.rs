//! Catalog of generating functions and explicit entry formulas.
//!
//! Each [`GenSpec`] names one generating function `f(u, v)`; [`make`] expands
//! it to a [`GenSeries`] whose coefficients `f|_{u^i v^j}` are the entries of
//! the associated infinite matrix. Refined specs carry a formal variable that
//! appears only in the `v^{n−1}` column.

mod entries;
mod refined;
mod weights;

pub use entries::{conjecture_value, ct_quadrangle, entry_binom, entry_theta};
pub use weights::{
    combinatorial_deviation, combinatorial_point, lastcol_exact, lastcol_ratio_deviation, tau_exact, weights_20v, weights_lastcol, LastColumn, WeightPoint,
    WeightVector,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactcore::{Rat, Ring, UniPoly};
use crate::series::{BiSeries, Poly2, RatFun2};
use crate::{Error, Result};

/// Formal variable carried by a refined or weighted generating function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    Tau,
    T,
    Gamma,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::Tau => "τ",
            Var::T => "t",
            Var::Gamma => "γ",
        }
    }
}

/// One entry of the generating-function catalog.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GenSpec {
    /// `1/(1−uv)`, the identity matrix.
    Identity,
    /// `1/(1−u−v−uv)`, Schröder paths from the origin.
    Sigma,
    /// `g_20V = (1+u²)(1+2u−u²) / ((1−u²v)((1−u)² − v(1+u)²))`.
    G20V,
    /// `f_DT = (1+u) / (1 − v − 4uv − u²v + u²v²)`.
    FDT,
    /// `f_L = (1+2u−u²) / (1 − u(1+v+uv))`, unit lower triangular.
    FL,
    /// `f_Λ = (1−u) / (1 − u − uv)`, unit lower triangular.
    FLambda,
    /// `f_DT,γ` with `γ` formal.
    FDTGamma,
    /// `f_DT,γ` at a rational `γ`.
    FDTGammaAt(Rat),
    /// `f_Lγ = (1+2γu−γu²) / (1 − u − vu(1+γu))` at a rational `γ`.
    FLGammaAt(Rat),
    /// `g_20V^ref` for size `n`, formal `τ`.
    G20VRef { n: usize },
    /// `g_6V^ref` for size `n`, formal `τ`; the last column is scaled by `(1+τ)^{n−1}`.
    G6VRef { n: usize },
    /// `f_DT^ref` for size `n`, formal `t`.
    FDTRef { n: usize },
    /// `f_DT,γ^ref` for size `n` at a rational `γ`, formal `t`.
    FDTGammaRef { n: usize, gamma: Rat },
    /// `f̄_DT,γ^ref` for size `n` at a rational `γ`, formal `t`.
    BarFDTGammaRef { n: usize, gamma: Rat },
}

impl GenSpec {
    /// Size parameter of refined specs.
    pub fn size(&self) -> Option<usize> {
        match self {
            GenSpec::G20VRef { n }
            | GenSpec::G6VRef { n }
            | GenSpec::FDTRef { n }
            | GenSpec::FDTGammaRef { n, .. }
            | GenSpec::BarFDTGammaRef { n, .. } => Some(*n),
            _ => None,
        }
    }

    pub fn var(&self) -> Option<Var> {
        match self {
            GenSpec::G20VRef { .. } | GenSpec::G6VRef { .. } => Some(Var::Tau),
            GenSpec::FDTRef { .. } | GenSpec::FDTGammaRef { .. } | GenSpec::BarFDTGammaRef { .. } => Some(Var::T),
            GenSpec::FDTGamma => Some(Var::Gamma),
            _ => None,
        }
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSpec::Identity => write!(f, "identity"),
            GenSpec::Sigma => write!(f, "sigma"),
            GenSpec::G20V => write!(f, "g20v"),
            GenSpec::FDT => write!(f, "f_dt"),
            GenSpec::FL => write!(f, "f_l"),
            GenSpec::FLambda => write!(f, "f_lambda"),
            GenSpec::FDTGamma => write!(f, "f_dt_gamma"),
            GenSpec::FDTGammaAt(g) => write!(f, "f_dt_gamma[{g}]"),
            GenSpec::FLGammaAt(g) => write!(f, "f_l_gamma[{g}]"),
            GenSpec::G20VRef { n } => write!(f, "g20v_ref[n={n}]"),
            GenSpec::G6VRef { n } => write!(f, "g6v_ref[n={n}]"),
            GenSpec::FDTRef { n } => write!(f, "f_dt_ref[n={n}]"),
            GenSpec::FDTGammaRef { n, gamma } => write!(f, "f_dt_gamma_ref[n={n},gamma={gamma}]"),
            GenSpec::BarFDTGammaRef { n, gamma } => write!(f, "bar_f_dt_gamma_ref[n={n},gamma={gamma}]"),
        }
    }
}

/// Expanded generating function.
#[derive(Debug, Clone, PartialEq)]
pub enum GenSeries {
    Plain(BiSeries<Rat>),
    /// Coefficients are polynomials in `var`. The stored last column equals the
    /// true one times `column_scale`.
    Formal { series: BiSeries<UniPoly<Rat>>, var: Var, column_scale: UniPoly<Rat> },
}

impl GenSeries {
    pub fn plain(&self) -> Option<&BiSeries<Rat>> {
        match self {
            GenSeries::Plain(s) => Some(s),
            GenSeries::Formal { .. } => None,
        }
    }

    pub fn formal(&self) -> Option<&BiSeries<UniPoly<Rat>>> {
        match self {
            GenSeries::Plain(_) => None,
            GenSeries::Formal { series, .. } => Some(series),
        }
    }

    /// Formal coefficients, with plain ones lifted to constants.
    pub fn to_formal(&self) -> BiSeries<UniPoly<Rat>> {
        match self {
            GenSeries::Plain(s) => s.map(|c| UniPoly::constant(c.clone())),
            GenSeries::Formal { series, .. } => series.clone(),
        }
    }

    pub fn orders(&self) -> (usize, usize) {
        match self {
            GenSeries::Plain(s) => s.orders(),
            GenSeries::Formal { series, .. } => series.orders(),
        }
    }
}

pub(crate) fn poly_u(coeffs: &[i64]) -> Poly2<Rat> {
    Poly2::from_i64_terms(&coeffs.iter().enumerate().map(|(i, &c)| (i, 0, c)).collect::<Vec<_>>())
}

fn ratfun(num: Poly2<Rat>, den: Poly2<Rat>) -> RatFun2<Rat> {
    RatFun2::new(num, den)
}

/// Closed form of an unrefined spec with rational coefficients.
pub fn closed_form(spec: &GenSpec) -> Option<RatFun2<Rat>> {
    let t = Poly2::<Rat>::from_i64_terms;
    Some(match spec {
        GenSpec::Identity => ratfun(Poly2::one(), t(&[(0, 0, 1), (1, 1, -1)])),
        GenSpec::Sigma => ratfun(Poly2::one(), t(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, -1)])),
        GenSpec::G20V => {
            let num = poly_u(&[1, 0, 1]).times(&poly_u(&[1, 2, -1]));
            let left = t(&[(0, 0, 1), (2, 1, -1)]);
            let right = poly_u(&[1, -2, 1]).minus(&poly_u(&[1, 2, 1]).times(&Poly2::v()));
            ratfun(num, left.times(&right))
        }
        GenSpec::FDT => ratfun(poly_u(&[1, 1]), t(&[(0, 0, 1), (0, 1, -1), (1, 1, -4), (2, 1, -1), (2, 2, 1)])),
        GenSpec::FL => ratfun(poly_u(&[1, 2, -1]), t(&[(0, 0, 1), (1, 0, -1), (1, 1, -1), (2, 1, -1)])),
        GenSpec::FLambda => ratfun(poly_u(&[1, -1]), t(&[(0, 0, 1), (1, 0, -1), (1, 1, -1)])),
        GenSpec::FDTGammaAt(g) => {
            let one_g = &Rat::one() + g;
            let den = Poly2::from_terms(vec![
                (0, 0, Rat::one()),
                (0, 1, Rat::integer(-1)),
                (1, 1, Rat::integer(-2) * &one_g),
                (2, 1, Rat::integer(-1)),
                (2, 2, g * g),
            ]);
            ratfun(poly_u(&[1, 1]), den)
        }
        GenSpec::FLGammaAt(g) => {
            let num = Poly2::from_terms(vec![(0, 0, Rat::one()), (1, 0, Rat::integer(2) * g), (2, 0, -g)]);
            let den = Poly2::from_terms(vec![(0, 0, Rat::one()), (1, 0, Rat::integer(-1)), (1, 1, Rat::integer(-1)), (2, 1, -g)]);
            ratfun(num, den)
        }
        _ => return None,
    })
}

/// `f_DT,γ` with coefficients in `ℚ[γ]`.
fn fdt_gamma_formal() -> RatFun2<UniPoly<Rat>> {
    let c = |v: &[i64]| UniPoly::<Rat>::from_i64s(v);
    let den = Poly2::from_terms(vec![
        (0, 0, c(&[1])),
        (0, 1, c(&[-1])),
        (1, 1, c(&[-2, -2])),
        (2, 1, c(&[-1])),
        (2, 2, c(&[0, 0, 1])),
    ]);
    RatFun2::new(Poly2::from_terms(vec![(0, 0, c(&[1])), (1, 0, c(&[1]))]), den)
}

/// Expands `spec` to the given orders.
pub fn make(spec: &GenSpec, orders: (usize, usize)) -> Result<GenSeries> {
    if let Some(n) = spec.size() {
        if n == 0 {
            return Err(Error::Precondition("size n must be at least 1".into()));
        }
        let need = n - 1;
        if orders.0 < need || orders.1 < need {
            return Err(Error::InsufficientOrder { what: "refined generator", needed: need, have: orders.0.min(orders.1) });
        }
    }
    if let Some(rf) = closed_form(spec) {
        return Ok(GenSeries::Plain(rf.expand(orders)?));
    }
    let one = UniPoly::<Rat>::one();
    Ok(match spec {
        GenSpec::FDTGamma => {
            GenSeries::Formal { series: fdt_gamma_formal().expand(orders)?, var: Var::Gamma, column_scale: one }
        }
        GenSpec::G20VRef { n } => {
            GenSeries::Formal { series: refined::g20v_ref(*n, orders)?, var: Var::Tau, column_scale: one }
        }
        GenSpec::G6VRef { n } => {
            let scale = UniPoly::<Rat>::from_i64s(&[1, 1]).pow((*n - 1) as u32);
            GenSeries::Formal { series: refined::g6v_ref_scaled(*n, orders)?, var: Var::Tau, column_scale: scale }
        }
        GenSpec::FDTRef { n } => GenSeries::Formal {
            series: refined::fdt_gamma_ref(*n, &Rat::one(), orders)?,
            var: Var::T,
            column_scale: one,
        },
        GenSpec::FDTGammaRef { n, gamma } => {
            GenSeries::Formal { series: refined::fdt_gamma_ref(*n, gamma, orders)?, var: Var::T, column_scale: one }
        }
        GenSpec::BarFDTGammaRef { n, gamma } => {
            GenSeries::Formal { series: refined::bar_f_gamma_ref(*n, gamma, orders)?, var: Var::T, column_scale: one }
        }
        _ => unreachable!("closed forms handled above"),
    })
}

/// `f_DT` through the single-path route: odd `v`-part of `1/(1 − v − uv − uv²)`.
pub fn f_dt_via_paths(orders: (usize, usize)) -> Result<BiSeries<Rat>> {
    let den = Poly2::from_i64_terms(&[(0, 0, 1), (0, 1, -1), (1, 1, -1), (1, 2, -1)]);
    RatFun2::new(Poly2::one(), den).expand((orders.0, 2 * orders.1 + 1))?.odd_v_half()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(spec: GenSpec, orders: (usize, usize)) -> BiSeries<Rat> {
        make(&spec, orders).unwrap().plain().unwrap().clone()
    }

    fn r(v: i64) -> Rat {
        Rat::integer(v)
    }

    #[test]
    fn catalog_values() {
        let g = plain(GenSpec::G20V, (3, 3));
        assert_eq!(g.coeff(0, 0).unwrap(), &r(1));
        assert_eq!(g.coeff(1, 0).unwrap(), &r(4));
        assert_eq!(g.coeff(1, 1).unwrap(), &r(8));
        let f = plain(GenSpec::FDT, (3, 3));
        assert_eq!(f.coeff(0, 0).unwrap(), &r(1));
        assert_eq!(f.coeff(1, 1).unwrap(), &r(5));
    }

    #[test]
    fn g20v_columns_have_closed_form() {
        // Column j is ((1+u)/(1−u))^{2j+2} − u^{2j+2}.
        use crate::series::USeries;
        let order = 8;
        let g = plain(GenSpec::G20V, (order, 4));
        let ratio = USeries::<Rat>::from_i64s(&[1, 1], order).div(&USeries::from_i64s(&[1, -1], order)).unwrap();
        for j in 0..=4 {
            let expected = ratio.pow(2 * j as u32 + 2).minus(&USeries::one(order).shift(2 * j + 2));
            assert_eq!(g.column(j), expected, "column {j}");
        }
    }

    #[test]
    fn path_route_reproduces_f_dt() {
        assert_eq!(f_dt_via_paths((7, 7)).unwrap(), plain(GenSpec::FDT, (7, 7)));
    }

    #[test]
    fn gamma_one_is_plain_f_dt() {
        assert_eq!(plain(GenSpec::FDTGammaAt(Rat::one()), (6, 6)), plain(GenSpec::FDT, (6, 6)));
        let formal = make(&GenSpec::FDTGamma, (6, 6)).unwrap();
        let at_one = formal.formal().unwrap().map(|p| p.eval(&Rat::one()));
        assert_eq!(at_one, plain(GenSpec::FDT, (6, 6)));
        let at_two = formal.formal().unwrap().map(|p| p.eval(&r(2)));
        assert_eq!(at_two, plain(GenSpec::FDTGammaAt(r(2)), (6, 6)));
    }

    #[test]
    fn lower_triangular_generators() {
        for spec in [GenSpec::FL, GenSpec::FLambda, GenSpec::FLGammaAt(r(3)), GenSpec::Identity] {
            let s = plain(spec.clone(), (6, 6));
            for ((i, j), c) in s.coefficients() {
                if j > i {
                    assert!(c.is_zero(), "{spec} ({i},{j})");
                }
                if j == i {
                    assert!(c.is_one(), "{spec} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn l_times_m_is_p() {
        let l = plain(GenSpec::FL, (5, 5));
        let m = plain(GenSpec::FDT, (5, 5));
        assert_eq!(l.convolve(&m).unwrap(), plain(GenSpec::G20V, (5, 5)));
    }

    #[test]
    fn lambda_times_p_is_binomial() {
        let l = plain(GenSpec::FLambda, (7, 7));
        let p = plain(GenSpec::G20V, (7, 7));
        let lp = l.convolve(&p).unwrap();
        assert_eq!(lp.coeff(1, 0).unwrap(), &r(4));
        for ((i, j), c) in lp.coefficients() {
            assert_eq!(*c, Rat::from(entry_binom(i, j)), "({i},{j})");
        }
    }

    #[test]
    fn substitution_route_to_p() {
        use crate::series::USeries;
        let order = 4;
        let u = USeries::<Rat>::var(order);
        let one_minus_u = USeries::from_i64s(&[1, -1], order);
        let map = u.times(&USeries::from_i64s(&[1, 1], order)).div(&one_minus_u).unwrap();
        let scale = USeries::from_i64s(&[1, 2, -1], order).div(&one_minus_u).unwrap();
        let m = plain(GenSpec::FDT, (order, order));
        let p = m.substitute_u(&map).unwrap().times_u(&scale);
        assert_eq!(p, plain(GenSpec::G20V, (order, order)));
    }

    #[test]
    fn gamma_substitution_route_to_bar_f() {
        use crate::series::USeries;
        let order = 3;
        let g = r(2);
        let u = USeries::<Rat>::var(order);
        let one_minus_u = USeries::from_i64s(&[1, -1], order);
        let one_gu = USeries::new(vec![Rat::one(), g.clone()], order);
        let map = u.times(&one_gu).div(&one_minus_u).unwrap();
        let scale = USeries::new(vec![Rat::one(), r(2) * &g, -&g], order).div(&one_minus_u).unwrap();
        let m = plain(GenSpec::FDTGammaAt(g.clone()), (order, order));
        let lhs = m.substitute_u(&map).unwrap().times_u(&scale);
        // Unrefined part of f̄: (1+γu²)(1+2γu−γu²) / ((1−γ²u²v)((1−u)² − v(1+γu)²)).
        let num = Poly2::from_terms(vec![(0, 0, Rat::one()), (2, 0, g.clone())])
            .times(&Poly2::from_terms(vec![(0, 0, Rat::one()), (1, 0, r(2) * &g), (2, 0, -&g)]));
        let left = Poly2::from_terms(vec![(0, 0, Rat::one()), (2, 1, -(&g * &g))]);
        let sq = Poly2::from_terms(vec![(0, 0, Rat::one()), (1, 0, g.clone())]).pow(2).times(&Poly2::v());
        let right = poly_u(&[1, -2, 1]).minus(&sq);
        let rhs = RatFun2::new(num, left.times(&right)).expand((order, order)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn refined_generators_need_orders() {
        assert!(matches!(make(&GenSpec::G20VRef { n: 4 }, (2, 3)), Err(Error::InsufficientOrder { .. })));
        assert!(matches!(make(&GenSpec::FDTRef { n: 0 }, (2, 3)), Err(Error::Precondition(_))));
    }
}
