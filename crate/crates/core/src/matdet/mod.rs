//! Finite truncations of generator-defined matrices and exact determinants.
//!
//! Integer and polynomial matrices use fraction-free Bareiss elimination with
//! asserted exact divisions; field matrices use Gaussian elimination. Refined
//! matrices, whose formal variable sits in the last column only, are expanded
//! along that column into constant minors.

mod det;
mod matrix;

pub use det::{det_bareiss, det_eval_interp, det_gauss, det_poly_lastcol, DetRing};
pub use matrix::{GenMatrix, Provenance};

use crate::exactcore::{Rat, Ring, UniPoly};
use crate::genfun::{make, GenSeries, GenSpec, Var};
use crate::{Error, Result};

/// Truncation of a formal generator, with the last-column scale of its series.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalMatrix {
    pub matrix: GenMatrix<UniPoly<Rat>>,
    pub var: Var,
    pub column_scale: UniPoly<Rat>,
}

fn orders(n: usize) -> Result<(usize, usize)> {
    if n == 0 {
        return Err(Error::Precondition("matrix size must be at least 1".into()));
    }
    Ok((n - 1, n - 1))
}

/// The `n×n` truncation of an unrefined generator.
pub fn truncate(spec: &GenSpec, n: usize) -> Result<GenMatrix<Rat>> {
    match make(spec, orders(n)?)? {
        GenSeries::Plain(s) => Ok(GenMatrix::from_series(&s, n, Provenance::Spec(spec.clone()))),
        GenSeries::Formal { .. } => Err(Error::Precondition(format!("{spec} carries a formal variable"))),
    }
}

/// The `n×n` truncation of a formal generator; plain generators are lifted.
pub fn truncate_formal(spec: &GenSpec, n: usize) -> Result<FormalMatrix> {
    let g = make(spec, orders(n)?)?;
    let (var, column_scale) = match &g {
        GenSeries::Formal { var, column_scale, .. } => (*var, column_scale.clone()),
        GenSeries::Plain(_) => (spec.var().unwrap_or(Var::T), UniPoly::one()),
    };
    let matrix = GenMatrix::from_series(&g.to_formal(), n, Provenance::Spec(spec.clone()));
    Ok(FormalMatrix { matrix, var, column_scale })
}

/// Whether entries vanish above the diagonal and equal 1 on it.
pub fn is_unit_lower_triangular(spec: &GenSpec, n: usize) -> Result<bool> {
    let m = truncate(spec, n)?;
    Ok((0..n).all(|i| (0..n).all(|j| match j.cmp(&i) {
        std::cmp::Ordering::Greater => m.get(i, j).is_zero(),
        std::cmp::Ordering::Equal => m.get(i, j).is_one(),
        std::cmp::Ordering::Less => true,
    })))
}

/// Outcome of comparing `(LA)_n` with `L_n A_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductCheck {
    pub entries_match: bool,
    pub det_product: Rat,
    pub det_a: Rat,
    pub product: GenMatrix<Rat>,
}

impl ProductCheck {
    pub fn holds(&self) -> bool {
        self.entries_match && self.det_product == self.det_a
    }
}

/// Checks `(LA)_n = L_n A_n` and `det (LA)_n = det A_n` for unit lower triangular `L`.
pub fn truncation_product_check(l: &GenSpec, a: &GenSpec, n: usize) -> Result<ProductCheck> {
    if !is_unit_lower_triangular(l, n)? {
        return Err(Error::Precondition(format!("{l} is not unit lower triangular")));
    }
    let o = orders(n)?;
    let ls = make(l, o)?.plain().cloned().ok_or_else(|| Error::Precondition(format!("{l} is formal")))?;
    let as_ = make(a, o)?.plain().cloned().ok_or_else(|| Error::Precondition(format!("{a} is formal")))?;
    let la = ls.convolve(&as_)?;
    let product = GenMatrix::from_series(&la, n, Provenance::Product(l.clone(), a.clone()));
    let ln = truncate(l, n)?;
    let an = truncate(a, n)?;
    let entries_match = ln.mul(&an).entries() == product.entries();
    Ok(ProductCheck { entries_match, det_product: det_gauss(&product), det_a: det_gauss(&an), product })
}
