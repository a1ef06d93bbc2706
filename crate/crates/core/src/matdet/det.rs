use rayon::prelude::*;

use super::GenMatrix;
use crate::exactcore::{Field, Int, QuadRat, Rat, Ring, UniPoly};
use crate::{Error, Result};

/// Fraction-free Bareiss elimination; every division is asserted exact.
pub fn det_bareiss<R: Ring>(m: &GenMatrix<R>) -> R {
    let n = m.size();
    let mut a = m.rows();
    let mut sign = false;
    let mut prev = R::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return R::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        d.negated()
    } else {
        d
    }
}

/// Gaussian elimination over a field.
pub fn det_gauss<F: Field>(m: &GenMatrix<F>) -> F {
    let n = m.size();
    let mut a = m.rows();
    let mut det = F::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return F::zero();
        };
        if p != k {
            a.swap(p, k);
            det = det.negated();
        }
        let pivot = a[k][k].clone();
        let inv = pivot.inverse().expect("nonzero pivot");
        det = det.times(&pivot);
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].times(&inv);
            for j in k + 1..n {
                let t = f.times(&a[k][j]);
                a[i][j] = a[i][j].minus(&t);
            }
        }
    }
    det
}

/// Rings with a preferred exact determinant routine.
pub trait DetRing: Ring {
    fn det(m: &GenMatrix<Self>) -> Self;
}

impl DetRing for Int {
    fn det(m: &GenMatrix<Self>) -> Self {
        det_bareiss(m)
    }
}

impl DetRing for Rat {
    fn det(m: &GenMatrix<Self>) -> Self {
        det_gauss(m)
    }
}

impl DetRing for QuadRat {
    fn det(m: &GenMatrix<Self>) -> Self {
        det_gauss(m)
    }
}

impl DetRing for UniPoly<Rat> {
    /// Last-column cofactors when only that column is formal, Bareiss otherwise.
    fn det(m: &GenMatrix<Self>) -> Self {
        det_poly_lastcol(m).unwrap_or_else(|_| det_bareiss(m))
    }
}

impl<R: DetRing> GenMatrix<R> {
    /// Exact determinant; singular matrices give zero.
    pub fn det(&self) -> R {
        R::det(self)
    }
}

/// `Σ_i (−1)^{i+n−1} c_i · det(minor_i)` expanding along the last column.
///
/// All other columns must be constant polynomials; the constant minors are
/// evaluated in parallel over ℚ.
pub fn det_poly_lastcol(m: &GenMatrix<UniPoly<Rat>>) -> Result<UniPoly<Rat>> {
    let n = m.size();
    for i in 0..n {
        for j in 0..n - 1 {
            if !m.get(i, j).is_constant() {
                return Err(Error::Precondition(format!("entry ({i},{j}) outside the last column is not constant")));
            }
        }
    }
    if n == 1 {
        return Ok(m.get(0, 0).clone());
    }
    let terms: Vec<UniPoly<Rat>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let c = m.get(i, n - 1);
            if c.is_zero() {
                return UniPoly::zero();
            }
            let minor = m.minor(i, n - 1).expect("n > 1").map(UniPoly::constant_term);
            let d = det_gauss(&minor);
            let signed = if (i + n - 1) % 2 == 1 { d.negated() } else { d };
            c.scale(&signed)
        })
        .collect();
    Ok(terms.iter().fold(UniPoly::zero(), |acc, t| acc.plus(t)))
}

/// Evaluation–interpolation determinant of a polynomial matrix.
///
/// Evaluates at `0..=D` with `D` the sum of per-column degree bounds, then
/// interpolates. Kept as an independent check of [`det_poly_lastcol`].
pub fn det_eval_interp(m: &GenMatrix<UniPoly<Rat>>) -> UniPoly<Rat> {
    let n = m.size();
    let bound: usize =
        (0..n).map(|j| (0..n).filter_map(|i| m.get(i, j).degree()).max().unwrap_or(0)).sum();
    let xs: Vec<Rat> = (0..=bound as i64).map(Rat::integer).collect();
    let ys: Vec<Rat> = xs.par_iter().map(|x| det_gauss(&m.map(|p| p.eval(x)))).collect();
    let mut acc = UniPoly::zero();
    for (k, (xk, yk)) in xs.iter().zip(&ys).enumerate() {
        if yk.is_zero() {
            continue;
        }
        let mut basis = UniPoly::constant(yk.clone());
        for (l, xl) in xs.iter().enumerate() {
            if l != k {
                let inv = (xk - xl).inverse().expect("distinct nodes");
                basis = basis.times(&UniPoly::new(vec![-(xl * &inv), inv]));
            }
        }
        acc = acc.plus(&basis);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::GenSpec;
    use crate::matdet::{truncate_formal, Provenance};
    use proptest::prelude::*;

    #[test]
    fn small_determinants() {
        let m = GenMatrix::<Int>::from_i64s(&[&[1, 1], &[4, 8]]);
        assert_eq!(m.det(), Int::from(4));
        assert_eq!(GenMatrix::<Int>::from_i64s(&[&[7]]).det(), Int::from(7));
        assert_eq!(GenMatrix::<Int>::from_i64s(&[&[1, 2], &[2, 4]]).det(), Int::from(0));
        assert_eq!(GenMatrix::<Int>::from_i64s(&[&[0, 1], &[1, 0]]).det(), Int::from(-1));
    }

    #[test]
    fn last_column_expansion() {
        let p = |v: &[i64]| UniPoly::<Rat>::from_i64s(v);
        let zero_col = GenMatrix::from_rows(vec![vec![p(&[1]), p(&[])], vec![p(&[3]), p(&[])]]);
        assert!(det_poly_lastcol(&zero_col).unwrap().is_zero());
        let bad = GenMatrix::from_rows(vec![vec![p(&[0, 1]), p(&[1])], vec![p(&[3]), p(&[1])]]);
        assert!(matches!(det_poly_lastcol(&bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn cofactor_route_matches_interpolation() {
        for n in 1..=5 {
            for spec in [GenSpec::G20VRef { n }, GenSpec::FDTRef { n }, GenSpec::G6VRef { n }] {
                let m = truncate_formal(&spec, n).unwrap().matrix;
                assert_eq!(det_poly_lastcol(&m).unwrap(), det_eval_interp(&m), "{spec}");
            }
        }
    }

    #[test]
    fn formal_gamma_determinant() {
        let m = truncate_formal(&GenSpec::FDTGamma, 2).unwrap().matrix;
        // [[1, 1], [1, 3+2γ]] → 2 + 2γ.
        assert_eq!(m.det(), UniPoly::from_i64s(&[2, 2]));
        assert_eq!(det_bareiss(&m), det_eval_interp(&m));
    }

    fn int_matrix(n: usize) -> impl Strategy<Value = GenMatrix<Int>> {
        proptest::collection::vec(-9i64..9, n * n)
            .prop_map(move |v| GenMatrix::from_fn(n, Provenance::Explicit, |i, j| Int::from(v[i * n + j])))
    }

    proptest! {
        #[test]
        fn bareiss_matches_gauss(m in (1usize..7).prop_flat_map(int_matrix)) {
            let over_q = m.map(|c| Rat::from(c.clone()));
            prop_assert_eq!(Rat::from(det_bareiss(&m)), det_gauss(&over_q));
        }

        #[test]
        fn quadratic_field_gauss_matches_bareiss(m in (1usize..5).prop_flat_map(int_matrix)) {
            let over_q2 = m.map(|c| QuadRat::from(Rat::from(c.clone())));
            prop_assert_eq!(det_gauss(&over_q2), QuadRat::from(Rat::from(det_bareiss(&m))));
        }
    }
}
