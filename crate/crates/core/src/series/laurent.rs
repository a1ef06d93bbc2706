use std::collections::HashMap;

use crate::exactcore::{Rat, Ring};
use crate::{Error, Result};

/// Sparse Laurent polynomial in `x_1..x_n` with a per-variable exponent window.
///
/// Products drop exponents above a window's upper end. This is exact for every
/// retained coefficient as long as all later factors have nonnegative
/// exponents, which [`LaurentMulti::mul`] enforces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentMulti {
    windows: Vec<(i64, i64)>,
    terms: HashMap<Vec<i64>, Rat>,
}

impl LaurentMulti {
    pub fn zero(windows: Vec<(i64, i64)>) -> Self {
        LaurentMulti { windows, terms: HashMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.windows.len()
    }

    pub fn windows(&self) -> &[(i64, i64)] {
        &self.windows
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `c · x^exps`; every exponent must lie in its window.
    pub fn monomial(windows: Vec<(i64, i64)>, exps: Vec<i64>, c: Rat) -> Result<Self> {
        let mut s = Self::zero(windows);
        s.check(&exps)?;
        s.add(exps, &c);
        Ok(s)
    }

    /// A polynomial factor; its windows are the exponent ranges it uses.
    pub fn polynomial(nvars: usize, terms: Vec<(Vec<i64>, Rat)>) -> Self {
        let mut windows = vec![(0, 0); nvars];
        for (e, _) in &terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            for (w, &x) in windows.iter_mut().zip(e) {
                *w = (w.0.min(x), w.1.max(x));
            }
        }
        let mut s = Self::zero(windows);
        for (e, c) in terms {
            s.add(e, &c);
        }
        s
    }

    fn check(&self, exps: &[i64]) -> Result<()> {
        for (var, (&x, &w)) in exps.iter().zip(&self.windows).enumerate() {
            if x < w.0 || x > w.1 {
                return Err(Error::WindowOverflow { var, exponent: x, window: w });
            }
        }
        Ok(())
    }

    fn add(&mut self, exps: Vec<i64>, c: &Rat) {
        let slot = self.terms.entry(exps).or_insert_with(Rat::zero);
        *slot = slot.plus(c);
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coeff(&self, exps: &[i64]) -> Result<Rat> {
        self.check(exps)?;
        Ok(self.terms.get(exps).cloned().unwrap_or_else(Rat::zero))
    }

    /// Product with a factor whose exponents are all nonnegative.
    pub fn mul(&self, factor: &LaurentMulti) -> Result<Self> {
        assert_eq!(factor.nvars(), self.nvars(), "variable count");
        for (e, _) in &factor.terms {
            if let Some((var, &x)) = e.iter().enumerate().find(|(_, &x)| x < 0) {
                return Err(Error::WindowOverflow { var, exponent: x, window: self.windows[var] });
            }
        }
        let mut out = Self::zero(self.windows.clone());
        for (a, x) in &self.terms {
            'pairs: for (b, y) in &factor.terms {
                let mut e = Vec::with_capacity(a.len());
                for (k, (p, q)) in a.iter().zip(b).enumerate() {
                    if p + q > self.windows[k].1 {
                        continue 'pairs;
                    }
                    e.push(p + q);
                }
                let slot = out.terms.entry(e).or_insert_with(Rat::zero);
                *slot = slot.plus(&x.times(y));
            }
        }
        out.terms.retain(|_, v| !v.is_zero());
        Ok(out)
    }
}

/// Constant term of `start · Π factors`, computed in `start`'s windows.
pub fn constant_term(start: &LaurentMulti, factors: &[LaurentMulti]) -> Result<Rat> {
    if start.windows.iter().any(|w| w.0 > 0 || w.1 < 0) {
        return Err(Error::Precondition("windows must contain exponent 0".into()));
    }
    let mut acc = start.clone();
    for f in factors {
        acc = acc.mul(f)?;
    }
    acc.coeff(&vec![0; start.nvars()])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geometric(nvars: usize, var: usize, degree: i64) -> LaurentMulti {
        let terms = (0..=degree)
            .map(|k| {
                let mut e = vec![0; nvars];
                e[var] = k;
                (e, Rat::one())
            })
            .collect();
        LaurentMulti::polynomial(nvars, terms)
    }

    #[test]
    fn one_variable_constant_term() {
        let start = LaurentMulti::monomial(vec![(-1, 0)], vec![-1], Rat::one()).unwrap();
        assert_eq!(constant_term(&start, &[geometric(1, 0, 1)]).unwrap(), Rat::one());
    }

    #[test]
    fn negative_factor_exponents_are_rejected() {
        let start = LaurentMulti::monomial(vec![(-2, 0)], vec![-2], Rat::one()).unwrap();
        let bad = LaurentMulti::polynomial(1, vec![(vec![-1], Rat::one())]);
        assert!(matches!(start.mul(&bad), Err(Error::WindowOverflow { .. })));
        assert!(matches!(
            LaurentMulti::monomial(vec![(-2, 0)], vec![-3], Rat::one()),
            Err(Error::WindowOverflow { .. })
        ));
    }

    #[test]
    fn truncation_keeps_low_coefficients_exact() {
        // x^{-3} (1 + x)^5: constant term C(5,3) = 10.
        let start = LaurentMulti::monomial(vec![(-3, 0)], vec![-3], Rat::one()).unwrap();
        let one_plus_x = LaurentMulti::polynomial(1, vec![(vec![0], Rat::one()), (vec![1], Rat::one())]);
        let factors = vec![one_plus_x; 5];
        assert_eq!(constant_term(&start, &factors).unwrap(), Rat::integer(10));
    }
}
