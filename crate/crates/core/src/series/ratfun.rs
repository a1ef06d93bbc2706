use std::collections::BTreeMap;

use super::BiSeries;
use crate::exactcore::Ring;
use crate::{Error, Result};

/// Finite bivariate polynomial `Σ c_{ij} u^i v^j`, stored sparsely without zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly2<R: Ring> {
    terms: BTreeMap<(usize, usize), R>,
}

impl<R: Ring> Poly2<R> {
    pub fn zero() -> Self {
        Poly2 { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::from_terms(vec![(0, 0, c)])
    }

    pub fn u() -> Self {
        Self::from_terms(vec![(1, 0, R::one())])
    }

    pub fn v() -> Self {
        Self::from_terms(vec![(0, 1, R::one())])
    }

    /// Sums the given `(i, j, c)` terms.
    pub fn from_terms(terms: Vec<(usize, usize, R)>) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, &c);
        }
        p
    }

    pub fn from_i64_terms(terms: &[(usize, usize, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(i, j, c)| (i, j, R::from_i64(c))).collect())
    }

    fn add_term(&mut self, i: usize, j: usize, c: &R) {
        let slot = self.terms.entry((i, j)).or_insert_with(R::zero);
        *slot = slot.plus(c);
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn at(&self, i: usize, j: usize) -> R {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(R::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &R)> {
        self.terms.iter()
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.scale(&R::one().negated()))
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), x)| (i, j, x.times(c))).collect())
    }

    pub fn times(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                out.add_term(a + c, b + d, &x.times(y));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.times(self))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly2<S> {
        Poly2::from_terms(self.terms.iter().map(|(&(i, j), c)| (i, j, f(c))).collect())
    }

    pub fn to_series(&self, orders: (usize, usize)) -> BiSeries<R> {
        let mut s = BiSeries::zero(orders);
        for (&(i, j), c) in &self.terms {
            if i <= orders.0 && j <= orders.1 {
                s.set(i, j, c.clone());
            }
        }
        s
    }
}

/// `num / den` with finite bivariate numerator and denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFun2<R: Ring> {
    pub num: Poly2<R>,
    pub den: Poly2<R>,
}

impl<R: Ring> RatFun2<R> {
    pub fn new(num: Poly2<R>, den: Poly2<R>) -> Self {
        RatFun2 { num, den }
    }

    /// Power-series expansion at the origin; `den(0,0)` must be a unit.
    pub fn expand(&self, orders: (usize, usize)) -> Result<BiSeries<R>> {
        let inv = self.den.at(0, 0).unit_inverse().ok_or(Error::DenominatorVanishes)?;
        let den: Vec<((usize, usize), R)> = self
            .den
            .terms()
            .filter(|(&k, _)| k != (0, 0) && k.0 <= orders.0 && k.1 <= orders.1)
            .map(|(&k, c)| (k, c.clone()))
            .collect();
        let mut s = BiSeries::zero(orders);
        for i in 0..=orders.0 {
            for j in 0..=orders.1 {
                let mut acc = self.num.at(i, j);
                for ((a, b), d) in &den {
                    if *a <= i && *b <= j {
                        acc = acc.minus(&d.times(s.at(i - a, j - b)));
                    }
                }
                s.set(i, j, acc.times(&inv));
            }
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{Int, Rat};
    use proptest::prelude::*;

    fn sigma() -> RatFun2<Rat> {
        RatFun2::new(Poly2::one(), Poly2::from_i64_terms(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, -1)]))
    }

    #[test]
    fn schroder_generating_function() {
        let s = sigma().expand((2, 2)).unwrap();
        assert_eq!(s.coeff(1, 1).unwrap(), &Rat::integer(3));
        assert_eq!(s.coeff(2, 0).unwrap(), &Rat::integer(1));
    }

    #[test]
    fn diagonal_generator() {
        let f = RatFun2::<Rat>::new(Poly2::one(), Poly2::from_i64_terms(&[(0, 0, 1), (1, 1, -1)]));
        let s = f.expand((6, 6)).unwrap();
        for ((i, j), c) in s.coefficients() {
            assert_eq!(*c, Rat::integer((i == j) as i64));
        }
    }

    #[test]
    fn vanishing_denominator_is_rejected() {
        let f = RatFun2::<Rat>::new(Poly2::one(), Poly2::u());
        assert_eq!(f.expand((2, 2)), Err(Error::DenominatorVanishes));
        let g = RatFun2::<Int>::new(Poly2::one(), Poly2::constant(Int::from(2)));
        assert_eq!(g.expand((2, 2)), Err(Error::DenominatorVanishes));
    }

    fn poly() -> impl Strategy<Value = Poly2<Rat>> {
        proptest::collection::vec((0usize..4, 0usize..4, -6i64..6), 0..8)
            .prop_map(|t| Poly2::from_terms(t.into_iter().map(|(i, j, c)| (i, j, Rat::integer(c))).collect()))
    }

    proptest! {
        #[test]
        fn expansion_times_denominator_is_numerator(num in poly(), den in poly(), c0 in 1i64..5) {
            let den = den.plus(&Poly2::constant(Rat::integer(c0))).minus(&Poly2::constant(den.at(0, 0)));
            let orders = (6, 5);
            let s = RatFun2::new(num.clone(), den.clone()).expand(orders).unwrap();
            prop_assert_eq!(s.times(&den.to_series(orders)), num.to_series(orders));
        }
    }
}
