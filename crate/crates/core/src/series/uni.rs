use crate::exactcore::{RatAlgebra, Rat, Ring, UniPoly};
use crate::{Error, Result};

/// Univariate power series truncated at `order`: coefficients of `x^0..=x^order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct USeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> USeries<R> {
    /// Pads with zeros or truncates to `order`.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        USeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        USeries::new(vec![], order)
    }

    pub fn one(order: usize) -> Self {
        USeries::new(vec![R::one()], order)
    }

    pub fn var(order: usize) -> Self {
        USeries::new(vec![R::zero(), R::one()], order)
    }

    pub fn from_poly(p: &UniPoly<R>, order: usize) -> Self {
        USeries::new(p.coeffs().to_vec(), order)
    }

    pub fn from_i64s(coeffs: &[i64], order: usize) -> Self {
        USeries::new(coeffs.iter().map(|&c| R::from_i64(c)).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Result<&R> {
        self.coeffs.get(i).ok_or(Error::Truncation { i, j: 0, orders: (self.order(), 0) })
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::InsufficientOrder { what: "series truncation", needed: order, have: self.order() });
        }
        Ok(USeries { coeffs: self.coeffs[..=order].to_vec() })
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> USeries<S> {
        USeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        USeries { coeffs: (0..=n).map(|i| self.coeffs[i].plus(&rhs.coeffs[i])).collect() }
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }

    pub fn negated(&self) -> Self {
        self.map(Ring::negated)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn times(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        USeries { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(USeries::one(self.order()), |acc, _| acc.times(self))
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let c0inv = self.coeffs[0].unit_inverse().ok_or(Error::DenominatorVanishes)?;
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(c0inv.clone());
        for k in 1..self.coeffs.len() {
            let mut acc = R::zero();
            for i in 1..=k {
                acc = acc.plus(&self.coeffs[i].times(&out[k - i]));
            }
            out.push(acc.negated().times(&c0inv));
        }
        Ok(USeries { coeffs: out })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.times(&rhs.inverse()?))
    }

    /// Multiplication by `x^k` at the same order.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = vec![R::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        USeries::new(out, self.order())
    }

    /// `f(x^k)`, with order `k·order`.
    pub fn stretch(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut out = vec![R::zero(); k * self.order() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[k * i] = c.clone();
        }
        USeries { coeffs: out }
    }

    /// `g` with `g|_{x^j} = f|_{x^{2j+1}}`, i.e. `(f(√x) − f(−√x)) / (2√x)`.
    pub fn odd_half(&self) -> Result<Self> {
        if self.order() < 1 {
            return Err(Error::InsufficientOrder { what: "odd-part extraction", needed: 1, have: 0 });
        }
        let order = (self.order() - 1) / 2;
        Ok(USeries { coeffs: (0..=order).map(|j| self.coeffs[2 * j + 1].clone()).collect() })
    }

    /// `f(g(x))` where `g(0) = 0`, at the smaller of the two orders.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let order = self.order().min(g.order());
        let g = g.truncate(order)?;
        let mut acc = USeries::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.times(&g);
            acc.coeffs[0] = acc.coeffs[0].plus(c);
        }
        Ok(acc)
    }
}

impl<R: RatAlgebra> USeries<R> {
    /// The square root with constant term 1, by coefficient recurrence.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstantTerm);
        }
        let half = R::from_rat(&Rat::frac(1, 2));
        let mut s: Vec<R> = vec![R::one()];
        for k in 1..self.coeffs.len() {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc = acc.minus(&s[i].times(&s[k - i]));
            }
            s.push(acc.times(&half));
        }
        Ok(USeries { coeffs: s })
    }
}
