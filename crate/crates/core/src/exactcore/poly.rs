use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ArithError, Int, Rat, RatAlgebra, Ring};

/// Dense univariate polynomial with ascending coefficients.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector and has degree `None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn constant(c: R) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c·x^d`.
    pub fn monomial(c: R, d: usize) -> Self {
        let mut coeffs = vec![R::zero(); d + 1];
        coeffs[d] = c;
        UniPoly::new(coeffs)
    }

    /// The variable `x`.
    pub fn x() -> Self {
        UniPoly::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> R {
        self.coeff(0)
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc.times(x).plus(c))
    }

    /// `x^d · p(1/x)`; requires `deg p ≤ d`.
    pub fn reverse(&self, d: usize) -> Result<Self, ArithError> {
        match self.degree() {
            Some(deg) if deg > d => Err(ArithError::DegreeExceeds { degree: deg, bound: d }),
            _ => {
                let mut out = vec![R::zero(); d + 1];
                for (i, c) in self.coeffs.iter().enumerate() {
                    out[d - i] = c.clone();
                }
                Ok(UniPoly::new(out))
            }
        }
    }

    /// Whether `p = x^d · p(1/x)`.
    pub fn is_palindromic(&self, d: usize) -> bool {
        self.reverse(d).is_ok_and(|r| r == *self)
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut out = vec![R::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: out }
    }

    pub fn scale(&self, c: &R) -> Self {
        UniPoly::new(self.coeffs.iter().map(|x| x.times(c)).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Exact polynomial division; fails on a nonzero remainder or when a
    /// leading-coefficient quotient does not exist in `R`.
    pub fn div_exact(&self, d: &Self) -> Result<Self, ArithError> {
        let dd = d.degree().ok_or(ArithError::DivisionByZero)?;
        let lead = d.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok(UniPoly::new(vec![]));
        };
        if nd < dd {
            return Err(ArithError::InexactDivision);
        }
        let mut q = vec![R::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let c = top.exact_div(lead).ok_or(ArithError::InexactDivision)?;
            for (i, di) in d.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].minus(&c.times(di));
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(ArithError::InexactDivision);
        }
        Ok(UniPoly::new(q))
    }

    /// Renders with the given variable name, ascending powers.
    pub fn pretty(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            terms.push(match (i, c.is_one()) {
                (0, _) => format!("{c}"),
                (_, true) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        terms.join(" + ")
    }
}

impl<R: Ring> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("x"))
    }
}

impl<R: Ring> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly{:?}", self.coeffs)
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        UniPoly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i).plus(&rhs.coeff(i))).collect())
    }
    fn minus(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i).minus(&rhs.coeff(i))).collect())
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        UniPoly::new(out)
    }
    fn negated(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(Ring::negated).collect() }
    }
    fn from_int(v: &Int) -> Self {
        UniPoly::constant(R::from_int(v))
    }
    fn unit_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.unit_inverse().map(UniPoly::constant),
            _ => None,
        }
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.div_exact(rhs).ok()
    }
}

impl<R: RatAlgebra> RatAlgebra for UniPoly<R> {
    fn from_rat(r: &Rat) -> Self {
        UniPoly::constant(R::from_rat(r))
    }
}

impl<R: Ring> Serialize for UniPoly<R> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de, R: Ring + std::str::FromStr> Deserialize<'de> for UniPoly<R>
where
    R::Err: fmt::Display,
{
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<R>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<R>, _>>()?;
        Ok(UniPoly::new(coeffs))
    }
}
