use serde_json::Value;

use super::USeries;
use crate::exactcore::Ring;
use crate::{Error, Result};

/// Bivariate series `Σ c[i][j] u^i v^j` retaining `0 ≤ i ≤ I`, `0 ≤ j ≤ J`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiSeries<R: Ring> {
    orders: (usize, usize),
    grid: Vec<R>,
}

impl<R: Ring> BiSeries<R> {
    pub fn zero(orders: (usize, usize)) -> Self {
        BiSeries { orders, grid: vec![R::zero(); (orders.0 + 1) * (orders.1 + 1)] }
    }

    pub fn one(orders: (usize, usize)) -> Self {
        Self::monomial(R::one(), 0, 0, orders)
    }

    pub fn monomial(c: R, i: usize, j: usize, orders: (usize, usize)) -> Self {
        let mut s = Self::zero(orders);
        if i <= orders.0 && j <= orders.1 {
            s.set(i, j, c);
        }
        s
    }

    pub fn from_fn(orders: (usize, usize), mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut grid = Vec::with_capacity((orders.0 + 1) * (orders.1 + 1));
        for i in 0..=orders.0 {
            for j in 0..=orders.1 {
                grid.push(f(i, j));
            }
        }
        BiSeries { orders, grid }
    }

    /// Series whose `v^j` coefficient is the `j`-th entry, each a series in `u`.
    pub fn from_columns(cols: &[USeries<R>]) -> Result<Self> {
        let j_max = cols.len().checked_sub(1).ok_or(Error::Precondition("no columns".into()))?;
        let i_max = cols.iter().map(USeries::order).min().unwrap_or(0);
        Ok(Self::from_fn((i_max, j_max), |i, j| cols[j].coeffs()[i].clone()))
    }

    pub fn orders(&self) -> (usize, usize) {
        self.orders
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.orders.1 + 1) + j
    }

    /// Exact coefficient of `u^i v^j`; never reads past the orders.
    pub fn coeff(&self, i: usize, j: usize) -> Result<&R> {
        if i > self.orders.0 || j > self.orders.1 {
            return Err(Error::Truncation { i, j, orders: self.orders });
        }
        Ok(&self.grid[self.idx(i, j)])
    }

    pub(crate) fn at(&self, i: usize, j: usize) -> &R {
        &self.grid[self.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, c: R) {
        let k = self.idx(i, j);
        self.grid[k] = c;
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> BiSeries<S> {
        BiSeries { orders: self.orders, grid: self.grid.iter().map(f).collect() }
    }

    pub fn coefficients(&self) -> impl Iterator<Item = ((usize, usize), &R)> {
        let cols = self.orders.1 + 1;
        self.grid.iter().enumerate().map(move |(k, c)| ((k / cols, k % cols), c))
    }

    /// Drops coefficients beyond `orders`, which must not exceed the current ones.
    pub fn restrict(&self, orders: (usize, usize)) -> Result<Self> {
        if orders.0 > self.orders.0 || orders.1 > self.orders.1 {
            return Err(Error::InsufficientOrder {
                what: "series restriction",
                needed: orders.0.max(orders.1),
                have: self.orders.0.min(self.orders.1),
            });
        }
        Ok(Self::from_fn(orders, |i, j| self.at(i, j).clone()))
    }

    fn common(&self, rhs: &Self) -> (usize, usize) {
        (self.orders.0.min(rhs.orders.0), self.orders.1.min(rhs.orders.1))
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        Self::from_fn(self.common(rhs), |i, j| self.at(i, j).plus(rhs.at(i, j)))
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        Self::from_fn(self.common(rhs), |i, j| self.at(i, j).minus(rhs.at(i, j)))
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.times(c))
    }

    /// Ordinary series product, truncated to the componentwise minimum orders.
    pub fn times(&self, rhs: &Self) -> Self {
        let orders = self.common(rhs);
        let mut out = Self::zero(orders);
        for a in 0..=orders.0 {
            for b in 0..=orders.1 {
                let x = self.at(a, b);
                if x.is_zero() {
                    continue;
                }
                for c in 0..=orders.0 - a {
                    for d in 0..=orders.1 - b {
                        let y = rhs.at(c, d);
                        if y.is_zero() {
                            continue;
                        }
                        let k = out.idx(a + c, b + d);
                        out.grid[k] = out.grid[k].plus(&x.times(y));
                    }
                }
            }
        }
        out
    }

    /// Multiplication by a series in `u` alone.
    pub fn times_u(&self, s: &USeries<R>) -> Self {
        let orders = (self.orders.0.min(s.order()), self.orders.1);
        let cols: Vec<USeries<R>> = (0..=orders.1).map(|j| self.column(j).times(s)).collect();
        Self::from_fn(orders, |i, j| cols[j].coeffs()[i].clone())
    }

    /// The coefficient of `v^j` as a series in `u`.
    pub fn column(&self, j: usize) -> USeries<R> {
        USeries::new((0..=self.orders.0).map(|i| self.at(i, j).clone()).collect(), self.orders.0)
    }

    /// The coefficient of `u^i` as a series in `v`.
    pub fn row(&self, i: usize) -> USeries<R> {
        USeries::new((0..=self.orders.1).map(|j| self.at(i, j).clone()).collect(), self.orders.1)
    }

    /// Generating series of the matrix product `AB`: `Σ_t a[i][t]·b[t][j]`.
    ///
    /// The inner index runs to `K = min(J_A, I_B)` and `K ≥ I_A` is required,
    /// which makes every retained entry exact when `A` is lower triangular.
    pub fn convolve(&self, rhs: &Self) -> Result<Self> {
        let inner = self.orders.1.min(rhs.orders.0);
        if inner < self.orders.0 {
            return Err(Error::InsufficientOrder { what: "convolution inner index", needed: self.orders.0, have: inner });
        }
        Ok(Self::from_fn((self.orders.0, rhs.orders.1), |i, j| {
            (0..=inner).fold(R::zero(), |acc, t| {
                let a = self.at(i, t);
                if a.is_zero() {
                    acc
                } else {
                    acc.plus(&a.times(rhs.at(t, j)))
                }
            })
        }))
    }

    /// `f(m(u), v)` for a map with `m(0) = 0`.
    pub fn substitute_u(&self, m: &USeries<R>) -> Result<Self> {
        if !m.coeffs()[0].is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let cols = (0..=self.orders.1).map(|j| self.column(j).compose(m)).collect::<Result<Vec<_>>>()?;
        Self::from_columns(&cols)
    }

    /// `g` with `g|_{u^i v^j} = f|_{u^i v^{2j+1}}`.
    pub fn odd_v_half(&self) -> Result<Self> {
        if self.orders.1 < 1 {
            return Err(Error::InsufficientOrder { what: "odd-part extraction", needed: 1, have: 0 });
        }
        let j_max = (self.orders.1 - 1) / 2;
        Ok(Self::from_fn((self.orders.0, j_max), |i, j| self.at(i, 2 * j + 1).clone()))
    }

    /// Debug dump: rows of decimal strings indexed `[i][j]`.
    pub fn to_json_grid(&self) -> Value {
        Value::Array(
            (0..=self.orders.0)
                .map(|i| Value::Array((0..=self.orders.1).map(|j| Value::String(self.at(i, j).to_string())).collect()))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{Int, Rat};
    use crate::series::{Poly2, RatFun2};
    use proptest::prelude::*;

    fn identity(n: usize) -> BiSeries<Int> {
        BiSeries::from_fn((n, n), |i, j| Int::from((i == j) as i64))
    }

    #[test]
    fn truncated_reads_fail_loudly() {
        let s = BiSeries::<Int>::one((2, 3));
        assert_eq!(s.coeff(0, 0).unwrap(), &Int::from(1));
        assert!(matches!(s.coeff(3, 0), Err(Error::Truncation { .. })));
        assert!(matches!(s.coeff(0, 4), Err(Error::Truncation { .. })));
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = BiSeries::<Int>::one((2, 5));
        let b = BiSeries::<Int>::one((4, 3));
        assert_eq!(a.plus(&b).orders(), (2, 3));
        assert_eq!(a.times(&b).orders(), (2, 3));
    }

    #[test]
    fn convolution_needs_the_inner_order() {
        let a = BiSeries::<Int>::one((4, 2));
        let b = BiSeries::<Int>::one((4, 4));
        assert!(matches!(a.convolve(&b), Err(Error::InsufficientOrder { .. })));
    }

    #[test]
    fn json_grid_dump() {
        let s = BiSeries::from_fn((1, 1), |i, j| Rat::frac(i as i64 + 1, j as i64 + 2));
        assert_eq!(s.to_json_grid().to_string(), r#"[["1/2","1/3"],["1","2/3"]]"#);
    }

    #[test]
    fn substitution_by_identity_is_trivial() {
        let f = RatFun2::<Rat>::new(Poly2::one(), Poly2::from_i64_terms(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, -1)]))
            .expand((5, 5))
            .unwrap();
        assert_eq!(f.substitute_u(&USeries::var(5)).unwrap(), f);
        assert_eq!(f.substitute_u(&USeries::one(5)), Err(Error::NonzeroConstant));
    }

    fn lower(n: usize) -> impl Strategy<Value = BiSeries<Int>> {
        proptest::collection::vec(-5i64..5, (n + 1) * (n + 1)).prop_map(move |v| {
            BiSeries::from_fn((n, n), |i, j| if j <= i { Int::from(v[i * (n + 1) + j]) } else { Int::from(0) })
        })
    }

    fn any(n: usize) -> impl Strategy<Value = BiSeries<Int>> {
        proptest::collection::vec(-5i64..5, (n + 1) * (n + 1))
            .prop_map(move |v| BiSeries::from_fn((n, n), |i, j| Int::from(v[i * (n + 1) + j])))
    }

    proptest! {
        #[test]
        fn convolution_is_associative(a in lower(5), b in lower(5), c in any(5)) {
            let left = a.convolve(&b).unwrap().convolve(&c).unwrap();
            let right = a.convolve(&b.convolve(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn identity_convolution(f in any(6)) {
            prop_assert_eq!(identity(6).convolve(&f).unwrap(), f);
        }
    }
}
