//! Exact arithmetic: big integers, canonical rationals, the field ℚ(√2),
//! dense univariate polynomials and a few complex helpers for the numeric
//! weight checks.
//!
//! Every coefficient ring implements [`Ring`]. Ring choice is carried by the
//! type parameter, so mixing rings is a compile error; the only coercions are
//! `Int → Rat` and `Rat → QuadRat`, both through `From`.

mod complex;
mod int;
mod poly;
mod quad;
mod rat;

pub use complex::{GaussQuad, Phased, C64};
pub use int::{binomial, factorial, parse_int, Int};
pub use poly::UniPoly;
pub use quad::QuadRat;
pub use rat::Rat;

use std::fmt;

/// Failures of exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not exact in this ring")]
    InexactDivision,
    #[error("polynomial degree {degree} exceeds reversal degree {bound}")]
    DegreeExceeds { degree: usize, bound: usize },
    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },
}

impl ArithError {
    pub(crate) fn parse(kind: &'static str, input: &str) -> Self {
        ArithError::Parse { kind, input: input.chars().take(64).collect() }
    }
}

/// A commutative ring with exact equality.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_int(v: &Int) -> Self;
    /// Inverse of a unit; `None` for non-units.
    fn unit_inverse(&self) -> Option<Self>;
    /// The quotient `self / rhs` when it exists in the ring.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn from_i64(v: i64) -> Self {
        Self::from_int(&Int::from(v))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// Rings containing ℚ.
pub trait RatAlgebra: Ring {
    fn from_rat(r: &Rat) -> Self;
}

/// Rings in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inverse(&self) -> Result<Self, ArithError>;

    fn divide(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.times(&rhs.inverse()?))
    }
}

/// Sum of a sequence of ring elements.
pub fn sum<'a, R: Ring>(items: impl IntoIterator<Item = &'a R>) -> R {
    items.into_iter().fold(R::zero(), |acc, x| acc.plus(x))
}
