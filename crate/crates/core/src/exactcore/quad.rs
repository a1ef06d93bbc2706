use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ArithError, Field, Int, Rat, RatAlgebra, Ring};

/// `a + b·√2` with rational parts; equality is componentwise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadRat {
    pub a: Rat,
    pub b: Rat,
}

impl QuadRat {
    pub fn new(a: Rat, b: Rat) -> QuadRat {
        QuadRat { a, b }
    }

    pub fn sqrt2() -> QuadRat {
        QuadRat::new(Rat::zero(), Rat::one())
    }

    /// `2^(k/2)`, exact for every integer `k`.
    pub fn pow2_half(k: i64) -> QuadRat {
        let half = k.div_euclid(2);
        let scale = if half >= 0 {
            Rat::from(Int::from(1) << half as usize)
        } else {
            Rat::new(Int::from(1), Int::from(1) << (-half) as usize).expect("power of two")
        };
        if k.rem_euclid(2) == 0 {
            QuadRat::new(scale, Rat::zero())
        } else {
            QuadRat::new(Rat::zero(), scale)
        }
    }

    pub fn conj(&self) -> QuadRat {
        QuadRat::new(self.a.clone(), -&self.b)
    }

    /// `a² − 2b²`, the product with the conjugate.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - Rat::integer(2) * &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * std::f64::consts::SQRT_2
    }
}

impl From<Rat> for QuadRat {
    fn from(a: Rat) -> QuadRat {
        QuadRat::new(a, Rat::zero())
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*sqrt2", self.a, self.b)
    }
}

impl fmt::Debug for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QuadRat {
    type Err = ArithError;

    /// Accepts exactly the `a+b*sqrt2` form produced by `Display`.
    fn from_str(s: &str) -> Result<QuadRat, ArithError> {
        let body = s.strip_suffix("*sqrt2").ok_or_else(|| ArithError::parse("quadratic", s))?;
        let (a, b) = body.split_once('+').ok_or_else(|| ArithError::parse("quadratic", s))?;
        let a = a.parse::<Rat>().map_err(|_| ArithError::parse("quadratic", s))?;
        let b = b.parse::<Rat>().map_err(|_| ArithError::parse("quadratic", s))?;
        Ok(QuadRat::new(a, b))
    }
}

impl Serialize for QuadRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QuadRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<QuadRat, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Ring for QuadRat {
    fn zero() -> Self {
        QuadRat::default()
    }
    fn one() -> Self {
        QuadRat::from(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        QuadRat::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
    fn minus(&self, rhs: &Self) -> Self {
        QuadRat::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
    fn times(&self, rhs: &Self) -> Self {
        let a = &self.a * &rhs.a + Rat::integer(2) * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadRat::new(a, b)
    }
    fn negated(&self) -> Self {
        QuadRat::new(-&self.a, -&self.b)
    }
    fn from_int(v: &Int) -> Self {
        QuadRat::from(Rat::from(v.clone()))
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.divide(rhs).ok()
    }
}

impl Field for QuadRat {
    fn inverse(&self) -> Result<Self, ArithError> {
        // √2 is irrational, so the norm vanishes only at zero.
        let n = self.norm();
        if n.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let c = self.conj();
        Ok(QuadRat::new(c.a.checked_div(&n)?, c.b.checked_div(&n)?))
    }
}

impl RatAlgebra for QuadRat {
    fn from_rat(r: &Rat) -> Self {
        QuadRat::from(r.clone())
    }
}
