use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_int, ArithError, Field, Int, RatAlgebra, Ring};

/// Canonical rational number: `gcd(num, den) = 1`, `den > 0`, zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: Int, den: Int) -> Result<Rat, ArithError> {
        if Zero::is_zero(&den) {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num, den)))
    }

    pub fn integer(v: i64) -> Rat {
        Rat(BigRational::from_integer(Int::from(v)))
    }

    /// `num/den` for small literals; panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Rat {
        Rat::new(Int::from(num), Int::from(den)).expect("nonzero denominator")
    }

    pub fn numer(&self) -> &Int {
        self.0.numer()
    }

    pub fn denom(&self) -> &Int {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_int(&self) -> Option<Int> {
        self.is_integer().then(|| self.numer().clone())
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat, ArithError> {
        if rhs.0.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<Int> for Rat {
    fn from(v: Int) -> Rat {
        Rat(BigRational::from_integer(v))
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Rat {
        Rat::integer(v)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if One::is_one(self.denom()) {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = ArithError;

    /// Accepts `num` or `num/den` with a positive decimal denominator.
    fn from_str(s: &str) -> Result<Rat, ArithError> {
        match s.split_once('/') {
            None => Ok(Rat::from(parse_int(s)?)),
            Some((n, d)) => {
                let num = parse_int(n).map_err(|_| ArithError::parse("rational", s))?;
                if d.starts_with('-') {
                    return Err(ArithError::parse("rational", s));
                }
                let den = parse_int(d).map_err(|_| ArithError::parse("rational", s))?;
                Rat::new(num, den)
            }
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! rat_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat(self.0.$m(rhs.0))
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                Rat(self.0.$m(&rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_int(v: &Int) -> Self {
        Rat::from(v.clone())
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs).ok()
    }
}

impl Field for Rat {
    fn inverse(&self) -> Result<Self, ArithError> {
        Rat::one().checked_div(self)
    }
}

impl RatAlgebra for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    #[test]
    fn fraction_arithmetic() {
        assert_eq!(Rat::frac(1, 2) + Rat::frac(1, 3), Rat::frac(5, 6));
        assert_eq!(Rat::frac(2, 4).to_string(), "1/2");
        let x = Rat::frac(3, 7);
        assert_eq!(x.checked_div(&x).unwrap(), Rat::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Rat::one().checked_div(&Rat::zero()), Err(ArithError::DivisionByZero));
        assert_eq!(Rat::new(Int::from(1), Int::from(0)), Err(ArithError::DivisionByZero));
        assert_eq!("1/0".parse::<Rat>(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn decimal_strings() {
        assert_eq!("-6/4".parse::<Rat>().unwrap(), Rat::frac(-3, 2));
        assert_eq!(Rat::frac(-3, 2).to_string(), "-3/2");
        assert_eq!(Rat::zero().to_string(), "0");
        for bad in ["1/-2", "1/", "/2", "1//2", "1/2/3", "+1", "1.5"] {
            assert!(bad.parse::<Rat>().is_err(), "{bad:?}");
        }
        let json = serde_json::to_string(&Rat::frac(7, 3)).unwrap();
        assert_eq!(json, "\"7/3\"");
        assert_eq!(serde_json::from_str::<Rat>(&json).unwrap(), Rat::frac(7, 3));
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| Rat::frac(n, d))
    }

    fn canonical(r: &Rat) -> bool {
        r.denom() > &Int::from(0) && r.numer().gcd(r.denom()) == Int::from(1)
    }

    proptest! {
        #[test]
        fn results_stay_canonical(a in small_rat(), b in small_rat()) {
            prop_assert!(canonical(&(&a + &b)));
            prop_assert!(canonical(&(&a - &b)));
            prop_assert!(canonical(&(&a * &b)));
            if !b.is_zero() {
                prop_assert!(canonical(&a.checked_div(&b).unwrap()));
            }
        }

        #[test]
        fn string_round_trip(a in small_rat()) {
            prop_assert_eq!(a.to_string().parse::<Rat>().unwrap(), a);
        }
    }
}
