use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ArithError, Ring};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Parses an optional `-` followed by one or more ASCII digits.
pub fn parse_int(s: &str) -> Result<Int, ArithError> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ArithError::parse("integer", s));
    }
    s.parse::<Int>().map_err(|_| ArithError::parse("integer", s))
}

/// `m!`.
pub fn factorial(m: u64) -> Int {
    (2..=m).fold(Int::from(1), |acc, k| acc * k)
}

/// `C(m, p)` for `m ≥ 0`; zero when `p < 0` or `p > m`.
pub fn binomial(m: i64, p: i64) -> Int {
    assert!(m >= 0, "binomial called with negative upper index {m}");
    if p < 0 || p > m {
        return Int::from(0);
    }
    let p = p.min(m - p);
    let mut acc = Int::from(1);
    for i in 0..p {
        acc *= m - i;
        acc /= i + 1;
    }
    acc
}

impl Ring for Int {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
        v.clone()
    }
    fn unit_inverse(&self) -> Option<Self> {
        (self.abs() == One::one()).then(|| self.clone())
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Zero::is_zero(&r).then_some(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_plain_decimals() {
        assert_eq!(parse_int("0").unwrap(), Int::from(0));
        assert_eq!(parse_int("-678912").unwrap(), Int::from(-678912));
        let big = "123456789012345678901234567890";
        assert_eq!(parse_int(big).unwrap().to_string(), big);
    }

    #[test]
    fn parse_rejects_non_canonical_input() {
        for bad in ["", "-", "+1", "1_000", " 1", "1.0", "0x10", "--1"] {
            assert!(parse_int(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(4, 3), Int::from(4));
        assert_eq!(binomial(0, 1), Int::from(0));
        assert_eq!(binomial(5, -1), Int::from(0));
        assert_eq!(binomial(30, 15), Int::from(155117520));
        assert_eq!(factorial(0), Int::from(1));
        assert_eq!(factorial(6), Int::from(720));
    }

    #[test]
    fn exact_division_detects_remainders() {
        assert_eq!(Int::from(12).exact_div(&Int::from(-4)), Some(Int::from(-3)));
        assert_eq!(Int::from(12).exact_div(&Int::from(5)), None);
        assert_eq!(Int::from(12).exact_div(&Int::from(0)), None);
    }
}
