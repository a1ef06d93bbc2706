use std::fmt;

use super::{ArithError, Field, Int, QuadRat, Ring};

/// Double-precision complex number, for numeric weight checks only.
pub type C64 = num_complex::Complex64;

/// Complex number in polar form with an unwrapped angle.
///
/// Square roots halve the stored angle instead of taking the principal
/// branch, so `√(ab) = √a·√b` holds whenever the factors carry consistent
/// angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Phased {
    pub modulus: f64,
    pub angle: f64,
}

impl Phased {
    pub fn new(modulus: f64, angle: f64) -> Phased {
        Phased { modulus, angle }
    }

    /// Principal-angle representation of `z`.
    pub fn principal(z: C64) -> Phased {
        Phased::new(z.norm(), z.arg())
    }

    pub fn value(&self) -> C64 {
        C64::from_polar(self.modulus, self.angle)
    }

    pub fn mul(&self, rhs: &Phased) -> Phased {
        Phased::new(self.modulus * rhs.modulus, self.angle + rhs.angle)
    }

    pub fn scale(&self, s: f64) -> Phased {
        assert!(s > 0.0, "positive scale keeps the angle");
        Phased::new(self.modulus * s, self.angle)
    }

    pub fn sqrt(&self) -> Phased {
        Phased::new(self.modulus.sqrt(), self.angle / 2.0)
    }
}

/// Exact element `re + i·im` of ℚ(√2)(i).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GaussQuad {
    pub re: QuadRat,
    pub im: QuadRat,
}

impl GaussQuad {
    pub fn new(re: QuadRat, im: QuadRat) -> GaussQuad {
        GaussQuad { re, im }
    }

    pub fn i() -> GaussQuad {
        GaussQuad::new(QuadRat::zero(), QuadRat::one())
    }

    pub fn conj(&self) -> GaussQuad {
        GaussQuad::new(self.re.clone(), self.im.negated())
    }

    pub fn to_c64(&self) -> C64 {
        C64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for GaussQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})+i*({})", self.re, self.im)
    }
}

impl fmt::Debug for GaussQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for GaussQuad {
    fn zero() -> Self {
        GaussQuad::default()
    }
    fn one() -> Self {
        GaussQuad::new(QuadRat::one(), QuadRat::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        GaussQuad::new(self.re.plus(&rhs.re), self.im.plus(&rhs.im))
    }
    fn minus(&self, rhs: &Self) -> Self {
        GaussQuad::new(self.re.minus(&rhs.re), self.im.minus(&rhs.im))
    }
    fn times(&self, rhs: &Self) -> Self {
        let re = self.re.times(&rhs.re).minus(&self.im.times(&rhs.im));
        let im = self.re.times(&rhs.im).plus(&self.im.times(&rhs.re));
        GaussQuad::new(re, im)
    }
    fn negated(&self) -> Self {
        GaussQuad::new(self.re.negated(), self.im.negated())
    }
    fn from_int(v: &Int) -> Self {
        GaussQuad::new(QuadRat::from_int(v), QuadRat::zero())
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.divide(rhs).ok()
    }
}

impl Field for GaussQuad {
    fn inverse(&self) -> Result<Self, ArithError> {
        // ℚ(√2) is real, so re² + im² vanishes only at zero.
        let n = self.re.times(&self.re).plus(&self.im.times(&self.im));
        let ninv = n.inverse()?;
        let c = self.conj();
        Ok(GaussQuad::new(c.re.times(&ninv), c.im.times(&ninv)))
    }
}
