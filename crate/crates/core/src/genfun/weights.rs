//! Numeric 20V vertex weights at spectral parameters, and last-column weights.
//!
//! Square roots such as `√(tw)` are taken on [`Phased`] values, so their
//! branch follows the angles assigned to the spectral parameters rather than
//! the principal branch.

use std::f64::consts::PI;

use crate::exactcore::{Field, GaussQuad, Phased, QuadRat, Rat, Ring, C64};
use crate::Result;

/// Spectral parameters `q, z, t, w` and the overall scale `α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightPoint {
    pub q: C64,
    pub z: Phased,
    pub t: Phased,
    pub w: Phased,
    pub alpha: Phased,
}

/// The seven weights `ω_0..ω_6`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightVector(pub [C64; 7]);

/// Last-column weights `ω̄_0..ω̄_6` and `τ = ω̄_1/ω̄_0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LastColumn {
    pub omega: [C64; 7],
    pub tau: C64,
}

fn q_power(k: i32) -> Phased {
    Phased::new(1.0, k as f64 * PI / 8.0)
}

/// `q = e^{iπ/8}`, `(z, t, w) = α(q⁶, 1, q⁻⁶)`, `α = 2^{−5/6} q⁻⁴`.
pub fn combinatorial_point() -> WeightPoint {
    let alpha = q_power(-4).scale(2f64.powf(-5.0 / 6.0));
    WeightPoint {
        q: q_power(1).value(),
        z: alpha.mul(&q_power(6)),
        t: alpha,
        w: alpha.mul(&q_power(-6)),
        alpha,
    }
}

/// Weights evaluated verbatim from their product formulas.
pub fn weights_20v(p: &WeightPoint) -> WeightVector {
    let q = p.q;
    let qi = q.inv();
    let q2 = q * q;
    let q2i = qi * qi;
    let (z, t, w) = (p.z.value(), p.t.value(), p.w.value());
    let d = q2 - q2i;
    let sqrt_tw = p.t.mul(&p.w).sqrt().value();
    let sqrt_zw = p.z.mul(&p.w).sqrt().value();
    let sqrt_zt = p.z.mul(&p.t).sqrt().value();
    WeightVector([
        (z - w) * (q * z - qi * t) * (q * t - qi * w),
        (q2i * z - q2 * w) * (q * z - qi * t) * (qi * t - q * w),
        (q2i * z - q2 * w) * (q * z - qi * t) * d * sqrt_tw,
        z * t * w * d * d * d + (z - w) * (qi * z - q * t) * (qi * t - q * w),
        d * sqrt_zw * (q * z - qi * t) * (q * t - qi * w),
        (q2i * z - q2 * w) * d * sqrt_zt * (q * t - qi * w),
        (q2i * z - q2 * w) * (qi * z - q * t) * (q * t - qi * w),
    ])
}

/// Last-column weights at `q = e^{iπ/8}`; `√(−w)` uses the angle of `w` minus `π`.
pub fn weights_lastcol(w: Phased) -> LastColumn {
    let q2 = q_power(2).value();
    let q2i = q_power(-2).value();
    let wv = w.value();
    let one = C64::new(1.0, 0.0);
    let s = 2.0 * 2f64.sqrt();
    let minus_w = Phased::new(w.modulus, w.angle - PI);
    let half = (one - wv) / 2.0;
    let o0 = (one - wv) * (q2 - q2i * wv) / s;
    let o1 = (one - wv) * (q2i - q2 * wv) / s;
    let o2 = half * minus_w.sqrt().value();
    let o3 = half * half;
    LastColumn { omega: [o0, o1, o2, o3, o2, o3, o3], tau: o1 / o0 }
}

/// Largest `|ω_i(w)/ω_i(−1) − ω̄_i(w)|`, with `z = q⁴`, `t = q⁻²` fixed.
///
/// The ratio of full weights at `w` and at `w = −1` must reproduce the
/// last-column weights, so this is zero up to rounding.
pub fn lastcol_ratio_deviation(w: Phased) -> f64 {
    let point = |w: Phased| WeightPoint { q: q_power(1).value(), z: q_power(4), t: q_power(-2), w, alpha: Phased::new(1.0, 0.0) };
    let base = weights_20v(&point(Phased::new(1.0, PI)));
    let at_w = weights_20v(&point(w));
    let lc = weights_lastcol(w);
    (0..7).map(|i| (at_w.0[i] / base.0[i] - lc.omega[i]).norm()).fold(0.0, f64::max)
}

/// Largest `|ω_i − 1|` at the combinatorial point.
pub fn combinatorial_deviation() -> f64 {
    let WeightVector(om) = weights_20v(&combinatorial_point());
    om.iter().map(|o| (o - C64::new(1.0, 0.0)).norm()).fold(0.0, f64::max)
}

/// `q² = (1+i)/√2` in ℚ(√2)(i).
fn q2_exact() -> GaussQuad {
    let h = QuadRat::new(Rat::zero(), Rat::frac(1, 2));
    GaussQuad::new(h.clone(), h)
}

/// `τ = (q⁻² − q²w)/(q² − q⁻²w)` exactly.
pub fn tau_exact(w: &GaussQuad) -> Result<GaussQuad> {
    let q2 = q2_exact();
    let q2i = q2.inverse()?;
    Ok(q2i.minus(&q2.times(w)).divide(&q2.minus(&q2i.times(w)))?)
}

/// `(ω̄_0, ω̄_1, ω̄_3)` exactly; these carry no square root.
pub fn lastcol_exact(w: &GaussQuad) -> Result<[GaussQuad; 3]> {
    let q2 = q2_exact();
    let q2i = q2.inverse()?;
    let one_w = GaussQuad::one().minus(w);
    let s = GaussQuad::new(QuadRat::pow2_half(3), QuadRat::zero());
    let half = one_w.divide(&GaussQuad::from_i64(2))?;
    Ok([
        one_w.times(&q2.minus(&q2i.times(w))).divide(&s)?,
        one_w.times(&q2i.minus(&q2.times(w))).divide(&s)?,
        half.times(&half),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_weights_are_one_at_the_combinatorial_point() {
        let WeightVector(om) = weights_20v(&combinatorial_point());
        for (i, o) in om.iter().enumerate() {
            assert!((o - C64::new(1.0, 0.0)).norm() < 1e-9, "ω_{i} = {o}");
        }
        assert!((combinatorial_point().q.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn last_column_is_trivial_at_minus_one() {
        let lc = weights_lastcol(Phased::new(1.0, PI));
        for o in lc.omega {
            assert!((o - C64::new(1.0, 0.0)).norm() < 1e-12, "{o}");
        }
        let w = GaussQuad::one().negated();
        assert_eq!(tau_exact(&w).unwrap(), GaussQuad::one());
        for o in lastcol_exact(&w).unwrap() {
            assert_eq!(o, GaussQuad::one());
        }
    }

    #[test]
    fn ratio_to_minus_one_gives_last_column_weights() {
        for (re, im) in [(0.3, 0.1), (-1.5, 0.2), (0.0, 2.0), (1.0, 1.0)] {
            let d = lastcol_ratio_deviation(Phased::principal(C64::new(re, im)));
            assert!(d < 1e-10, "w = {re}+{im}i: {d}");
        }
        assert!(combinatorial_deviation() < 1e-9);
    }
}
