//! Determinant-derived quantities shared by the checks and the CLI.

use crate::exactcore::{Field, Int, Rat, Ring, UniPoly};
use crate::genfun::GenSpec;
use crate::matdet::{det_bareiss, det_poly_lastcol, truncate, truncate_formal};
use crate::oracles::count_20v;
use crate::{Error, Result};

fn int_det(spec: &GenSpec, n: usize) -> Result<Int> {
    if n == 0 {
        return Ok(Int::from(1));
    }
    let m = truncate(spec, n)?;
    let m = m.to_int().ok_or_else(|| Error::Precondition(format!("{spec} has non-integer entries")))?;
    Ok(det_bareiss(&m))
}

/// `det` of the `n×n` truncation of `g_20V`; `1` at `n = 0`.
pub fn z_20v(n: usize) -> Result<Int> {
    int_det(&GenSpec::G20V, n)
}

/// `det` of the `n×n` truncation of `f_DT`; `1` at `n = 0`.
pub fn z_dt(n: usize) -> Result<Int> {
    int_det(&GenSpec::FDT, n)
}

/// Exact determinant of a refined generator, with its column scale divided out.
pub fn refined_det(spec: &GenSpec, n: usize) -> Result<UniPoly<Rat>> {
    let fm = truncate_formal(spec, n)?;
    let d = det_poly_lastcol(&fm.matrix)?;
    Ok(d.div_exact(&fm.column_scale)?)
}

pub fn to_int_poly(p: &UniPoly<Rat>) -> Result<UniPoly<Int>> {
    p.coeffs()
        .iter()
        .map(|c| c.to_int().ok_or_else(|| Error::Precondition(format!("coefficient {c} is not an integer"))))
        .collect::<Result<Vec<_>>>()
        .map(UniPoly::new)
}

/// `Z_n^{20V}(τ)`.
pub fn refined_20v(n: usize) -> Result<UniPoly<Int>> {
    to_int_poly(&refined_det(&GenSpec::G20VRef { n }, n)?)
}

/// `Z_n^{DT}(t)`.
pub fn refined_dt(n: usize) -> Result<UniPoly<Int>> {
    to_int_poly(&refined_det(&GenSpec::FDTRef { n }, n)?)
}

/// `h_n^{6V}(τ)` as a determinant ratio with the `g_6V^ref` generator.
pub fn h6v_by_determinant(n: usize) -> Result<UniPoly<Rat>> {
    let z = Rat::from(z_20v(n)?);
    let d = refined_det(&GenSpec::G6VRef { n }, n)?;
    Ok(d.scale(&z.inverse()?))
}

/// `h_n^{6V}(τ) = h_n^{20V}(τ) / ((1+τ)/2)^{n−1}`, dividing exactly.
pub fn h6v_from_20v(n: usize) -> Result<UniPoly<Rat>> {
    let z = Rat::from(z_20v(n)?);
    let h20 = refined_det(&GenSpec::G20VRef { n }, n)?;
    let half = UniPoly::new(vec![Rat::frac(1, 2), Rat::frac(1, 2)]).pow(n.saturating_sub(1) as u32);
    Ok(h20.div_exact(&half)?.scale(&z.inverse()?))
}

/// `(numerators, common denominator)` of a rational polynomial.
pub fn over_common_denominator(p: &UniPoly<Rat>) -> (Vec<Int>, Int) {
    use num_integer::Integer;
    let den = p.coeffs().iter().fold(Int::from(1), |acc, c| acc.lcm(c.denom()));
    let nums = p.coeffs().iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (nums, den)
}

/// Pentagon total `Z^{20V}(P_{n,k})` from determinant data where a closed form
/// is known (`k ≥ n−3`), from the oracle otherwise.
pub fn pentagon_20v(n: usize, k: usize) -> Result<(Int, &'static str)> {
    if n == 0 || k >= n {
        return Err(Error::UnsupportedTruncation { model: "20v", n, k });
    }
    let z = z_20v(n)?;
    let m = Int::from(n as u64);
    match n - k {
        1 => Ok((z, "determinant")),
        2 => Ok((z - z_20v(n - 1)?, "determinant")),
        3 => {
            let z2 = refined_20v(n)?.coeff(1);
            Ok((z - z2 - Int::from(2) * (m - 1) * z_20v(n - 1)?, "determinant"))
        }
        _ => Ok((count_20v(n, k, false)?.total, "oracle")),
    }
}

/// `Z^{DT}(T_{n,k})` from determinant data for `k ≥ n−3`.
pub fn pentagon_dt(n: usize, k: usize) -> Result<Int> {
    if n == 0 || k >= n || n - k > 3 {
        return Err(Error::UnsupportedTruncation { model: "dt", n, k });
    }
    let z = z_dt(n)?;
    let m = Int::from(n as u64);
    Ok(match n - k {
        1 => z,
        2 => z - z_dt(n - 1)?,
        _ => {
            let zk = refined_dt(n)?.coeff(n - 2);
            z - zk - (Int::from(2) * m - 3) * z_dt(n - 1)?
        }
    })
}

/// Coefficients joined by `;`.
pub fn join<R: Ring>(cs: &[R]) -> String {
    cs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(";")
}

/// A rational polynomial as `a;b;c/d`.
pub fn fraction_string(p: &UniPoly<Rat>) -> String {
    let (nums, den) = over_common_denominator(p);
    format!("{}/{}", join(&nums), den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert_eq!(z_20v(0).unwrap(), Int::from(1));
        assert_eq!(z_dt(3).unwrap(), Int::from(60));
        assert_eq!(refined_20v(2).unwrap(), UniPoly::from_i64s(&[1, 2, 1]));
        assert_eq!(refined_dt(2).unwrap(), UniPoly::from_i64s(&[3, 1]));
        assert_eq!(fraction_string(&h6v_by_determinant(3).unwrap()), "4;7;4/15");
        assert_eq!(fraction_string(&h6v_from_20v(2).unwrap()), "1;1/2");
    }

    #[test]
    fn pentagon_values() {
        let want = [1, 3, 29, 901];
        for n in 1..=4 {
            assert_eq!(pentagon_20v(n, 0).unwrap().0, Int::from(want[n - 1]));
        }
        assert_eq!(pentagon_20v(4, 0).unwrap().1, "oracle");
        assert_eq!(pentagon_dt(3, 0).unwrap(), Int::from(29));
        assert!(pentagon_dt(4, 0).is_err());
    }
}
