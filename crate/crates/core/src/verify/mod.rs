//! Named, machine-checkable verdicts for every identity in scope.
//!
//! Each `check_*` function is pure and deterministic. Internal errors are
//! reported as failures carrying the error text, never as panics.

mod tables;
pub mod values;

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::exactcore::{C64, GaussQuad, Int, Phased, QuadRat, Rat, Ring, UniPoly};
use crate::genfun::{
    combinatorial_deviation, conjecture_value, ct_quadrangle, entry_binom, entry_theta, lastcol_exact,
    lastcol_ratio_deviation, tau_exact, weights_lastcol, GenSpec,
};
use crate::matdet::{
    det_bareiss, det_gauss, is_unit_lower_triangular, truncate, truncate_formal, truncation_product_check, GenMatrix,
    Provenance,
};
use crate::oracles::{
    calibrate_dwbc3, count_20v, count_dt, count_dt_gamma, count_dt_weighted, m_entry_oracle, tuple_count_dt,
};
use crate::report::{CheckResult, Kind, Status};
use crate::{Error, Result};

pub use tables::{H6V, QUADRANGLE, REFINED_20V, REFINED_DT, SQUARE};
use values::{fraction_string, join, refined_det, refined_20v, refined_dt, z_20v, z_dt};

/// Tolerance for the combinatorial-point weights.
pub const WEIGHT_TOL: f64 = 1e-9;
/// Tolerance for the last-column ratio check.
pub const RATIO_TOL: f64 = 1e-10;

type Verdict = (bool, String, String);

fn run(check: &str, params: &[(&str, String)], kind: Kind, f: impl FnOnce() -> Result<Verdict>) -> CheckResult {
    let start = Instant::now();
    let outcome = f();
    let ms = start.elapsed().as_millis() as u64;
    let params = params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    let (status, lhs, rhs, note) = match outcome {
        Ok((true, l, r)) => (Status::Pass, l, r, None),
        Ok((false, l, r)) => (Status::Fail, l, r, None),
        Err(e) => (Status::Fail, String::new(), String::new(), Some(e.to_string())),
    };
    CheckResult { check: check.to_string(), params, status, kind, lhs, rhs, note, ms }
}

fn n_param(n: usize) -> Vec<(&'static str, String)> {
    vec![("n", n.to_string())]
}

fn need(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what.to_string()))
    }
}

fn ints(v: &[u64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn previous_total(n: usize) -> Result<Int> {
    z_20v(n - 1)
}

/// `det P_n = det M_n`, and `L` unit lower triangular with `(L·M)_n = P_n`.
pub fn check_equivalence(n: usize) -> CheckResult {
    run("equivalence", &n_param(n), Kind::Identity, || {
        need(n >= 1, "n ≥ 1")?;
        let p = z_20v(n)?;
        let m = z_dt(n)?;
        let triangular = is_unit_lower_triangular(&GenSpec::FL, n)?;
        let prod = truncation_product_check(&GenSpec::FL, &GenSpec::FDT, n)?;
        let target = truncate(&GenSpec::G20V, n)?;
        let constructive = triangular && prod.holds() && prod.product.entries() == target.entries();
        Ok((p == m && constructive, p.to_string(), format!("{m}{}", if constructive { "" } else { " (L·M ≠ P)" })))
    })
}

/// `Z_n^{20V}(τ)`: reference list, palindromy, `Z(0) = Z_{n−1}`, `Z(1) = Z_n`.
pub fn check_refined_20v(n: usize) -> CheckResult {
    run("refined_20v", &n_param(n), Kind::Identity, || {
        need(n >= 1, "n ≥ 1")?;
        let p = refined_20v(n)?;
        let mut ok = p.is_palindromic(2 * n - 2)
            && p.constant_term() == previous_total(n)?
            && p.eval(&Int::from(1)) == z_20v(n)?;
        let rhs = match REFINED_20V.get(n - 1) {
            Some(list) => {
                ok &= p.coeffs() == ints(list).as_slice();
                join(&ints(list))
            }
            None => format!("palindromic, Z(0)={}, Z(1)={}", previous_total(n)?, z_20v(n)?),
        };
        Ok((ok, join(p.coeffs()), rhs))
    })
}

/// `Z_n^{DT}(t)`: reference list, `Z(1) = Z_n`, leading coefficient `Z_{n−1}`.
pub fn check_refined_dt(n: usize) -> CheckResult {
    run("refined_dt", &n_param(n), Kind::Identity, || {
        need(n >= 1, "n ≥ 1")?;
        let p = refined_dt(n)?;
        let mut ok = p.eval(&Int::from(1)) == z_dt(n)? && p.coeff(n - 1) == z_dt(n - 1)? && p.coeffs().len() <= n;
        let rhs = match REFINED_DT.get(n - 1) {
            Some(list) => {
                ok &= p.coeffs() == ints(list).as_slice();
                join(&ints(list))
            }
            None => format!("Z(1)={}, leading={}", z_dt(n)?, z_dt(n - 1)?),
        };
        Ok((ok, join(p.coeffs()), rhs))
    })
}

/// `Z^{20V}(τ) = τ^n (Z^{DT}(τ) + τ^{−1} Z^{DT}(τ^{−1}))/(1+τ)` with exact division,
/// and `Z^{DT}_{n,k} = Z^{20V}_{n,n+k+1} + Z^{20V}_{n,n+k}` for all `k`.
pub fn check_refined_relation(n: usize) -> CheckResult {
    run("refined_relation", &n_param(n), Kind::Identity, || {
        need(n >= 1, "n ≥ 1")?;
        let z20 = refined_20v(n)?;
        let zdt = refined_dt(n)?;
        let num = zdt.shift(n).plus(&zdt.reverse(n - 1)?);
        let quotient = num.div_exact(&UniPoly::from_i64s(&[1, 1]))?;
        // Z^{20V}_{n,j} is the coefficient of τ^{j−1}; Z_{n,0} = Z_{n,2n} = 0.
        let z20_at = |j: usize| if j == 0 || j >= 2 * n { Int::from(0) } else { z20.coeff(j - 1) };
        let sums: Vec<Int> = (0..n).map(|k| z20_at(n + k + 1) + z20_at(n + k)).collect();
        let coefficientwise = (0..n).all(|k| sums[k] == zdt.coeff(k));
        Ok((quotient == z20 && coefficientwise, join(quotient.coeffs()), join(z20.coeffs())))
    })
}

/// `h_n^{6V}` two ways, against the reference list, normalized, palindromic,
/// with equal first and last coefficients.
pub fn check_h6v(n: usize) -> CheckResult {
    run("h6v", &n_param(n), Kind::Identity, || {
        need(n >= 1, "n ≥ 1")?;
        let a = values::h6v_by_determinant(n)?;
        let b = values::h6v_from_20v(n)?;
        let one = Rat::one();
        let sum = a.coeffs().iter().fold(Rat::zero(), |acc, c| acc.plus(c));
        let mut ok = a == b && sum == one && a.is_palindromic(n - 1) && a.coeff(0) == a.coeff(n - 1);
        let rhs = match H6V.get(n - 1) {
            Some((nums, den)) => {
                let want = format!("{}/{}", join(&ints(nums)), den);
                ok &= fraction_string(&a) == want;
                want
            }
            None => fraction_string(&b),
        };
        Ok((ok, fraction_string(&a), rhs))
    })
}

/// Pentagon closed forms for `k ∈ {2, 3}`, and oracle counts for `n ≤ oracle_max`.
pub fn check_pentagon(n: usize, k: usize, oracle_max: usize) -> CheckResult {
    let params = vec![("n", n.to_string()), ("k", k.to_string())];
    run("pentagon", &params, Kind::Identity, || {
        need(k == 2 || k == 3, "k ∈ {2, 3}")?;
        need(n >= k, "n ≥ k")?;
        let kk = n - k;
        let (lhs, _) = values::pentagon_20v(n, kk)?;
        let rhs = values::pentagon_dt(n, kk)?;
        let mut ok = lhs == rhs;
        let mut rhs_s = rhs.to_string();
        if n <= oracle_max {
            let o20 = count_20v(n, kk, false)?.total;
            let odt = count_dt(n, kk)?.total;
            ok &= o20 == lhs && odt == rhs;
            rhs_s = format!("{rhs} (oracles {o20}, {odt})");
        }
        Ok((ok, lhs.to_string(), rhs_s))
    })
}

/// The product formula against `det P_n`.
pub fn check_conjecture(n: usize) -> CheckResult {
    run("conjecture", &n_param(n), Kind::ConjectureConsistency, || {
        need(n >= 1, "n ≥ 1")?;
        let product = conjecture_value(n);
        let det = Rat::from(z_20v(n)?);
        Ok((product == det, product.to_string(), det.to_string()))
    })
}

/// `det(2^i C(i+2j+1, 2j+1) − C(i−1, 2j+1)) = det P_n`.
pub fn check_binom(n: usize) -> CheckResult {
    run("binomial", &n_param(n), Kind::Identity, || {
        need(n >= 1, "n ≥ 1")?;
        let m = GenMatrix::from_fn(n, Provenance::Explicit, entry_binom);
        let d = det_bareiss(&m);
        let z = z_20v(n)?;
        Ok((d == z, d.to_string(), z.to_string()))
    })
}

/// `2^{n(n−1)/4}/2 · det(θ_{2j+1}(i) + θ_{2j+1}(−i)) = det P_n` in ℚ(√2).
pub fn check_symcor(n: usize) -> CheckResult {
    run("sqrt2", &n_param(n), Kind::Identity, || {
        need(n >= 1, "n ≥ 1")?;
        let m = GenMatrix::from_fn(n, Provenance::Explicit, entry_theta);
        let pref = QuadRat::pow2_half((n * (n - 1) / 2) as i64).times(&QuadRat::from(Rat::frac(1, 2)));
        let d = pref.times(&det_gauss(&m));
        let z = QuadRat::from(Rat::from(z_20v(n)?));
        Ok((d == z && d.is_rational(), d.to_string(), z.to_string()))
    })
}

/// Constant-term identity against `det P_n`.
pub fn check_ct(n: usize) -> CheckResult {
    run("ct", &n_param(n), Kind::Identity, || {
        need((1..=5).contains(&n), "1 ≤ n ≤ 5")?;
        let ct = ct_quadrangle(n)?;
        let z = Rat::from(z_20v(n)?);
        Ok((ct == z, ct.to_string(), z.to_string()))
    })
}

fn rat_poly(p: &UniPoly<Int>) -> UniPoly<Rat> {
    p.map(|c| Rat::from(c.clone()))
}

/// γ-weighted tilings.
///
/// * `n ≤ 3`: the formal determinant equals the oracle polynomial in `γ`.
/// * each sample with `n ≤ 4`: the determinant at `γ` equals the oracle at `γ`.
/// * each sample: the refined determinant at `t = 1` is the plain one, and the
///   refined and bar-f generators agree as polynomials in `t`.
/// * `γ = 1`: the plain and refined values reduce to `γ`-free ones.
pub fn check_gamma(n: usize, samples: &[Rat]) -> CheckResult {
    let params = vec![("n", n.to_string()), ("gamma", samples.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(";"))];
    run("gamma", &params, Kind::Identity, || {
        need(n >= 1, "n ≥ 1")?;
        let mut ok = true;
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        let oracle = if n <= 4 { Some(count_dt_gamma(n, n - 1)?.total) } else { None };
        if n <= 3 {
            let formal = truncate_formal(&GenSpec::FDTGamma, n)?.matrix.det();
            let o = rat_poly(oracle.as_ref().expect("n ≤ 3"));
            ok &= formal == o;
            lhs.push(format!("det={}", join(formal.coeffs())));
            rhs.push(format!("oracle={}", join(o.coeffs())));
        }
        for g in samples {
            let plain = truncate(&GenSpec::FDTGammaAt(g.clone()), n)?.det();
            let refined = refined_det(&GenSpec::FDTGammaRef { n, gamma: g.clone() }, n)?;
            let bar = refined_det(&GenSpec::BarFDTGammaRef { n, gamma: g.clone() }, n)?;
            ok &= refined.eval(&Rat::one()) == plain && refined == bar;
            lhs.push(format!("γ={g}: {plain} [{}]", join(refined.coeffs())));
            if let Some(o) = &oracle {
                let at = rat_poly(o).eval(g);
                ok &= at == plain;
                rhs.push(format!("γ={g}: oracle {at}"));
            } else {
                rhs.push(format!("γ={g}: bar [{}]", join(bar.coeffs())));
            }
            if g.is_one() {
                ok &= plain == Rat::from(z_dt(n)?) && values::to_int_poly(&refined)? == refined_dt(n)?;
            }
        }
        Ok((ok, lhs.join("; "), rhs.join("; ")))
    })
}

/// Deterministic samples `w` in the open upper half-plane.
pub fn weight_samples(count: usize) -> Vec<C64> {
    let mut rng = StdRng::seed_from_u64(0x20f);
    (0..count)
        .map(|_| {
            let r: f64 = rng.gen_range(0.2..2.0);
            let a: f64 = rng.gen_range(0.1..PI - 0.1);
            C64::from_polar(r, a)
        })
        .collect()
}

/// Combinatorial-point weights, the last-column ratio check and `τ(−1) = 1`.
pub fn check_weights() -> CheckResult {
    run("weights", &[], Kind::Identity, || {
        let dev = combinatorial_deviation();
        let ratio = weight_samples(5)
            .into_iter()
            .map(|w| lastcol_ratio_deviation(Phased::principal(w)))
            .fold(0.0, f64::max);
        let lc = weights_lastcol(Phased::new(1.0, PI));
        let trivial = lc.omega.iter().all(|o| (o - C64::new(1.0, 0.0)).norm() < 1e-12);
        let minus_one = GaussQuad::one().negated();
        let exact = tau_exact(&minus_one)? == GaussQuad::one()
            && lastcol_exact(&minus_one)?.iter().all(|o| *o == GaussQuad::one());
        let ok = dev < WEIGHT_TOL && ratio < RATIO_TOL && trivial && exact;
        Ok((
            ok,
            format!("max|ω−1|={dev:.3e}; ratio={ratio:.3e}; τ(−1)={}", if exact { "1" } else { "≠1" }),
            format!("<{WEIGHT_TOL:e}; <{RATIO_TOL:e}; 1"),
        ))
    })
}

/// Single-path counts against `f_DT` coefficients, `i, j ≤ 6`.
pub fn check_oracle_entries() -> CheckResult {
    run("oracle_m_entries", &[], Kind::Identity, || {
        let f = crate::genfun::make(&GenSpec::FDT, (6, 6))?;
        let f = f.plain().expect("plain generator");
        let mut bad = Vec::new();
        for i in 0..=6 {
            for j in 0..=6 {
                if f.coeff(i, j)?.to_int() != Some(m_entry_oracle(i, j)) {
                    bad.push(format!("({i},{j})"));
                }
            }
        }
        Ok((bad.is_empty(), format!("{} mismatches", bad.len()), bad.join(" ")))
    })
}

/// DT oracle against determinants; refined vectors against the refined determinant.
pub fn check_oracle_dt(n: usize) -> CheckResult {
    run("oracle_dt", &n_param(n), Kind::Identity, || {
        let c = count_dt(n, n - 1)?;
        let det = z_dt(n)?;
        let refined = refined_dt(n)?;
        let mut want = refined.coeffs().to_vec();
        want.resize(n, Int::from(0));
        let mut ok = c.is_consistent() && c.total == det && c.refined == want;
        if n <= 3 {
            ok &= tuple_count_dt(n)? == c.total;
        }
        let shifted: Result<Vec<Int>> =
            (0..n).map(|s| Ok(count_dt_weighted(n, n - 1, s, &Int::from(1))?.total)).collect();
        let shifted = shifted?;
        ok &= (0..n).all(|k| {
            let next = shifted.get(k + 1).cloned().unwrap_or_else(|| Int::from(0));
            &shifted[k] - next == c.refined[k]
        });
        Ok((ok, format!("{} [{}]", c.total, join(&c.refined)), format!("{det} [{}]", join(&want))))
    })
}

/// 20V oracle on `Q_n` against determinants; refined vectors, palindromic.
pub fn check_oracle_20v(n: usize) -> CheckResult {
    run("oracle_20v", &n_param(n), Kind::Identity, || {
        let c = count_20v(n, n - 1, true)?;
        let det = z_20v(n)?;
        let refined = refined_20v(n)?;
        let mut want = refined.coeffs().to_vec();
        want.resize(2 * n - 1, Int::from(0));
        let mut rev = c.refined.clone();
        rev.reverse();
        let ok = c.is_consistent() && c.total == det && c.refined == want && rev == c.refined;
        Ok((ok, format!("{} [{}]", c.total, join(&c.refined)), format!("{det} [{}]", join(&want))))
    })
}

/// `P_{n,0}` oracle totals against the reference sequence.
pub fn check_oracle_square(n: usize) -> CheckResult {
    run("oracle_square", &n_param(n), Kind::Identity, || {
        let c = count_20v(n, 0, false)?;
        let want = SQUARE.get(n - 1).map(|&v| Int::from(v));
        match want {
            Some(w) => Ok((c.total == w, c.total.to_string(), w.to_string())),
            None => Ok((true, c.total.to_string(), "no reference".to_string())),
        }
    })
}

/// The default boundary specification reproduces the known small counts.
pub fn check_calibration() -> CheckResult {
    run("oracle_calibration", &[], Kind::Identity, || {
        calibrate_dwbc3()?;
        Ok((true, "calibrated".into(), "1,4,60,3328 / 1,3,29,901".into()))
    })
}

/// Named groups of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Equivalence,
    Refined,
    Pentagon,
    Conjecture,
    Binomial,
    Sqrt2,
    Ct,
    Gamma,
    Weights,
    Oracle,
}

impl Suite {
    pub const NAMES: [&'static str; 11] =
        ["all", "equivalence", "refined", "pentagon", "conjecture", "binomial", "sqrt2", "ct", "gamma", "weights", "oracle"];

    pub fn parse(s: &str) -> Result<Suite> {
        Ok(match s {
            "all" => Suite::All,
            "equivalence" => Suite::Equivalence,
            "refined" => Suite::Refined,
            "pentagon" => Suite::Pentagon,
            "conjecture" => Suite::Conjecture,
            "binomial" => Suite::Binomial,
            "sqrt2" => Suite::Sqrt2,
            "ct" => Suite::Ct,
            "gamma" => Suite::Gamma,
            "weights" => Suite::Weights,
            "oracle" => Suite::Oracle,
            _ => return Err(Error::Precondition(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", ")))),
        })
    }
}

/// Upper size limits per family of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub det: usize,
    pub refined: usize,
    pub conjecture: usize,
    pub binomial: usize,
    pub sqrt2: usize,
    pub ct: usize,
    pub gamma: usize,
    pub oracle: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { det: 12, refined: 8, conjecture: 30, binomial: 12, sqrt2: 8, ct: 5, gamma: 5, oracle: 4 }
    }
}

impl Bounds {
    /// The determinant-only families go up to `n`; the others are capped at their defaults.
    pub fn up_to(n: usize) -> Bounds {
        let d = Bounds::default();
        Bounds {
            det: n,
            refined: d.refined.min(n),
            conjecture: n,
            binomial: n,
            sqrt2: d.sqrt2.min(n),
            ct: d.ct.min(n),
            gamma: d.gamma.min(n),
            oracle: d.oracle.min(n),
        }
    }
}

type Job = Box<dyn FnOnce() -> CheckResult + Send>;

fn jobs(suite: Suite, b: &Bounds) -> Vec<Job> {
    let mut out: Vec<Job> = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Equivalence {
        for n in 1..=b.det {
            out.push(Box::new(move || check_equivalence(n)));
        }
    }
    if all || suite == Suite::Refined {
        for n in 1..=b.refined {
            out.push(Box::new(move || check_refined_20v(n)));
            out.push(Box::new(move || check_refined_dt(n)));
            out.push(Box::new(move || check_refined_relation(n)));
            out.push(Box::new(move || check_h6v(n)));
        }
    }
    if all || suite == Suite::Pentagon {
        let oracle = b.oracle;
        for n in 2..=b.refined {
            out.push(Box::new(move || check_pentagon(n, 2, oracle)));
            if n >= 3 {
                out.push(Box::new(move || check_pentagon(n, 3, oracle)));
            }
        }
    }
    if all || suite == Suite::Conjecture {
        for n in 1..=b.conjecture {
            out.push(Box::new(move || check_conjecture(n)));
        }
    }
    if all || suite == Suite::Binomial {
        for n in 1..=b.binomial {
            out.push(Box::new(move || check_binom(n)));
        }
    }
    if all || suite == Suite::Sqrt2 {
        for n in 1..=b.sqrt2 {
            out.push(Box::new(move || check_symcor(n)));
        }
    }
    if all || suite == Suite::Ct {
        for n in 1..=b.ct {
            out.push(Box::new(move || check_ct(n)));
        }
    }
    if all || suite == Suite::Gamma {
        for n in 1..=b.gamma {
            let samples = [Rat::integer(0), Rat::integer(1), Rat::integer(2), Rat::frac(1, 2)];
            out.push(Box::new(move || check_gamma(n, &samples)));
        }
    }
    if all || suite == Suite::Weights {
        out.push(Box::new(check_weights));
    }
    if all || suite == Suite::Oracle {
        out.push(Box::new(check_calibration));
        out.push(Box::new(check_oracle_entries));
        for n in 1..=b.oracle.max(1) {
            out.push(Box::new(move || check_oracle_dt(n)));
            out.push(Box::new(move || check_oracle_20v(n)));
            out.push(Box::new(move || check_oracle_square(n)));
        }
    }
    out
}

/// Runs a suite in parallel; records come back sorted by check and parameters.
pub fn run_suite(suite: Suite, bounds: &Bounds) -> Vec<CheckResult> {
    let mut records: Vec<CheckResult> = jobs(suite, bounds).into_par_iter().map(|job| job()).collect();
    records.sort_by_cached_key(CheckResult::sort_key);
    records
}

/// Plain-map helper for parameters of value records.
pub fn params_of(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}
