use std::collections::BTreeMap;
use std::fs;
use std::time::Instant;

use rayon::prelude::*;

use aztec20v_core::exactcore::{Int, Ring};
use aztec20v_core::oracles::{count_20v, count_20v_with, count_dt, count_dt_gamma, BoundarySpec};
use aztec20v_core::report::{CheckResult, Kind, Report, Status};
use aztec20v_core::verify::values::{self, fraction_string, join};
use aztec20v_core::verify::{run_suite, Bounds, Suite};

use crate::{output, render, Cli, Command, Failure, Model, RefinedModel};

fn model_name(m: Model) -> &'static str {
    match m {
        Model::TwentyVertex => "20v",
        Model::Domino => "dt",
    }
}

fn value(check: &str, params: &[(&str, String)], lhs: String, ms: u64) -> CheckResult {
    CheckResult {
        check: check.to_string(),
        params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        status: Status::Pass,
        kind: Kind::Value,
        lhs,
        rhs: String::new(),
        note: None,
        ms,
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_millis() as u64)
}

fn config_echo(cli: &Cli) -> BTreeMap<String, String> {
    let mut c = BTreeMap::new();
    c.insert("command".to_string(), format!("{:?}", cli.command));
    c.insert("format".to_string(), format!("{:?}", cli.format).to_lowercase());
    if let Some(t) = cli.threads {
        c.insert("threads".to_string(), t.to_string());
    }
    c
}

/// Runs the selected command; returns the exit status on success.
pub fn dispatch(cli: &Cli) -> Result<u8, Failure> {
    let (records, gate) = match &cli.command {
        Command::Table { model, pentagon, n_min, n_max } => (cmd_table(*model, *pentagon, *n_min, *n_max)?, None),
        Command::Refined { model, n } => (cmd_refined(*model, *n)?, None),
        Command::Verify { suite, n_max, strict_conjecture } => {
            (cmd_verify(suite, *n_max)?, Some(*strict_conjecture))
        }
        Command::Oracle { model, n, k, refined, gamma, boundary } => {
            (cmd_oracle(*model, *n, *k, *refined, *gamma, boundary.as_deref())?, None)
        }
        Command::Boundary { n, k } => {
            if *n == 0 {
                return Err(Failure::config("--n must be at least 1"));
            }
            let spec = BoundarySpec::dwbc3(*n, k.unwrap_or(*n - 1))?;
            output::emit(&(spec.to_json() + "\n"), cli.output.as_deref())?;
            return Ok(0);
        }
        Command::Render { n } => {
            let svg = render::dt_family_svg(*n)?;
            output::emit(&svg, cli.output.as_deref())?;
            return Ok(0);
        }
    };
    let report = Report::new(config_echo(cli), records);
    output::emit(&output::render(&report, cli.format)?, cli.output.as_deref())?;
    let strict = gate.unwrap_or(true);
    Ok(if report.records.iter().any(|r| r.is_gating_failure(strict)) { 1 } else { 0 })
}

fn cmd_table(model: Model, pentagon: Option<usize>, n_min: usize, n_max: usize) -> Result<Vec<CheckResult>, Failure> {
    if n_min == 0 || n_min > n_max {
        return Err(Failure::config(format!("need 1 ≤ --n-min ≤ --n-max, got {n_min}..{n_max}")));
    }
    let name = model_name(model);
    (n_min..=n_max)
        .into_par_iter()
        .filter(|&n| pentagon.is_none_or(|k| k < n))
        .map(|n| {
            let k = pentagon.unwrap_or(n - 1);
            let params = [("n", n.to_string()), ("k", k.to_string())];
            if model == Model::Domino && n - k > 3 {
                let mut r = value(name, &params, String::new(), 0);
                r.status = Status::Skip;
                r.note = Some(format!("T_{{{n},{k}}} is supported only for k ≥ n−3"));
                return Ok(r);
            }
            let (res, ms) = timed(|| -> Result<(Int, &str), Failure> {
                Ok(match model {
                    Model::TwentyVertex => values::pentagon_20v(n, k)?,
                    Model::Domino => (values::pentagon_dt(n, k)?, "determinant"),
                })
            });
            let (v, source) = res?;
            let mut r = value(name, &params, v.to_string(), ms);
            r.params.insert("source".to_string(), source.to_string());
            Ok(r)
        })
        .collect()
}

fn cmd_refined(model: RefinedModel, n: usize) -> Result<Vec<CheckResult>, Failure> {
    if n == 0 {
        return Err(Failure::config("--n must be at least 1"));
    }
    let (rec, ms) = timed(|| -> Result<(String, &str), Failure> {
        Ok(match model {
            RefinedModel::TwentyVertex => (join(values::refined_20v(n)?.coeffs()), "20v"),
            RefinedModel::Domino => (join(values::refined_dt(n)?.coeffs()), "dt"),
            RefinedModel::SixVertex => (fraction_string(&values::h6v_by_determinant(n)?), "6v"),
        })
    });
    let (lhs, name) = rec?;
    Ok(vec![value(name, &[("n", n.to_string()), ("quantity", "refined".to_string())], lhs, ms)])
}

fn cmd_verify(suite: &str, n_max: Option<usize>) -> Result<Vec<CheckResult>, Failure> {
    let suite = Suite::parse(suite)?;
    let bounds = match n_max {
        Some(0) => return Err(Failure::config("--n-max must be at least 1")),
        Some(n) => Bounds::up_to(n),
        None => Bounds::default(),
    };
    Ok(run_suite(suite, &bounds))
}

fn cmd_oracle(
    model: Model,
    n: usize,
    k: Option<usize>,
    refined: bool,
    gamma: bool,
    boundary: Option<&std::path::Path>,
) -> Result<Vec<CheckResult>, Failure> {
    if n == 0 {
        return Err(Failure::config("--n must be at least 1"));
    }
    let k = k.unwrap_or(n - 1);
    let name = format!("oracle_{}", model_name(model));
    let base = |q: &str| vec![("n", n.to_string()), ("k", k.to_string()), ("quantity", q.to_string())];
    let mut out = Vec::new();
    match model {
        Model::TwentyVertex => {
            if gamma {
                return Err(Failure::config("--gamma applies to the dt model only"));
            }
            let (c, ms) = match boundary {
                Some(path) => {
                    let text = fs::read_to_string(path)
                        .map_err(|e| Failure::config(format!("cannot read {}: {e}", path.display())))?;
                    let spec = BoundarySpec::from_json(&text)?;
                    if spec.n != n || spec.k != k {
                        return Err(Failure::config(format!(
                            "boundary file describes P_{{{},{}}}, not P_{{{n},{k}}}",
                            spec.n, spec.k
                        )));
                    }
                    let (c, ms) = timed(|| count_20v_with(&spec, refined));
                    (c?, ms)
                }
                None => {
                    let (c, ms) = timed(|| count_20v(n, k, refined));
                    (c?, ms)
                }
            };
            out.push(value(&name, &base("total"), c.total.to_string(), ms));
            if refined {
                out.push(value(&name, &base("refined"), join(&c.refined), ms));
                if let Some((h, d)) = &c.split {
                    out.push(value(&name, &base("refined-horizontal"), join(h), ms));
                    out.push(value(&name, &base("refined-diagonal"), join(d), ms));
                }
            }
        }
        Model::Domino => {
            if boundary.is_some() {
                return Err(Failure::config("--boundary applies to the 20v model only"));
            }
            if gamma {
                let (c, ms) = timed(|| count_dt_gamma(n, k));
                let c = c?;
                out.push(value(&name, &base("total-gamma"), join(c.total.coeffs()), ms));
                out.push(value(&name, &base("total-at-gamma-1"), c.total.eval(&Int::one()).to_string(), ms));
                if refined {
                    let polys: Vec<String> = c.refined.iter().map(|p| format!("[{}]", join(p.coeffs()))).collect();
                    out.push(value(&name, &base("refined-gamma"), polys.join(";"), ms));
                }
            } else {
                let (c, ms) = timed(|| count_dt(n, k));
                let c = c?;
                out.push(value(&name, &base("total"), c.total.to_string(), ms));
                if refined {
                    out.push(value(&name, &base("refined"), join(&c.refined), ms));
                }
            }
        }
    }
    Ok(out)
}
