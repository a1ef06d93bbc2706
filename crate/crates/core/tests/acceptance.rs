//! End-to-end acceptance run: one line per criterion, non-zero exit on failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use aztec20v_core::exactcore::{Int, Rat};
use aztec20v_core::oracles::{count_20v, count_dt};
use aztec20v_core::report::{CheckResult, Status};
use aztec20v_core::verify::{self, values, QUADRANGLE, REFINED_20V, REFINED_DT, SQUARE};

/// Tolerances and budgets, fixed here rather than taken from the library.
const WEIGHT_TOL: f64 = 1e-9;
const RATIO_TOL: f64 = 1e-10;

struct Outcome {
    ok: bool,
    detail: String,
}

fn all_pass(records: &[CheckResult]) -> Outcome {
    let failed: Vec<String> = records
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| format!("{}{:?}: {} vs {} {}", r.check, r.params, r.lhs, r.rhs, r.note.clone().unwrap_or_default()))
        .collect();
    Outcome {
        ok: failed.is_empty() && !records.is_empty(),
        detail: if failed.is_empty() { format!("{} checks", records.len()) } else { failed.join(" | ") },
    }
}

fn seq(v: &[Int]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn c1() -> Outcome {
    let p: Vec<Int> = (1..=5).map(|n| values::z_20v(n).unwrap()).collect();
    let m: Vec<Int> = (1..=5).map(|n| values::z_dt(n).unwrap()).collect();
    let want: Vec<Int> = QUADRANGLE.iter().map(|&v| Int::from(v)).collect();
    Outcome { ok: p == want && m == want, detail: format!("P: {} M: {}", seq(&p), seq(&m)) }
}

fn c2() -> Outcome {
    let got: Vec<Int> = (1..=5).map(|n| count_20v(n, 0, false).unwrap().total).collect();
    let want: Vec<Int> = SQUARE.iter().map(|&v| Int::from(v)).collect();
    Outcome { ok: got == want, detail: seq(&got) }
}

fn c3() -> Outcome {
    let mut ok = true;
    let mut dt = Vec::new();
    let mut tv = Vec::new();
    for n in 1..=5 {
        let o = count_dt(n, n - 1).unwrap().total;
        ok &= o == values::z_dt(n).unwrap();
        dt.push(o);
    }
    for n in 1..=4 {
        let o = count_20v(n, n - 1, false).unwrap().total;
        ok &= o == values::z_20v(n).unwrap();
        tv.push(o);
    }
    Outcome { ok, detail: format!("DT {} / 20V {}", seq(&dt), seq(&tv)) }
}

fn refined_lists(table: &[&[u64]], f: fn(usize) -> aztec20v_core::Result<aztec20v_core::exactcore::UniPoly<Int>>) -> Outcome {
    let mut ok = true;
    let mut last = String::new();
    for (i, list) in table.iter().enumerate() {
        let p = f(i + 1).unwrap();
        let want: Vec<Int> = list.iter().map(|&v| Int::from(v)).collect();
        ok &= p.coeffs() == want.as_slice();
        last = seq(p.coeffs());
    }
    Outcome { ok, detail: format!("n=5: {last}") }
}

fn c4() -> Outcome {
    let mut o = refined_lists(&REFINED_20V, values::refined_20v);
    let p5 = values::refined_20v(5).unwrap();
    o.ok &= p5.coeff(0) == Int::from(3328) && p5.coeff(4) == Int::from(179088);
    o.ok &= all_pass(&(1..=5).map(verify::check_refined_20v).collect::<Vec<_>>()).ok;
    o
}

fn c5() -> Outcome {
    let mut o = refined_lists(&REFINED_DT, values::refined_dt);
    o.ok &= all_pass(&(1..=5).map(verify::check_refined_dt).collect::<Vec<_>>()).ok;
    o
}

fn c6() -> Outcome {
    all_pass(&(1..=8).map(verify::check_refined_relation).collect::<Vec<_>>())
}

fn c7() -> Outcome {
    all_pass(&(1..=8).map(verify::check_h6v).collect::<Vec<_>>())
}

fn c8() -> Outcome {
    let mut recs: Vec<CheckResult> = (2..=8).map(|n| verify::check_pentagon(n, 2, 4)).collect();
    recs.extend((3..=8).map(|n| verify::check_pentagon(n, 3, 4)));
    all_pass(&recs)
}

fn c9() -> Outcome {
    all_pass(&(1..=30).map(verify::check_conjecture).collect::<Vec<_>>())
}

fn c10() -> Outcome {
    let mut recs: Vec<CheckResult> = (1..=12).map(verify::check_binom).collect();
    recs.extend((1..=8).map(verify::check_symcor));
    recs.extend((1..=5).map(verify::check_ct));
    all_pass(&recs)
}

fn c11() -> Outcome {
    let small = [Rat::integer(0), Rat::integer(1), Rat::integer(2)];
    let mut recs: Vec<CheckResult> = (1..=4).map(|n| verify::check_gamma(n, &small)).collect();
    recs.push(verify::check_gamma(5, &[Rat::integer(1), Rat::integer(2), Rat::frac(1, 2)]));
    all_pass(&recs)
}

fn c12() -> Outcome {
    let dev = aztec20v_core::genfun::combinatorial_deviation();
    let ratio = verify::weight_samples(5)
        .into_iter()
        .map(|w| aztec20v_core::genfun::lastcol_ratio_deviation(aztec20v_core::exactcore::Phased::principal(w)))
        .fold(0.0, f64::max);
    let r = verify::check_weights();
    Outcome {
        ok: dev < WEIGHT_TOL && ratio < RATIO_TOL && r.status == Status::Pass,
        detail: format!("max|ω−1| = {dev:.2e}, ratio = {ratio:.2e}, {}", r.lhs),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 12] = [
        ("determinant sequence", c1, Duration::from_secs(1)),
        ("square pentagon sequence", c2, Duration::from_secs(60)),
        ("oracles match determinants", c3, Duration::from_secs(120)),
        ("refined 20V polynomials", c4, Duration::from_secs(5)),
        ("refined DT polynomials", c5, Duration::from_secs(5)),
        ("refined 20V/DT relation", c6, Duration::from_secs(120)),
        ("6V one-point functions", c7, Duration::from_secs(120)),
        ("pentagon identities", c8, Duration::from_secs(120)),
        ("product formula consistency", c9, Duration::from_secs(60)),
        ("alternative formulas", c10, Duration::from_secs(600)),
        ("gamma family", c11, Duration::from_secs(120)),
        ("numeric weights", c12, Duration::from_secs(5)),
    ];
    let mut failures = 0;
    for (i, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let elapsed = start.elapsed();
        let ok = out.ok && elapsed <= *budget;
        if !ok {
            failures += 1;
        }
        println!(
            "criterion {:>2} {:<30} {} ({:.2?} of {:?}) {}",
            i + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            elapsed,
            budget,
            out.detail
        );
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
