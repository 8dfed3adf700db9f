//! Acceptance criteria 1-10, one PASS/FAIL line each.

use std::f64::consts::PI;
use std::process::Command;
use std::time::{Duration, Instant};

use basel_core::identities::{
    check_addition_recurrence, check_calculus, check_genocchi_at_one, check_genocchi_orderings,
    check_halving, check_reflection, check_special_values, power_sum_check, HalvingVariant,
};
use basel_core::quadrature::{
    functional_eq_dilog, functional_eq_inverse, integrate, lesko_pair, product_form,
    riemann_sum, two_integral_residual, IntegralKind, ProductKind,
};
use basel_core::sequences::zeta_even_exact;
use basel_core::series::{
    asymptotic_report, eta2_partial, mei_bisection, regularized_target, zeta2_partial,
    Proposition,
};
use basel_core::verify::{run_suite, Selection, Status, Tolerances};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within_time(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(
        elapsed < limit,
        format!("{what} took {elapsed:?}, limit {limit:?}"),
    )
}

/// Akiyama-Tanigawa: B_n with B_1 = +1/2; even indices agree with any convention.
fn oracle_bernoulli(n: usize) -> BigRational {
    let mut a: Vec<BigRational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        a.push(BigRational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let jj = BigRational::from_integer(BigInt::from(j));
            a[j - 1] = jj * (&a[j - 1] - &a[j]);
        }
    }
    a[0].clone()
}

fn oracle_zeta_coefficient(n: usize) -> BigRational {
    // zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!)
    let b = oracle_bernoulli(2 * n);
    let fact: BigInt = (1..=2 * n).map(BigInt::from).product();
    let two_pow = BigInt::one() << (2 * n - 1);
    let c = b * BigRational::from_integer(two_pow) / BigRational::from_integer(fact);
    if n % 2 == 1 {
        c
    } else {
        -c
    }
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    for n in 1..=10 {
        let z = zeta_even_exact(n).map_err(|e| e.to_string())?;
        let expected = oracle_zeta_coefficient(n);
        ensure(
            z.coefficient().as_big_rational() == &expected && z.exponent() as usize == 2 * n,
            format!("n={n}: {z} vs oracle {expected}"),
        )?;
    }
    let first = zeta_even_exact(1).map_err(|e| e.to_string())?.to_string();
    ensure(first == "1/6·π²", format!("n=1 reads {first}"))?;
    within_time(start.elapsed(), Duration::from_secs(1), "zeta values")?;
    Ok("zeta(2n), n=1..10, equal to oracle; zeta(2) = 1/6·π²".into())
}

fn criterion_2() -> Verdict {
    let expected = [
        (IntegralKind::LogOver1mt, -PI * PI / 6.0),
        (IntegralKind::LogOver1pt, -PI * PI / 12.0),
        (IntegralKind::Log1pOverT, PI * PI / 12.0),
        (IntegralKind::Log1mOverT, -PI * PI / 6.0),
    ];
    let mut worst = 0.0f64;
    for (kind, exact) in expected {
        let start = Instant::now();
        let q = integrate(kind, 1e-12).map_err(|e| e.to_string())?;
        within_time(start.elapsed(), Duration::from_millis(100), kind.tag())?;
        let err = (q.value - exact).abs();
        ensure(err < 1e-10, format!("{kind}: error {err:e}"))?;
        worst = worst.max(err);
    }
    Ok(format!("four closed forms, max error {worst:.2e}"))
}

fn criterion_3() -> Verdict {
    let r = two_integral_residual(1e-12).map_err(|e| e.to_string())?;
    ensure(r < 1e-11, format!("residual {r:e}"))?;
    Ok(format!("two-integral residual {r:.2e}"))
}

fn criterion_4() -> Verdict {
    let zeta2 = PI * PI / 6.0;
    let eta2 = PI * PI / 12.0;
    for n in [10u64, 100, 1_000, 10_000] {
        let gap = zeta2 - zeta2_partial(n).map_err(|e| e.to_string())?.to_f64();
        ensure(
            gap > 0.0 && gap < 1.0 / n as f64,
            format!("zeta2 N={n}: gap {gap:e}"),
        )?;
    }
    for n in [10u64, 100, 1_000] {
        let gap = (eta2 - eta2_partial(n).map_err(|e| e.to_string())?.to_f64()).abs();
        let next = (n + 1) as f64;
        ensure(gap < 1.0 / (next * next), format!("eta2 N={n}: gap {gap:e}"))?;
    }
    Ok("zeta(2) and eta(2) tails within their bounds".into())
}

fn criterion_5() -> Verdict {
    let mut worst = 0.0f64;
    for x in [0.3, 1.0, PI / 2.0, 2.5] {
        for level in 0..=12 {
            let r = mei_bisection(x, level).map_err(|e| e.to_string())?;
            let rel = ((r.bisection_value - r.exact_value) / r.exact_value).abs();
            ensure(rel < 1e-9, format!("x={x}, n={level}: relative error {rel:e}"))?;
            worst = worst.max(rel);
        }
    }
    let steps = 40;
    for i in 0..=steps {
        let x = 0.05 + (PI / 2.0 - 0.05) * i as f64 / steps as f64;
        for level in 0..=12 {
            let r = mei_bisection(x, level).map_err(|e| e.to_string())?;
            let bound = 0.5f64.powi(level as i32) + 1e-12;
            ensure(
                r.remainder > 0.0 && r.remainder < bound,
                format!("x={x}, n={level}: remainder {:e}", r.remainder),
            )?;
        }
    }
    Ok(format!("bisection max relative error {worst:.2e}; remainders in (0, 2^-n)"))
}

fn criterion_6() -> Verdict {
    let start = Instant::now();
    let mut count = 0usize;
    let mut check = |ok: bool, what: String| -> Result<(), String> {
        count += 1;
        ensure(ok, what)
    };
    let err = |e: basel_core::Error| e.to_string();
    for n in 0..=40 {
        check(check_reflection(n).map_err(err)?.passed, format!("reflection n={n}"))?;
        check(
            check_genocchi_orderings(n).map_err(err)?.passed,
            format!("orderings n={n}"),
        )?;
        for v in HalvingVariant::ALL {
            check(
                check_halving(n, v).map_err(err)?.passed,
                format!("halving {} n={n}", v.name()),
            )?;
        }
        if n >= 1 {
            check(check_calculus(n).map_err(err)?.passed(), format!("calculus n={n}"))?;
            check(
                check_special_values(n).map_err(err)?.passed(),
                format!("special values n={n}"),
            )?;
        }
        if n >= 2 {
            check(
                check_addition_recurrence(n).map_err(err)?.passed,
                format!("addition k={n}"),
            )?;
            check(
                check_genocchi_at_one(n).map_err(err)?.passed,
                format!("G_n(1) n={n}"),
            )?;
        }
    }
    for k in 2..=8 {
        for n in 1..=100 {
            check(
                power_sum_check(k, n).map_err(err)?.passed,
                format!("power sum k={k} n={n}"),
            )?;
        }
    }
    within_time(start.elapsed(), Duration::from_secs(10), "polynomial certificates")?;
    Ok(format!("{count} exact certificates"))
}

fn criterion_7() -> Verdict {
    let err = |e: basel_core::Error| e.to_string();
    let tb = regularized_target(Proposition::B).map_err(err)?;
    let tg = regularized_target(Proposition::G).map_err(err)?;
    ensure((tb - (PI * PI / 6.0 - 1.5)).abs() < 1e-9, format!("PROP_B target {tb}"))?;
    ensure((tg - PI * PI / 12.0).abs() < 1e-9, format!("PROP_G target {tg}"))?;

    for which in [Proposition::B, Proposition::G] {
        let r = asymptotic_report(which, 40).map_err(err)?;
        let bound = r.smallest_term.abs().to_f64();
        ensure(
            r.best_truncation_error <= bound,
            format!("{which}: best truncation {} > {bound}", r.best_truncation_error),
        )?;
        let last = *r.partial_sum_values.last().unwrap();
        ensure(
            last.abs() > 1e6 && !r.classically_convergent,
            format!("{which}: partial sum at m=40 is {last:e}"),
        )?;
    }
    let b = asymptotic_report(Proposition::B, 40).map_err(err)?;
    let opt = (b.optimal_estimate - b.regularized_target).abs();
    ensure(
        opt <= b.smallest_term.abs().to_f64(),
        format!("PROP_B optimal estimate off by {opt}"),
    )?;
    ensure(
        (b.bracketing_average - 0.144934).abs() < 5e-3,
        format!("PROP_B bracketing average {}", b.bracketing_average),
    )?;

    let ids = [
        "erratum_e1_genocchi_sign",
        "erratum_e2_remark_constants",
        "erratum_e3_divergent_propositions",
    ];
    let rows = run_suite(
        &Selection::Ids(ids.iter().map(|s| s.to_string()).collect()),
        &Tolerances::default(),
    )
    .map_err(err)?;
    ensure(
        rows.len() == 3 && rows.iter().all(|r| r.status == Status::ErratumDocumented),
        "errata rows missing",
    )?;
    Ok(format!(
        "targets {tb:.9}, {tg:.9}; bracketing average {:.6}; both series diverge; errata E1-E3 reported",
        b.bracketing_average
    ))
}

fn criterion_8() -> Verdict {
    let err = |e: basel_core::Error| e.to_string();
    let kind = IntegralKind::LogOver1mt;
    let target = kind.closed_form();
    let coarse = (riemann_sum(kind, 1_000).map_err(err)? - target).abs();
    let fine_value = riemann_sum(kind, 100_000).map_err(err)?;
    let fine = (fine_value - target).abs();
    ensure(fine < coarse, format!("riemann: {coarse:e} -> {fine:e}"))?;
    ensure(fine < 1e-2, format!("riemann at 1e5: error {fine:e}"))?;
    for pk in [ProductKind::Minus, ProductKind::Plus] {
        let coarse = (product_form(pk, 1_000).map_err(err)? - pk.limit()).abs();
        let fine = (product_form(pk, 100_000).map_err(err)? - pk.limit()).abs();
        ensure(fine < coarse, format!("{pk}: {coarse:e} -> {fine:e}"))?;
        ensure(fine < 1e-2, format!("{pk} at 1e5: error {fine:e}"))?;
    }
    Ok(format!("errors shrink from n=1e3 to n=1e5; riemann error {fine:.2e}"))
}

fn criterion_9() -> Verdict {
    let err = |e: basel_core::Error| e.to_string();
    let mut worst = 0.0f64;
    for i in 1..=9 {
        let x = i as f64 / 10.0;
        let r = functional_eq_dilog(x, 1e-12).map_err(err)?;
        ensure(r < 1e-9, format!("dilog equation x={x}: {r:e}"))?;
        worst = worst.max(r);
    }
    for x in [0.1, 0.5, 2.0, 10.0] {
        let r = functional_eq_inverse(x, 1e-12).map_err(err)?;
        ensure(r < 1e-9, format!("inverse equation x={x}: {r:e}"))?;
        worst = worst.max(r);
    }
    for (r, a, b) in [(0.5, 1.0, 0.0), (-0.9, 1.0, 0.0), (0.9, 2.0, 3.0)] {
        let p = lesko_pair(r, a, b, 1e-12).map_err(err)?;
        let d = (p.series_value - p.integral_value).abs();
        ensure(d < 1e-8, format!("lesko ({r},{a},{b}): {d:e}"))?;
    }
    let half = lesko_pair(0.5, 1.0, 0.0, 1e-12).map_err(err)?;
    ensure(
        (half.series_value - 2f64.ln()).abs() < 1e-8,
        format!("lesko (1/2,1,0) = {}", half.series_value),
    )?;
    Ok(format!("functional equation residuals at most {worst:.2e}; Lesko pairs agree"))
}

fn run_verify() -> Result<(Vec<u8>, i32), String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("report.jsonl");
    let status = Command::new(env!("CARGO_BIN_EXE_basel"))
        .args(["verify", "--suite", "all", "--format", "json", "--out"])
        .arg(&path)
        .env_remove("BASEL_TOL")
        .status()
        .map_err(|e| e.to_string())?;
    let bytes = std::fs::read(&path).map_err(|e| e.to_string())?;
    Ok((bytes, status.code().unwrap_or(-1)))
}

fn criterion_10() -> Verdict {
    let start = Instant::now();
    let (first, code1) = run_verify()?;
    let first_elapsed = start.elapsed();
    let (second, code2) = run_verify()?;
    ensure(code1 == 0 && code2 == 0, format!("exit codes {code1}, {code2}"))?;
    ensure(first == second, "reports differ between runs")?;
    within_time(first_elapsed, Duration::from_secs(60), "full suite")?;
    let lines = first.iter().filter(|&&b| b == b'\n').count();
    Ok(format!(
        "{lines} report rows byte-identical across two runs; one run took {:.1} s",
        first_elapsed.as_secs_f64()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("exact zeta values", criterion_1),
        ("integral closed forms", criterion_2),
        ("two-integral identity", criterion_3),
        ("tail bounds", criterion_4),
        ("bisection identity and remainder", criterion_5),
        ("polynomial certificates", criterion_6),
        ("divergent series", criterion_7),
        ("riemann sums and products", criterion_8),
        ("functional equations", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS  {:>2}  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {:>2}  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
