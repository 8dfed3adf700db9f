use std::process::{Command, Output};

use basel_core::quadrature::{self, IntegralKind, ProductKind};
use basel_core::series::{self, Proposition};
use basel_core::verify::{self, Selection, Tolerances};
use basel_core::{identities, sequences};
use serde_json::{json, Value};

fn basel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_basel"))
        .args(args)
        .env_remove("BASEL_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json_of(args: &[&str]) -> Value {
    let out = basel(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).expect("valid json")
}

#[test]
fn bernoulli_json_is_exact() {
    let out = basel(&["bernoulli", "--n", "12", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{\"n\":12,\"value\":\"-691/2730\"}\n");
}

#[test]
fn number_ranges_match_library() {
    let v = json_of(&["genocchi", "--n", "0", "--to", "30", "--format", "json"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 31);
    for (n, row) in rows.iter().enumerate() {
        assert_eq!(row["n"], json!(n));
        assert_eq!(row["value"], json!(sequences::genocchi(n).unwrap().to_string()));
    }
}

#[test]
fn zeta_even_two() {
    let v = json_of(&["zeta", "--even", "2", "--format", "json"]);
    assert_eq!(v["coefficient"], "1/90");
    assert_eq!(v["pi_exponent"], 4);
    let z = sequences::zeta_even_exact(2).unwrap();
    assert_eq!(v["value"].as_f64().unwrap(), z.to_f64());
}

#[test]
fn integrate_matches_library_bit_for_bit() {
    for kind in IntegralKind::ALL {
        let v = json_of(&["integrate", "--kind", kind.tag(), "--format", "json"]);
        let q = quadrature::integrate(kind, 1e-12).unwrap();
        assert_eq!(v["value"].as_f64().unwrap(), q.value);
        assert_eq!(v["err_estimate"].as_f64().unwrap(), q.err_estimate);
        assert_eq!(v["evaluations"].as_u64().unwrap(), q.evaluations);
    }
}

#[test]
fn flag_beats_environment_beats_default() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_basel"));
        cmd.args(["dilog", "s", "--x", "0.5", "--format", "json"]);
        cmd.env_remove("BASEL_TOL");
        if let Some(e) = env {
            cmd.env("BASEL_TOL", e);
        }
        if let Some(f) = flag {
            cmd.args(["--tol", f]);
        }
        let out = cmd.output().unwrap();
        assert!(out.status.success());
        serde_json::from_str::<Value>(&stdout(&out)).unwrap()["value"]
            .as_f64()
            .unwrap()
    };
    let s = |tol| quadrature::dilog_s(0.5, quadrature::DilogMode::Series(tol)).unwrap();
    assert_eq!(run(None, None), s(1e-12));
    assert_eq!(run(Some("1e-6"), None), s(1e-6));
    assert_eq!(run(Some("1e-6"), Some("1e-8")), s(1e-8));
    assert_ne!(s(1e-6), s(1e-12));
}

#[test]
fn csv_and_pretty_use_fifteen_digits() {
    let out = basel(&["riemann", "--kind", "log-over-1mt", "--n", "1000", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("kind,n,value,limit"));
    let v = quadrature::riemann_sum(IntegralKind::LogOver1mt, 1000).unwrap();
    let row = lines.next().unwrap();
    let value: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
    assert!(((value - v) / v).abs() < 1e-14);
    assert_eq!(row.split(',').nth(3), Some("-1.64493406684823"));

    let pretty = stdout(&basel(&["zeta", "--even", "1"]));
    assert!(pretty.contains("1/6·π²"));
    assert!(pretty.contains("1.64493406684823"));
}

#[test]
fn product_and_mei_match_library() {
    let v = json_of(&["product", "--kind", "plus", "--n", "5000", "--format", "json"]);
    assert_eq!(
        v["log_value"].as_f64().unwrap(),
        quadrature::product_form(ProductKind::Plus, 5000).unwrap()
    );
    let v = json_of(&["mei", "--x", "1.0", "--level", "10", "--format", "json"]);
    let r = series::mei_bisection(1.0, 10).unwrap();
    assert_eq!(v["bisection_value"].as_f64().unwrap(), r.bisection_value);
    assert_eq!(v["e_n_bound"].as_f64().unwrap(), 2f64.powi(-10));
}

#[test]
fn dilog_subcommands() {
    let v = json_of(&["dilog", "lesko", "--r", "0.5", "--format", "json"]);
    let p = quadrature::lesko_pair(0.5, 1.0, 0.0, 1e-12).unwrap();
    assert_eq!(v["series_value"].as_f64().unwrap(), p.series_value);
    assert_eq!(v["integral_value"].as_f64().unwrap(), p.integral_value);
    let v = json_of(&["dilog", "s-prime", "--x", "0", "--format", "json"]);
    assert_eq!(v["value"].as_f64().unwrap(), 2.0);
    let v = json_of(&["dilog", "feq-inverse", "--x", "10", "--format", "json"]);
    assert_eq!(
        v["residual"].as_f64().unwrap(),
        quadrature::functional_eq_inverse(10.0, 1e-12).unwrap()
    );
}

#[test]
fn series_report_is_the_library_report() {
    let v = json_of(&["series", "report", "--which", "prop_b", "--m-max", "6", "--format", "json"]);
    let r = series::asymptotic_report(Proposition::B, 6).unwrap();
    assert_eq!(v, serde_json::to_value(&r).unwrap());
    assert_eq!(v["terms"][5], "-691/2730");
    assert_eq!(v["classically_convergent"], false);

    let v = json_of(&["series", "zeta2", "--n", "3", "--format", "json"]);
    assert_eq!(v["exact"], "49/36");
}

#[test]
fn poly_output_and_certificates() {
    let v = json_of(&["poly", "--family", "bernoulli", "--n", "2", "--format", "json"]);
    assert_eq!(v["coefficients"], json!(["1/6", "-1", "1"]));
    let v = json_of(&["poly", "--n", "4", "--at", "1/2", "--format", "json"]);
    let g = identities::genocchi_polynomial(4).unwrap();
    assert_eq!(v["polynomial"], g.to_string());
    assert_eq!(v["value"], "0");

    let out = basel(&["poly", "--n", "12", "--certify", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().skip(1).all(|l| l.contains(",true,")));
}

#[test]
fn verify_selection_matches_library() {
    let out = basel(&["verify", "--suite", "zeta_even_exact_1,bernoulli_12", "--format", "json"]);
    assert!(out.status.success());
    let results = verify::run_suite(
        &Selection::Ids(vec!["zeta_even_exact_1".into(), "bernoulli_12".into()]),
        &Tolerances::default(),
    )
    .unwrap();
    assert_eq!(stdout(&out), verify::to_jsonl(&results, false));
    let first: Value = serde_json::from_str(stdout(&out).lines().nth(1).unwrap()).unwrap();
    assert_eq!(first["lhs"], "1/6·π²");
    assert_eq!(first["status"], "pass");
}

#[test]
fn verify_writes_report_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let out = basel(&[
        "verify",
        "--suite",
        "integral_two_integral",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("{\"check_id\":\"integral_two_integral\",\"status\":\"pass\""));
    // only the report remains in the directory
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn usage_errors_exit_with_two() {
    let out = basel(&["verify", "--suite", "nonexistent"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("nonexistent") && err.contains("zeta_even_exact_1"));

    assert_eq!(basel(&["bogus"]).status.code(), Some(2));
    assert_eq!(basel(&["bernoulli", "--n", "1", "--frob"]).status.code(), Some(2));
    assert_eq!(basel(&["dilog", "s", "--x", "0.7"]).status.code(), Some(2));
    assert_eq!(basel(&["integrate", "--tol", "1"]).status.code(), Some(2));
    assert!(basel(&["bogus"]).stdout.is_empty());
}
