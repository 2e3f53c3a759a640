use std::process::Command;

use qsmooth_cli::cert::{Certificate, Status, Witness};
use qsmooth_cli::commands::{self, AnsatzChoice, Options};
use qsmooth_core::scalars::parse_rational;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qsmooth"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn opts_l(l: u32) -> Options {
    Options { l: Some(l), ..Options::default() }
}

fn strip_timing(json: &str) -> String {
    json.lines().filter(|l| !l.trim_start().starts_with("\"timing_ms\"")).collect::<Vec<_>>().join("\n")
}

fn write_temp(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("qsmooth-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn su2q_connection_certificate() {
    let opts = opts_l(4);
    let src = commands::load("catalog:su2q", &opts).unwrap();
    let out = commands::connection(&src, "Zl", &AnsatzChoice::Default, Some(4), &opts).unwrap();
    assert_eq!(out.code, 0);
    assert_eq!(out.cert.status, Status::Pass);
    let Witness::Connection { coefficients, levels, .. } = &out.cert.witness else { panic!("wrong witness") };
    assert_eq!(coefficients.len(), 4);
    assert_eq!(levels.len(), 4);
    assert!(levels.iter().all(|l| l.degrees_ok && l.mu_is_one));
}

#[test]
fn gwa_k2_is_not_smooth_with_gcd_a() {
    let opts = Options { k: Some(2), l: Some(1), ..Options::default() };
    let src = commands::load("catalog:A", &opts).unwrap();
    let out = commands::gwa(&src, "a", "b", &opts).unwrap();
    assert_eq!(out.code, 0);
    assert_eq!(out.cert.verdict.as_deref(), Some("not-smooth"));
    let Witness::Gwa { gcd, .. } = &out.cert.witness else { panic!("wrong witness") };
    assert_eq!(gcd, &["0".to_string(), "1".to_string()]);
}

#[test]
fn tower_rp2minus_has_four_edges() {
    let out = commands::tower("rp2minus", &opts_l(3)).unwrap();
    assert_eq!(out.code, 0);
    assert_eq!(out.cert.checks.len(), 4);
    assert!(out.cert.checks.iter().all(|c| c.ok));
}

#[test]
fn certificates_are_deterministic() {
    let args = ["connection", "catalog:sigma3", "-g", "Zl", "-l", "3", "--power", "3", "--json"];
    let (c1, a, _) = run(&args);
    let (c2, b, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(strip_timing(&a), strip_timing(&b));
}

#[test]
fn every_certificate_kind_rechecks() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["check", "catalog:lens", "-l", "3"],
        vec!["check", "catalog:A", "-k", "2", "-l", "1", "--printed"],
        vec!["nf", "catalog:su2q", "-e", "alphastar.alpha.beta"],
        vec!["grade", "catalog:sigma3minus", "-g", "Z", "-l", "2"],
        vec!["grade", "catalog:torus", "-g", "Z2"],
        vec!["connection", "catalog:torus", "-g", "Z2"],
        vec!["connection", "catalog:s2u", "-g", "Z2", "--search", "2"],
        vec!["gwa", "catalog:A", "-k", "3", "-l", "2"],
        vec!["gwa", "catalog:teardrop", "-l", "2"],
        vec!["tower", "teardrop", "-l", "2"],
    ];
    for args in cases {
        let mut full = args.clone();
        full.push("--json");
        let (_, json, err) = run(&full);
        let cert = Certificate::from_json(&json).unwrap_or_else(|e| panic!("{args:?}: {e}\n{err}"));
        let path = write_temp("cert.json", &json);
        let (code, out, _) = run(&["recheck", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{args:?} recheck failed:\n{out}");
        assert!(out.contains(&format!("task: recheck:{}", cert.task)));
    }
}

#[test]
fn tampered_coefficient_fails_recheck() {
    let (_, json, _) = run(&["connection", "catalog:su2q", "-g", "Zl", "-l", "3", "--json"]);
    let mut cert = Certificate::from_json(&json).unwrap();
    if let Witness::Connection { coefficients, .. } = &mut cert.witness {
        coefficients[0].value = "2".into();
    }
    let path = write_temp("tampered.json", &cert.to_json());
    let (code, out, _) = run(&["recheck", path.to_str().unwrap()]);
    assert_eq!(code, 4, "{out}");
}

#[test]
fn tampered_gcd_fails_recheck() {
    let (_, json, _) = run(&["gwa", "catalog:A", "-k", "2", "-l", "1", "--json"]);
    let mut cert = Certificate::from_json(&json).unwrap();
    if let Witness::Gwa { gcd, .. } = &mut cert.witness {
        *gcd = vec!["1".into()];
    }
    let path = write_temp("tampered-gwa.json", &cert.to_json());
    let (code, _, _) = run(&["recheck", path.to_str().unwrap()]);
    assert_eq!(code, 4);
}

#[test]
fn exit_code_contract() {
    let bad_syntax = write_temp("bad.qa", "algebra s over q real\ngen a selfadjoint\nrule a.a -> b ;\n");
    let (code, _, err) = run(&["check", bad_syntax.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3, column 13"), "{err}");

    // a.b -> a.b.a grows, so the system is not terminating
    let bad_order =
        write_temp("order.qa", "algebra s over q real\ngen a selfadjoint\ngen b selfadjoint\nrule b.a -> a.b.a ;\n");
    let (code, out, _) = run(&["nf", bad_order.to_str().unwrap(), "-e", "b.a"]);
    assert_eq!(code, 3, "{out}");

    let (code, _, _) = run(&["check", "catalog:A", "-k", "2", "-l", "1", "--printed"]);
    assert_eq!(code, 4);

    let (code, _, _) = run(&["connection", "catalog:su2q", "-g", "Zl", "-l", "3", "--search", "1"]);
    assert_eq!(code, 5);

    let (code, _, _) = run(&["check", "catalog:su2q"]);
    assert_eq!(code, 0);

    let (code, _, _) = run(&["grade", "catalog:su2q", "-g", "nope"]);
    assert_eq!(code, 3);
}

#[test]
fn fuel_from_environment() {
    let (code, _, err) = bin()
        .args(["nf", "catalog:su2q", "-e", "alphastar^3.alpha^3"])
        .env("QSMOOTH_FUEL", "2")
        .output()
        .map(|o| (o.status.code().unwrap(), String::new(), String::from_utf8(o.stderr).unwrap()))
        .unwrap();
    assert_eq!(code, 1);
    assert!(err.contains("fuel"), "{err}");
    let (code, _, _) = run(&["nf", "catalog:su2q", "-e", "alphastar^3.alpha^3", "--fuel", "100000"]);
    assert_eq!(code, 0);
}

#[test]
fn param_value_cross_check() {
    let opts = Options { l: Some(3), param_value: parse_rational("1/2"), ..Options::default() };
    let src = commands::load("catalog:su2q", &opts).unwrap();
    let out = commands::connection(&src, "Zl", &AnsatzChoice::Default, Some(3), &opts).unwrap();
    let n = out.cert.numeric.as_ref().unwrap();
    assert_eq!(n.value, "1/2");
    assert!(n.checks.iter().all(|c| c.ok));
    assert_eq!(out.code, 0);
}

#[test]
fn file_round_trip_through_binary() {
    let (code, text, _) = run(&["catalog", "--emit", "su2q", "-l", "3"]);
    assert_eq!(code, 0);
    let path = write_temp("su2q.qa", &text);
    let (code, out, _) =
        run(&["connection", path.to_str().unwrap(), "-g", "Zl", "--ansatz", "standard", "--power", "3"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = run(&["check", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn catalog_listing_json() {
    let (code, out, _) = run(&["catalog", "--json"]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 9);
}
