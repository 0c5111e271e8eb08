use std::io::Write as _;

use icosa::chartab::IrrepName;
use icosa_cli::{parse_rep_expr, run, RepExpr};
use proptest::prelude::*;
use serde_json::Value;

fn icosa(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("icosa").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn icosa_json(args: &[&str]) -> (i32, Value) {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let (code, out, err) = icosa(&a);
    assert!(err.is_empty(), "{err}");
    (code, serde_json::from_str(&out).unwrap())
}

fn assert_document(doc: &Value, command: &str) {
    assert_eq!(doc["command"], command);
    for key in ["inputs", "results", "citations"] {
        assert!(doc.get(key).is_some(), "missing {key} in {doc}");
    }
    assert!(doc["citations"].is_array());
}

#[test]
fn decompose_sym5() {
    let (code, out, _) = icosa(&["decompose", "--rep", "sym^5(X')"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "sym^5(X') = W");
    let (code, doc) = icosa_json(&["decompose", "--rep", "sym^5(X')"]);
    assert_eq!(code, 0);
    assert_document(&doc, "decompose");
    assert_eq!(doc["results"]["decomposition"], serde_json::json!([{ "irrep": "W", "multiplicity": 1 }]));
    assert_eq!(doc["results"]["dimension"], 6);
}

#[test]
fn parse_and_semantic_errors_exit_2() {
    let (code, _, err) = icosa(&["decompose", "--rep", "sym^2(W)"]);
    assert_eq!(code, 2);
    assert!(err.contains("dimension 6"), "{err}");
    let (code, _, err) = icosa(&["decompose", "--rep", "X' * (U + "]);
    assert_eq!(code, 2);
    assert!(err.contains("1:11"), "{err}");
    let (code, _, _) = icosa(&["no-such-command"]);
    assert_eq!(code, 2);
    let (code, _, _) = icosa(&["siegel", "--scan", "5..2"]);
    assert_eq!(code, 2);
    let (code, out, _) = icosa(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("scan-trivial"));
}

#[test]
fn scan_trivial_first_nonzero_at_12() {
    let (code, out, _) = icosa(&["scan-trivial", "--max", "30"]);
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("first nonzero at n = 12"), "{out}");
    let (_, doc) = icosa_json(&["scan-trivial", "--max", "30"]);
    assert_eq!(doc["results"]["first_nonzero"], 12);
    assert_eq!(doc["results"]["scan"].as_array().unwrap().len(), 31);
}

#[test]
fn verify_commands_pass_and_are_deterministic() {
    for what in ["table", "identities"] {
        let (code, out, _) = icosa(&["verify", what]);
        assert_eq!(code, 0, "{out}");
    }
    let args = ["verify", "all", "--seed", "3", "--max-m", "2"];
    let (code, a, _) = icosa(&args);
    assert_eq!(code, 0, "{a}");
    let (_, b, _) = icosa(&args);
    assert_eq!(a, b);
    let (code, doc) = icosa_json(&args);
    assert_eq!(code, 0);
    assert_document(&doc, "verify all");
    let checks = doc["results"]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["passed"] == true));
    assert_eq!(a.lines().filter(|l| l.contains("[PASS]")).count(), checks.len());
}

#[test]
fn irreps_and_chartab() {
    let (code, doc) = icosa_json(&["irreps", "--m", "3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"].as_array().unwrap().len(), 27);
    let (_, out, _) = icosa(&["irreps", "--m", "3"]);
    assert!(out.contains("27 irreducibles in 9 twist classes"));
    let (code, doc) = icosa_json(&["chartab"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["class_sizes"], serde_json::json!([1, 1, 12, 12, 12, 12, 30, 20, 20]));
    assert_eq!(doc["results"]["rows"].as_array().unwrap().len(), 9);
    let (code, out, _) = icosa(&["classes"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 9);
}

fn facts_file(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

#[test]
fn cuspidality_of_conjugate_pair() {
    let f = facts_file(
        r#"{ "forms": [
            { "name": "pi", "type": "icosahedral" },
            { "name": "pi^tau", "type": "icosahedral", "conjugate_of": "pi" }
        ] }"#,
    );
    let path = f.path().to_str().unwrap();
    let (code, out, err) = icosa(&["cuspidality", "--facts", path, "--pi", "pi", "--pi-prime", "pi^tau"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.starts_with("pi ⊠ pi^tau: cuspidal"), "{out}");
    let (_, doc) = icosa_json(&["cuspidality", "--facts", path, "--pi", "pi", "--pi-prime", "pi^tau"]);
    assert_document(&doc, "cuspidality");
    assert_eq!(doc["results"]["verdict"], "cuspidal");
    assert_eq!(doc["results"]["agree"], true);
}

#[test]
fn cuspidality_reports_missing_facts() {
    let f = facts_file(
        r#"{ "forms": [
            { "name": "a", "type": "general" },
            { "name": "b", "type": "general" }
        ] }"#,
    );
    let path = f.path().to_str().unwrap();
    let (code, doc) = icosa_json(&["cuspidality", "--facts", path, "--pi", "a", "--pi-prime", "b"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["verdict"], "undetermined");
    assert!(!doc["results"]["by_cases"]["missing_facts"].as_array().unwrap().is_empty());

    let declared = facts_file(
        r#"{ "forms": [
            { "name": "a", "type": "general" },
            { "name": "b", "type": "general" }
        ],
          "facts": [{ "lhs": "Ad(a)", "rhs": "Ad(b)", "relation": "equiv", "truth": true }] }"#,
    );
    let path = declared.path().to_str().unwrap();
    let (_, doc) = icosa_json(&["cuspidality", "--facts", path, "--pi", "a", "--pi-prime", "b"]);
    assert_eq!(doc["results"]["verdict"], "not-cuspidal");

    let bad = facts_file(r#"{ "forms": [{ "name": "a", "type": "dodecahedral" }] }"#);
    let (code, _, err) = icosa(&["cuspidality", "--facts", bad.path().to_str().unwrap(), "--pi", "a", "--pi-prime", "a"]);
    assert_eq!(code, 2);
    assert!(err.contains("dodecahedral"));
}

#[test]
fn siegel_commands() {
    let (code, doc) = icosa_json(&["siegel", "--m", "12", "--chi-order", "5"]);
    assert_eq!(code, 0);
    assert_document(&doc, "siegel");
    let v = &doc["results"][0]["verdict"];
    assert_eq!(v["kind"], "exceptional-case");
    assert_eq!(v["q"], "chi·omega_pi^6");
    assert!(!doc["citations"].as_array().unwrap().is_empty());

    let (code, doc) = icosa_json(&["siegel", "--scan", "0..11", "--chi-order", "5"]);
    assert_eq!(code, 0);
    let reports = doc["results"].as_array().unwrap();
    assert_eq!(reports.len(), 12);
    assert!(reports.iter().all(|r| r["verdict"]["kind"] == "no-siegel-zero"));

    let (_, out, _) = icosa(&["siegel", "--m", "5", "--chi-order", "5"]);
    assert!(out.starts_with("m = 5: no-siegel-zero"), "{out}");

    let f = facts_file(
        r#"{ "characters": [{ "name": "chi", "order": 3 }],
             "forms": [
                { "name": "pi", "type": "icosahedral" },
                { "name": "pi^tau", "type": "icosahedral", "conjugate_of": "pi" }
             ] }"#,
    );
    let (code, doc) = icosa_json(&["siegel", "--m", "3", "--facts", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"][0]["verdict"]["kind"], "no-siegel-zero");
}

fn arb_expr() -> impl Strategy<Value = RepExpr> {
    let leaf = prop::sample::select(IrrepName::ALL.to_vec()).prop_map(RepExpr::Irrep);
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (0u32..8, inner.clone()).prop_map(|(n, e)| RepExpr::Sym(n, Box::new(e))),
            inner.clone().prop_map(|e| RepExpr::Dual(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| RepExpr::Tensor(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| RepExpr::Sum(Box::new(a), Box::new(b))),
        ]
    })
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(e in arb_expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse_rep_expr(&text).unwrap(), e);
    }
}

#[test]
fn corpus_round_trips() {
    for text in [
        "U",
        "sym^6(X')",
        "W' * X''",
        "U + V * W",
        "(U + V) * W",
        "U + (V + W)",
        "X' * (X' * X'')",
        "dual(sym^3(X'') + U)",
        "sym^0(X')",
        "W′ ⊗ X″ + X₁",
    ] {
        let e = parse_rep_expr(text).unwrap();
        assert_eq!(parse_rep_expr(&e.to_string()).unwrap(), e, "{text}");
    }
}

#[test]
fn engine_outputs_serialize() {
    let t = icosa::Table::standard().unwrap();
    let scenarios = icosa::isobaric::scenario_matrix(&t).unwrap();
    let v = serde_json::to_value(&scenarios).unwrap();
    assert_eq!(v.as_array().unwrap().len(), scenarios.len());
    let ctx = icosa::siegel::icosahedral_context(Some(5)).unwrap();
    let gens = icosa::isobaric::sym_power_generators(&ctx, &t, "pi").unwrap();
    assert_eq!(serde_json::to_value(&gens).unwrap().as_array().unwrap().len(), 9);
}
