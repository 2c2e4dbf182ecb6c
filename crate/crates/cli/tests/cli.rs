use serde::de::DeserializeOwned;
use serde::Serialize;

use schurlang_cli::report::{CartanReport, DecomposeReport, DimReport, GammaReport, LFactorReport, MonoidReport, SymmetrizerReport};
use schurlang_cli::run;
use schurlang_cli::verify::VerifyReport;
use schurlang_core::lr::LrCoefficient;
use schurlang_core::vinberg::UnitGroupDescriptor;

fn ok(args: &[&str]) -> String {
    let out = run(std::iter::once("schurlang").chain(args.iter().copied()));
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn code(args: &[&str]) -> (i32, String) {
    let out = run(std::iter::once("schurlang").chain(args.iter().copied()));
    (out.code, out.stderr)
}

/// Parses the JSON output into `T` and checks that it serializes back to the
/// identical line.
fn round_trip<T: Serialize + DeserializeOwned>(args: &[&str]) -> T {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let text = ok(&full);
    let value: T = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}"));
    assert_eq!(serde_json::to_string(&value).unwrap() + "\n", text, "{args:?}");
    value
}

#[test]
fn lr_prints_the_coefficient() {
    assert_eq!(ok(&["lr", "--lam", "2,1", "--mu", "2,1", "--nu", "4,2"]), "1\n");
    assert_eq!(ok(&["lr", "--lam", "2,1", "--mu", "2,1", "--nu", "3,2,1"]), "2\n");
    assert_eq!(ok(&["lr", "--lam", "3,1", "--mu", "0", "--nu", "3,1"]), "1\n");
    let r: LrCoefficient = round_trip(&["lr", "--lam", "1,1", "--mu", "4", "--nu", "4,2"]);
    assert_eq!(r.value, 0);
}

#[test]
fn decompose_json() {
    let r: DecomposeReport = round_trip(&["decompose", "--nu", "4,2", "--slots", "2"]);
    assert_eq!(r.sum.len(), 18);
    let r: DecomposeReport = round_trip(&["decompose", "--nu", "1,1,1", "--residual"]);
    assert_eq!(r.sum.len(), 2);
    let r: DecomposeReport = round_trip(&["decompose", "--nu", "2,1", "--slots", "3"]);
    assert_eq!(r.sum.arity(), 3);
    let text = ok(&["decompose", "--nu", "1,1"]);
    assert!(text.contains("(1) ⊗ (1)"), "{text}");
}

#[test]
fn dim_both_ways() {
    assert_eq!(ok(&["dim", "--lam", "2,1", "--n", "3"]), "8\n");
    assert_eq!(ok(&["schur-dim", "--lam", "2,1", "--n", "3", "--via", "tensor"]), "8\n");
    let r: DimReport = round_trip(&["dim", "--lam", "4,2", "--n", "4"]);
    assert_eq!(r.dim, 126);
    round_trip::<DimReport>(&["dim", "--lam", "1,1,1", "--n", "2", "--via", "tensor"]);
}

#[test]
fn symmetrizer_output() {
    let text = ok(&["symmetrizer", "--lam", "2,1", "--apply", "1,2,3"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("1 + (12) - (13) - (132)"));
    assert_eq!(lines.next(), Some("v1⊗v2⊗v3 + v2⊗v1⊗v3 - v3⊗v1⊗v2 - v3⊗v2⊗v1"));
    let r: SymmetrizerReport = round_trip(&["symmetrizer", "--lam", "2,1", "--apply", "1,2,3"]);
    assert_eq!(r.terms.len(), 4);
    assert_eq!(r.image.unwrap().len(), 4);
    round_trip::<SymmetrizerReport>(&["symmetrizer", "--lam", "2,2"]);
}

#[test]
fn lfactor_and_gamma() {
    let text = ok(&["lfactor", "--nu", "1,1", "--eigen", "1,1,1,1", "--q", "3"]);
    assert_eq!(text.lines().next(), Some("1, -6, 15, -20, 15, -6, 1"));
    let r: LFactorReport = round_trip(&["lfactor", "--nu", "2", "--eigen", "1/2+i,-3", "--q", "4"]);
    assert_eq!(r.degree, 3);
    assert_eq!(ok(&["gamma", "--nu", "1", "--eigen", "1", "--q", "2"]), "(t - t^2) / (-1/2 + t)\n");
    let g: GammaReport = round_trip(&["gamma", "--nu", "2", "--eigen", "1,1", "--q", "5"]);
    assert_eq!(g.parameter.q(), 5);
    round_trip::<GammaReport>(&["gamma", "--nu", "1", "--eigen", "2-i,1/3", "--q", "9"]);
}

#[test]
fn unit_group_and_cartan() {
    let d: UnitGroupDescriptor = round_trip(&["unit-group", "--lam", "1,1", "--n", "6"]);
    assert_eq!((d.kernel_order, d.quotient_order), (2, 3));
    round_trip::<UnitGroupDescriptor>(&["unit-group", "--lam", "1", "--n", "5"]);
    let c: CartanReport = round_trip(&["cartan", "--type", "A", "--rank", "5", "--v", "0,0,1,0,0", "--lam", "1,1,1"]);
    assert_eq!(c.entries.entries()[5], vec![0, 0, -1, 0, 0, 2]);
    assert_eq!(c.weight_check, Some(true));
    let text = ok(&["cartan", "--type", "A", "--rank", "1", "--v", "3"]);
    assert_eq!(text, "[  2 -3]\n[ -3  2]\n");
}

#[test]
fn monoid_check() {
    assert!(ok(&["monoid-check", "--n", "2", "--a", "2", "--m", "4,0,0,1"]).starts_with("true"));
    assert_eq!(ok(&["monoid-check", "--n", "1", "--a", "2", "--m", "1,0,0,1"]), "false\n");
    let r: MonoidReport = round_trip(&["monoid-check", "--n", "3", "--a", "-1", "--m", "-1,0,0,1"]);
    assert!(r.member && r.unit_preimage.is_some());
    let r: MonoidReport = round_trip(&["monoid-check", "--n", "2", "--a", "0", "--m", "1,1,1,1"]);
    assert!(r.member && r.unit_preimage.is_none());
}

#[test]
fn verify_table() {
    let out = run(["schurlang", "verify", "--seed", "3"]);
    let last = out.stdout.lines().last().unwrap().to_string();
    assert!(last.ends_with("failed"), "{last}");
    let out = run(["schurlang", "--format", "json", "verify"]);
    let r: VerifyReport = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(serde_json::to_string(&r).unwrap() + "\n", out.stdout);
    assert_eq!(out.code, if r.failed == 0 { 0 } else { 1 });
    assert!(r.checks.len() >= 30);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["--format", "json", "verify", "--seed", "11"],
        vec!["decompose", "--nu", "3,2,1", "--slots", "3"],
    ] {
        let a = run(std::iter::once("schurlang").chain(args.iter().copied()));
        let b = run(std::iter::once("schurlang").chain(args.iter().copied()));
        assert_eq!(a, b);
    }
}

#[test]
fn exit_codes() {
    let (c, err) = code(&["lr", "--lam", "2,x", "--mu", "1", "--nu", "1"]);
    assert_eq!(c, 2);
    assert!(err.contains("--lam"), "{err}");
    let (c, err) = code(&["lr", "--lam", "1,2", "--mu", "1", "--nu", "1"]);
    assert_eq!(c, 2);
    assert!(err.contains("--lam"), "{err}");
    let (c, err) = code(&["lfactor", "--nu", "1", "--eigen", "0,1", "--q", "3"]);
    assert_eq!(c, 2);
    assert!(err.contains("--eigen"), "{err}");
    assert_eq!(code(&["lfactor", "--nu", "1", "--eigen", "1", "--q", "6"]).0, 2);
    assert_eq!(code(&["unit-group", "--lam", "1,1,1", "--n", "2"]).0, 2);
    assert_eq!(code(&["cartan", "--rank", "2", "--v", "1,-1"]).0, 2);
    assert_eq!(code(&["cartan", "--rank", "2", "--v", "1"]).0, 2);
    assert_eq!(code(&["monoid-check", "--n", "2", "--a", "1", "--m", "1,0,0"]).0, 2);
    assert_eq!(code(&["symmetrizer", "--lam", "2,1", "--apply", "1,2"]).0, 2);
    assert_eq!(code(&["nonsense"]).0, 2);
    let (c, err) = code(&["dim", "--lam", "3,3", "--n", "5", "--via", "tensor"]);
    assert_eq!(c, 1);
    assert!(err.contains("4096"), "{err}");
    assert_eq!(code(&["--help"]).0, 0);
}
