//! The `feuler` binary, end to end.

mod common;

use std::process::{Command, Output};

use common::q;
use feuler::feuler::{fe_numbers_order, fe_poly, stirling_lambda, to_fe_basis};
use feuler::identities::VerificationReport;
use feuler::scalar::fmt_rational;
use feuler::LambdaRat;

fn feuler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_feuler"))
        .args(args)
        .env_remove("FEULER_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_column(text: &str, key: &str) -> Vec<String> {
    text.lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()[key]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect()
}

#[test]
fn numbers_table_contains_the_first_three_values() {
    let o = feuler(&["numbers", "--n-max", "2", "--order", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let inv = LambdaRat::one_minus_lambda().inv().unwrap();
    for v in [
        LambdaRat::one(),
        -inv.clone(),
        (LambdaRat::one() + LambdaRat::lambda()) * inv.pow(2).unwrap(),
    ] {
        assert!(text.contains(&v.to_string()), "{v} missing from\n{text}");
    }
}

#[test]
fn convert_reports_basis_coefficients() {
    let o = feuler(&["convert", "--poly", "x", "--order", "1", "--format", "json"]);
    assert!(o.status.success());
    let inv = LambdaRat::one_minus_lambda().inv().unwrap();
    assert_eq!(
        json_column(&stdout(&o), "C_k"),
        vec![inv.to_string(), "1".to_string()]
    );
}

#[test]
fn lambda_substitution_commutes_with_every_command() {
    let at = q(1, 3);
    let at_text = "1/3";
    let at_point = |v: &LambdaRat| fmt_rational(&v.eval(&at).unwrap());

    let o = feuler(&[
        "numbers", "--n-max", "6", "--order", "2", "--lambda", at_text, "--format", "json",
    ]);
    let expected: Vec<String> = fe_numbers_order(6, 2).iter().map(at_point).collect();
    assert_eq!(json_column(&stdout(&o), "H_n"), expected);

    let o = feuler(&[
        "poly", "--n", "5", "--order", "-3", "--lambda", at_text, "--format", "json",
    ]);
    let expected = fe_poly(5, -3).eval_lambda(&at).unwrap().to_string();
    assert_eq!(json_column(&stdout(&o), "H_n^(r)(x)"), vec![expected]);

    let o = feuler(&[
        "convert", "--poly", "x^3 - L", "--order", "2", "--lambda", at_text, "--format", "json",
    ]);
    let p = feuler::parse::parse_poly_expr("x^3 - L").unwrap();
    let expected: Vec<String> = to_fe_basis(&p, 2)
        .coefficients
        .iter()
        .map(at_point)
        .collect();
    assert_eq!(json_column(&stdout(&o), "C_k"), expected);

    let o = feuler(&[
        "stirling", "--n", "6", "--lambda", at_text, "--format", "json",
    ]);
    let expected: Vec<String> = (0..=6).map(|k| at_point(&stirling_lambda(6, k))).collect();
    assert_eq!(json_column(&stdout(&o), "S_L(n,k)"), expected);
}

#[test]
fn lambda_one_and_bad_flags_are_rejected() {
    for args in [
        &["numbers", "--lambda", "1"][..],
        &["numbers", "--lambda", "3/3"],
        &["numbers", "--lambda", "abc"],
        &["suite", "--jobs", "0"],
        &["suite", "--n-max", "-1"],
        &["verify", "--identity", "thm99"],
        &["numbers", "--bogus"],
        &[],
    ] {
        let o = feuler(args);
        assert!(!o.status.success(), "{args:?} should fail");
        assert!(
            String::from_utf8_lossy(&o.stderr).contains("Usage"),
            "{args:?} should print usage"
        );
    }
}

#[test]
fn parse_errors_exit_nonzero() {
    let o = feuler(&["convert", "--poly", "x/x"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 1"));
}

#[test]
fn suite_report_parses_back() {
    let o = feuler(&[
        "suite", "--n-max", "4", "--r-max", "2", "--s-max", "2", "--format", "json",
    ]);
    assert!(o.status.success());
    let report = VerificationReport::from_json_lines(&stdout(&o)).unwrap();
    assert_eq!(report.totals.mismatch, 0);
    assert_eq!(report.totals.total, report.totals.equal);
    assert_eq!(report.to_json_lines(), stdout(&o));
}

#[test]
fn suite_output_file_and_formats() {
    let dir = std::env::temp_dir().join(format!("feuler-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.jsonl");
    let o = feuler(&[
        "suite",
        "--n-max",
        "3",
        "--r-max",
        "1",
        "--s-max",
        "1",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("total="));
    let report =
        VerificationReport::from_json_lines(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(!report.has_mismatch());
    std::fs::remove_dir_all(&dir).unwrap();

    let o = feuler(&[
        "suite", "--n-max", "2", "--r-max", "1", "--s-max", "1", "--format", "csv",
    ]);
    assert!(stdout(&o).starts_with("identity,params,status,lhs,rhs,elapsed_us\n\"thm1_roundtrip\""));
    let o = feuler(&[
        "suite", "--n-max", "2", "--r-max", "1", "--s-max", "1", "--format", "latex",
    ]);
    assert!(stdout(&o).contains("\\begin{tabular}"));
}

#[test]
fn timings_are_opt_in() {
    let args = [
        "suite", "--n-max", "3", "--r-max", "1", "--s-max", "1", "--format", "json",
    ];
    let plain = VerificationReport::from_json_lines(&stdout(&feuler(&args))).unwrap();
    assert!(plain.cells.iter().all(|c| c.elapsed_us == 0));
    let timed = feuler(&[&args[..], &["--timings"]].concat());
    assert!(timed.status.success());
    VerificationReport::from_json_lines(&stdout(&timed)).unwrap();
}

#[test]
fn seed_environment_overrides_flag() {
    let run = |seed_flag: &str, env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_feuler"));
        cmd.args([
            "verify",
            "--identity",
            "thm1_roundtrip",
            "--case",
            "5",
            "--seed",
            seed_flag,
        ]);
        match env {
            Some(v) => cmd.env("FEULER_SEED", v),
            None => cmd.env_remove("FEULER_SEED"),
        };
        let o = cmd.output().unwrap();
        assert!(o.status.success());
        stdout(&o)
    };
    assert_ne!(run("1", None), run("2", None));
    assert_eq!(run("1", Some("2")), run("2", None));
}

#[test]
fn verify_single_cells() {
    let o = feuler(&[
        "verify",
        "--identity",
        "eq22_ladder",
        "--n",
        "4",
        "--r",
        "-3",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("eq22_ladder n=4 r=-3: equal"));
    let o = feuler(&["verify", "--identity", "thm5", "--n", "5", "--r", "-1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("skipped"));
}

#[test]
fn mutated_suite_fails() {
    let o = feuler(&[
        "suite",
        "--n-max",
        "3",
        "--r-max",
        "2",
        "--s-max",
        "2",
        "--mutate",
        "drop-one-minus-lambda",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("MISMATCH"));
}
