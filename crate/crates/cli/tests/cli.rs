//! Black-box tests of the `lpm-tutte` binary: output formats, exit codes,
//! determinism, and the JSON round trip.

use std::process::{Command, Output};

use lpm_core::{random_rational, random_region, tutte_eval, tutte_polynomial, BivariatePoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpm-tutte"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn tutte_text_golden_outputs() {
    let out = run(&["tutte", "--lower", "EN", "--upper", "NE"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "x + y");

    let out = run(&["tutte", "--lower", "EN", "--upper", "EN"]);
    assert_eq!(stdout(&out).trim(), "x*y");
}

#[test]
fn tutte_json_contains_leading_term() {
    let out = run(&[
        "tutte", "--lower", "ENENNEEN", "--upper", "NNEENNEE", "--format", "json",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("{\"x\":4,\"y\":0,\"c\":\"1\"}"), "{text}");
    let parsed = BivariatePoly::from_json(text.trim()).unwrap();
    let region = lpm_cli::parse_region("ENENNEEN", "NNEENNEE").unwrap();
    assert_eq!(parsed, tutte_polynomial(&region));
}

#[test]
fn factored_check_prints_pinch_factors() {
    let out = run(&[
        "tutte",
        "--lower",
        "ENENNEEN",
        "--upper",
        "NNEENNEE",
        "--format",
        "factored-check",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("factor 1: x^2 + x*y + y^2 + x + y"));
    assert!(text.contains("factor 2: x"));
    assert!(text.contains("factor 3: y^2 + x + y"));
    assert!(text.contains("factored-check: PASS"));
}

#[test]
fn eval_golden_outputs() {
    let cases = [
        (["ENENNEEN", "NNEENNEE"], ("1", "1"), "15"),
        (["ENENNEEN", "NNEENNEE"], ("2", "2"), "256"),
        (["EN", "NE"], ("1/2", "1/3"), "5/6"),
        (["EN", "NE"], ("3", "7"), "10"),
    ];
    for ([lower, upper], (x, y), expected) in cases {
        let out = run(&[
            "eval", "--lower", lower, "--upper", upper, "--x", x, "--y", y,
        ]);
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), expected);
    }
}

#[test]
fn exit_code_contract() {
    // 0: success.
    assert_eq!(
        run(&["tutte", "--lower", "EN", "--upper", "NE"])
            .status
            .code(),
        Some(0)
    );

    // 2: validation failures, with the originating error name on stderr.
    let out = run(&["tutte", "--lower", "NXE", "--upper", "NNE"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("IllegalCharacter(2)"));

    let out = run(&["tutte", "--lower", "NE", "--upper", "EN"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("LowerAboveUpper(1)"));

    let out = run(&["verify", "--lower", "NE", "--upper", "EN"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("LowerAboveUpper(1)"));

    let out = run(&[
        "eval", "--lower", "EN", "--upper", "NE", "--x", "a/b", "--y", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("MalformedRational(a/b)"));

    let out = run(&[
        "eval", "--lower", "E", "--upper", "N", "--x", "1", "--y", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("EndpointMismatch"));

    // 1: internal check failures map through CliError::CheckFailed.
    assert_eq!(
        lpm_cli::CliError::CheckFailed("VerificationFailed(x)".to_string()).exit_code(),
        1
    );
    assert_eq!(
        lpm_cli::CliError::Validation("EmptyPath".to_string()).exit_code(),
        2
    );
}

#[test]
fn random_is_deterministic_and_verifiable() {
    let a = run(&["random", "--n", "12", "--seed", "7"]);
    let b = run(&["random", "--n", "12", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));

    let spec = stdout(&a);
    let (lower, upper) = spec.trim().split_once('|').unwrap();
    let out = run(&["verify", "--lower", lower, "--upper", upper]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("verify: PASS"));

    let out = run(&["random", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_random_report_is_deterministic() {
    let args = ["verify", "--random", "20", "--max-n", "10", "--seed", "42"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(
        stdout(&a).matches("region").count(),
        21,
        "20 region lines plus summary"
    );
    assert!(stdout(&a).contains("verify: PASS (20 regions)"));
}

#[test]
fn bench_single_size_has_no_slope() {
    let out = run(&["bench", "--mode", "eval", "--sizes", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text.matches('\n').count(),
        4,
        "mode, header, one row, slope line:\n{text}"
    );
    assert!(text.contains("slope: n/a"));
}

#[test]
fn bench_rejects_bad_sizes() {
    let out = run(&["bench", "--mode", "eval", "--sizes", "7"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["bench", "--mode", "eval", "--sizes", "8,4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("InvalidArgument"));
}

#[test]
fn max_n_env_lifts_oracle_guards() {
    // A single-path region of 26 elements: enumeration trips the default
    // guard (skips reported), but the override runs every check.
    let path = "E".repeat(13) + &"N".repeat(13);
    let base = ["verify", "--lower", path.as_str(), "--upper", path.as_str()];

    let guarded = run(&base);
    assert!(guarded.status.success());
    assert!(stdout(&guarded).contains("SKIP"), "{}", stdout(&guarded));

    let lifted = Command::new(env!("CARGO_BIN_EXE_lpm-tutte"))
        .args(base)
        .env("LPM_TUTTE_MAX_N", "30")
        .output()
        .expect("binary runs");
    assert!(lifted.status.success());
    let text = stdout(&lifted);
    assert!(!text.contains("SKIP"), "{text}");
    assert!(text.contains("verify: PASS"));
}

#[test]
fn json_round_trip_matches_eval() {
    // The serialized polynomial, re-parsed and evaluated, must agree with
    // the direct fixed-point sweep.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..50 {
        let region = random_region(rng.random_range(2..=12), &mut rng);
        let x = random_rational(&mut rng);
        let y = random_rational(&mut rng);
        let json = tutte_polynomial(&region).to_json();
        let parsed = BivariatePoly::from_json(&json).unwrap();
        assert_eq!(
            parsed.eval(&x, &y).to_string(),
            tutte_eval(&region, &x, &y).to_string(),
            "round trip mismatch on {}",
            region.spec_key()
        );
    }

    // And once through the actual binary surfaces.
    let spec = ["ENENNEEN", "NNEENNEE"];
    let json_out = run(&[
        "tutte", "--lower", spec[0], "--upper", spec[1], "--format", "json",
    ]);
    let parsed = BivariatePoly::from_json(stdout(&json_out).trim()).unwrap();
    let eval_out = run(&[
        "eval", "--lower", spec[0], "--upper", spec[1], "--x", "5/3", "--y", "7/2",
    ]);
    let x = lpm_cli::parse_rational("5/3").unwrap();
    let y = lpm_cli::parse_rational("7/2").unwrap();
    assert_eq!(parsed.eval(&x, &y).to_string(), stdout(&eval_out).trim());
}
