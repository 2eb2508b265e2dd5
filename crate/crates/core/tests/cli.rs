mod common;

use common::*;
use freethm::generator::TheoremRecord;
use freethm::{generate, parse_type};

#[test]
fn default_session_matches_golden() {
    let (code, out, err) = run_bin(&[], "\n");
    assert_eq!(code, 0, "{err}");
    assert_eq!(
        normalize_ws(&with_echo(&out, "")),
        normalize_ws(&golden("session1.txt"))
    );
}

#[test]
fn typed_session_matches_golden() {
    let typed = "(a -> a -> Bool) -> [a] -> [a]";
    let (code, out, _) = run_bin(&[], &format!("{typed}\n"));
    assert_eq!(code, 0);
    assert_eq!(
        normalize_ws(&with_echo(&out, typed)),
        normalize_ws(&golden("session2.txt"))
    );
}

#[test]
fn type_flag_output_is_the_session_body() {
    let typed = "(a -> a -> Bool) -> [a] -> [a]";
    let (code, out, _) = run_bin(&["--type", typed], "");
    assert_eq!(code, 0);
    let expected = golden("session2.txt");
    let body = expected.split_once("\n\n").unwrap().1;
    assert_eq!(normalize_ws(&out), normalize_ws(body));
}

#[test]
fn eof_on_prompt_uses_default() {
    let (code, out, _) = run_bin(&[], "");
    assert_eq!(code, 0);
    assert!(out.contains("f :: (alpha -> Bool) -> (Bool -> alpha) -> [alpha] -> alpha"));
}

#[test]
fn output_is_byte_deterministic() {
    let args = ["--type", "(a -> Bool) -> [a] -> Maybe a", "--check", "200"];
    let first = run_bin(&args, "");
    for _ in 0..3 {
        assert_eq!(run_bin(&args, ""), first);
    }
}

#[test]
fn json_round_trip() {
    let (code, out, _) = run_bin(&["--json", "--type", "((a -> a) -> a) -> a"], "");
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1);
    let rec: TheoremRecord = serde_json::from_str(&out).unwrap();
    let again = generate(&parse_type(&rec.sigma).unwrap()).record();
    assert_eq!(again, rec);
    assert!(!rec.fully_general);
}

#[test]
fn json_includes_check_report() {
    let (code, out, _) = run_bin(&["--json", "--type", "[a] -> [a]", "--check", "50"], "");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["check"]["trials"], 50);
    assert_eq!(v["check"]["entry"], "list-endo");
}

#[test]
fn parse_error_exits_nonzero_with_position() {
    let (code, out, err) = run_bin(&["--type", "(a -> Bool"], "");
    assert_eq!(code, freethm::cli::EXIT_PARSE_ERROR);
    assert!(out.is_empty());
    assert!(err.contains("parse error"), "{err}");
    assert!(err.lines().any(|l| l.trim_start() == "^"), "{err}");
}

#[test]
fn interactive_parse_error() {
    let (code, _, err) = run_bin(&[], "Either a\n");
    assert_eq!(code, freethm::cli::EXIT_PARSE_ERROR);
    assert!(err.contains("Either"), "{err}");
}

#[test]
fn usage_error_exit_code() {
    let (code, _, _) = run_bin(&["--check", "many"], "");
    assert_eq!(code, freethm::cli::EXIT_USAGE);
}
