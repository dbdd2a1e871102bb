//! End-to-end checks of the command-line driver: output shapes, exit codes,
//! and determinism of machine-readable records.

use std::process::Command;

fn conjucode(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_conjucode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = conjucode(args);
    assert!(out.status.success(), "args {args:?}: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn factor_command_output() {
    let out = stdout(&["factor", "14"]);
    assert!(out.contains("x^14+1 = (1+x)^2*(1+x+x^3)^2*(1+x^2+x^3)^2"));
    assert!(out.contains("27 monic divisors"));
    let out = stdout(&["factor", "1"]);
    assert!(out.contains("x^1+1 = (1+x)"));
}

#[test]
fn analyze_command_both_sources() {
    let human = stdout(&["analyze", "--n", "7", "--g", "(1+x)^2*(1+x+x^3)"]);
    assert!(human.contains("hull_dim: 3"));
    assert!(human.contains("ggt_rank: 6"));
    assert!(human.contains("trace_inclusion: strict"));
    let machine = stdout(&["analyze", "--n", "3", "--v", "W,w,0", "--machine"]);
    assert!(machine.contains("eaqec=[[3,2,2;1]]"));
    assert!(machine.contains("maximal=true"));
    // identical request, byte-identical output
    assert_eq!(
        machine,
        stdout(&["analyze", "--n", "3", "--v", "W,w,0", "--machine"])
    );
}

#[test]
fn search_command_streams_sorted_records() {
    let out = stdout(&["search", "--n", "3", "--maximal", "--machine"]);
    assert!(out.lines().any(|l| l.contains("eaqec=[[3,2,2;1]]")));
    assert_eq!(out, stdout(&["search", "--n", "3", "--maximal", "--machine"]));
    let full = stdout(&["search", "--n", "1"]);
    assert!(full.trim_end().ends_with("3 records"));
}

#[test]
fn verify_fast_tier_passes_with_recorded_discrepancies() {
    let out = conjucode(&["verify", "--tier", "fast"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS table1.row1 (fast)"));
    assert!(text.contains("KNOWN-DIFF table2.row6.eaqec"));
    assert!(text.contains("0 failed"));
}

#[test]
fn usage_errors_exit_with_2() {
    for args in [
        &["factor", "0"][..],
        &["analyze", "--n", "3"],                      // missing source
        &["analyze", "--n", "3", "--g", "1", "--v", "W"], // both sources
        &["verify", "--tier", "nope"],
        &["analyze", "--n", "7", "--g", "1+x+x^2"],    // not a divisor
        &["analyze", "--n", "3", "--v", "W,q"],        // bad symbol
    ] {
        let out = conjucode(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn search_bound_exceeded_is_a_usage_error() {
    let out = conjucode(&["search", "--n", "65"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("exceeds the sweep cap"));
}
