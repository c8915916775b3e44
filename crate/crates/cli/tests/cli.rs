use std::process::{Command, Output};

fn grassmann(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grassmann")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap().trim_end().to_string()
}

#[test]
fn meet_of_plane_with_coordinate_plane() {
    let out = grassmann(&[
        "meet",
        "--field",
        "q",
        "--dim",
        "4",
        "1*e{1,3,4}-1*e{1,2,4}+1*e{1,2,3}+1*e{2,3,4}",
        "1*e{1,3,4}",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1*e{1,3}-1*e{1,4}-1*e{3,4}");
}

#[test]
fn meet_output_parses_back_to_the_same_flat() {
    let first = grassmann(&["meet", "--dim", "4", "1*e{1,2,3}", "span{[1,0,0,1],[0,1,0,0],[0,0,0,1]}"]);
    let text = stdout(&first);
    let again = grassmann(&["join", "--dim", "4", &text]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn verify_pappus_over_gf101() {
    let out = grassmann(&["verify", "pappus", "--field", "gf:101", "--trials", "1000", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout(&out);
    assert!(report.contains("1000/1000"), "{report}");
    assert!(report.contains("seed=42") && report.contains("trials=1000") && report.contains("field=gf:101"));
}

#[test]
fn verify_defaults_are_reported() {
    let out = grassmann(&["verify", "jacobi"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "theorem=jacobi field=q seed=0 trials=200 passed=200/200");
}

#[test]
fn factor_rejects_non_blade() {
    let out = grassmann(&["factor", "--field", "q", "--dim", "4", "1*e{1,2}+1*e{3,4}"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not a blade"), "{err}");
}

#[test]
fn factor_output_rewedges() {
    let blade = "1*e{1,3}-1*e{1,4}-1*e{3,4}";
    let factors = stdout(&grassmann(&["factor", "--dim", "4", blade]));
    let inner = factors.strip_prefix("span{").unwrap().strip_suffix('}').unwrap();
    let vectors: Vec<String> = inner.split("],").map(|s| s.trim_end_matches(']').to_string() + "]").collect();
    let mut args = vec!["wedge", "--dim", "4"];
    args.extend(vectors.iter().map(String::as_str));
    assert_eq!(stdout(&grassmann(&args)), blade);
}

#[test]
fn examples_all_match() {
    let out = grassmann(&["examples"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.ends_with("mismatches=0"), "{text}");
    assert!(!text.contains("MISMATCH"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(grassmann(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(grassmann(&["wedge", "1*e{1"]).status.code(), Some(2));
    assert_eq!(grassmann(&["verify", "fermat"]).status.code(), Some(2));
    assert_eq!(grassmann(&["det", "[[1,2]]", "--field", "gf:4"]).status.code(), Some(2));
    assert_eq!(grassmann(&["hodge", "--gram", "diag:+2,1", "1*e{1}"]).status.code(), Some(2));
}

#[test]
fn algebra_subcommands() {
    assert_eq!(stdout(&grassmann(&["wedge", "[1,0,0]", "[0,1,0]"])), "1*e{1,2}");
    assert_eq!(stdout(&grassmann(&["wedge", "1*e{2}", "1*e{1}"])), "-1*e{1,2}");
    assert_eq!(stdout(&grassmann(&["hodge", "--dim", "4", "1*e{1,2}"])), "1*e{3,4}");
    assert_eq!(stdout(&grassmann(&["hodge", "--gram", "diag:+1,-1", "1*e{1}"])), "-1*e{2}");
    assert_eq!(stdout(&grassmann(&["plucker", "[1,0,0,0]", "[1,1,1,1]"])), "1*e{1,2}+1*e{1,3}+1*e{1,4}");
    assert_eq!(stdout(&grassmann(&["plucker", "[[1,1],[0,1],[0,1],[0,1]]"])), "1*e{1,2}+1*e{1,3}+1*e{1,4}");
    assert_eq!(stdout(&grassmann(&["det", "[[1,2],[3,4]]"])), "-2");
    assert_eq!(stdout(&grassmann(&["det", "--field", "gf:5", "[[1,2],[3,4]]"])), "3");
    assert_eq!(stdout(&grassmann(&["solve", "[[1,2],[3,4]]", "[5,6]"])), "[-4,9/2]");
    assert_eq!(stdout(&grassmann(&["solve", "[[1,2],[2,4]]", "[1,3]"])), "none");
    let projected = grassmann(&["project", "span{[0,0,1]}", "span{[1,0,0],[0,1,0]}", "[1,2,5]"]);
    assert_eq!(stdout(&projected), "[1,2,0]");
    let in_center = grassmann(&["project", "span{[0,0,1]}", "span{[1,0,0],[0,1,0]}", "[0,0,3]"]);
    assert_eq!(in_center.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "hodge-identities", "--trials", "20", "--seed", "9"];
    assert_eq!(grassmann(&args).stdout, grassmann(&args).stdout);
}
