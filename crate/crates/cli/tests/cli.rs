//! End-to-end tests of the binary: command outputs, formats, exit codes.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_beta-branch"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn classify_countable_example() {
    let o = run(&[
        "classify",
        "--base",
        "q_aleph0",
        "--x",
        "word:|1001",
        "--max-states",
        "10000",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["classification"], "CountablyInfinite");
    assert_eq!(v["complete"], true);
}

#[test]
fn expand_golden_hand_orbit() {
    let o = run(&[
        "expand", "--base", "golden", "--x", "fe:1", "--mode", "greedy", "--digits", "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "11000");
    let o = run(&[
        "expand", "--base", "golden", "--x", "fe:1", "--mode", "lazy", "--digits", "5",
    ]);
    assert_eq!(stdout(&o).trim(), "01111");
}

#[test]
fn verify_item_boundary_lines() {
    let o = run(&["verify", "--item", "Prop3.2", "--base", "q_aleph0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let boundary_lines = text
        .lines()
        .filter(|l| l.ends_with("EqualityBoundary"))
        .count();
    assert_eq!(boundary_lines, 2);
    assert!(text.contains("Prop3.2-(2)"));
}

#[test]
fn unknown_results_exit_three() {
    let o = run(&[
        "classify", "--base", "3/2", "--x", "fe:1", "--max-states", "100",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["classification"], "Unknown");
    assert_eq!(v["complete"], false);
}

#[test]
fn usage_and_domain_errors_exit_two() {
    // unknown flag: clap usage error
    let o = run(&["classify", "--nonsense"]);
    assert_eq!(o.status.code(), Some(2));
    // bad base spec
    let o = run(&["classify", "--base", "nosuchbase", "--x", "fe:1"]);
    assert_eq!(o.status.code(), Some(2));
    // point outside I_q
    let o = run(&["classify", "--base", "golden", "--x", "fe:9"]);
    assert_eq!(o.status.code(), Some(2));
    // membership precondition violation
    let o = run(&["membership", "--base", "q_2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn env_var_caps_the_state_budget() {
    let o = bin()
        .args(["classify", "--base", "golden", "--x", "fe:1"])
        .env("BETA_BRANCH_MAX_STATES", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3), "4-state closure cannot finish in 3");
    // explicit flag wins over the environment
    let o = bin()
        .args([
            "classify", "--base", "golden", "--x", "fe:1", "--max-states", "100",
        ])
        .env("BETA_BRANCH_MAX_STATES", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn sweep_csv_shape() {
    let o = run(&[
        "sweep",
        "--base",
        "golden",
        "--base",
        "3/2",
        "--x",
        "fe:1/2",
        "--max-states",
        "500",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "base,approx,point,classification,k,null_infinite,states,complete,error"
    );
    let golden_row = lines.next().unwrap();
    assert!(golden_row.starts_with("golden,1.618034,fe:1/2,Uncountable,"));
    let rational_row = lines.next().unwrap();
    assert!(rational_row.contains(",Unknown,"));
    assert!(rational_row.contains(",false,"));
    // per-row errors are recorded, the run continues
    let o = run(&[
        "sweep", "--base", "golden", "--x", "fe:9", "--x", "fe:1/2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().nth(1).unwrap().contains("outside"));
    assert!(text.lines().nth(2).unwrap().contains("Uncountable"));
}

#[test]
fn tree_dot_and_json() {
    let o = run(&[
        "tree",
        "--base",
        "golden",
        "--x",
        "fe:1/2",
        "--mode",
        "continuum",
        "--depth",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("Uncountable"));

    let o = run(&["tree", "--base", "golden", "--x", "fe:1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["classification"], "CountablyInfinite");
    assert_eq!(v["states"].as_array().unwrap().len(), 4);
    assert_eq!(v["complete"], true);
    // states are value-sorted, so 0 comes first
    assert_eq!(v["states"][0]["rep"], "0");
    for e in v["edges"].as_array().unwrap() {
        let d = e[1].as_u64().unwrap();
        assert!(d == 0 || d == 1);
    }
}

#[test]
fn null_infinite_answers() {
    let o = run(&[
        "null-infinite",
        "--base",
        "q_aleph0",
        "--x",
        "fe:(q+q^2)/(q^4-1)",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Yes");
    let o = run(&["null-infinite", "--base", "golden", "--x", "fe:1/2"]);
    assert_eq!(stdout(&o).trim(), "No");
}

#[test]
fn membership_verdicts() {
    let o = run(&["membership", "--base", "q_aleph0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["membership"], "In");
    assert!(v["witness"].as_str().unwrap().contains('q'));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("beta-branch-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("constants.json");
    let o = run(&[
        "constants",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["constants"].as_array().unwrap().len(), 9);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn base_spec_grammar() {
    // polynomial with explicit interval
    let o = run(&[
        "expand",
        "--base",
        "x^2-x-1@(1,2)",
        "--x",
        "fe:1",
        "--digits",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "11000");
    // coefficient-list polynomial
    let o = run(&[
        "expand",
        "--base",
        "[-1,-1,1]",
        "--x",
        "fe:1",
        "--digits",
        "5",
    ]);
    assert_eq!(stdout(&o).trim(), "11000");
    // alpha constructor name
    let o = run(&["classify", "--base", "alpha_4", "--x", "word:|1001"]);
    assert_eq!(o.status.code(), Some(0));
    // a polynomial with several roots in the default range is ambiguous
    let o = run(&[
        "classify",
        "--base",
        "(x^2-x-1)", // fine: one root
        "--x",
        "fe:1",
    ]);
    assert_eq!(o.status.code(), Some(2), "parentheses are not polynomial syntax");
}
