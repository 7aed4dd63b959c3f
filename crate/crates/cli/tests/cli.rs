use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klr-cluster")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn mutate_prints_new_word() {
    let out = run(&["mutate", "--rank", "3", "--sequence", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("x2 -> L(231)\n"));
}

#[test]
fn mutate_sequence_of_three() {
    let out = run(&["mutate", "--rank", "3", "--sequence", "1,2,3"]);
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.contains(" -> L(")).count(), 3);
    assert!(text.lines().next().unwrap().starts_with("x1 -> L(2)"));
}

#[test]
fn oracle_agrees() {
    let out = run(&["oracle", "--words", "12,21"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2121 / 2121 AGREE\n");
}

#[test]
fn oracle_rejects_non_dominant_words() {
    let out = run(&["oracle", "--words", "3213,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not dominant"));
}

#[test]
fn check_compat_round_trip() {
    let seed = run(&["seed", "--rank", "3", "--json"]);
    let dir = std::env::temp_dir().join(format!("klr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s0.json");
    std::fs::write(&path, &seed.stdout).unwrap();
    let out = run(&["check-compat", "--seed", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("increasing"));
    assert!(text.contains("hat_mu_3 = (1,-1,1,0,0,0)"));

    let mut value: serde_json::Value = serde_json::from_slice(&seed.stdout).unwrap();
    value["params"][0] = serde_json::json!([0, 0, 1, 0, 0, 0]);
    value["matrix"]["rows"] = serde_json::json!([[0, -1, 1], [1, 0, 0], [-1, 0, 0], [0, -1, 0], [0, 1, -1], [0, 0, 1]]);
    std::fs::write(&path, value.to_string()).unwrap();
    let out = run(&["check-compat", "--seed", path.to_str().unwrap()]);
    assert_eq!(stdout(&out).lines().next(), Some("not_compatible"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn missing_seed_file_is_a_domain_error() {
    let out = run(&["check-compat", "--seed", "/nonexistent/seed.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn explore_streams_json_lines() {
    let out = run(&["explore", "--rank", "3", "--depth", "1"]);
    let lines: Vec<serde_json::Value> =
        stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0]["verdict"], "increasing");
    assert_eq!(lines[2]["words"][1], "231");
}

#[test]
fn explore_caps_rank() {
    assert_eq!(run(&["explore", "--rank", "7", "--depth", "0"]).status.code(), Some(1));
    assert_eq!(run(&["explore", "--rank", "7", "--depth", "0", "--force"]).status.code(), Some(0));
}

#[test]
fn output_is_reproducible() {
    let a = run(&["explore", "--rank", "3", "--depth", "3"]);
    let b = run(&["explore", "--rank", "3", "--depth", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn laurent_expansion() {
    let text = stdout(&run(&["laurent", "--rank", "3", "--sequence", "1"]));
    assert!(text.contains("x1 = x1^-1*x2 + x1^-1*x3"));
    assert!(text.contains("g = (-1,1,0)  a = (1,0,0)  c = (0,0,0)"));
}

#[test]
fn crosscheck_and_hl_check_pass() {
    let out = run(&["crosscheck", "--rank", "3", "--depth", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("checks passed"));
    let out = run(&["hl-check", "--rank", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().filter(|l| l.ends_with(" ok")).count(), 8);
}

#[test]
fn character_output() {
    assert_eq!(stdout(&run(&["char", "--word", "11"])), "q (11) + q^-1 (11)\n");
    let json = stdout(&run(&["char", "--word", "312", "--json"]));
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["123"], serde_json::json!([[1, 1]]));
}

#[test]
fn seed_exports() {
    let dot = stdout(&run(&["seed", "--rank", "3", "--dot"]));
    assert!(dot.starts_with("digraph seed {"));
    assert!(dot.contains("6 [shape=box]"));
    let text = stdout(&run(&["seed", "--rank", "3"]));
    assert!(text.contains("x5 = L(2312) (frozen)"));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["mutate", "--rank", "3", "--sequence", "4"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
