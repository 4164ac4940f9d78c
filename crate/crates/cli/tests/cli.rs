use std::process::{Command, Output};

fn mtbs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mtbs")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn reason(o: &Output) -> serde_json::Value {
    let err = String::from_utf8(o.stderr.clone()).unwrap();
    let line = err.lines().last().expect("a reason line");
    serde_json::from_str(line).expect("reason is JSON")
}

#[test]
fn eval_prints_bare_value() {
    let o = mtbs(&["eval", "--pattern", "1***", "--x", "0000"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
    let o = mtbs(&["eval", "--pattern", "1", "--n", "4", "--x", "0010"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn eval_on_explicit_group() {
    // reflection group of 3 points; "10*" matches 011 only via a nontrivial element
    let o = mtbs(&["eval", "--pattern", "10*", "--x", "011", "--group", "1,2,0;0,2,1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["value"], 1);
}

#[test]
fn measure_global_csv_header_is_stable() {
    let o = mtbs(&["measure", "--pattern", "11****", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,s,bs0,bs1,bs,witness_input,witness_blocks"));
    assert_eq!(lines.next(), Some("6,4,4,2,4,001001,0;1;3;4"));
}

#[test]
fn measure_at_one_input_agrees_across_modes() {
    let base = ["measure", "--pattern", "11****", "--x", "000000", "--format", "json"];
    let a = mtbs(&base);
    let b = mtbs(&[&base[..], &["--mode", "structured"]].concat());
    let (a, b): (serde_json::Value, serde_json::Value) =
        (serde_json::from_str(stdout(&a).trim()).unwrap(), serde_json::from_str(stdout(&b).trim()).unwrap());
    assert_eq!(a["bs"], 3);
    assert_eq!(a["witness_blocks"], b["witness_blocks"]);
    let o = mtbs(&["measure", "--pattern", "1***", "--x", "1000", "--mode", "structured"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn construct_rejects_small_k() {
    let o = mtbs(&["construct", "--k", "4", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let r = reason(&o);
    assert_eq!(r["error"], "invalid_argument");
    assert!(r["reason"].as_str().unwrap().contains("k below minimum 68"));
}

#[test]
fn construction_failure_exit_code() {
    let o = mtbs(&["construct", "--k", "128", "--seed", "1", "--max-attempts", "0"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(reason(&o)["error"], "construction_failure");
    // an impossible domain bound rejects every attempt
    let o = mtbs(&["construct", "--k", "68", "--seed", "1", "--max-attempts", "3", "--domain-constant", "0.1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(reason(&o)["reason"].as_str().unwrap().contains("domain_too_large"));
}

#[test]
fn resource_limit_exit_code() {
    let o = mtbs(&["measure", "--pattern", "1", "--n", "24"]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(reason(&o)["error"], "resource_limit");
}

#[test]
fn randomized_commands_need_a_seed() {
    for args in [
        &["construct", "--k", "68"][..],
        &["lower-witness", "--pattern", "1", "--n", "50"],
        &["janson", "--k", "128", "--a", "0,1,2,3"],
        &["scaling", "--n-list", "1024"],
        &["build-f", "--n", "4096"],
    ] {
        let o = mtbs(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(reason(&o)["reason"].as_str().unwrap().contains("--seed"));
    }
    let o = mtbs(&["lower-witness", "--pattern", "1", "--n", "50", "--entropy", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["seed"].is_u64());
}

#[test]
fn bad_arguments_exit_two() {
    for args in [
        &["bogus"][..],
        &["eval", "--pattern", "1x", "--x", "00"],
        &["eval", "--pattern", "1**", "--x", "00"],
        &["janson", "--k", "128", "--a", "0,1,1,3", "--seed", "1"],
        &["janson", "--k", "128", "--a", "0,1,2,3", "--seed", "1", "--trials", "0"],
        &["build-f", "--n", "1000", "--seed", "1"],
    ] {
        let o = mtbs(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert_eq!(reason(&o)["exit_code"], 2);
    }
}

#[test]
fn lower_witness_record_carries_a_witness() {
    let o = mtbs(&["lower-witness", "--n", "2000", "--random-domain", "8", "--seed", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["dom_size"], 8);
    assert_eq!(v["branch"], "nicepack");
    let blocks = v["witness_blocks"].as_str().unwrap();
    assert_eq!(blocks.split(';').count() as u64, v["witness_count"].as_u64().unwrap());
    assert_eq!(v["witness_input"].as_str().unwrap().len(), 2000);
}

#[test]
fn identical_flags_give_identical_files() {
    let dir = std::env::temp_dir().join(format!("mtbs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let run = |name: &str| {
        let path = dir.join(name);
        let o = mtbs(&["janson", "--k", "128", "--a", "0,3,9,20", "--trials", "3000", "--seed", "9", "--jobs", "2", "--out", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        std::fs::read(path).unwrap()
    };
    assert_eq!(run("a.csv"), run("b.csv"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_quick_passes() {
    let o = mtbs(&["verify", "--level", "quick"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("check,cases,failures,passed,first_failure\n"));
}
