use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iwahori"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn psi_json_for_sl2() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["psi", "--type", "A1", "--lambda", "-4"])).unwrap();
    let members = v["members"].as_array().unwrap();
    assert_eq!(members.len(), 4);
    assert_eq!(members[0], serde_json::json!([-4]));
    assert_eq!(members[3], serde_json::json!([2]));
}

#[test]
fn psi_methods_agree() {
    let base = ["psi", "--type", "B2", "--lambda", "-2,1", "--method"];
    let members = |m: &str| {
        let mut args = base.to_vec();
        args.push(m);
        let v: serde_json::Value = serde_json::from_str(&stdout(&args)).unwrap();
        v["members"].clone()
    };
    let a = members("filtration");
    assert_eq!(a, members("oracle"));
    assert_eq!(a, members("rops"));
}

#[test]
fn dimension_in_both_bases() {
    assert_eq!(
        stdout(&["dim", "--type", "A2", "--lambda", "-6,3"]).trim(),
        "10"
    );
    assert_eq!(
        stdout(&["dim", "--type", "A2", "--lambda", "-3,0", "--basis", "coroot"]).trim(),
        "10"
    );
    assert_eq!(
        stdout(&["dim", "--type", "A2", "--lambda", "4,-2"]).trim(),
        "7"
    );
}

#[test]
fn reflection_operator() {
    assert_eq!(
        stdout(&["rop", "--type", "A2", "--lambda", "-6,3", "--alpha", "1,0"]).trim(),
        "4,-2"
    );
    assert_eq!(
        stdout(&["rop", "--type", "A2", "--lambda", "-6,3", "--alpha", "1,1"]).trim(),
        "-4,5"
    );
}

#[test]
fn bad_input_exits_one() {
    for args in [
        &["psi", "--type", "A2", "--lambda", "bogus"][..],
        &["psi", "--type", "A2", "--lambda", "1,2,3"],
        &["psi", "--type", "Z9", "--lambda", "1"],
        &[
            "dim", "--type", "A2", "--lambda", "1/2,0", "--basis", "coroot",
        ],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["psi", "--type", "G2", "--lambda", "-1,1"][..],
        &["polytope", "--type", "B2", "--lambda", "-2,1"],
        &["braid-scan", "--type", "B2", "--box", "4"],
        &["component", "--type", "B2"],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn level_one_weight() {
    assert_eq!(
        stdout(&["varpi", "--type", "A1", "--lambda", "-4"]).trim(),
        "L0 + [4]·X - 4·delta"
    );
}

#[test]
fn selftest_exit_codes() {
    let ok = run(&["selftest", "--criterion", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("[PASS]"));

    let bad = run(&["selftest", "--criterion", "3"]);
    assert_eq!(bad.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&bad.stdout).contains("[FAIL]"));
}
