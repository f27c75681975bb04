use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("blocklab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blocklab"))
        .args(args)
        .output()
        .unwrap()
}

fn report(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let v: Value = serde_json::from_str(text.trim_end()).unwrap_or_else(|e| panic!("{e}: {text}"));
    let (run, passed, failed) = (
        v["cases_run"].as_u64().unwrap(),
        v["passed"].as_u64().unwrap(),
        v["failed"].as_u64().unwrap(),
    );
    assert_eq!(passed + failed, run);
    assert_eq!(
        v["counterexamples"].as_array().unwrap().is_empty(),
        failed == 0
    );
    v
}

fn without_time(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("wall_time_ms");
    v
}

#[test]
fn verify_algebra_over_gf3() {
    let out = run(&[
        "verify", "--suite", "algebra", "--field", "gf3", "--trunc", "5", "--report", "-",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["failed"], 0);
    assert!(r["cases_run"].as_u64().unwrap() > 0);
}

#[test]
fn hindman_min_parity() {
    let out = run(&[
        "hindman",
        "--coloring",
        "min-parity",
        "--universe",
        "5",
        "--length",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["witness"], serde_json::json!([[0], [2]]));
}

#[test]
fn play_replay_and_tamper() {
    let x = scratch("X.json");
    std::fs::write(
        &x,
        r#"{"field":"gf2","entries":[{"field":"gf2","coeffs":[[0,"1"]]},{"field":"gf2","coeffs":[[1,"1"]]},{"field":"gf2","coeffs":[[2,"1"]]},{"field":"gf2","coeffs":[[3,"1"]]}]}"#,
    )
    .unwrap();
    let ambient = format!("@{}", x.display());
    let args = [
        "game",
        "play",
        "--kind",
        "asymptotic",
        "--ambient",
        &ambient,
        "--rounds",
        "3",
        "--s1",
        "const:0",
        "--s2",
        "canonical",
    ];
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let t = &r["result"]["transcript"];
    assert_eq!(t["kind"], "asymptotic");
    assert_eq!(t["moves"].as_array().unwrap().len(), 6);

    // the whole report and the bare transcript both replay
    let rep = scratch("play.json");
    std::fs::write(&rep, &out.stdout).unwrap();
    assert_eq!(
        run(&["game", "replay", rep.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
    let bare = scratch("transcript.json");
    std::fs::write(&bare, t.to_string()).unwrap();
    let again = run(&["game", "replay", bare.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(report(&again)["result"]["outcome"], r["result"]["outcome"]);

    // II's second vector moved below the first
    let mut bad = t.clone();
    bad["moves"][3]["v"]["coeffs"] = serde_json::json!([[0, "1"]]);
    let tampered = scratch("tampered.json");
    std::fs::write(&tampered, bad.to_string()).unwrap();
    let out = run(&["game", "replay", tampered.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("inning 1"));

    let broken = scratch("broken.json");
    std::fs::write(&broken, "{\"kind\": ").unwrap();
    assert_eq!(
        run(&["game", "replay", broken.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &[
            "verify", "--suite", "all", "--field", "gf2", "--trunc", "5", "--seed", "7",
        ][..],
        &[
            "game",
            "play",
            "--kind",
            "gowers",
            "--ambient",
            "units:0..8",
            "--trunc",
            "8",
            "--s1",
            "random",
            "--s2",
            "random",
            "--seed",
            "3",
        ][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(b.status.code(), Some(0));
        assert_eq!(without_time(report(&a)), without_time(report(&b)));
    }
}

#[test]
fn report_file_round_trips() {
    let path = scratch("osc.json");
    let out = run(&[
        "osc-range",
        "--field",
        "gf3",
        "--x",
        "units:0..4",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["range"], serde_json::json!([1, 2, 3, 4]));
    // the X it echoes is accepted back as input
    let xfile = scratch("osc-x.json");
    std::fs::write(&xfile, v["result"]["X"].to_string()).unwrap();
    let again = run(&[
        "osc-range",
        "--field",
        "gf3",
        "--x",
        &format!("@{}", xfile.display()),
    ]);
    assert_eq!(report(&again)["result"], v["result"]);
}

#[test]
fn probe_spread_qpoint_examples() {
    let out = run(&[
        "asymptotic-probe",
        "--field",
        "gf3",
        "--predicate",
        "osc-even",
        "--x",
        "units:0..6",
        "--depth",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&[
        "spread",
        "--intervals",
        "[[0,0],[1,2],[3,4],[5,6],[7,8],[9,10],[11,12]]",
        "--x",
        "units:0..13",
        "--trunc",
        "13",
        "--rounds",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        report(&out)["result"]["Y"]["entries"]
            .as_array()
            .unwrap()
            .len(),
        2
    );

    let out = run(&[
        "qpoint",
        "--partition",
        r#"{"n":6,"cells":[[0,3],[1,2],[4,5]]}"#,
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        report(&out)["result"]["intervals"],
        serde_json::json!([[0, 3], [4, 4], [5, 5]])
    );
    let out = run(&[
        "qpoint",
        "--partition",
        "[[0,1],[2,3],[4,5]]",
        "--set",
        "0,1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["result"]["violating_cell"], 0);
}

#[test]
fn exit_codes_for_errors() {
    let out = run(&[
        "hindman",
        "--colring",
        "const",
        "--universe",
        "4",
        "--length",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--colring"));
    let out = run(&[
        "osc-range",
        "--field",
        "gf3",
        "--x",
        "units:0..10",
        "--budget",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["osc-range", "--field", "gf4"]);
    assert_eq!(out.status.code(), Some(2));
}
