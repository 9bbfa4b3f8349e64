use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn relspeed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relspeed"))
        .args(args)
        .output()
        .unwrap()
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn error_of(out: &Output) -> Value {
    let line = String::from_utf8_lossy(&out.stderr);
    assert_eq!(line.lines().count(), 1, "{line}");
    serde_json::from_str(line.trim()).unwrap()
}

#[test]
fn plan_inertial_values() {
    let v = json_of(&relspeed(&[
        "plan-inertial",
        "--queries",
        "100",
        "--order",
        "2",
    ]));
    let plan = &v["plan"];
    assert_eq!(plan["proper_time"], 10.0);
    assert_eq!(plan["energy_ratio"], 10.0);
    assert_eq!(plan["distance"], 99.4987437107);
    assert_eq!(plan["state"]["k"], 19.9498743711);
    assert_eq!(v["four_momentum"]["components"][0], 10.0);
}

#[test]
fn race_winner() {
    let v = json_of(&relspeed(&["race", "--queries", "1000000", "--order", "3"]));
    assert_eq!(v["report"]["winner"], "relativistic_classical");
    let v = json_of(&relspeed(&["race", "--queries", "1000000", "--order", "2"]));
    assert_eq!(v["report"]["winner"], "tie");
}

#[test]
fn sub_classical_order_is_a_domain_error() {
    let out = relspeed(&["plan-inertial", "--queries", "100", "--order", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = error_of(&out);
    assert_eq!(err["error"], "domain");
    assert!(err["message"]
        .as_str()
        .unwrap()
        .contains("order must be ≥ 1"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["plan-inertial", "--order", "2"][..],
        &[
            "plan-inertial",
            "--queries",
            "100",
            "--order",
            "2",
            "--bogus",
            "1",
        ],
        &["teleport"],
        &[
            "plan-inertial",
            "--queries",
            "100",
            "--order",
            "2",
            "--units",
            "si",
        ],
        &["plan-inertial", "--queries", "ten", "--order", "2"],
    ] {
        let out = relspeed(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert_eq!(error_of(&out)["error"], "usage");
    }
}

#[test]
fn flags_override_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    fs::write(&cfg, "queries = 100\norder = 2\n").unwrap();
    let path = cfg.to_str().unwrap();

    let v = json_of(&relspeed(&["plan-inertial", "--config", path]));
    assert_eq!(v["config"]["order"], 2.0);
    let v = json_of(&relspeed(&[
        "plan-inertial",
        "--config",
        path,
        "--order",
        "3",
    ]));
    assert_eq!(v["config"]["order"], 3.0);
    assert_eq!(v["plan"]["energy_ratio"], 21.5443469003);
}

#[test]
fn unknown_config_key_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    fs::write(&cfg, "queries = 100\nordr = 2\n").unwrap();
    let out = relspeed(&["plan-inertial", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(error_of(&out)["message"].as_str().unwrap().contains("ordr"));
}

#[test]
fn si_energy() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    fs::write(
        &cfg,
        r#"{"queries": 100, "order": 2, "units": "si", "rest-mass-kg": 1.0}"#,
    )
    .unwrap();
    let v = json_of(&relspeed(&[
        "plan-inertial",
        "--config",
        cfg.to_str().unwrap(),
    ]));
    assert_eq!(v["si"]["energy_j"], 8.98755178737e17);
}

#[test]
fn json_output_is_a_config() {
    let dir = tempfile::tempdir().unwrap();
    for command in ["plan-inertial", "plan-accel"] {
        let first = dir.path().join(format!("{command}.json"));
        let out = relspeed(&[
            command,
            "--queries",
            "1000",
            "--order",
            "2.5",
            "--output",
            first.to_str().unwrap(),
        ]);
        assert!(out.status.success() && out.stdout.is_empty());
        let replay = relspeed(&[command, "--config", first.to_str().unwrap()]);
        assert_eq!(replay.stdout, fs::read(&first).unwrap(), "{command}");
    }
}

#[test]
fn csv_trace() {
    let out = relspeed(&[
        "simulate",
        "--queries",
        "100",
        "--order",
        "2",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("tau,t,x,beta"));
    let taus: Vec<f64> = lines
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert!(taus.len() > 1000);
    assert!(taus.windows(2).all(|w| w[1] >= w[0]));
    assert_eq!(*taus.last().unwrap(), 10.0);
}

#[test]
fn path2_simulation_refutes_half_trip_formula() {
    let v = json_of(&relspeed(&[
        "simulate",
        "--path",
        "2",
        "--queries",
        "100",
        "--order",
        "2",
    ]));
    assert_eq!(v["half_trip_refuted"], true);
    assert!(v["report"]["terminal_beta"].as_f64().unwrap().abs() <= 1e-9);
}

#[test]
fn scenario_and_sweep() {
    let v = json_of(&relspeed(&["scenario"]));
    assert_eq!(v["result"]["quoted_order_reproduced"], false);
    assert_eq!(v["result"]["computed_order"], 2.06191714492);

    let out = relspeed(&[
        "sweep",
        "--queries",
        "1,100",
        "--order",
        "1,2",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(text.contains("sub-unit time budget"));
}

#[test]
fn deterministic_output() {
    for args in [
        &[
            "plan-inertial",
            "--queries",
            "100",
            "--order",
            "2",
            "--format",
            "json",
        ][..],
        &["sweep", "--queries", "10,1000", "--order", "1,2,3"],
        &[
            "simulate",
            "--queries",
            "100",
            "--order",
            "2",
            "--format",
            "csv",
        ],
    ] {
        assert_eq!(relspeed(args).stdout, relspeed(args).stdout, "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let out = relspeed(&["--help"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("plan-inertial"));
}
