//! End-to-end runs of the `askeyver` binary: flag handling, configuration
//! files, output formats and exit codes.

use std::process::Command;

fn askeyver() -> Command {
    Command::new(env!("CARGO_BIN_EXE_askeyver"))
}

#[test]
fn passing_run_exits_zero() {
    let out = askeyver()
        .args(["--families", "MP", "--suites", "operators", "--n-max", "3"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS"));
    assert!(text.contains("0 failed"));
}

#[test]
fn bad_flags_exit_two() {
    let out = askeyver().args(["--families", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = askeyver().args(["--suites", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = askeyver().args(["--n-max", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn structured_output_is_json_and_deterministic() {
    let run = || {
        let out = askeyver()
            .args([
                "--families",
                "L",
                "--suites",
                "christoffel",
                "--n-max",
                "3",
                "--format",
                "structured",
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    let first = run();
    let second = run();
    assert_eq!(first, second);
    assert!(first.trim_start().starts_with('{'));
    assert!(first.contains("\"runs\""));
    assert!(first.contains("\"status\": \"pass\""));
}

#[test]
fn config_file_bindings_and_report_path() {
    let dir = std::env::temp_dir().join(format!("askeyver-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config = dir.join("suite.toml");
    std::fs::write(
        &config,
        r#"
[suite]
families = ["MP"]
suites = ["christoffel"]
n-max = 3

[[family.MP]]
a = "2/3"
w = "m=2,n=1"

[[family.MP]]
a = "5/4"
w = "m=3,n=2"
"#,
    )
    .unwrap();
    let report = dir.join("report.json");
    let out = askeyver()
        .args([
            "--config",
            config.to_str().unwrap(),
            "--format",
            "structured",
            "--report",
            report.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.contains("a=2/3"));
    assert!(text.contains("a=5/4"));
    assert!(text.contains("\"failed\": 0"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn malformed_config_exits_two() {
    let dir = std::env::temp_dir().join(format!("askeyver-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config = dir.join("bad.toml");
    // MP requires the phase slot w
    std::fs::write(&config, "[[family.MP]]\na = \"1\"\n").unwrap();
    let out = askeyver().args(["--config", config.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("missing parameter"), "{err}");
    std::fs::remove_dir_all(&dir).ok();
}
