//! Runs every example binary built alongside the tests.

use std::path::PathBuf;
use std::process::Command;

fn example(name: &str) -> PathBuf {
    // target/<profile>/deps/examples-<hash> -> target/<profile>/examples/<name>
    let exe = std::env::current_exe().unwrap();
    let dir = exe.parent().unwrap().parent().unwrap().join("examples");
    dir.join(format!("{name}{}", std::env::consts::EXE_SUFFIX))
}

fn run(name: &str) -> String {
    let path = example(name);
    if !path.exists() {
        let status = Command::new(env!("CARGO"))
            .args(["build", "--quiet", "--example", name])
            .current_dir(env!("CARGO_MANIFEST_DIR"))
            .status()
            .unwrap();
        assert!(status.success());
    }
    let out = Command::new(&path).output().unwrap();
    assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn space_example_reproduces_the_worked_counts() {
    let out = run("space");
    assert!(out.contains("100834423603200"));
    assert!(out.contains("683961797836800"));
}

#[test]
fn remaining_examples_run() {
    for name in ["labellings", "kempe", "planar_ops", "keylock", "chains", "auth_service"] {
        assert!(!run(name).is_empty(), "{name} printed nothing");
    }
}
