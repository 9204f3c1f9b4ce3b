//! Golden outputs for the binary. Each invocation runs from the crate
//! directory and must match `tests/golden/<name>.txt` byte for byte.
//! `UPDATE_GOLDEN=1` rewrites the files.

mod common;

use std::process::Command;

use common::{golden_dir, invoke, CASES};

#[test]
fn outputs_match_goldens() {
    let dir = golden_dir();
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut stale = Vec::new();
    for (name, args) in CASES {
        let got = invoke(args);
        let path = dir.join(format!("{name}.txt"));
        if update {
            std::fs::write(&path, &got).unwrap();
        } else if std::fs::read_to_string(&path).ok().as_deref() != Some(got.as_str()) {
            stale.push(*name);
        }
    }
    assert!(stale.is_empty(), "outputs differ from goldens: {stale:?}");
}

#[test]
fn repeated_runs_are_identical() {
    for (name, args) in CASES {
        assert_eq!(invoke(args), invoke(args), "{name}");
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_hypertopo"))
            .args(args)
            .current_dir(env!("CARGO_MANIFEST_DIR"))
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(code(&["snf", "--matrix", "[[1]]"]), Some(0));
    assert_eq!(code(&["index", "--df", "[[1,0],[0,2]]"]), Some(1));
    assert_eq!(code(&["les", "fixtures/cat_map.model"]), Some(2));
    assert_eq!(code(&["snf", "no/such/file.model"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
}
