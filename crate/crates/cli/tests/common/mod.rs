//! Invocations shared by the golden and acceptance targets.

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub const CASES: &[(&str, &[&str])] = &[
    ("snf_cat_map", &["snf", "fixtures/cat_map.model"]),
    ("snf_matrix", &["snf", "--matrix", "[[2,4,4],[-6,6,12],[10,-4,-16]]"]),
    ("snf_t2xi", &["snf", "fixtures/t2xi.model"]),
    ("charpoly_companion", &["charpoly", "fixtures/cubic_companion.model"]),
    ("homology_handlebody_relative", &["homology", "fixtures/handlebody_g2.model", "--relative"]),
    ("homology_t2xi", &["homology", "--space", "t2xi"]),
    ("homology_rp2", &["homology", "--space", "rp2"]),
    ("les_handlebody", &["les", "fixtures/handlebody_les.model"]),
    ("lefschetz_solenoid", &["lefschetz", "--solenoid", "--m", "5"]),
    ("count_cat_map", &["count", "fixtures/cat_map.model", "--m", "6"]),
    ("count_solenoid", &["count", "--solenoid", "--m", "8"]),
    ("count_companion_json", &["--json", "count", "fixtures/cubic_companion.model", "--m", "7"]),
    ("index_saddle", &["index", "--df", "[[2,0],[0,1/2]]"]),
    ("index_rotation", &["index", "--df", "[[0,-2],[2,0]]"]),
    ("verify_cat_map", &["verify", "fixtures/cat_map.model", "--m", "4"]),
    ("verify_family", &["verify", "fixtures/solenoid_family.model", "--m", "2"]),
    ("dual_negative", &["dual", "--matrix", "[[2,1],[1,1]]", "--sign", "-1"]),
    ("cover_rp2_lift", &["cover", "fixtures/rp2_rotation.model"]),
    ("cover_klein", &["cover", "--surface", "klein_bottle"]),
    ("order_plykin", &["order", "fixtures/plykin_s3.model"]),
    ("order_cycle", &["order", "fixtures/cycle.model"]),
    ("ledger_anosov", &["ledger", "fixtures/anosov_torus.model"]),
    ("check_solenoid_json", &["--json", "check", "fixtures/orientable_solenoid.model"]),
    ("check_all", &["check", "--all", "fixtures"]),
    ("error_wrong_kind", &["les", "fixtures/cat_map.model"]),
    ("error_singular_index", &["index", "--df", "[[1,0],[0,2]]"]),
];

pub fn invoke(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_hypertopo"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs");
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}
