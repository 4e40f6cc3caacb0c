#![allow(dead_code)]

use std::path::PathBuf;

use thinpos::decomp::{catalog, DecompositionProfile};

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Catalog profiles with width `{1}` or `{1, …, 1}`, keyed by golden file stem.
pub fn width_one_catalog() -> Vec<(String, DecompositionProfile)> {
    let mut v = vec![
        ("s1xs3".to_string(), catalog::s1xs3()),
        ("cp2".to_string(), catalog::cp2(true)),
        ("cp2bar".to_string(), catalog::cp2(false)),
    ];
    for k in 1..=10 {
        v.push((format!("plumbing_{k:02}"), catalog::linear_plumbing(&vec![-2; k])));
    }
    v
}

/// The `width compute` report for a profile.
pub fn width_report(p: &DecompositionProfile) -> (i32, String) {
    let json = serde_json::to_string(p).unwrap();
    thinpos::cli::run(["thinpos", "width", "compute", json.as_str()], &mut std::io::empty())
}
