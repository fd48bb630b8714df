//! Command lines with checked-in expected outputs.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const CASES: &[(&str, &[&str], i32)] = &[
    ("classify_loxodromic", &["classify", "loxodromic.json"], 0),
    ("classify_other", &["classify", "rotation.json"], 0),
    ("coords2rep_theta", &["coords2rep", "genus2-theta", "point_theta.json"], 0),
    ("rep2coords_theta", &["rep2coords", "genus2-theta", "structure_theta.json", "--digits", "12"], 0),
    ("stratum_theta", &["stratum", "genus2-theta", "structure_theta.json", "--multicurve", "0,2"], 0),
    ("stratum_empty", &["stratum", "genus2-theta", "structure_theta.json"], 0),
    ("pinch_future", &["pinch", "genus2-theta", "point_theta.json", "pinch_future.json"], 0),
    ("geodesic_spacelike", &["geodesic", "--from", "-1,0.5", "--to", "2,0.25", "--samples", "16"], 0),
    ("geodesic_timelike", &["geodesic", "--timelike", "0,0", "--delta", "0.5,1", "--samples", "16", "--json"], 0),
    ("geodesic_lightlike", &["geodesic", "--lightlike", "0.5,0", "--direction", "0.6,1,0.8", "--samples", "8"], 0),
    ("limitset_theta", &["limitset", "structure_theta.json", "--max-len", "2"], 0),
    ("sample_chain", &["sample", "genus3-chain", "--seed", "9"], 0),
    ("sample_digits", &["sample", "four-holed-sphere", "--seed", "3", "--digits", "6"], 0),
];

pub fn inputs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/inputs")
}

pub fn expected_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.out"))
}

/// Runs `bin` on `args` from the inputs directory.
pub fn run(mut bin: Command, args: &[&str]) -> Output {
    bin.args(args).current_dir(inputs()).output().expect("spawn cli")
}
