//! Golden-file cases for the `bott` binary. Each case runs inside
//! `tests/fixtures` and is compared byte for byte with `tests/golden/<name>.txt`.

use std::path::{Path, PathBuf};
use std::process::Command;

pub const CASES: &[(&str, &[&str])] = &[
    ("chern_f2", &["chern", "f2.tower"]),
    ("chern_f4", &["chern", "f4.tower"]),
    ("chern_chain", &["chern", "chain.tower"]),
    ("chern_fiber", &["chern", "fiber.tower"]),
    ("chern_bad", &["chern", "bad.tower"]),
    ("diagram_f2", &["diagram", "f2.tower"]),
    ("diagram_f4", &["diagram", "f4.tower"]),
    ("diagram_chain", &["diagram", "chain.tower"]),
    ("diagram_fiber", &["diagram", "fiber.tower"]),
    ("diagram_f1", &["diagram", "f1.tower"]),
    ("diagram_twoterms", &["diagram", "twoterms.tower"]),
    ("iso_f2_f4", &["iso", "f2.tower", "f4.tower"]),
    (
        "iso_f2_f4_chern",
        &["iso", "--chern", "f2.tower", "f4.tower"],
    ),
    ("iso_f2_f2", &["iso", "f2.tower", "f2.tower"]),
    (
        "iso_chain_fiber_chern",
        &["iso", "--chern", "chain.tower", "fiber.tower"],
    ),
    (
        "iso_fiber_fiber_chern",
        &["iso", "--chern", "fiber.tower", "fiber.tower"],
    ),
    ("iso_f1_f2", &["iso", "f1.tower", "f2.tower"]),
    ("deck_f2", &["deck", "f2.forest"]),
    ("deck_f4", &["deck", "f4.forest"]),
    ("deck_chain", &["deck", "chain.forest"]),
    ("deck_fiber", &["deck", "fiber.forest"]),
    ("deck_mixed", &["deck", "mixed.forest"]),
    ("reconstruct_f2", &["reconstruct", "f2.deck"]),
    (
        "reconstruct_f2_labelled",
        &["reconstruct", "--labelled", "f2.deck"],
    ),
    ("reconstruct_f4", &["reconstruct", "f4.deck"]),
    (
        "reconstruct_f4_labelled",
        &["reconstruct", "--labelled", "f4.deck"],
    ),
    ("reconstruct_chain", &["reconstruct", "chain.deck"]),
    (
        "reconstruct_chain_labelled",
        &["reconstruct", "--labelled", "chain.deck"],
    ),
    ("reconstruct_fiber", &["reconstruct", "fiber.deck"]),
    (
        "reconstruct_fiber_labelled",
        &["reconstruct", "--labelled", "fiber.deck"],
    ),
    ("reconstruct_mixed", &["reconstruct", "mixed.deck"]),
    (
        "reconstruct_mixed_labelled",
        &["reconstruct", "--labelled", "mixed.deck"],
    ),
    ("enumerate_2", &["enumerate", "2"]),
    ("enumerate_3", &["enumerate", "3"]),
    (
        "enumerate_2_q3",
        &["enumerate", "2", "--qmax", "3", "--count"],
    ),
    ("tower_f2", &["tower", "f2.forest"]),
    ("tower_f4", &["tower", "f4.forest"]),
    ("tower_chain", &["tower", "chain.forest"]),
    ("tower_fiber", &["tower", "fiber.forest"]),
    ("tower_mixed", &["tower", "mixed.forest"]),
    ("tower_cycle", &["tower", "cycle.forest"]),
];

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixtures() -> PathBuf {
    manifest_dir().join("tests").join("fixtures")
}

pub fn golden_path(name: &str) -> PathBuf {
    manifest_dir()
        .join("tests")
        .join("golden")
        .join(format!("{name}.txt"))
}

/// Run the binary and render exit code, stdout and stderr as one transcript.
pub fn transcript(bin: &Path, args: &[&str]) -> String {
    let out = Command::new(bin)
        .args(args)
        .current_dir(fixtures())
        .output()
        .expect("run bott");
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

/// Names of cases whose transcript differs from the golden file.
pub fn mismatches(bin: &Path) -> Vec<String> {
    CASES
        .iter()
        .filter(|(name, args)| {
            let want = std::fs::read_to_string(golden_path(name)).unwrap_or_default();
            transcript(bin, args) != want
        })
        .map(|(name, _)| name.to_string())
        .collect()
}
