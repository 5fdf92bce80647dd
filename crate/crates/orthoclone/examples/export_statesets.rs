//! Regenerates the bundled state-set documents in `examples/statesets/`.
//!
//! One JSON file per catalog protocol (the `ki` family at α = 0, π/6,
//! π/4), plus `two_product.json`, a pair of orthogonal *product* states
//! whose orthogonality is confined to one subsystem — the input the
//! `classify` command's locator is made for.
//!
//! Run with `cargo run --example export_statesets`. The files double as
//! golden fixtures: the test suite parses them back and expects the
//! exact same matrices.

use std::path::PathBuf;

use orthoclone::formats::{save_state_set_file, StateEntryFile, StateKind, StateSetFile};
use orthoclone::protocols::{
    make_bb84_composite, make_goldenberg_vaidman, make_koashi_imoto, make_minimal_mixed,
    make_minimal_pure,
};

fn pure_entry(label: &str, amplitudes: &[f64]) -> StateEntryFile {
    StateEntryFile {
        label: label.to_string(),
        kind: StateKind::Pure,
        amplitudes_re: Some(amplitudes.to_vec()),
        amplitudes_im: Some(vec![0.0; amplitudes.len()]),
        matrix_re: None,
        matrix_im: None,
    }
}

/// |0,0⟩ against |1⟩ ⊗ (cos 0.3|0⟩ + sin 0.3|1⟩): orthogonal overall,
/// with non-orthogonal second factors — only subsystem 1 separates them.
fn two_product_file() -> StateSetFile {
    let (c, s) = (0.3f64.cos(), 0.3f64.sin());
    StateSetFile {
        dims: vec![2, 2],
        states: vec![
            pure_entry("a", &[1.0, 0.0, 0.0, 0.0]),
            pure_entry("b", &[0.0, 0.0, c, s]),
        ],
        release_order: vec![1, 2],
    }
}

fn main() -> orthoclone::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join("statesets");
    std::fs::create_dir_all(&dir)?;

    let files: Vec<(&str, StateSetFile)> = vec![
        (
            "ki_0.json",
            StateSetFile::from_protocol(&make_koashi_imoto(0.0)?),
        ),
        (
            "ki_pi6.json",
            StateSetFile::from_protocol(&make_koashi_imoto(std::f64::consts::FRAC_PI_6)?),
        ),
        (
            "ki_pi4.json",
            StateSetFile::from_protocol(&make_koashi_imoto(std::f64::consts::FRAC_PI_4)?),
        ),
        (
            "gv.json",
            StateSetFile::from_protocol(&make_goldenberg_vaidman()),
        ),
        (
            "bb84.json",
            StateSetFile::from_protocol(&make_bb84_composite()),
        ),
        (
            "minimal_pure.json",
            StateSetFile::from_protocol(&make_minimal_pure()),
        ),
        (
            "minimal_mixed.json",
            StateSetFile::from_protocol(&make_minimal_mixed()),
        ),
        ("two_product.json", two_product_file()),
    ];

    for (name, file) in &files {
        let path = dir.join(name);
        // Prove the document round-trips before writing it.
        let set = file.to_state_set()?;
        save_state_set_file(&path, file)?;
        println!(
            "wrote {} ({} states over dims {:?})",
            path.display(),
            set.entries().len(),
            set.dims()
        );
    }
    println!("\n{} documents exported.", files.len());
    Ok(())
}
