//! Rebuild the bundled `E7` datasets from the Weyl group.
//!
//! Usage: `cargo run --release --example e7_tables [-- <output-dir>]`

use std::path::PathBuf;

use charkit::e7::derive_datasets;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir: PathBuf = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data"));
    let d = derive_datasets()?;
    std::fs::create_dir_all(&dir)?;
    std::fs::write(
        dir.join("e7_coxeter_traces.json"),
        d.traces.to_json_string() + "\n",
    )?;
    std::fs::write(
        dir.join("e7_families.json"),
        d.families.to_json_string() + "\n",
    )?;
    eprintln!("{}", serde_json::to_string_pretty(&d.report)?);
    eprintln!("wrote {}", dir.display());
    Ok(())
}
