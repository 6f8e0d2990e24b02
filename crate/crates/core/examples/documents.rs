//! Input documents and reports: load JSON, run a command, print the report.
//!
//!     cargo run --example documents

use alpha_polytope::cli::{parse_document, run, Command};
use alpha_polytope::invariants::DimensionMode;

const HEXAGON: &str = r#"{
  "schema_version": 1,
  "name": "dp6",
  "description": "CP2 blown up at three points",
  "rank": 2,
  "fano": true,
  "polytope": { "vertices": [["1","0"],["1","1"],["0","1"],["-1","0"],["-1","-1"],["0","-1"]] }
}"#;

fn main() -> alpha_polytope::Result<()> {
    let doc = parse_document(HEXAGON)?;
    let loaded = doc.into_loaded()?;
    for cmd in [
        Command::ToricAlpha,
        Command::MinFaces,
        Command::Conjecture { k: 2, max_m: 5 },
        Command::AlphaMk { m: 1, k: 2, mode: DimensionMode::TrueDimension },
    ] {
        print!("{}", run(&cmd, &loaded, 1, false)?.to_text());
    }
    println!("{}", run(&Command::Alpha, &loaded, 1, true)?.to_json());
    Ok(())
}
