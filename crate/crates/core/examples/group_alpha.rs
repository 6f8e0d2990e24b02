//! α^{K×K} of the GL₂ compactification, three ways.
//!
//!     cargo run --example group_alpha

use alpha_polytope::cli::bundled;
use alpha_polytope::invariants::{alpha_group, alpha_group_delcroix, alpha_mk, quantization_m0, SweepOptions};

fn main() -> alpha_polytope::Result<()> {
    let gl2 = bundled("gl2")?;
    let data = &gl2.data;

    let slice = alpha_group(data)?;
    println!("center slice : {slice}  witness {:?}", slice.witness);
    println!("erosion      : {}", alpha_group_delcroix(data)?);

    // the slice minimum sits at a half-integral point, so it shows up at even levels
    let q = quantization_m0(data)?;
    println!("m0 = {} at v_z = {}", q.m0, q.vertex);
    for m in [q.m0, 2 * q.m0] {
        let r = alpha_mk(data, m, 1, SweepOptions::default())?;
        println!("alpha_{{{m},1}} = {}  via I = {:?}", r.alpha, r.weights.weights());
    }
    Ok(())
}
