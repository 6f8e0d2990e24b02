//! The facet lattice-point criterion for α_{m,k} = α^T on every bundled toric Fano.
//!
//!     cargo run --example conjecture -- 4

use alpha_polytope::cli::{bundled, bundled_names};
use alpha_polytope::invariants::{conjecture_check, Verdict};

fn main() -> alpha_polytope::Result<()> {
    let k: usize = std::env::args().nth(1).map_or(2, |a| a.parse().expect("k"));
    for name in bundled_names() {
        let l = bundled(name)?;
        if !l.data.is_toric() {
            continue;
        }
        let report = conjecture_check(l.data.polytope(), k, 10)?;
        match report.verdict {
            Verdict::Holds { m_k, facet, count } => {
                println!(
                    "{name:<12} alpha = {}  holds at m_k = {m_k} ({} has {count} points)",
                    report.alpha,
                    l.label(facet)
                )
            }
            Verdict::Fails(why) => println!("{name:<12} alpha = {}  fails: {why:?}", report.alpha),
        }
    }
    Ok(())
}
