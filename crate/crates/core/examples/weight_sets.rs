//! α^Π for hand-picked weight sets, by the chamber-ray criterion and by the LP.
//!
//!     cargo run --example weight_sets

use alpha_polytope::cli::bundled;
use alpha_polytope::invariants::{alpha_pi_fano, alpha_pi_general};
use alpha_polytope::kernel::Point;
use alpha_polytope::rootsystem::{dominant_points, irrep_dimension};

fn main() -> alpha_polytope::Result<()> {
    let gl2 = bundled("gl2")?;
    let data = &gl2.data;
    let rd = data.root_data();
    let m = 2;

    let pts = dominant_points(rd, data.polytope(), m)?;
    println!("dominant weights at m = {m}:");
    for p in &pts {
        println!("  {p}  dim V = {}", irrep_dimension(rd, p)?);
    }
    let sets = [
        vec![Point::from_ints(&[-1, -1])],
        vec![Point::from_ints(&[0, -2])],
        vec![Point::from_ints(&[-1, -1]), Point::from_ints(&[1, 1])],
    ];
    for s in sets {
        let ws = data.weight_set(m, s)?;
        let (g, f) = (alpha_pi_general(data, &ws)?, alpha_pi_fano(data, &ws)?);
        println!("I = {:?}: rays {g}, LP {f}, hull {:?}", ws.weights(), ws.orbit_hull().vertices());
    }
    Ok(())
}
