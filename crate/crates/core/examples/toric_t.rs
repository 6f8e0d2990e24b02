//! The toric t-function: values, its minimum and where it is attained.
//!
//!     cargo run --example toric_t -- cp2-blowup2 "-1/2,1/2"

use alpha_polytope::cli::bundled;
use alpha_polytope::invariants::{alpha_toric, min_face_set, sup_t_on_hull, t_function};
use alpha_polytope::kernel::parse_point;
use alpha_polytope::polytope::VPolytope;

fn main() -> alpha_polytope::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "cp2-blowup2".into());
    let p = bundled(&name)?.data.polytope().clone();

    for v in p.vertices() {
        println!("t{v} = {}", alpha_polytope::kernel::format_rational(&t_function(&p, v)?));
    }
    if let Some(x) = args.next() {
        let x = parse_point(&x)?;
        println!("t{x} = {}", t_function(&p, &x)?);
    }
    println!("alpha^T = {}", alpha_toric(&p)?);
    for f in min_face_set(&p)? {
        println!("minimizing face of dimension {}: {:?}", f.dimension, f.vertices);
    }
    // sup of t over the whole polytope is 1, at the origin
    println!("sup t on P = {}", sup_t_on_hull(&p, &VPolytope::from_points(p.rank(), p.vertices())?)?);
    Ok(())
}
