//! Piecewise-linear functions on fans: Υ for the anticanonical bundle and
//! the support function, which agree up to sign on Fano data.
//!
//!     cargo run --example pl_functions

use alpha_polytope::cli::bundled;
use alpha_polytope::kernel::{rat, Point};
use alpha_polytope::plfunc::{anticanonical_coeffs, evaluate, support_function, upsilon_from_divisor};

fn main() -> alpha_polytope::Result<()> {
    let gl2 = bundled("gl2")?;
    let p = gl2.data.polytope();
    let coeffs = anticanonical_coeffs(p, gl2.data.root_data());
    println!("anticanonical coefficients {:?}", coeffs.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>());

    let ups = upsilon_from_divisor(p, &coeffs)?;
    for (cone, nu) in ups.fan().cones().iter().zip(ups.functionals()) {
        println!("cone {:?}: ν = {nu}", cone.rays());
    }
    let v = support_function(&p.to_vpolytope());
    for x in [[1, 0], [3, -2], [-1, -1]] {
        let x = Point::from_ints(&x);
        let neg = x.scale(&rat(-1));
        println!("x = {x}: Υ(-x) = {}, v_P(x) = {}", evaluate(&ups, &neg)?, evaluate(&v, &x)?);
    }
    Ok(())
}
