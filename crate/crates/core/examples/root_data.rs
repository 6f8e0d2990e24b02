//! Root data: named types, Weyl orbits, dimensions and dual cones.
//!
//!     cargo run --example root_data

use alpha_polytope::kernel::Point;
use alpha_polytope::rootsystem::{
    build_root_data, dual_positive_cone, irrep_dimension, weyl_group_order, weyl_orbit, NamedFactor, RootSpec, RootType,
};

fn main() -> alpha_polytope::Result<()> {
    for (kind, n, rank) in [(RootType::A, 2, 3), (RootType::B, 2, 2), (RootType::C, 3, 3), (RootType::G, 2, 3)] {
        let rd = build_root_data(rank, &RootSpec::Named(vec![NamedFactor { kind, n, offset: 0 }]))?;
        let rho = rd.rho().clone();
        println!(
            "{kind:?}{n} in rank {rank}: |Φ+| = {}, |W| = {}, ρ = {rho}",
            rd.positive_roots().len(),
            weyl_group_order(&rd)
        );
        println!("  simple roots {:?}", rd.simple_roots());
        println!("  |W·ρ| = {}, dim V_ρ = {}", weyl_orbit(&rd, &rho).len(), irrep_dimension(&rd, &rho)?);
        println!("  dual chamber rays {:?}", dual_positive_cone(&rd).rays());
    }
    // a GL₃-style layout: A₂ on coordinates 0..3 with a center line
    let rd = build_root_data(
        3,
        &RootSpec::Explicit(vec![
            Point::from_ints(&[1, -1, 0]),
            Point::from_ints(&[0, 1, -1]),
            Point::from_ints(&[1, 0, -1]),
        ]),
    )?;
    println!("explicit A2: center basis {:?}", rd.center_basis());
    Ok(())
}
