//! Lattice polytopes: both descriptions, fans, lattice points, slices, erosion.
//!
//!     cargo run --example polytope_ops

use alpha_polytope::kernel::{rat, Point};
use alpha_polytope::polytope::{
    erode, lattice_points, normal_fan, slice_by_subspace, support_value, HPolytope, VPolytope,
};

fn main() -> alpha_polytope::Result<()> {
    // the GL₂ polytope
    let p = HPolytope::from_integer_pairs(2, &[(1, &[1, 1]), (1, &[-1, -1]), (2, &[-1, 0]), (2, &[0, -1])])?;
    println!("vertices {:?}", p.vertices());
    println!("reflexive: {}, delzant violations: {:?}", p.is_reflexive(), p.delzant_violations());
    println!("v_P(1,-1) = {}", support_value(&p.to_vpolytope(), &Point::from_ints(&[1, -1]))?);
    println!("{} lattice points in 2P", lattice_points(&p, 2).len());

    for (i, c) in normal_fan(&p)?.cones().iter().enumerate() {
        println!("normal cone {i}: rays {:?}", c.rays());
    }
    let slice = slice_by_subspace(&p, &[Point::from_ints(&[1, 1])])?;
    println!("center slice {:?}", slice.ambient_vertices());

    let seg = VPolytope::from_points(2, &[Point::from_ints(&[1, -1]), Point::from_ints(&[-1, 1])])?;
    let eroded = erode(&p.scaled(&rat(2)), &seg)?;
    println!("2P eroded by [2ρ, -2ρ]: {:?}", eroded.vertices());
    Ok(())
}
