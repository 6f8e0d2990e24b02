//! The exact kernel: rational LP, dual description and Fourier–Motzkin.
//!
//!     cargo run --example exact_lp

use alpha_polytope::kernel::{
    dual_description, project_polyhedron, rat, ratio, Constraint, Description, Halfspace, LinearProgram, LpOutcome,
    Point, Relation, Sense,
};

fn main() -> alpha_polytope::Result<()> {
    // max x + y  s.t.  3x + 2y <= 6,  x + 3y <= 6,  x, y >= 0
    let mut lp = LinearProgram::new(2, Sense::Maximize, vec![rat(1), rat(1)]);
    lp.add_constraint(vec![rat(3), rat(2)], Relation::Le, rat(6))
        .add_constraint(vec![rat(1), rat(3)], Relation::Le, rat(6))
        .set_all_nonnegative();
    match lp.solve()? {
        LpOutcome::Optimal { value, witness } => println!("optimum {value} at {witness}"),
        other => println!("{other:?}"),
    }

    let tri = Description::Vertices {
        dim: 2,
        vertices: vec![
            Point::from_ints(&[-1, -1]),
            Point::from_ints(&[2, -1]),
            Point::new(vec![ratio(-1, 1), ratio(5, 2)]),
        ],
    };
    if let Description::Halfspaces { halfspaces, .. } = dual_description(&tri)? {
        for h in &halfspaces {
            println!("{} + {} . y >= 0", h.constant, h.normal);
        }
        let back = dual_description(&Description::Halfspaces { dim: 2, halfspaces: halfspaces.clone() })?;
        println!("roundtrip: {back:?}");
    }

    // shadow of the unit cube on the first two coordinates
    let cube: Vec<Constraint> = (0..3)
        .flat_map(|i| {
            let e = Point::unit(3, i);
            [Halfspace::new(rat(0), e.clone()), Halfspace::new(rat(1), e.scale(&rat(-1)))]
        })
        .map(|h| Constraint::new(h.normal.0, Relation::Ge, -h.constant))
        .collect();
    println!("projection keeps {} constraints", project_polyhedron(&cube, &[2]).len());
    Ok(())
}
