//! Exact rational arithmetic and the geometric primitives built on it:
//! linear solving, linear programming, dual description and projection.

mod fm;
mod hull;
mod linalg;
mod lp;
mod rational;

pub use fm::project_polyhedron;
pub use hull::{
    affine_dimension, affine_span, cone_halfspaces, cone_rays, dual_description, enumerate_facets, enumerate_vertices,
    extreme_points, extreme_rays, for_each_subset, in_convex_hull, is_bounded, Description, Halfspace,
};
pub use linalg::{determinant, independent_subset, null_space, rank, solve_linear};
pub use lp::{lp_solve, Constraint, LinearProgram, LpOutcome, Relation, Sense};
pub use rational::{format_rational, lcm_of_denominators, parse_point, parse_rational, rat, ratio, Point, Rational};
