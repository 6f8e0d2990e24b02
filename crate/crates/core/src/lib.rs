//! Exact α-invariants of polarized group compactifications.
//!
//! A compactification is described by root data and a Weyl-invariant lattice
//! polytope `P`. Everything is computed in exact rational arithmetic:
//!
//! * [`invariants::alpha_group`] and [`invariants::alpha_group_delcroix`] give `α^{K×K}`;
//! * [`invariants::alpha_mk`] sweeps weight sets for `α^{K×K}_{m,k}`;
//! * [`invariants::t_function`], [`invariants::alpha_toric`] and
//!   [`invariants::conjecture_check`] cover the toric case.
//!
//! ```
//! use alpha_polytope::cli::bundled;
//! use alpha_polytope::invariants::alpha_group;
//!
//! let gl2 = bundled("gl2").unwrap();
//! assert_eq!(alpha_group(&gl2.data).unwrap().to_string(), "2/5");
//! ```

pub mod cli;
pub mod error;
pub mod invariants;
pub mod kernel;
pub mod plfunc;
pub mod polytope;
pub mod rootsystem;

pub use error::{Error, Result};
