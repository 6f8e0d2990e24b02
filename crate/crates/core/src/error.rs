use std::io;

use thiserror::Error;

use crate::kernel::Point;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("linear system is singular")]
    Singular,

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("polyhedron is empty")]
    Empty,

    #[error("polytope is not full-dimensional")]
    NotSolid,

    #[error("cone is not pointed")]
    NotPointed,

    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),

    #[error("polytope is not invariant under the Weyl group")]
    NotWInvariant,

    #[error("weight {0} is not dominant")]
    NotDominant(Point),

    #[error("weight {0} is not integral for the root system")]
    NotIntegralWeight(Point),

    #[error("polytope is not reflexive")]
    NotReflexive,

    #[error("point {0} lies outside the polytope")]
    OutsidePolytope(Point),

    #[error("point {0} lies outside the support of the fan")]
    OutsideSupport(Point),

    #[error("fano flag inconsistent with facet constants: {0}")]
    FanoMismatch(String),

    #[error("no k-dimensional invariant subspace exists at level m={m}, k={k}")]
    EmptyGrassmannian { m: u32, k: u64 },

    #[error("no alpha in (0,1) satisfies the negativity condition")]
    EmptyWindow,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema violation: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit status for the command-line tool: 2 for malformed input,
    /// 3 for data that fails W-invariance or the Fano cross-check, 4 for
    /// domain errors raised while computing.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Schema(_) | Error::Parse(_) | Error::Json(_) | Error::Io(_) | Error::InvalidRootSystem(_) => 2,
            Error::NotWInvariant | Error::FanoMismatch(_) => 3,
            _ => 4,
        }
    }
}
