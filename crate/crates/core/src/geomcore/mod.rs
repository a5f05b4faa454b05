//! Exact rational polyhedral kernel for dimensions 1 to 4: hulls, volumes,
//! slices, containment, simplex gauges and piecewise-polynomial slice profiles.

mod gauge;
pub(crate) mod hull;
mod piecewise;
mod polytope;
pub mod rational;
mod volume;

pub use gauge::SimplexKind;
pub use piecewise::{PiecewisePolynomial, Polynomial, RootBound};
pub use polytope::{Halfspace, HalfspaceJson, PolytopeJson, RationalPolytope, SliceMode, MAX_DIM};
pub use rational::{int, rat, Rational, RationalPair};

use rational::PairError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("unsupported dimension {0}: expected 1..=4")]
    UnsupportedDimension(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("axis {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },
    #[error("inconsistent polytope: {0}")]
    Inconsistent(String),
    #[error("invalid piecewise polynomial: {0}")]
    InvalidPiecewise(String),
    #[error(transparent)]
    Pair(#[from] PairError),
}
