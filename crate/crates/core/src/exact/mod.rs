//! Exact rational scalars, vectors and matrices.

pub mod linalg;
pub mod matrix;
pub mod rational;
pub mod vector;

pub use linalg::{
    complement_basis, complement_basis_ordered, in_span, independent_subset, rank_of, rref, same_span,
    solve_linear, span_basis, ComplementOrder, LinearSolution,
};
pub use matrix::QMatrix;
pub use rational::{format_rational, frac, int, parse_rational, Rational};
pub use vector::QVector;
