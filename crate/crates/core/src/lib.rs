//! Exact computations on multi-wedged spaces: vector spaces ℚⁿ carrying a
//! family of polyhedral wedges.
//!
//! - [`exact`]: rational scalars, vectors, matrices and linear solving.
//! - [`lp`]: an exact two-phase simplex solver.
//! - [`wedge`]: polyhedral wedges with generator/halfspace conversion.
//! - [`order`]: multi-upper bounds, multi-suprema and multi-infima of
//!   translated-wedge families, and a randomized multi-lattice refuter.
//! - [`riesz`]: positive operators, the Riesz decomposition property and
//!   Riesz–Kantorovich formulas for multi-suprema of operators.
//! - [`io`]: JSON decoding of the input documents.

pub mod error;
pub mod exact;
pub mod io;
pub mod lp;
pub mod order;
pub mod riesz;
pub mod sampling;
pub mod wedge;

pub use error::{Error, Result};
pub use exact::{QMatrix, QVector, Rational};
pub use wedge::Wedge;
