//! Exact combinatorics of numerical semigroups and unicuspidal rational
//! curves: Betti elements, codimension counts for cusp types, Kunz sets,
//! canonical models and gonality of monomial curves.

pub mod cli;
pub mod curve;
pub mod dyck;
pub mod error;
pub mod factorization;
pub mod lattice;
pub mod linalg;
pub mod noether;
pub mod semigroup;
pub mod severi;

pub use error::{Error, Result};
pub use semigroup::NumericalSemigroup;
