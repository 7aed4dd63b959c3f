//! Exact computations for cluster algebras attached to quiver Hecke
//! algebras of type `A_n`: dominant words and their monoid law, seed and
//! parameter mutation, Laurent expansions with F-polynomials and g-vectors,
//! and the initial seed of the category of graded modules.

pub mod cluster;
pub mod error;
pub mod hl;
pub mod klr_seed;
pub mod laurent;
pub mod linalg;
pub mod mutation;
pub mod shuffle;
pub mod words;

pub use error::{Error, Result};
