//! Exact-arithmetic toolkit certifying that the index of the centralizer of
//! a nilpotent element of a simple Lie algebra equals the rank.
//!
//! Everything runs over the rationals: Chevalley bases with integer
//! structure constants, fraction-free elimination, Kirillov-form rank
//! certificates, Bolsinov subspace witnesses, torus weight decompositions
//! with exact pairing-matrix determinants, and partition combinatorics for
//! the classical families.

pub mod centralizer;
pub mod chevalley;
pub mod elashvili;
pub mod error;
pub mod graded;
pub mod index;
pub mod linalg;
pub mod orbits;
pub mod poly;
pub mod roots;
pub mod upoly;

pub use error::Error;
