//! Macaulay inverse systems over `Q` and `F_p`.
//!
//! Given a homogeneous dual generator `F`, the crate computes the annihilator
//! `Ann(F)` degree by degree, its Hilbert function and minimal generators,
//! decides whether `R/Ann(F)` is a complete intersection, classifies binomial
//! dual generators in closed form, and checks weak and strong Lefschetz
//! properties by exact rank computations.

pub mod binomial;
pub mod cli;
pub mod families;
pub mod field;
pub mod inverse;
pub mod lefschetz;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod report;
