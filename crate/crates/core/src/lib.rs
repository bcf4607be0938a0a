//! Left orderings of braid groups and circular orderings of their central quotients.
//!
//! The crate computes Garside normal forms, Dehornoy and Dubrovina–Dubrovin
//! signs, floors and translation numbers as exact rational brackets, circular
//! cocycles on `B_n/⟨Δ_n²⟩` with their rotation numbers, the `B_3 → SL_2(ℤ)`
//! model, and finite stages of dynamic realisations on the line.

pub mod braid;
pub mod circular;
pub mod cones;
pub mod dehornoy;
pub mod error;
pub mod laws;
pub mod realisation;
pub mod report;
pub mod sampling;
pub mod sl2;

pub use braid::{BraidWord, NormalForm, Permutation, Special};
pub use cones::{Cone, RationalInterval};
pub use error::{BraidError, Result};
