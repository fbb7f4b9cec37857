//! Integral points on the root stack `P^1[sqrt f]` over `Z[1/2q]` for a binary
//! quadratic form `f` of discriminant `q`.
//!
//! The [`decider`] computes the Beh group of the integral model and evaluates
//! the Brauer-Manin pairing on it; the [`oracle`] searches for integral points
//! by brute force so every verdict can be checked independently. The
//! [`invariants`] module covers the general stacky-curve bookkeeping (genus,
//! Picard groups, simple connectivity).

pub mod arith;
pub mod decider;
mod error;
pub mod form;
pub mod invariants;
pub mod oracle;

pub use error::{Error, Result};
