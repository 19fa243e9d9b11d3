//! Exact computation of (σ,τ)-derivations of group rings of finite groups.
//!
//! The library constructs finite groups from Cayley tables, does exact
//! arithmetic in RG over ℚ, ℤ and F_p, enumerates the space of twisted
//! derivations, solves for inner-derivation witnesses, and integralizes
//! rational witnesses to ℤG via fractional-part adjustments.

// Elements are dense indices and every structure is driven off the
// multiplication table, so indexed loops are the native idiom here.
#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod cli;
pub mod derivation;
pub mod families;
pub mod group;
pub mod integrality;
pub mod json;
pub mod matrix;
pub mod ring;
pub mod run;
pub mod scalar;
pub mod selftest;
