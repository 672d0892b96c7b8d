//! # bsafkit
//!
//! A solver and principle-checking toolkit for bipolar set-based
//! argumentation frameworks (BSAFs) and general (non-flat) assumption-based
//! argumentation (ABA).
//!
//! The crate provides:
//!
//! - an ABA data model with tree-derivability, closure, and instantiation
//!   into a BSAF ([`aba`]),
//! - the BSAF data model plus the primitive predicates every semantics is
//!   built from: closure, conflict-freeness, attack, defense against closed
//!   sets, and the characteristic function ([`bsaf`]),
//! - the framework reducts (standard, alternative, gamma, and the SETAF
//!   special case) ([`reducts`]),
//! - classical, strong, weak, and gamma-based extension semantics
//!   ([`semantics`]),
//! - executable principle checks with witness reporting and seeded random
//!   framework generation ([`principles`]),
//! - independent reference implementations used by the verification suite
//!   ([`reference`]), and
//! - DOT export with junction nodes for collective edges ([`dot`]).
//!
//! All operations are pure functions of their inputs; frameworks are
//! immutable after construction.

pub mod aba;
pub mod argset;
pub mod bsaf;
pub mod dot;
pub mod error;
pub mod principles;
pub mod reducts;
pub mod reference;
pub mod semantics;

pub use aba::{Abaf, Rule, TailTable};
pub use argset::ArgSet;
pub use bsaf::{Bsaf, Edge};
pub use error::Error;
pub use semantics::{ExtensionSet, Semantics};
