//! Symbolic calculus for anchored planar algebras.
//!
//! Tangles are typed expressions over the generating tangles (unit, identity,
//! caps, cups and insertions). They normalize to a standard form consisting of
//! a chain of generators together with one ribbon braid. Standard forms are
//! evaluated in the Temperley-Lieb planar algebra with a symbolic loop value,
//! and box objects of module tensor categories are computed at the level of
//! Grothendieck rings.

pub mod checker;
pub mod error;
pub mod groth;
pub mod ribbon_braid;
pub mod tangle;
pub mod tl;

pub use error::{Error, Result};
pub use ribbon_braid::{Letter, Permutation, RibbonBraid};
pub use tangle::{Generator, StandardForm, TangleExpr, TangleType};
