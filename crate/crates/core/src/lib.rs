//! Exact arithmetic in quadratic orders of square discriminant, their ideals
//! and residue rings, `SL₂` over them, and a verification engine for the
//! congruence-level indices of homology Veech groups of L-shaped origamis.

pub mod arith;
pub mod cli;
pub mod error;
pub mod hnf;
pub mod ideal;
pub mod quad_order;
pub mod noncongruence;
pub mod origami;
pub mod quotient;
pub mod ring;
pub mod sl2;

pub use error::{Error, Result};
