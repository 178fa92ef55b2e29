//! Exact computations with representations of quivers with relations:
//! pushout ladders and their truncations, self-extensions, degeneration
//! certificates and Krull–Remak–Schmidt decompositions.
//!
//! Scalars are exact (rationals or prime fields). Paths are read in travel
//! order: `x*y` means "first `x`, then `y`" and acts by `M_y * M_x`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod decomp;
pub mod degen;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod ladder;
pub mod linalg;
pub mod poly;
pub mod rep;
pub mod selfext;
pub mod snf;
pub mod squares;
pub mod zladder;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use linalg::{Mat, Subspace};
