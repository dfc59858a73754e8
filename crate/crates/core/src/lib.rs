//! Sign behaviour of linear recurrence sequences with constant coefficients.
//!
//! A sequence is brought into power-sum form, its dominant characteristic
//! roots are isolated with certified enclosures, and the oscillation question
//! is reduced to whether an orbit on the torus meets a small square. Lattice
//! tools for the rational case live in [`unitlattice`], the Kronecker analysis
//! of angles in [`kronecker`], and the decision procedure in [`oscillation`].

pub mod error;
pub mod exactnum;
pub mod io;
pub mod kronecker;
pub mod oscillation;
pub mod powersum;
pub mod unitlattice;

pub use error::{Error, Result};
