//! Exact computations in the Yokonuma–Hecke algebras `Y_{d,n}(u)`: split
//! normal form, the Juyumaya Markov trace, E-system solutions, the framed,
//! classical and singular link invariants built from them, and checks of the
//! Temperley–Lieb-type quotient theorems.

pub mod error;
pub mod esystem;
pub mod invariants;
pub mod quotients;
pub mod braid;
pub mod cli;
pub mod scalars;
pub mod trace;
pub mod yalgebra;

pub use error::{Error, Result};
