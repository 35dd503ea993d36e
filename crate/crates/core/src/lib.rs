//! Exact lattice arithmetic for fourfolds of K3^[2]-type carrying a
//! symplectic involution, their quotients and terminalizations.
//!
//! Everything is computed over the integers or the rationals; there is no
//! floating point in the crate.

pub mod catalog;
pub mod cli;
pub mod discform;
pub mod embeddings;
pub mod error;
pub mod hasse;
pub mod lattice;
pub mod linalg;
pub mod mukai;
pub mod quotient;
pub mod riemann_roch;
pub mod wedge;

pub use error::{Error, Result};
