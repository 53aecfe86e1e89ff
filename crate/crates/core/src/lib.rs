//! Bounded-height rational points of varieties over F_p(t), materialized as
//! varieties over F_p, together with the algebra used to study them.

pub mod error;
pub mod ffalg;
pub mod heightspace;
pub mod polylattice;
pub mod detmethod;
pub mod pell;
pub mod idealdim;
pub mod census;
pub mod cli;

pub use error::{Error, Result};
