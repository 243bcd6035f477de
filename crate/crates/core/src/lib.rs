//! Moment maps, energy flow and Kirwan-Ness strata on the variety of
//! complex Jordan algebras.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod flow;
pub mod linalg;
pub mod moment;
pub mod rational;
pub mod stratify;

pub use error::{Error, Result};
