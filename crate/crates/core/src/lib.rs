//! Exact catalogs of the tempered duals of `GL(n, R)` and `GL(n, C)`, the
//! K-theory of their reduced C*-algebras, and archimedean base change on
//! parameters, components and K-classes.

pub mod base_change;
pub mod cli;
pub mod error;
pub mod ktheory;
pub mod levi;
pub mod param_space;
pub mod weil;

pub use error::{Error, Result};
