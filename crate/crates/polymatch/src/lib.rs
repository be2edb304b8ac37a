//! Uniform oriented matroids, and weak matroids over hyperfields, built from
//! triangulations of products of two simplices through polyhedral matching
//! fields.
//!
//! Indices are 0-based throughout the library. Row nodes `R = {0..d}` and
//! ground elements `E = {0..n}`; subsets of `E` are bitmasks.

pub mod catalog;
pub mod coherent;
pub mod core;
pub mod hyperfields;
pub mod oriented;
pub mod subdivision;
pub mod triangulation;

mod error;

pub use error::{Error, Result};
