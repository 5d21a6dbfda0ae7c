//! Cartan schemes, Weyl groupoids and their finite root systems.
//!
//! Indices and objects are 0-based throughout the API. Errors and printed
//! root labels use 1-based indices, so `12^2` means `α_1 + 2α_2`.

// Index loops read better than zipped iterators in the matrix code.
#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod coset;
pub mod coxeter;
pub mod groupoid;
pub mod io;
pub mod matrix;
pub mod roots;
pub mod scheme;

pub use matrix::{IntMatrix, Root};
pub use scheme::{CartanMatrix, CartanScheme, RawScheme, SchemeError};
