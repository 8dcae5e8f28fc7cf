//! Exact arithmetic for local epsilon factors of characters of p-adic fields.
//!
//! Gauss sums live in cyclotomic rings with integer coordinates, p-adic
//! quantities in truncated rings with explicit precision. Nothing here
//! allocates outside `alloc`, so the crate builds without `std`.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod characters;
pub mod classifier;
pub mod cyclotomic;
pub mod epsilon;
pub mod error;
pub mod gamma;
pub mod padic;
pub mod residue;

pub use error::Error;
