//! Gauss sums and epsilon factors of characters of local fields.

pub mod gauss;
pub mod local;
pub mod theorems;
pub mod value;

pub use value::EpsilonValue;
