pub mod algebra;
mod bigjson;
pub mod error;
pub mod invariants;
pub mod obstruction;
pub mod pretzel;
pub mod reproduce;
pub mod signature;

pub use error::{Error, Result};
