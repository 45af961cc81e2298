//! Normal coverings of the finite symmetric and alternating groups.

pub mod bounds;
pub mod catalog;
pub mod coverings;
pub mod cycle_types;
pub mod data;
pub mod error;
pub mod numtheory;
pub mod permgroup;

pub use error::{Error, Result};
