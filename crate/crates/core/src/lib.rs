#![cfg_attr(not(test), no_std)]
//! Exact lattice, cone and graded-algebra machinery for Cox rings of toric
//! varieties.
//!
//! Everything here works over arbitrary-precision integers and needs only
//! `alloc`.

extern crate alloc;

pub mod cones;
pub mod cox;
pub mod divisors;
pub mod error;
pub mod graded;
pub mod lattice;
pub mod poset;

pub use error::{Error, Result};
pub use poset::Poset;
