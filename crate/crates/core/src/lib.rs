//! Exact algorithms for convex position of k-subset barycenters.
//!
//! Everything here works over arbitrary-precision rationals. The crate is
//! `no_std` and only needs an allocator; file formats, the command line and
//! parallel drivers live in the `convexdim` companion crate.

#![no_std]

extern crate alloc;

mod error;
mod subsets;

pub mod constructions;
pub mod embedding;
pub mod exactlp;
pub mod gale;
pub mod hypersimplex;
pub mod oracle;
pub mod partitions;
pub mod theorems;
#[cfg(feature = "serde")]
pub mod text;

pub use error::Error;
pub use exactlp::{Matrix, Rational};
pub use subsets::{binomial, combinations, subsets_up_to};

pub type Result<T> = core::result::Result<T, Error>;
