//! Balleans defined by ideals of subsets, their hyperballeans, coarse maps
//! between them, and exhaustive or horizon-bounded checkers for their
//! properties.
//!
//! Everything here is `no_std` over `alloc`; IO and the command line live in
//! the companion `ballean-cli` crate.

#![no_std]
// Map constructors name their full ballean types.
#![allow(clippy::type_complexity)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod ballean;
pub mod error;
pub mod fault;
pub mod hyper;
pub mod finset;
pub mod ideal;
pub mod kcube;
pub mod maps;
pub mod quotient;
pub mod suite;
pub mod union_find;
pub mod verdict;

pub use ballean::{Ballean, ElementBallean};
pub use error::Error;
pub use fault::Fault;
pub use finset::FinSet;
pub use ideal::{GroundSet, Ideal, IdealDescription};
pub use verdict::{Datum, Describe, Evidence, Scope, Verdict, Witness, WitnessKind};
