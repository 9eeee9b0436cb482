//! Crossings and nestings of pattern-avoiding permutations.
//!
//! The crate is organised bottom-up: [`perm`] and [`stats`] hold the
//! permutation type and its statistics, [`rsk`], [`dyck`] and [`theta`] the
//! bijections, [`poly`], [`series`] and [`formulas`] the exact q-polynomial
//! machinery, and [`enumerate`] / [`verify`] the brute-force oracle that
//! checks the formulas against each other.

pub mod cli;
pub mod dyck;
pub mod enumerate;
pub mod error;
pub mod formulas;
pub mod perm;
pub mod poly;
pub mod rsk;
pub mod series;
pub mod stats;
pub mod svg;
pub mod theta;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{Involution, PatternSet, Permutation};
