//! Exact verification workbench for a family of combinatorial identities:
//! the normalized central binomial coefficient and its π bounds, partition
//! counts of disjoint circle nestings, closed forms of weighted binomial sums,
//! and finite differences of power sequences.
//!
//! Everything is computed with exact integers and rationals. Irrational
//! constants appear only as certified rational enclosures.

pub mod circles;
pub mod cli;
pub mod error;
pub mod exactcore;
pub mod finitediff;
pub mod series;
pub mod wallis;

pub use error::{Error, Result};
