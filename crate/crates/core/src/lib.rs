//! Exact computation toolkit for fixed-point-free linear representations of
//! Alt(5) and the groups built around them.

pub mod arith;
pub mod centralizer;
pub mod cohomology;
pub mod constructions;
pub mod error;
pub mod group;
pub mod modrep;

pub use arith::{CoeffRing, Mat};
pub use error::{Error, Result};
pub use group::{GroupHandle, Perm};
