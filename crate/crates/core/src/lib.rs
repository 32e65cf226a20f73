//! Finite skew braces: verification, automorphism groups, product
//! constructions, explicit rigid families and exhaustive enumeration.
//!
//! Elements are `0..n` with `0` the common identity of both operations.

pub mod automorphism;
pub mod brace;
pub mod cli;
pub mod construction;
pub mod error;
pub mod families;
pub mod group;
pub mod groups;
pub mod io;
pub mod oracle;
pub mod perm;
mod search;

pub use brace::{SkewBrace, Validation};
pub use error::{Error, Result};
pub use group::Group;
pub use perm::{PermSet, Permutation};
pub use search::DEFAULT_SEARCH_CAP;
