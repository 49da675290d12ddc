//! Exact lengths of root-lattice elements.
//!
//! The length of `γ` is the least number of roots summing to `γ`. It is computed from
//! the facet functionals of the root polytope, and the monoids spanned by the roots on
//! each face are studied with exact lattice arithmetic.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod error;
pub mod lattice;
pub mod length;
pub mod monoid;
pub mod oracle;
pub mod polytope;
pub mod rootcore;
pub mod verify;
pub mod vector;
pub mod weyl;

pub use error::{Error, Result};
pub use polytope::{FaceSpec, Facet};
pub use rootcore::{build_root_system, CartanType, Family, RootSystem};
pub use vector::{LatticeVec, RatVec, Rational, SimpleSet};
pub use weyl::WeylWord;
