//! Exact small-matroid toolkit for 3-connectivity structure: elastic and
//! `N`-elastic elements, vertical and cyclic 3-separations, fans,
//! Θ-separators, fixed-basis removability, and a harness that checks
//! structural theorems exhaustively over catalogs of small matroids.

pub mod basis;
pub mod canonical;
pub mod connectivity;
pub mod constructions;
pub mod elasticity;
pub mod error;
pub mod harness;
pub mod mask;
pub mod matroid;
pub mod structures;

pub use canonical::{canonical_form, is_isomorphic, CanonicalForm};
pub use error::{Error, Result};
pub use mask::SubsetMask;
pub use matroid::{GroundMap, Matroid};
