//! Exact local signatures of fiber germs with cyclic group actions.
//!
//! The crate evaluates the G-signature fixed-point formula in exact cyclotomic
//! arithmetic, computes the Meyer signature cocycle on integral symplectic
//! matrices, builds the homology representation of the symmetric mapping class
//! group of a cyclic branched cover of the sphere, and evaluates the unique
//! cobounding function of the Meyer cocycle on words in its generators.

pub mod coverrep;
pub mod error;
pub mod exact;
pub mod gsign;
pub mod linalg;
pub mod localsig;
pub mod symplectic;
pub mod verify;
pub mod winding;

pub use error::{Error, Result};
