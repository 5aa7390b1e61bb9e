//! Exact q-Eulerian polynomials on the hyperoctahedral group `B_n` and its
//! even-signed subgroup `D_n`.
//!
//! Polynomials are built three ways (brute-force enumeration, recurrences and
//! Hyatt-style sums) and checked against one another and against truncated
//! exponential generating functions in an [`registry`] of identities.

pub mod algebra;
pub mod bijection;
pub mod enumerate;
pub mod error;
pub mod perm;
pub mod recurrence;
pub mod registry;
pub mod series;

pub use error::Error;
