//! Invariants of finite quivers: the ultramatricial algebra S(Q) with its
//! Bratteli diagram, the graded pieces of the Leavitt path algebra, K₀ as
//! an ordered dimension group, Hilbert series, and the tail structure of
//! graded representations.
//!
//! Everything is exact: integers are arbitrary precision and matrix
//! entries are rationals.

pub mod cli;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod graded;
pub mod leavitt;
pub mod linalg;
pub mod quiver;
pub mod series;
pub mod tower;

pub use error::{QgrError, Result};
pub use quiver::{Path, Quiver};
