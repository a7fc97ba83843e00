//! Exact computations for weighted Grassmannians.
//!
//! The crate covers the integral parametrisation of ℤ-gradings on Plücker
//! coordinates, the coweight-lattice machinery behind it (types A, B and D),
//! the Plücker relations, dualising-sheaf degrees and Hilbert series. Every
//! closed formula has an independent brute-force counterpart used in tests.

pub mod linalg;
pub mod roots;
pub mod subset;
pub mod grading;
pub mod pluecker;
pub mod hilbert;
