//! Exact linear algebra and computer algebra kernel.
//!
//! The kernel works entirely with exact arithmetic: arbitrary-precision
//! integers, reduced rationals, integers mod `n`, sparse multivariate
//! polynomials over `Z`, and rational quaternions. On top of those rings it
//! provides:
//!
//! * fraction-free Gaussian elimination on the fully generic `n x n` matrix
//!   (entries are independent indeterminates), producing the determinant and
//!   the adjugate as reduced polynomial data,
//! * machine verification of the classical determinant identities (adjugate,
//!   multiplicativity, block-triangular, Cramer, Leibniz, transpose, cofactor
//!   expansions) and of Cayley-Hamilton, as exact polynomial identities,
//! * matrices over arbitrary commutative rings with division-free
//!   determinants, adjugates, characteristic polynomials, Cramer solving and
//!   invertibility criteria,
//! * one-sided rank theory, linear-system solving and basis extraction over
//!   division rings, exercised on exact rational quaternions,
//! * subfield structure of the quaternions: minimal polynomials, reduced
//!   norm, centralizer dimensions and inner-automorphism witnesses.

pub mod centers;
pub mod checks;
pub mod elim;
pub mod matrix;
pub mod poly;
pub mod quat;
pub mod rings;
pub mod skew;
pub mod textio;
pub mod unipoly;

pub use poly::Polynomial;
pub use quat::Quaternion;
pub use rings::{CommutativeRing, IntegerRing, ModRing, ModularInt, RationalRing, RingError};
