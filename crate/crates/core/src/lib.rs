//! Exact representation theory of the symmetric group applied to scrollar
//! invariants of covers of the projective line.
//!
//! Modules, from the bottom up:
//! - [`tableaux`]: partitions, standard tableaux, charge statistics
//! - [`characters`]: character table, multiplicities, Specht matrices
//! - [`groups`]: permutation subgroups, coset actions, the named registry
//! - [`scrollar`]: hooks, volumes, duality, resolvents, Maroni bounds
//! - [`ramify`]: discriminant exponents, local patterns, addendum tables
//! - [`localmodel`]: the split model of the local S_e-closure
//!
//! All arithmetic is exact.

pub mod characters;
pub mod cyclotomic;
pub mod error;
pub mod groups;
pub mod linalg;
pub mod localmodel;
pub mod poly;
pub mod ramify;
pub mod scalar;
pub mod scrollar;
pub mod tableaux;

pub use error::{Error, Result};
pub use scalar::{BigRational, Field, Ring};

/// Arbitrary precision rational numbers.
pub type Rational = BigRational;
/// Dense matrix over the rationals.
pub type QMatrix = linalg::Matrix<Rational>;
/// Laurent polynomial in `t` over the rationals.
pub type QPoly = poly::Poly<Rational>;
/// Element of a cyclotomic field over the rationals.
pub type Cyclo = cyclotomic::Cyclotomic<Rational>;
