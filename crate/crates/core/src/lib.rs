//! Exact invariants of generic determinantal varieties and of essentially
//! isolated determinantal singularities (EIDS).
//!
//! `Σ^s ⊂ Hom(C^n, C^{n+k})` is the variety of matrices of rank `< s`,
//! stratified by rank. Everything here is exact integer arithmetic over
//! [`Integer`]; analytic inputs that cannot be computed from finite data
//! (Milnor numbers, polar multiplicities of a concrete map, multiplicities
//! of pairs of modules) are taken as arguments.
//!
//! Module map:
//!
//! - [`combinatorics`]: extended binomials, alternating sums, the two
//!   binomial identities behind the closed forms.
//! - [`strata`]: dimensions of the rank strata, normal slices and the Euler
//!   characteristic of generic hyperplane slices.
//! - [`euler`]: the local Euler obstruction by recurrence and closed form.
//! - [`csm`]: Chern–Schwartz–MacPherson cycles and polar-class coefficients.
//! - [`eids`]: stabilization Euler characteristics, the polar-multiplicity
//!   system, section Euler obstructions and module Euler obstructions.
//! - [`linalg`]: exact determinant and matrix-vector product.

pub mod combinatorics;
pub mod csm;
pub mod eids;
pub mod error;
pub mod euler;
pub mod linalg;
pub mod strata;

pub use num_bigint::BigInt;

/// Arbitrary-precision signed integer. Every invariant in this crate is one.
pub type Integer = BigInt;

pub use combinatorics::{alternating_sum, binomial, BinomialTable, Sign};
pub use csm::{csm_cycle, evaluate_cycle_at_stratum, polar_class_coefficient, CsmCycle};
pub use eids::{EidsProblem, StratumInvariants, TriangularSystem};
pub use error::{Error, Result};
pub use euler::{eu_closed, eu_constructible, eu_recurrence, ConstructibleFunction};
pub use strata::{chi_bar_slice, chi_slice, normal_slice, StrataGeometry, StrataSpec};
