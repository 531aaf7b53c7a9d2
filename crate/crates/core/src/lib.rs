//! Exact arithmetic for codegree-based solvability checks on finite groups.
//!
//! The crate is organized around a small tower of modules:
//!
//! * [`exact`] - unbounded integers held in factored form plus exact rationals,
//! * [`cyclotomic`] - integer polynomials, the polynomials `Phi_n`, and the
//!   quadratic ring `Z[sqrt(d)]` needed for the Suzuki/Ree degree formulas,
//! * [`catalog`] - orders, small character degrees, and outer-automorphism
//!   bounds of the simple groups the criterion touches,
//! * [`criterion`] - the codegree function, the constant `a`, and the
//!   criterion predicate `k * cod(chi) <= chi(1)^s`,
//! * [`verifier`] - grid re-verification of every inequality behind the
//!   criterion,
//! * [`chartab`] - character-table ingestion, codegree spectra, normal
//!   subgroup lattices, and an empirical solvability cross-check.
//!
//! All verdicts are computed with exact integer and rational arithmetic;
//! decimal output is rendering only.

pub mod catalog;
pub mod chartab;
pub mod criterion;
pub mod cyclotomic;
pub mod exact;
pub mod verifier;

pub use catalog::{Catalog, Family, GroupDescriptor, SporadicRow};
pub use chartab::{CharacterData, CharacterTable, TheoremAVerdict};
pub use criterion::{constant_a, CharEntry, CriterionReport, SharpnessReport};
pub use cyclotomic::{cyclotomic, IntPolynomial, QuadExpr};
pub use exact::{factorize, FactoredInteger, Rational};
pub use verifier::{GridConfig, VerifyReport};

