//! Exact K-theoretic invariants of Cuntz-Pimsner algebras `O_E` attached to
//! rank-`d` vector bundles over spheres.
//!
//! The crate is organised bottom-up:
//!
//! * [`fgab`]: integer matrices, Smith normal form, kernels, cokernels and
//!   canonical finitely generated abelian groups.
//! * [`ktheory`]: the ring `K^0(S^2n) = Z[λ]/(λ²)`, `d`-adic scalars and the
//!   `δ'_1` matrix class.
//! * [`bundles`]: bundle specifications and their K-classes.
//! * [`pimsner`]: the exact-sequence computation of `K_0(O_E)`, `K_1(O_E)`.
//! * [`classify`]: graded stable isomorphism decisions and reports.
//! * [`cuntz`]: a decidable word calculus for the Cuntz algebra `O_d`.
//! * [`cli`]: command implementations behind the `cpk` binary.

pub mod bundles;
pub mod classify;
pub mod cli;
pub mod cuntz;
mod error;
pub mod fgab;
pub mod ktheory;
mod numfmt;
pub mod pimsner;

pub use error::{Error, Result};
