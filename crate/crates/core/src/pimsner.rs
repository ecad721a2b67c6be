//! K-theory of `O_E` over spheres from the Pimsner six-term sequence.
//!
//! Over a sphere `K^1` of the base vanishes on even spheres, and the
//! sequence collapses to
//!
//! ```text
//! 0 -> K_1(O_E) -> K^0(S^n) --(ι - λ_E)--> K^0(S^n) -> K_0(O_E) -> 0
//! ```
//!
//! so `K_0` is the cokernel and `K_1` the kernel of `ι - λ_E`. On odd spheres
//! the class is `[E] = d` and the same computation runs on `K^0(S^n) = Z`
//! with the `1 x 1` matrix `[1 - d]`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::bundles::SphereBundleSpec;
use crate::fgab::{cokernel, kernel, FgAbGroup, IntMatrix};
use crate::ktheory::lambda_endo_matrix;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KGroupPair {
    pub k0: FgAbGroup,
    pub k1: FgAbGroup,
    /// Which branch of the computation produced the groups.
    pub note: String,
}

impl KGroupPair {
    /// Compares the groups only, ignoring provenance.
    pub fn same_groups(&self, other: &KGroupPair) -> bool {
        self.k0 == other.k0 && self.k1 == other.k1
    }
}

impl fmt::Display for KGroupPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K0 = {}, K1 = {} ({})", self.k0, self.k1, self.note)
    }
}

/// `I - m` for square `m`.
pub fn identity_minus(m: &IntMatrix) -> Result<IntMatrix> {
    if !m.is_square() {
        return Err(Error::Invalid(format!(
            "identity_minus needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    IntMatrix::identity(m.rows()).sub(m)
}

/// `ι - λ_E`: `[[1-d, 0], [-c, 1-d]]` on even spheres, `[1-d]` on odd ones.
pub fn pimsner_matrix(spec: &SphereBundleSpec) -> Result<IntMatrix> {
    spec.validate()?;
    if spec.is_even_sphere() {
        identity_minus(&lambda_endo_matrix(&spec.k_class()?)?)
    } else {
        IntMatrix::new(1, 1, vec![BigInt::one() - spec.rank()])
    }
}

pub fn k_groups(spec: &SphereBundleSpec) -> Result<KGroupPair> {
    let m = pimsner_matrix(spec)?;
    let note = if spec.is_even_sphere() {
        format!(
            "even sphere S^{}: K0 = coker, K1 = ker of (iota - lambda_E) = [{}] on K^0 = Z^2",
            spec.sphere_dim(),
            m
        )
    } else {
        format!(
            "odd sphere S^{}: K^0 = Z and [E] = d, so K0 = coker, K1 = ker of [{}]",
            spec.sphere_dim(),
            m
        )
    };
    Ok(KGroupPair {
        k0: cokernel(&m),
        k1: kernel(&m),
        note,
    })
}

/// K-theory of the trivial bundle `S^n O_d` on an even sphere from the
/// Künneth formula: `K_0 = K^0(S^n) ⊗ K_0(O_d) = Z/(d-1) ⊕ Z/(d-1)`,
/// `K_1 = 0`.
pub fn k_groups_trivial(
    sphere_dim: impl Into<BigInt>,
    rank: impl Into<BigInt>,
) -> Result<KGroupPair> {
    let spec = SphereBundleSpec::trivial(sphere_dim, rank);
    spec.validate()?;
    if !spec.is_even_sphere() {
        return Err(Error::Invalid(format!(
            "the Künneth comparison needs an even sphere, got S^{}",
            spec.sphere_dim()
        )));
    }
    let k0_fiber = FgAbGroup::cyclic(spec.rank() - BigInt::one());
    Ok(KGroupPair {
        k0: k0_fiber.sum(&k0_fiber),
        k1: FgAbGroup::trivial(),
        note: format!(
            "Künneth: K^0(S^{}) ⊗ K_0(O_{}) = Z^2 ⊗ Z/{}",
            spec.sphere_dim(),
            spec.rank(),
            spec.rank() - BigInt::one()
        ),
    })
}
