//! Graded stable isomorphism of `O_E` over spheres.
//!
//! For rank-`d` bundles `E, E'` over an even sphere the following agree:
//! `δ'_1(O_E) = δ'_1(O_E')`, a `C(S^n)`-isomorphism
//! `(O_E ⊗ K, Z) ≅ (O_E' ⊗ K, Z)`, and `[E] = [E']`. The three are computed
//! here along separate paths ([`delta1_equal`] compares matrices,
//! [`graded_stably_isomorphic`] compares K-classes). Over odd spheres every
//! rank-`d` bundle has class `d`, so all of them are equivalent.
//!
//! K-groups give only a one-sided test: different `K_0` rules isomorphism
//! out, equal `K_0` decides nothing.

use serde::{Deserialize, Serialize};

use crate::bundles::SphereBundleSpec;
use crate::fgab::groups_isomorphic;
use crate::ktheory::{delta1_class, Delta1Class, TruncPoly};
use crate::pimsner::{k_groups, k_groups_trivial, KGroupPair};
use crate::{Error, Result};

pub const CAVEAT_DELTA0: &str =
    "delta_0 vanishes over spheres: the degree-zero bundle O_E^0 is trivial, S^n O_d^0";
pub const CAVEAT_REALIZABILITY: &str =
    "the K-class parameter c is not checked for realizability by a rank-d vector bundle";
pub const CAVEAT_STABLE: &str =
    "isomorphism here means graded stable isomorphism (after tensoring with the compacts), not isomorphism of O_E itself";
pub const CAVEAT_TRIVIAL_CLASS: &str = "spec is the trivial class";
pub const CAVEAT_ODD_SPHERE: &str =
    "odd sphere: K^0 = Z forces [E] = d, so O_E is graded stably isomorphic to the trivial bundle";
pub const CAVEAT_K_INCONCLUSIVE: &str =
    "K0 agrees with the trivial bundle; this is inconclusive, delta_1 still tells the two apart";

fn same_hypotheses(a: &SphereBundleSpec, b: &SphereBundleSpec) -> Result<()> {
    a.validate()?;
    b.validate()?;
    if a.sphere_dim() != b.sphere_dim() {
        return Err(Error::DimensionMismatch(
            a.sphere_dim().to_string(),
            b.sphere_dim().to_string(),
        ));
    }
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch(
            a.rank().to_string(),
            b.rank().to_string(),
        ));
    }
    Ok(())
}

/// Equality of the `δ'_1` matrix classes. Both bundles must live over the
/// same sphere and have the same rank.
pub fn delta1_equal(a: &SphereBundleSpec, b: &SphereBundleSpec) -> Result<bool> {
    same_hypotheses(a, b)?;
    Ok(delta1_class(a)?.matrix() == delta1_class(b)?.matrix())
}

/// Decides whether `O_E ⊗ K` and `O_E' ⊗ K` are isomorphic as graded
/// `C(S^n)`-algebras.
pub fn graded_stably_isomorphic(a: &SphereBundleSpec, b: &SphereBundleSpec) -> Result<bool> {
    same_hypotheses(a, b)?;
    if a.is_even_sphere() {
        Ok(a.k_class()? == b.k_class()?)
    } else {
        Ok(true)
    }
}

/// `true` when `K_0(O_E)` and `K_0(O_E')` differ, which rules out
/// isomorphism. `false` is inconclusive.
pub fn k_distinguishable(a: &SphereBundleSpec, b: &SphereBundleSpec) -> Result<bool> {
    Ok(!groups_isomorphic(&k_groups(a)?.k0, &k_groups(b)?.k0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub spec: SphereBundleSpec,
    pub k_class: TruncPoly,
    pub k_groups: KGroupPair,
    pub delta1: Delta1Class,
    pub trivial_comparison: KGroupPair,
    pub k_distinguishable_from_trivial: bool,
    pub caveats: Vec<String>,
}

pub fn classify_report(spec: &SphereBundleSpec) -> Result<ClassificationReport> {
    spec.validate()?;
    let k_class = spec.k_class()?;
    let groups = k_groups(spec)?;
    let delta1 = delta1_class(spec)?;
    let trivial_comparison = if spec.is_even_sphere() {
        k_groups_trivial(spec.sphere_dim().clone(), spec.rank().clone())?
    } else {
        k_groups(&SphereBundleSpec::trivial(
            spec.sphere_dim().clone(),
            spec.rank().clone(),
        ))?
    };
    let distinguishable = !groups_isomorphic(&groups.k0, &trivial_comparison.k0);

    let mut caveats = vec![CAVEAT_DELTA0.to_string(), CAVEAT_STABLE.to_string()];
    if !spec.is_even_sphere() {
        caveats.push(CAVEAT_ODD_SPHERE.to_string());
    } else if spec.is_trivial_class() {
        caveats.push(CAVEAT_TRIVIAL_CLASS.to_string());
    } else {
        caveats.push(CAVEAT_REALIZABILITY.to_string());
        if !distinguishable {
            caveats.push(CAVEAT_K_INCONCLUSIVE.to_string());
        }
    }

    Ok(ClassificationReport {
        spec: spec.clone(),
        k_class,
        k_groups: groups,
        delta1,
        trivial_comparison,
        k_distinguishable_from_trivial: distinguishable,
        caveats,
    })
}

/// Flat, string-valued form of a [`ClassificationReport`] used for
/// structured output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportRecord {
    pub spec: crate::bundles::SpecFile,
    pub k_class: String,
    #[serde(rename = "K0")]
    pub k0: String,
    #[serde(rename = "K1")]
    pub k1: String,
    pub note: String,
    pub delta1_matrix: String,
    pub delta1_base: String,
    #[serde(rename = "trivial_K0")]
    pub trivial_k0: String,
    pub distinguishable_from_trivial: bool,
    pub caveats: Vec<String>,
}

impl ClassificationReport {
    pub fn to_record(&self) -> ReportRecord {
        ReportRecord {
            spec: (&self.spec).into(),
            k_class: self.k_class.to_string(),
            k0: self.k_groups.k0.to_string(),
            k1: self.k_groups.k1.to_string(),
            note: self.k_groups.note.clone(),
            delta1_matrix: self.delta1.matrix().to_string(),
            delta1_base: self.delta1.base().to_string(),
            trivial_k0: self.trivial_comparison.k0.to_string(),
            distinguishable_from_trivial: self.k_distinguishable_from_trivial,
            caveats: self.caveats.clone(),
        }
    }
}
