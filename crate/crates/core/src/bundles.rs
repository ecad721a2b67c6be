//! Rank-`d` vector bundles over `S^n`, described by their K-theoretic data.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ktheory::TruncPoly;
use crate::numfmt::{json_int, json_int_opt};
use crate::{Error, Result};

/// A bundle `E -> S^n` of rank `d` whose class in `K^0(S^n)` is `d + λc`.
///
/// `c` is only a K-class parameter: which classes are carried by genuine
/// rank-`d` bundles is not checked. On odd spheres `K^0 = Z` and `c` must be
/// zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SphereBundleSpec {
    sphere_dim: BigInt,
    rank: BigInt,
    euler: BigInt,
}

impl SphereBundleSpec {
    /// Unvalidated constructor; see [`SphereBundleSpec::validate`].
    pub fn new(
        sphere_dim: impl Into<BigInt>,
        rank: impl Into<BigInt>,
        euler: impl Into<BigInt>,
    ) -> Self {
        SphereBundleSpec {
            sphere_dim: sphere_dim.into(),
            rank: rank.into(),
            euler: euler.into(),
        }
    }

    /// The trivial rank-`d` bundle over `S^n`.
    pub fn trivial(sphere_dim: impl Into<BigInt>, rank: impl Into<BigInt>) -> Self {
        Self::new(sphere_dim, rank, 0)
    }

    pub fn sphere_dim(&self) -> &BigInt {
        &self.sphere_dim
    }

    pub fn rank(&self) -> &BigInt {
        &self.rank
    }

    pub fn euler(&self) -> &BigInt {
        &self.euler
    }

    pub fn is_even_sphere(&self) -> bool {
        self.sphere_dim.is_even()
    }

    pub fn is_trivial_class(&self) -> bool {
        self.euler.is_zero()
    }

    pub fn validate(&self) -> Result<()> {
        validate(self)
    }

    pub fn k_class(&self) -> Result<TruncPoly> {
        k_class(self)
    }

    /// Reads the JSON spec file format, e.g.
    /// `{"sphere_dim": 4, "rank": 3, "euler": 1}` (`euler` defaults to 0).
    pub fn from_json(text: &str) -> Result<Self> {
        let file: SpecFile = serde_json::from_str(text)
            .map_err(|e| Error::parse(e.column().saturating_sub(1), e.to_string()))?;
        Ok(file.into())
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SpecFile::from(self)).expect("spec serialization")
    }
}

impl fmt::Display for SphereBundleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "S^{}, rank {}, K-class parameter {}",
            self.sphere_dim, self.rank, self.euler
        )
    }
}

/// On-disk form of a [`SphereBundleSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(with = "json_int")]
    pub sphere_dim: BigInt,
    #[serde(with = "json_int")]
    pub rank: BigInt,
    #[serde(
        default,
        with = "json_int_opt",
        skip_serializing_if = "Option::is_none"
    )]
    pub euler: Option<BigInt>,
}

impl From<SpecFile> for SphereBundleSpec {
    fn from(f: SpecFile) -> Self {
        SphereBundleSpec::new(f.sphere_dim, f.rank, f.euler.unwrap_or_default())
    }
}

impl From<&SphereBundleSpec> for SpecFile {
    fn from(s: &SphereBundleSpec) -> Self {
        SpecFile {
            sphere_dim: s.sphere_dim.clone(),
            rank: s.rank.clone(),
            euler: Some(s.euler.clone()),
        }
    }
}

pub fn validate(spec: &SphereBundleSpec) -> Result<()> {
    if !spec.sphere_dim.is_positive() {
        return Err(Error::NonpositiveDimension(spec.sphere_dim.to_string()));
    }
    if spec.rank < BigInt::from(2) {
        return Err(Error::RankTooSmall(spec.rank.to_string()));
    }
    if spec.sphere_dim.is_odd() && !spec.euler.is_zero() {
        return Err(Error::OddSphereNonzeroClass {
            sphere_dim: spec.sphere_dim.to_string(),
            euler: spec.euler.to_string(),
        });
    }
    Ok(())
}

/// `[E] = d + λc` in `K^0(S^n)`.
pub fn k_class(spec: &SphereBundleSpec) -> Result<TruncPoly> {
    validate(spec)?;
    Ok(TruncPoly::new(spec.rank.clone(), spec.euler.clone()))
}
