//! Coefficient objects of the sphere computation: the ring
//! `K^0(S^2n) ≅ Z[λ]/(λ²)`, the `d`-adic rationals `Z[1/d] ≅ K_0(O_d^0)`,
//! and the class `δ'_1(O_E)` as an integer matrix on `K^0(S^n) ⊗ Z[1/d]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bundles::SphereBundleSpec;
use crate::fgab::IntMatrix;
use crate::{Error, Result};

/// An element `z + λ·z1` of `Z[λ]/(λ²)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TruncPoly {
    pub z: BigInt,
    pub z1: BigInt,
}

impl TruncPoly {
    pub fn new(z: impl Into<BigInt>, z1: impl Into<BigInt>) -> Self {
        TruncPoly {
            z: z.into(),
            z1: z1.into(),
        }
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    /// The generator `λ`.
    pub fn lambda() -> Self {
        Self::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.z.is_zero() && self.z1.is_zero()
    }

    /// Coordinates in the ordered basis `(1, λ)`.
    pub fn coords(&self) -> [BigInt; 2] {
        [self.z.clone(), self.z1.clone()]
    }
}

pub fn tp_add(a: &TruncPoly, b: &TruncPoly) -> TruncPoly {
    TruncPoly {
        z: &a.z + &b.z,
        z1: &a.z1 + &b.z1,
    }
}

pub fn tp_mul(a: &TruncPoly, b: &TruncPoly) -> TruncPoly {
    TruncPoly {
        z: &a.z * &b.z,
        z1: &a.z * &b.z1 + &a.z1 * &b.z,
    }
}

impl Add for &TruncPoly {
    type Output = TruncPoly;
    fn add(self, rhs: &TruncPoly) -> TruncPoly {
        tp_add(self, rhs)
    }
}

impl Add for TruncPoly {
    type Output = TruncPoly;
    fn add(self, rhs: TruncPoly) -> TruncPoly {
        tp_add(&self, &rhs)
    }
}

impl Sub for &TruncPoly {
    type Output = TruncPoly;
    fn sub(self, rhs: &TruncPoly) -> TruncPoly {
        tp_add(self, &-rhs)
    }
}

impl Neg for &TruncPoly {
    type Output = TruncPoly;
    fn neg(self) -> TruncPoly {
        TruncPoly {
            z: -&self.z,
            z1: -&self.z1,
        }
    }
}

impl Mul for &TruncPoly {
    type Output = TruncPoly;
    fn mul(self, rhs: &TruncPoly) -> TruncPoly {
        tp_mul(self, rhs)
    }
}

impl Mul for TruncPoly {
    type Output = TruncPoly;
    fn mul(self, rhs: TruncPoly) -> TruncPoly {
        tp_mul(&self, &rhs)
    }
}

/// `d + c·λ`, omitting zero terms and unit coefficients on `λ`.
impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lambda_term = |c: &BigInt| {
            if c.is_one() {
                "λ".to_string()
            } else {
                format!("{c}·λ")
            }
        };
        match (self.z.is_zero(), self.z1.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.z),
            (true, false) => {
                if self.z1 == -BigInt::one() {
                    f.write_str("-λ")
                } else {
                    f.write_str(&lambda_term(&self.z1))
                }
            }
            (false, false) => {
                let sign = if self.z1.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}", self.z, sign, lambda_term(&self.z1.abs()))
            }
        }
    }
}

/// Matrix of `λ_E : z + λz' ↦ dz + λ(dz' + cz)` in the basis `(1, λ)`,
/// for a K-class `d + λc` of a bundle of rank `d ≥ 2`.
pub fn lambda_endo_matrix(kclass: &TruncPoly) -> Result<IntMatrix> {
    if kclass.z < BigInt::from(2) {
        return Err(Error::RankTooSmall(kclass.z.to_string()));
    }
    let d = &kclass.z;
    let c = &kclass.z1;
    IntMatrix::new(2, 2, vec![d.clone(), BigInt::zero(), c.clone(), d.clone()])
}

/// A `d`-adic rational `numerator / base^exponent`.
///
/// Values built through [`DadicScalar::new`] are canonical: either the
/// exponent is zero or `base` does not divide the numerator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DadicScalar {
    base: BigInt,
    numerator: BigInt,
    exponent: u64,
}

impl DadicScalar {
    pub fn new(
        base: impl Into<BigInt>,
        numerator: impl Into<BigInt>,
        exponent: u64,
    ) -> Result<Self> {
        let base = base.into();
        if base < BigInt::from(2) {
            return Err(Error::Invalid(format!(
                "d-adic base must be at least 2, got {base}"
            )));
        }
        Ok(dadic_normalize(&DadicScalar {
            base,
            numerator: numerator.into(),
            exponent,
        }))
    }

    /// Integer `n` viewed in `Z[1/base]`.
    pub fn integer(base: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<Self> {
        Self::new(base, n, 0)
    }

    pub fn base(&self) -> &BigInt {
        &self.base
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    fn check_base(&self, other: &DadicScalar) -> Result<()> {
        if self.base != other.base {
            return Err(Error::BaseMismatch(
                self.base.to_string(),
                other.base.to_string(),
            ));
        }
        Ok(())
    }

    /// Numerator after rescaling to denominator `base^exponent`, which must
    /// be at least the current exponent.
    fn lifted(&self, exponent: u64) -> BigInt {
        &self.numerator * pow(&self.base, exponent - self.exponent)
    }

    pub fn add(&self, other: &DadicScalar) -> Result<DadicScalar> {
        self.check_base(other)?;
        let k = self.exponent.max(other.exponent);
        Ok(dadic_normalize(&DadicScalar {
            base: self.base.clone(),
            numerator: self.lifted(k) + other.lifted(k),
            exponent: k,
        }))
    }

    pub fn mul(&self, other: &DadicScalar) -> Result<DadicScalar> {
        self.check_base(other)?;
        Ok(dadic_normalize(&DadicScalar {
            base: self.base.clone(),
            numerator: &self.numerator * &other.numerator,
            exponent: self.exponent + other.exponent,
        }))
    }

    /// Scales by an integer.
    pub fn scale(&self, n: &BigInt) -> DadicScalar {
        dadic_normalize(&DadicScalar {
            base: self.base.clone(),
            numerator: &self.numerator * n,
            exponent: self.exponent,
        })
    }
}

fn pow(base: &BigInt, e: u64) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// Cancels factors of the base from the numerator while the exponent allows.
pub fn dadic_normalize(x: &DadicScalar) -> DadicScalar {
    let mut numerator = x.numerator.clone();
    let mut exponent = x.exponent;
    if numerator.is_zero() {
        exponent = 0;
    }
    while exponent > 0 {
        let (q, r) = numerator.div_rem(&x.base);
        if !r.is_zero() {
            break;
        }
        numerator = q;
        exponent -= 1;
    }
    DadicScalar {
        base: x.base.clone(),
        numerator,
        exponent,
    }
}

pub fn dadic_eq(x: &DadicScalar, y: &DadicScalar) -> Result<bool> {
    x.check_base(y)?;
    Ok(dadic_normalize(x) == dadic_normalize(y))
}

impl fmt::Display for DadicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "{}/{}", self.numerator, self.base),
            k => write!(f, "{}/{}^{}", self.numerator, self.base, k),
        }
    }
}

/// The class `δ'_1(O_E)`, stored as the integer matrix of the induced
/// endomorphism `β_E = λ_E ⊗ 1` of `K^0(S^n) ⊗ Z[1/d]`.
///
/// On even spheres the matrix is `[[d, 0], [c, d]]` in the basis `(1, λ)`;
/// on odd spheres `K^0 = Z` and the matrix is `[d]`. The `Z[1/d]` tensor
/// factor is carried by `base` alone, since `β_E` acts as the identity on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Delta1Class {
    sphere_dim: BigInt,
    base: BigInt,
    matrix: IntMatrix,
}

impl Delta1Class {
    pub fn sphere_dim(&self) -> &BigInt {
        &self.sphere_dim
    }

    pub fn base(&self) -> &BigInt {
        &self.base
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `β_E((z + λz') ⊗ q) = λ_E(z + λz') ⊗ q`. On odd spheres only the
    /// degree-zero part exists and `x.z1` must be zero.
    pub fn apply_elementary(
        &self,
        x: &TruncPoly,
        q: &DadicScalar,
    ) -> Result<(TruncPoly, DadicScalar)> {
        if q.base() != &self.base {
            return Err(Error::BaseMismatch(
                self.base.to_string(),
                q.base().to_string(),
            ));
        }
        let image = if self.matrix.rows() == 2 {
            let v = self.matrix.apply(&x.coords())?;
            TruncPoly::new(v[0].clone(), v[1].clone())
        } else {
            if !x.z1.is_zero() {
                return Err(Error::Invalid(
                    "K^0 of an odd sphere has no λ component".to_string(),
                ));
            }
            TruncPoly::new(&self.matrix[(0, 0)] * &x.z, 0)
        };
        Ok((image, q.clone()))
    }
}

impl fmt::Display for Delta1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] base={}", self.matrix, self.base)
    }
}

pub fn delta1_class(spec: &SphereBundleSpec) -> Result<Delta1Class> {
    spec.validate()?;
    let matrix = if spec.is_even_sphere() {
        lambda_endo_matrix(&spec.k_class()?)?
    } else {
        IntMatrix::new(1, 1, vec![spec.rank().clone()])?
    };
    Ok(Delta1Class {
        sphere_dim: spec.sphere_dim().clone(),
        base: spec.rank().clone(),
        matrix,
    })
}
