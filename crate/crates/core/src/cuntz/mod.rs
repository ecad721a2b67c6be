//! Symbolic calculus in the Cuntz algebra `O_d`.
//!
//! Elements are finite rational combinations of monomials `S_μ S_ν*`, where
//! `S_μ = S_{μ_1} ⋯ S_{μ_k}` for a word `μ` over `{1, …, d}`. Products are
//! reduced with `S_i* S_j = δ_ij`, so every stored monomial is already of
//! the form `S_μ S_ν*`. The remaining relation `Σ_i S_i S_i* = 1` makes this
//! representation non-unique; [`CuntzElement::equals`] and
//! [`CuntzElement::normal_form`] decide it exactly.
//!
//! The gauge action `α_z(S_i) = z S_i` scales `S_μ S_ν*` by `z^{|μ|-|ν|}`,
//! giving the `Z`-grading exposed by [`CuntzElement::degree`] and
//! [`CuntzElement::spectral_component`].

mod normal;
mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub use parse::parse_element;

/// A word `μ = μ_1 ⋯ μ_k` of generator indices (1-based). The empty word is
/// the unit.
///
/// Words are ordered by length first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PathWord(Vec<u32>);

impl PathWord {
    pub fn empty() -> Self {
        PathWord(Vec::new())
    }

    pub fn new(letters: Vec<u32>) -> Self {
        PathWord(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &PathWord) -> PathWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        PathWord(v)
    }

    /// The remainder `ρ` when `self = prefix · ρ`.
    pub fn strip_prefix(&self, prefix: &PathWord) -> Option<PathWord> {
        self.0
            .strip_prefix(prefix.0.as_slice())
            .map(|r| PathWord(r.to_vec()))
    }

    fn check_base(&self, d: usize) -> Result<()> {
        match self.0.iter().find(|&&i| i == 0 || i as usize > d) {
            Some(i) => Err(Error::Invalid(format!(
                "generator index {i} outside 1..={d}"
            ))),
            None => Ok(()),
        }
    }
}

impl From<&[u32]> for PathWord {
    fn from(v: &[u32]) -> Self {
        PathWord(v.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for PathWord {
    fn from(v: [u32; N]) -> Self {
        PathWord(v.to_vec())
    }
}

impl Ord for PathWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PathWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The monomial `S_μ S_ν*`, keyed as `(μ, ν)`.
pub type MonomialKey = (PathWord, PathWord);

/// Degree of an element under the gauge action.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Homogeneous(i64),
    Mixed,
}

/// A finite combination `Σ c_{μν} S_μ S_ν*` in `O_d` with rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuntzElement {
    base: usize,
    terms: BTreeMap<MonomialKey, BigRational>,
}

fn monomial_degree((mu, nu): &MonomialKey) -> i64 {
    mu.len() as i64 - nu.len() as i64
}

impl CuntzElement {
    pub fn zero(base: usize) -> Result<Self> {
        if base < 2 {
            return Err(Error::Invalid(format!(
                "the Cuntz algebra needs d >= 2 generators, got {base}"
            )));
        }
        Ok(CuntzElement {
            base,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(base: usize) -> Result<Self> {
        Self::scalar(base, BigRational::one())
    }

    pub fn scalar(base: usize, q: BigRational) -> Result<Self> {
        Self::monomial(base, PathWord::empty(), PathWord::empty(), q)
    }

    /// The isometry `S_i`, `1 <= i <= base`.
    pub fn generator(base: usize, i: u32) -> Result<Self> {
        Self::monomial(
            base,
            PathWord::new(vec![i]),
            PathWord::empty(),
            BigRational::one(),
        )
    }

    /// `coef · S_μ S_ν*`.
    pub fn monomial(base: usize, mu: PathWord, nu: PathWord, coef: BigRational) -> Result<Self> {
        let mut e = Self::zero(base)?;
        mu.check_base(base)?;
        nu.check_base(base)?;
        e.add_term((mu, nu), coef);
        Ok(e)
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// Stored reduced terms in `(|μ|, μ, |ν|, ν)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&MonomialKey, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when no term is stored. Use [`CuntzElement::is_zero`] to decide
    /// whether the element vanishes in `O_d`.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: MonomialKey, coef: BigRational) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_base(&self, other: &CuntzElement) -> Result<()> {
        if self.base != other.base {
            return Err(Error::BaseMismatch(
                self.base.to_string(),
                other.base.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &CuntzElement) -> Result<CuntzElement> {
        self.same_base(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CuntzElement) -> Result<CuntzElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CuntzElement {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, q: &BigRational) -> CuntzElement {
        let terms = if q.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(k, c)| (k.clone(), c * q)).collect()
        };
        CuntzElement {
            base: self.base,
            terms,
        }
    }

    /// Product, reduced with `S_ν* S_α = S_ρ` if `α = νρ`, `S_ρ*` if
    /// `ν = αρ`, and `0` otherwise.
    pub fn mul(&self, other: &CuntzElement) -> Result<CuntzElement> {
        self.same_base(other)?;
        let mut out = CuntzElement {
            base: self.base,
            terms: BTreeMap::new(),
        };
        for ((mu, nu), c) in &self.terms {
            for ((alpha, beta), e) in &other.terms {
                let key = if let Some(rho) = alpha.strip_prefix(nu) {
                    (mu.concat(&rho), beta.clone())
                } else if let Some(rho) = nu.strip_prefix(alpha) {
                    (mu.clone(), beta.concat(&rho))
                } else {
                    continue;
                };
                out.add_term(key, c * e);
            }
        }
        Ok(out)
    }

    /// Adjoint: `(c S_μ S_ν*)* = c S_ν S_μ*` (coefficients are real).
    pub fn star(&self) -> CuntzElement {
        CuntzElement {
            base: self.base,
            terms: self
                .terms
                .iter()
                .map(|((mu, nu), c)| ((nu.clone(), mu.clone()), c.clone()))
                .collect(),
        }
    }

    /// Decides equality in `O_d`.
    ///
    /// The answer is the one obtained by expanding both sides to a common
    /// depth `N` with `S_μ S_ν* = Σ_{|w| = N-|ν|} S_{μw} S_{νw}*` and
    /// comparing coefficients, which is exact because the monomials with
    /// `|ν| = N` are linearly independent. The expansion is evaluated
    /// sparsely rather than materialised.
    pub fn equals(&self, other: &CuntzElement) -> Result<bool> {
        Ok(self.sub(other)?.is_zero())
    }

    /// Whether the element is zero in `O_d`.
    pub fn is_zero(&self) -> bool {
        normal::is_zero(self)
    }

    /// Canonical representative: each monomial family `S_μ S_ν*` that would
    /// expand to a constant coefficient is contracted as far as possible.
    /// Two elements are equal in `O_d` iff their normal forms coincide.
    pub fn normal_form(&self) -> CuntzElement {
        normal::normal_form(self)
    }

    /// Rewrites every monomial with `|ν| < depth` as a sum of monomials with
    /// `|ν| = depth`. Fails if some monomial is already deeper.
    pub fn expand(&self, depth: usize) -> Result<CuntzElement> {
        let mut out = CuntzElement {
            base: self.base,
            terms: BTreeMap::new(),
        };
        for ((mu, nu), c) in &self.terms {
            if nu.len() > depth {
                return Err(Error::Invalid(format!(
                    "monomial with |ν| = {} is deeper than {depth}",
                    nu.len()
                )));
            }
            for w in words(self.base, depth - nu.len()) {
                out.add_term((mu.concat(&w), nu.concat(&w)), c.clone());
            }
        }
        Ok(out)
    }

    /// Longest `ν` among stored monomials.
    pub fn max_adjoint_len(&self) -> usize {
        self.terms.keys().map(|(_, nu)| nu.len()).max().unwrap_or(0)
    }

    pub fn degree(&self) -> Degree {
        let mut degrees = self.terms.keys().map(monomial_degree);
        let Some(first) = degrees.next() else {
            return Degree::Homogeneous(0);
        };
        if degrees.all(|k| k == first) {
            Degree::Homogeneous(first)
        } else {
            Degree::Mixed
        }
    }

    /// The part of degree `k`, i.e. the spectral subspace where
    /// `α_z(t) = z^k t`.
    pub fn spectral_component(&self, k: i64) -> CuntzElement {
        CuntzElement {
            base: self.base,
            terms: self
                .terms
                .iter()
                .filter(|(key, _)| monomial_degree(key) == k)
                .map(|(key, c)| (key.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degrees that occur among stored monomials, ascending.
    pub fn occurring_degrees(&self) -> Vec<i64> {
        let mut ks: Vec<i64> = self.terms.keys().map(monomial_degree).collect();
        ks.sort_unstable();
        ks.dedup();
        ks
    }
}

/// All words of a given length over `{1, …, d}` in lexicographic order.
fn words(d: usize, len: usize) -> Vec<PathWord> {
    let mut out = vec![PathWord::empty()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=d as u32).map(move |i| {
                    let mut v = w.0.clone();
                    v.push(i);
                    PathWord(v)
                })
            })
            .collect();
    }
    out
}

pub fn mul(a: &CuntzElement, b: &CuntzElement) -> Result<CuntzElement> {
    a.mul(b)
}

pub fn star(a: &CuntzElement) -> CuntzElement {
    a.star()
}

pub fn equals(a: &CuntzElement, b: &CuntzElement) -> Result<bool> {
    a.equals(b)
}

pub fn degree(a: &CuntzElement) -> Degree {
    a.degree()
}

pub fn spectral_component(a: &CuntzElement, k: i64) -> CuntzElement {
    a.spectral_component(k)
}

fn write_monomial(f: &mut fmt::Formatter<'_>, (mu, nu): &MonomialKey) -> fmt::Result {
    let mut factors: Vec<String> = mu.letters().iter().map(|i| format!("s{i}")).collect();
    factors.extend(nu.letters().iter().rev().map(|i| format!("s{i}*")));
    f.write_str(&factors.join(" "))
}

/// Expression syntax accepted by [`parse_element`]: `s1 s2* - 1/2 s1 s1*`.
impl fmt::Display for CuntzElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (key, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let unit = key.0.is_empty() && key.1.is_empty();
            if unit {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs} ")?;
                }
                write_monomial(f, key)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) fn rational(n: impl Into<num_bigint::BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}
