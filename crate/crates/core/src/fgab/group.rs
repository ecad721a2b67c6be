use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{smith_normal_form, IntMatrix};
use crate::{Error, Result};

/// A finitely generated abelian group `Z^r ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` in
/// invariant-factor form: every `t_i ≥ 2` and `t_i | t_{i+1}`.
///
/// The form is canonical, so structural equality is isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

/// Order of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(BigInt),
    Infinite,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        FgAbGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/n`; `Z` when `n = 0` and the trivial group when `|n| = 1`.
    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        Self::from_cyclic_factors(&[n.into()])
    }

    /// Direct sum of cyclic groups `Z/n_i` in any order, where `n_i = 0`
    /// stands for `Z`. The result is brought into invariant-factor form.
    pub fn from_cyclic_factors(factors: &[BigInt]) -> Self {
        let free_rank = factors.iter().filter(|n| n.is_zero()).count();
        let finite: Vec<BigInt> = factors
            .iter()
            .filter(|n| !n.is_zero())
            .map(Signed::abs)
            .collect();
        let snf = smith_normal_form(&IntMatrix::diagonal(&finite));
        Self::from_invariant_chain(free_rank, snf.invariant_factors())
    }

    /// Builds the group from a chain that already satisfies divisibility
    /// (unit factors are dropped).
    pub(crate) fn from_invariant_chain(free_rank: usize, chain: Vec<BigInt>) -> Self {
        let torsion: Vec<BigInt> = chain.into_iter().filter(|t| !t.is_one()).collect();
        debug_assert!(torsion.iter().all(|t| t > &BigInt::one()));
        debug_assert!(torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        FgAbGroup { free_rank, torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn order(&self) -> GroupOrder {
        if self.free_rank > 0 {
            GroupOrder::Infinite
        } else {
            GroupOrder::Finite(self.torsion.iter().product())
        }
    }

    /// Direct sum.
    pub fn sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut factors: Vec<BigInt> = self.torsion.clone();
        factors.extend(other.torsion.iter().cloned());
        let torsion = Self::from_cyclic_factors(&factors);
        FgAbGroup {
            free_rank: self.free_rank + other.free_rank,
            torsion: torsion.torsion,
        }
    }
}

pub fn group_order(g: &FgAbGroup) -> GroupOrder {
    g.order()
}

pub fn groups_isomorphic(g: &FgAbGroup, h: &FgAbGroup) -> bool {
    g == h
}

/// Renders as `Z^r + Z/t1 + Z/t2`, with `Z` for rank one and `0` for the
/// trivial group.
impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        f.write_str(&parts.join(" + "))
    }
}

/// Parses any `+`-separated sum of `0`, `Z`, `Z^r` and `Z/n` summands and
/// canonicalizes it.
impl FromStr for FgAbGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut pos = 0;
        for part in s.split('+') {
            let lead = part.len() - part.trim_start().len();
            let at = pos + lead;
            let token = part.trim();
            pos += part.len() + 1;
            if token == "0" {
                continue;
            }
            if token == "Z" {
                factors.push(BigInt::zero());
            } else if let Some(r) = token.strip_prefix("Z^") {
                let r: usize = r
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(at, format!("bad free rank in '{token}'")))?;
                factors.extend(std::iter::repeat_n(BigInt::zero(), r));
            } else if let Some(n) = token.strip_prefix("Z/") {
                let n = BigInt::from_str(n.trim())
                    .ok()
                    .filter(|n| n.is_positive())
                    .ok_or_else(|| Error::parse(at, format!("bad cyclic order in '{token}'")))?;
                factors.push(n);
            } else {
                return Err(Error::parse(at, format!("unrecognised summand '{token}'")));
            }
        }
        Ok(Self::from_cyclic_factors(&factors))
    }
}
