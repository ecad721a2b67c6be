//! Test-only oracles and random generators shared by the integration suites.
//!
//! Nothing here calls into the library's Smith normal form, normal-form or
//! zero-test code paths.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use cpk::cuntz::{CuntzElement, PathWord};
use cpk::fgab::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Index of the lattice `A·Z²` in `Z²` and the exponent of the quotient,
/// found by enumerating the box `[0, |det|)²`.
///
/// `v` and `w` lie in the same coset iff `adj(A)(v - w) ≡ 0 mod det`, so the
/// number of distinct residues `adj(A)·v mod |det|` over the box is the index.
pub fn coset_census_2x2(a: [[i64; 2]; 2]) -> (u64, u64) {
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    assert!(det != 0, "singular lattice");
    let n = det.abs();
    let adj = [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]];
    let mut keys = HashSet::new();
    let mut exponent = 1u64;
    for x in 0..n {
        for y in 0..n {
            let k0 = (adj[0][0] * x + adj[0][1] * y).rem_euclid(n);
            let k1 = (adj[1][0] * x + adj[1][1] * y).rem_euclid(n);
            keys.insert((k0, k1));
            let order = n / n.gcd(&k0).gcd(&k1);
            exponent = exponent.max(order as u64);
        }
    }
    (keys.len() as u64, exponent)
}

pub fn mat2(a: [[i64; 2]; 2]) -> IntMatrix {
    IntMatrix::from_rows(&a)
}

pub fn random_matrix<R: Rng>(rng: &mut R, max_dim: usize, bound: i64) -> IntMatrix {
    let rows = rng.gen_range(0..=max_dim);
    let cols = rng.gen_range(0..=max_dim);
    let data = (0..rows * cols)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntMatrix::new(rows, cols, data).unwrap()
}

/// Random product of elementary integer row operations applied to `I_n`.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            m[(0, 0)] = BigInt::from(-1);
        }
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let k = BigInt::from(rng.gen_range(-3i64..=3));
        for c in 0..n {
            let v = &m[(i, c)] + &k * &m[(j, c)];
            m[(i, c)] = v;
        }
        if rng.gen_bool(0.2) {
            for c in 0..n {
                let v = -&m[(i, c)];
                m[(i, c)] = v;
            }
        }
    }
    m
}

pub fn random_word<R: Rng>(rng: &mut R, d: usize, len: usize) -> PathWord {
    PathWord::new((0..len).map(|_| rng.gen_range(1..=d as u32)).collect())
}

pub fn random_coef<R: Rng>(rng: &mut R) -> BigRational {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-4i64..=4);
    }
    let den = *[1i64, 1, 1, 2, 3].get(rng.gen_range(0..5)).unwrap();
    BigRational::new(n.into(), den.into())
}

/// Up to `max_terms` monomials with `|μ|, |ν| <= max_len`.
pub fn random_element<R: Rng>(
    rng: &mut R,
    d: usize,
    max_len: usize,
    max_terms: usize,
) -> CuntzElement {
    let mut e = CuntzElement::zero(d).unwrap();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let mu = {
            let len = rng.gen_range(0..=max_len);
            random_word(rng, d, len)
        };
        let nu = {
            let len = rng.gen_range(0..=max_len);
            random_word(rng, d, len)
        };
        let m = CuntzElement::monomial(d, mu, nu, random_coef(rng)).unwrap();
        e = e.add(&m).unwrap();
    }
    e
}

/// Homogeneous element of the given degree.
pub fn random_homogeneous<R: Rng>(
    rng: &mut R,
    d: usize,
    degree: i64,
    max_len: usize,
    max_terms: usize,
) -> CuntzElement {
    let mut e = CuntzElement::zero(d).unwrap();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let lo = (-degree).max(0) as usize;
        let hi = (max_len as i64 - degree.max(0)).max(lo as i64) as usize;
        let nu_len = rng.gen_range(lo..=hi);
        let mu_len = (nu_len as i64 + degree) as usize;
        let mu = random_word(rng, d, mu_len);
        let nu = random_word(rng, d, nu_len);
        e = e
            .add(&CuntzElement::monomial(d, mu, nu, random_coef(rng)).unwrap())
            .unwrap();
    }
    e
}

/// `c·(S_μ S_ν* - Σ_i S_{μi} S_{νi}*)`, a representation of zero.
pub fn zero_relation(d: usize, mu: &PathWord, nu: &PathWord, c: BigRational) -> CuntzElement {
    let mut e = CuntzElement::monomial(d, mu.clone(), nu.clone(), c.clone()).unwrap();
    for i in 1..=d as u32 {
        let w = PathWord::new(vec![i]);
        let m = CuntzElement::monomial(d, mu.concat(&w), nu.concat(&w), -c.clone()).unwrap();
        e = e.add(&m).unwrap();
    }
    e
}

/// Literal uniform-depth comparison: expand every monomial of both sides to
/// `|ν| = N` and compare the coefficient maps. Exponential in `N`; only for
/// small inputs.
pub fn equal_by_full_expansion(a: &CuntzElement, b: &CuntzElement) -> bool {
    let d = a.base() as u32;
    let depth = a
        .terms()
        .chain(b.terms())
        .map(|((_, nu), _)| nu.len())
        .max()
        .unwrap_or(0);
    let mut acc: BTreeMap<(Vec<u32>, Vec<u32>), BigRational> = BTreeMap::new();
    let mut push = |e: &CuntzElement, sign: &BigRational| {
        for ((mu, nu), c) in e.terms() {
            let mut suffixes: Vec<Vec<u32>> = vec![Vec::new()];
            for _ in nu.len()..depth {
                suffixes = suffixes
                    .into_iter()
                    .flat_map(|w| {
                        (1..=d).map(move |i| {
                            let mut w = w.clone();
                            w.push(i);
                            w
                        })
                    })
                    .collect();
            }
            for w in suffixes {
                let mut m = mu.letters().to_vec();
                m.extend(&w);
                let mut n = nu.letters().to_vec();
                n.extend(&w);
                *acc.entry((m, n)).or_insert_with(BigRational::zero) += c * sign;
            }
        }
    };
    push(a, &BigRational::one());
    push(b, &-BigRational::one());
    acc.values().all(Zero::is_zero)
}
