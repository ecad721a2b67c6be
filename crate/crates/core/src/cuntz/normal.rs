//! Canonical forms modulo `Σ_i S_i S_i* = 1`.
//!
//! Expansion sends `(μ, ν)` to `(μw, νw)`, so monomials split into families
//! indexed by a root `(μ₀, ν₀)` whose words do not end in a common letter;
//! the family member `(μ₀u, ν₀u)` is addressed by its suffix `u`. Distinct
//! families never meet after expansion. Within a family the element is a
//! function on a trie of suffixes: the coefficient it contributes at depth
//! `N` below the root is the sum of the coefficients along the path, and a
//! subtree is *uniform* when that sum is the same on all of its leaves.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::{CuntzElement, MonomialKey, PathWord};

#[derive(Default)]
struct Node {
    coef: BigRational,
    children: BTreeMap<u32, Node>,
}

enum Shape {
    Uniform(BigRational),
    Split(Vec<(Vec<u32>, BigRational)>),
}

fn families(a: &CuntzElement) -> BTreeMap<MonomialKey, Node> {
    let mut out: BTreeMap<MonomialKey, Node> = BTreeMap::new();
    for ((mu, nu), c) in &a.terms {
        let (m, n) = (mu.letters(), nu.letters());
        let common = m
            .iter()
            .rev()
            .zip(n.iter().rev())
            .take_while(|(x, y)| x == y)
            .count();
        let root = (
            PathWord::from(&m[..m.len() - common]),
            PathWord::from(&n[..n.len() - common]),
        );
        let mut node = out.entry(root).or_default();
        for &letter in &m[m.len() - common..] {
            node = node.children.entry(letter).or_default();
        }
        node.coef += c;
    }
    out
}

fn shape(node: &Node, inherited: &BigRational, d: u32, prefix: &mut Vec<u32>) -> Shape {
    let sum = inherited + &node.coef;
    if node.children.is_empty() {
        return Shape::Uniform(sum);
    }
    let mut parts = Vec::with_capacity(d as usize);
    for letter in 1..=d {
        let part = match node.children.get(&letter) {
            Some(child) => {
                prefix.push(letter);
                let s = shape(child, &sum, d, prefix);
                prefix.pop();
                s
            }
            None => Shape::Uniform(sum.clone()),
        };
        parts.push(part);
    }
    if let Shape::Uniform(first) = &parts[0] {
        if parts
            .iter()
            .all(|p| matches!(p, Shape::Uniform(q) if q == first))
        {
            return Shape::Uniform(first.clone());
        }
    }
    let mut terms = Vec::new();
    for (letter, part) in (1..=d).zip(parts) {
        match part {
            Shape::Uniform(q) => {
                if !q.is_zero() {
                    let mut u = prefix.clone();
                    u.push(letter);
                    terms.push((u, q));
                }
            }
            Shape::Split(mut t) => terms.append(&mut t),
        }
    }
    Shape::Split(terms)
}

/// Every family is either uniform on its whole trie (one term at the root,
/// dropped if zero) or split into maximal uniform subtrees.
pub(super) fn normal_form(a: &CuntzElement) -> CuntzElement {
    let d = a.base as u32;
    let mut out = CuntzElement {
        base: a.base,
        terms: BTreeMap::new(),
    };
    for ((mu0, nu0), trie) in families(a) {
        let mut prefix = Vec::new();
        let terms = match shape(&trie, &BigRational::zero(), d, &mut prefix) {
            Shape::Uniform(q) => vec![(Vec::new(), q)],
            Shape::Split(t) => t,
        };
        for (u, q) in terms {
            let u = PathWord::new(u);
            out.add_term((mu0.concat(&u), nu0.concat(&u)), q);
        }
    }
    out
}

fn vanishes(node: &Node, inherited: &BigRational, d: u32) -> bool {
    let sum = inherited + &node.coef;
    let covered = node.children.len() == d as usize;
    if !covered && !sum.is_zero() {
        return false;
    }
    node.children.values().all(|c| vanishes(c, &sum, d))
}

/// Zero test without building the normal form: every leaf of every family
/// must receive total coefficient zero.
pub(super) fn is_zero(a: &CuntzElement) -> bool {
    let d = a.base as u32;
    families(a)
        .values()
        .all(|trie| vanishes(trie, &BigRational::zero(), d))
}
