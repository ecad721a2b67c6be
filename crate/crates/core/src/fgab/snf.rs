use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Smith normal form `U·A·V = D` of an integer matrix `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    u: IntMatrix,
    d: IntMatrix,
    v: IntMatrix,
}

impl SnfDecomposition {
    /// Left unimodular factor, `rows x rows`.
    pub fn u(&self) -> &IntMatrix {
        &self.u
    }

    /// Diagonal factor with the shape of the source matrix.
    pub fn d(&self) -> &IntMatrix {
        &self.d
    }

    /// Right unimodular factor, `cols x cols`.
    pub fn v(&self) -> &IntMatrix {
        &self.v
    }

    pub fn source_rows(&self) -> usize {
        self.d.rows()
    }

    pub fn source_cols(&self) -> usize {
        self.d.cols()
    }

    /// The `min(rows, cols)` diagonal entries of `D`, zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    /// Nonzero diagonal entries `d_1 | d_2 | ... | d_r`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Computes the Smith normal form of `a`.
///
/// Each step moves a nonzero entry of minimal absolute value to the pivot,
/// clears its row and column with Bézout combinations and, if some remaining
/// entry is not a multiple of the pivot, folds that row into the pivot row
/// and repeats. The pivot only ever shrinks to a proper divisor, which bounds
/// the number of rounds.
pub fn smith_normal_form(a: &IntMatrix) -> SnfDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_abs_entry(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            clear_pivot_cross(&mut d, &mut u, &mut v, t);
            match non_multiple_entry(&d, t) {
                Some(i) => {
                    let one = BigInt::one();
                    let zero = BigInt::zero();
                    d.combine_rows(t, i, [&one, &one, &zero, &one]);
                    u.combine_rows(t, i, [&one, &one, &zero, &one]);
                }
                None => break,
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    SnfDecomposition { u, d, v }
}

fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, b)| ax < *b) {
                best = Some(((i, j), ax));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

/// Row index of an entry strictly below-right of the pivot that the pivot
/// does not divide.
fn non_multiple_entry(a: &IntMatrix, t: usize) -> Option<usize> {
    let p = &a[(t, t)];
    (t + 1..a.rows()).find(|&i| (t + 1..a.cols()).any(|j| !a[(i, j)].is_multiple_of(p)))
}

/// Zeroes column `t` below and row `t` right of the pivot `(t, t)`.
fn clear_pivot_cross(d: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize) {
    loop {
        let mut dirty = false;
        for i in t + 1..d.rows() {
            if d[(i, t)].is_zero() {
                continue;
            }
            let coef = bezout_block(&d[(t, t)], &d[(i, t)]);
            let c = [&coef[0], &coef[1], &coef[2], &coef[3]];
            d.combine_rows(t, i, c);
            u.combine_rows(t, i, c);
        }
        for j in t + 1..d.cols() {
            if d[(t, j)].is_zero() {
                continue;
            }
            let coef = bezout_block(&d[(t, t)], &d[(t, j)]);
            // column ops that change column t may refill column t
            dirty |= !coef[1].is_zero();
            let c = [&coef[0], &coef[1], &coef[2], &coef[3]];
            d.combine_cols(t, j, c);
            v.combine_cols(t, j, c);
        }
        if !dirty {
            return;
        }
    }
}

/// Unimodular 2x2 block `[[s, r], [-x/g, p/g]]` sending `(p, x)` to `(g, 0)`
/// with `g = gcd(p, x)`. When `p | x` it is the plain elimination
/// `[[1, 0], [-x/p, 1]]`, so the pivot is left untouched.
fn bezout_block(p: &BigInt, x: &BigInt) -> [BigInt; 4] {
    if x.is_multiple_of(p) {
        return [BigInt::one(), BigInt::zero(), -(x / p), BigInt::one()];
    }
    let e = p.extended_gcd(x);
    let g = e.gcd;
    [e.x, e.y, -(x / &g), p / &g]
}
