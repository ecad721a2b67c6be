//! Exact linear algebra over the integers.
//!
//! Conventions: [`kernel`] is the kernel of `A` acting on column vectors
//! `Z^cols -> Z^rows`; [`cokernel`] is `Z^cols` modulo the row lattice of
//! `A` (the image of `x ↦ xA` from `Z^rows`). For square matrices both sides
//! agree with the column-action cokernel, since `A` and `Aᵀ` share their
//! Smith normal form.

mod group;
mod matrix;
mod snf;

pub use group::{group_order, groups_isomorphic, FgAbGroup, GroupOrder};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SnfDecomposition};

/// `Z^cols / (row lattice of a)`. The `0 x n` matrix has cokernel `Z^n`.
pub fn cokernel(a: &IntMatrix) -> FgAbGroup {
    let snf = smith_normal_form(a);
    let factors = snf.invariant_factors();
    FgAbGroup::from_invariant_chain(a.cols() - factors.len(), factors)
}

/// Kernel of `a` on `Z^cols`; always free of rank `cols - rank(a)`.
pub fn kernel(a: &IntMatrix) -> FgAbGroup {
    FgAbGroup::free(a.cols() - smith_normal_form(a).rank())
}

/// A `Z`-basis of the kernel of `a`, as the columns of a
/// `cols x (cols - rank)` matrix.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    let n = a.cols();
    let v = snf.v();
    let mut basis = IntMatrix::zeros(n, n - r);
    for i in 0..n {
        for j in r..n {
            basis[(i, j - r)] = v[(i, j)].clone();
        }
    }
    basis
}
