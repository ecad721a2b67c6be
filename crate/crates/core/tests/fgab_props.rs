mod common;

use cpk::fgab::{
    cokernel, kernel, kernel_basis, smith_normal_form, FgAbGroup, GroupOrder, IntMatrix,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{coset_census_2x2, mat2, random_unimodular};

fn arb_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
            IntMatrix::new(r, c, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

fn arb_square(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim).prop_flat_map(move |n| {
        prop::collection::vec(-bound..=bound, n * n).prop_map(move |v| {
            IntMatrix::new(n, n, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_invariants(a in arb_matrix(6, 50)) {
        let snf = smith_normal_form(&a);
        let uav = snf.u().mul(&a).unwrap().mul(snf.v()).unwrap();
        prop_assert_eq!(&uav, snf.d());
        prop_assert_eq!(snf.u().determinant().unwrap().abs(), BigInt::from(1));
        prop_assert_eq!(snf.v().determinant().unwrap().abs(), BigInt::from(1));
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if i != j {
                    prop_assert!(snf.d()[(i, j)].is_zero());
                }
            }
        }
        let diag = snf.diagonal();
        prop_assert!(diag.iter().all(|x| !x.is_negative()));
        // nonzero entries come first and form a divisor chain
        let r = snf.rank();
        prop_assert!(diag[r..].iter().all(Zero::is_zero));
        for w in diag[..r].windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn snf_is_deterministic(a in arb_matrix(4, 20)) {
        prop_assert_eq!(smith_normal_form(&a), smith_normal_form(&a));
    }

    #[test]
    fn cokernel_order_is_abs_det(a in arb_square(5, 30)) {
        let det = a.determinant().unwrap();
        let order = cokernel(&a).order();
        if det.is_zero() {
            prop_assert_eq!(order, GroupOrder::Infinite);
        } else {
            prop_assert_eq!(order, GroupOrder::Finite(det.abs()));
        }
    }

    #[test]
    fn kernel_trivial_iff_nonsingular(a in arb_square(5, 4)) {
        let det = a.determinant().unwrap();
        prop_assert_eq!(kernel(&a).is_trivial(), !det.is_zero());
    }

    #[test]
    fn kernel_rank_and_basis(a in arb_matrix(5, 6)) {
        let k = kernel(&a);
        prop_assert!(k.torsion().is_empty());
        let basis = kernel_basis(&a);
        prop_assert_eq!(basis.cols(), k.free_rank());
        prop_assert!(a.mul(&basis).unwrap().is_zero());
        // basis columns are independent: cokernel of basisᵀ has free part of the right size
        let cut = cokernel(&basis.transpose());
        prop_assert_eq!(cut.free_rank(), a.cols() - k.free_rank());
    }

    #[test]
    fn cokernel_unimodular_invariance(a in arb_matrix(5, 20), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_unimodular(&mut rng, a.rows(), 8);
        let q = random_unimodular(&mut rng, a.cols(), 8);
        let b = p.mul(&a).unwrap().mul(&q).unwrap();
        prop_assert_eq!(cokernel(&b), cokernel(&a));
        prop_assert_eq!(kernel(&b), kernel(&a));
    }

    #[test]
    fn group_text_round_trip(free in 0usize..4, factors in prop::collection::vec(0i64..40, 0..5)) {
        let mut all: Vec<BigInt> = factors.into_iter().map(BigInt::from).collect();
        all.extend(std::iter::repeat_n(BigInt::zero(), free));
        let g = FgAbGroup::from_cyclic_factors(&all);
        prop_assert_eq!(g.to_string().parse::<FgAbGroup>().unwrap(), g);
    }
}

#[test]
fn coset_oracle_agrees_on_2x2() {
    let mut checked = 0;
    for a in -6i64..=6 {
        for b in [-3i64, 0, 2] {
            for c in [-2i64, 0, 1, 5] {
                for d in -6i64..=6 {
                    let det = a * d - b * c;
                    if det == 0 || det.abs() > 64 {
                        continue;
                    }
                    let m = [[a, b], [c, d]];
                    let (index, exponent) = coset_census_2x2(m);
                    let g = cokernel(&mat2(m));
                    assert_eq!(g.order(), GroupOrder::Finite(index.into()), "{m:?}");
                    let max = g.torsion().last().cloned().unwrap_or_else(|| 1.into());
                    assert_eq!(max, BigInt::from(exponent), "{m:?}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 300);
}

#[test]
fn oracle_sanity() {
    assert_eq!(coset_census_2x2([[2, 0], [0, 3]]), (6, 6));
    assert_eq!(coset_census_2x2([[2, 0], [0, 2]]), (4, 2));
    assert_eq!(coset_census_2x2([[-4, 0], [-2, -4]]), (16, 8));
}
