//! Acceptance criteria; prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use cpk::bundles::SphereBundleSpec;
use cpk::classify::{delta1_equal, graded_stably_isomorphic, k_distinguishable};
use cpk::cuntz::{CuntzElement, Degree};
use cpk::fgab::{cokernel, kernel, smith_normal_form, FgAbGroup, GroupOrder, IntMatrix};
use cpk::pimsner::{identity_minus, k_groups, k_groups_trivial, pimsner_matrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{
    coset_census_2x2, mat2, random_coef, random_element, random_homogeneous, random_matrix,
    random_word, zero_relation,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn spec(n: i64, d: i64, c: i64) -> SphereBundleSpec {
    SphereBundleSpec::new(n, d, c)
}

/// Coprime case: `K_0 = Z/(d-1)²`, `K_1 = 0`.
fn coprime_case() -> Check {
    let start = Instant::now();
    let mut count = 0;
    for d in 2..=12i64 {
        for c in -12..=12i64 {
            if (d - 1).gcd(&c) != 1 {
                continue;
            }
            for n in [2, 4, 6] {
                let k = k_groups(&spec(n, d, c)).map_err(|e| e.to_string())?;
                let want = FgAbGroup::cyclic((d - 1) * (d - 1));
                ensure(k.k0 == want && k.k1.is_trivial(), || {
                    format!("S^{n} d={d} c={c}: got {}, {}", k.k0, k.k1)
                })?;
                count += 1;
            }
        }
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!("{count} specs, {:?}", start.elapsed()))
}

/// Trivial bundle: both routes give `Z/(d-1) ⊕ Z/(d-1)`.
fn trivial_bundle() -> Check {
    for d in 2..=12i64 {
        let want = FgAbGroup::from_cyclic_factors(&[(d - 1).into(), (d - 1).into()]);
        for n in [2, 4, 6] {
            let seq = k_groups(&spec(n, d, 0)).map_err(|e| e.to_string())?;
            let kun = k_groups_trivial(n, d).map_err(|e| e.to_string())?;
            ensure(seq.k0 == want && kun.k0 == want, || {
                format!("S^{n} d={d}: sequence {}, Künneth {}", seq.k0, kun.k0)
            })?;
            ensure(seq.k1.is_trivial() && kun.k1.is_trivial(), || {
                format!("d={d}: K1 nonzero")
            })?;
        }
    }
    Ok("d in 2..=12 on S^2, S^4, S^6".into())
}

/// `ι - λ_E` injective for `d >= 2`; not for the formal `d = 1`.
fn injectivity() -> Check {
    for d in 2..=12i64 {
        for c in -12..=12i64 {
            for n in [2, 4, 6] {
                let m = pimsner_matrix(&spec(n, d, c)).map_err(|e| e.to_string())?;
                ensure(kernel(&m).is_trivial(), || {
                    format!("S^{n} d={d} c={c}: kernel nonzero")
                })?;
            }
        }
    }
    for c in -12..=12i64 {
        let formal = IntMatrix::from_rows(&[[1, 0], [c, 1]]);
        let m = identity_minus(&formal).map_err(|e| e.to_string())?;
        let k = kernel(&m);
        ensure(!k.is_trivial(), || {
            format!("d=1 c={c}: kernel unexpectedly trivial")
        })?;
    }
    Ok("trivial kernel for d >= 2; d = 1 control has nonzero kernel".into())
}

/// Odd spheres: one class per rank, `K_0 = Z/(d-1)`.
fn odd_spheres() -> Check {
    for n in [1, 3, 5, 7] {
        for d in 2..=12i64 {
            let a = spec(n, d, 0);
            let b = SphereBundleSpec::trivial(n, d);
            ensure(
                graded_stably_isomorphic(&a, &b).map_err(|e| e.to_string())?,
                || format!("S^{n} d={d}: not isomorphic"),
            )?;
            let k = k_groups(&a).map_err(|e| e.to_string())?;
            ensure(
                k.k0 == FgAbGroup::cyclic(d - 1) && k.k1.is_trivial(),
                || format!("S^{n} d={d}: got {}, {}", k.k0, k.k1),
            )?;
        }
    }
    Ok("S^1, S^3, S^5, S^7 with d in 2..=12".into())
}

/// The three equivalent conditions on the S^4 grid.
fn theorem_coherence() -> Check {
    let mut discrepancies = 0;
    let mut pairs = 0;
    for d in 2..=8i64 {
        for c in -8..=8i64 {
            for c2 in -8..=8i64 {
                let (a, b) = (spec(4, d, c), spec(4, d, c2));
                let d1 = delta1_equal(&a, &b).map_err(|e| e.to_string())?;
                let iso = graded_stably_isomorphic(&a, &b).map_err(|e| e.to_string())?;
                let cls = a.k_class().map_err(|e| e.to_string())?
                    == b.k_class().map_err(|e| e.to_string())?;
                if !(d1 == iso && iso == cls) {
                    discrepancies += 1;
                }
                pairs += 1;
            }
        }
    }
    ensure(discrepancies == 0, || {
        format!("{discrepancies} discrepancies")
    })?;
    Ok(format!("{pairs} pairs, 0 discrepancies"))
}

/// `(S^4, 3, 1)` is told apart from the trivial bundle by `K_0`;
/// `(S^4, 2, 1)` is not, although it is not isomorphic to it.
fn nontriviality_witness() -> Check {
    let e = spec(4, 3, 1);
    let t = SphereBundleSpec::trivial(4, 3);
    let ke = k_groups(&e).map_err(|x| x.to_string())?.k0;
    let kt = k_groups(&t).map_err(|x| x.to_string())?.k0;
    ensure(
        ke.to_string() == "Z/4" && kt.to_string() == "Z/2 + Z/2",
        || format!("got {ke} vs {kt}"),
    )?;
    ensure(
        k_distinguishable(&e, &t).map_err(|x| x.to_string())?,
        || "d=3 not distinguished".into(),
    )?;

    let e2 = spec(4, 2, 1);
    let t2 = SphereBundleSpec::trivial(4, 2);
    ensure(
        !k_distinguishable(&e2, &t2).map_err(|x| x.to_string())?,
        || "d=2 unexpectedly distinguished".into(),
    )?;
    ensure(
        !graded_stably_isomorphic(&e2, &t2).map_err(|x| x.to_string())?,
        || "d=2 c=1 reported isomorphic to trivial".into(),
    )?;
    Ok("Z/4 vs Z/2 + Z/2 distinguished; d=2 blind spot confirmed".into())
}

/// SNF on 1000 random matrices and the coset oracle on 200 random lattices.
fn snf_suite() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut failures = 0;
    for _ in 0..1000 {
        let a = random_matrix(&mut rng, 6, 50);
        let snf = smith_normal_form(&a);
        let uav = snf.u().mul(&a).and_then(|m| m.mul(snf.v())).ok();
        let unimodular = snf.u().determinant().map(|x| x.abs()) == Some(1.into())
            && snf.v().determinant().map(|x| x.abs()) == Some(1.into());
        let diag = snf.diagonal();
        let r = snf.rank();
        let chain = diag[..r].windows(2).all(|w| (&w[1] % &w[0]).is_zero())
            && diag[..r].iter().all(|x| x.is_positive())
            && diag[r..].iter().all(Zero::is_zero);
        let off_diag_zero =
            (0..a.rows()).all(|i| (0..a.cols()).all(|j| i == j || snf.d()[(i, j)].is_zero()));
        if uav.as_ref() != Some(snf.d()) || !unimodular || !chain || !off_diag_zero {
            failures += 1;
        }
    }
    ensure(failures == 0, || format!("{failures} SNF failures"))?;

    let mut lattices = 0;
    while lattices < 200 {
        let m: [[i64; 2]; 2] = [
            [rng.gen_range(-12..=12), rng.gen_range(-12..=12)],
            [rng.gen_range(-12..=12), rng.gen_range(-12..=12)],
        ];
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if det == 0 || det.abs() > 64 {
            continue;
        }
        let (index, _) = coset_census_2x2(m);
        let got = cokernel(&mat2(m)).order();
        ensure(got == GroupOrder::Finite(BigInt::from(index)), || {
            format!("{m:?}: cokernel order {got:?}, coset count {index}")
        })?;
        lattices += 1;
    }
    within(Duration::from_secs(10), start)?;
    Ok(format!("1000 SNFs, 200 lattices, {:?}", start.elapsed()))
}

/// Cuntz relations, ring laws, grading additivity and zero-sum invariance.
fn cuntz_suite() -> Check {
    let start = Instant::now();
    let err = |e: cpk::Error| e.to_string();
    for d in 2..=4usize {
        let one = CuntzElement::one(d).map_err(err)?;
        let zero = CuntzElement::zero(d).map_err(err)?;
        let mut sum = zero.clone();
        for i in 1..=d as u32 {
            let si = CuntzElement::generator(d, i).map_err(err)?;
            for j in 1..=d as u32 {
                let sj = CuntzElement::generator(d, j).map_err(err)?;
                let want = if i == j { &one } else { &zero };
                ensure(
                    si.star().mul(&sj).map_err(err)?.equals(want).map_err(err)?,
                    || format!("d={d}: S{i}* S{j} wrong"),
                )?;
            }
            sum = sum.add(&si.mul(&si.star()).map_err(err)?).map_err(err)?;
        }
        ensure(sum.equals(&one).map_err(err)?, || {
            format!("d={d}: unit relation fails")
        })?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for t in 0..500 {
        let d = [2, 3, 4][t % 3];
        let a = random_element(&mut rng, d, 5, 6);
        let b = random_element(&mut rng, d, 5, 6);
        let c = random_element(&mut rng, d, 5, 6);
        let assoc = a.mul(&b).map_err(err)?.mul(&c).map_err(err)?;
        let assoc2 = a.mul(&b.mul(&c).map_err(err)?).map_err(err)?;
        ensure(assoc.equals(&assoc2).map_err(err)?, || {
            format!("triple {t}: associativity")
        })?;
        let l = a.mul(&b.add(&c).map_err(err)?).map_err(err)?;
        let r = a
            .mul(&b)
            .map_err(err)?
            .add(&a.mul(&c).map_err(err)?)
            .map_err(err)?;
        ensure(l.equals(&r).map_err(err)?, || {
            format!("triple {t}: left distributivity")
        })?;
        let l = a.add(&b).map_err(err)?.mul(&c).map_err(err)?;
        let r = a
            .mul(&c)
            .map_err(err)?
            .add(&b.mul(&c).map_err(err)?)
            .map_err(err)?;
        ensure(l.equals(&r).map_err(err)?, || {
            format!("triple {t}: right distributivity")
        })?;
    }

    for t in 0..200 {
        let d = [2, 3, 4][t % 3];
        let h = rng.gen_range(-3i64..=3);
        let k = rng.gen_range(-3i64..=3);
        let x = random_homogeneous(&mut rng, d, h, 5, 4);
        let y = random_homogeneous(&mut rng, d, k, 5, 4);
        let p = x.mul(&y).map_err(err)?;
        ensure(
            p.is_empty() || p.degree() == Degree::Homogeneous(h + k),
            || format!("pair {t}: degree {:?}, want {}", p.degree(), h + k),
        )?;
        let comp = p.spectral_component(h + k);
        ensure(comp == p, || {
            format!("pair {t}: product leaks outside degree {}", h + k)
        })?;
    }

    for t in 0..100 {
        let d = [2, 3, 4][t % 3];
        let a = random_element(&mut rng, d, 5, 6);
        let mu = {
            let len = rng.gen_range(0..=4);
            random_word(&mut rng, d, len)
        };
        let nu = {
            let len = rng.gen_range(0..=4);
            random_word(&mut rng, d, len)
        };
        let b = a
            .add(&zero_relation(d, &mu, &nu, random_coef(&mut rng)))
            .map_err(err)?;
        ensure(a.equals(&b).map_err(err)?, || {
            format!("insertion {t}: equality broken")
        })?;
        let other = random_element(&mut rng, d, 5, 6);
        ensure(
            a.equals(&other).map_err(err)? == b.equals(&other).map_err(err)?,
            || format!("insertion {t}: comparison with a third element changed"),
        )?;
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!(
        "500 triples, 200 graded pairs, 100 insertions, {:?}",
        start.elapsed()
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 coprime case K0 = Z/(d-1)^2", coprime_case),
        ("2 trivial bundle K0 = Z/(d-1) + Z/(d-1)", trivial_bundle),
        ("3 injectivity of iota - lambda_E", injectivity),
        ("4 odd spheres", odd_spheres),
        ("5 theorem coherence", theorem_coherence),
        ("6 nontriviality witness", nontriviality_witness),
        ("7 SNF property suite", snf_suite),
        ("8 Cuntz calculus suite", cuntz_suite),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {} failed",
        criteria.len() - failed,
        failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
