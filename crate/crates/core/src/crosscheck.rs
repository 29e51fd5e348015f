//! Agreement of the closed-form criteria with literal evaluation, and
//! structural checks on K.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::check::CheckOutcome;
use crate::error::Result;
use crate::modmat::{Mat2, Vec2};
use crate::sdproduct::{check_even_dim, Kernel, SdElement};
use crate::splitcheck::{
    build_generators, criterion_braid, criterion_combined_mod4_2, criterion_commute,
    criterion_orders, criterion_square, Condition, DirectEvaluator, GenParams,
};

/// Every one of the `64·N⁴` candidates, in lexicographic order.
pub fn all_tuples(n: u64) -> Result<Vec<GenParams>> {
    check_even_dim(n)?;
    Ok((0..GenParams::candidate_count(n))
        .map(|i| GenParams::from_index(n, i))
        .collect())
}

/// `count` candidates drawn uniformly, reproducibly from `seed`.
pub fn random_tuples(n: u64, count: usize, seed: u64) -> Result<Vec<GenParams>> {
    check_even_dim(n)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let total = GenParams::candidate_count(n);
    Ok((0..count)
        .map(|_| GenParams::from_index(n, rng.random_range(0..total)))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Agreement {
    closed: [bool; 5],
    direct: [bool; 5],
}

const NAMES: [&str; 5] = [
    "orders",
    "commute",
    "square",
    "braid",
    "combined (N ≡ 2 mod 4)",
];

/// One outcome per criterion. A case fails when the closed form and the
/// literal evaluation of its relations disagree. The combined criterion is
/// compared against the conjunction of all relations and is only reported
/// for N ≡ 2 (mod 4).
pub fn criteria_vs_direct(n: u64, tuples: &[GenParams]) -> Result<Vec<CheckOutcome>> {
    let eval = DirectEvaluator::new(n)?;
    let mod4_2 = n % 4 == 2;
    let rows: Vec<Agreement> = tuples
        .par_iter()
        .map(|p| {
            let direct_each = Condition::ALL.map(|c| eval.condition_holds(p, c));
            let all = direct_each.iter().all(|&x| x);
            Agreement {
                closed: [
                    criterion_orders(p),
                    criterion_commute(p),
                    criterion_square(p),
                    criterion_braid(p),
                    mod4_2 && criterion_combined_mod4_2(p).unwrap_or(false),
                ],
                direct: [
                    direct_each[0],
                    direct_each[1],
                    direct_each[2],
                    direct_each[3],
                    mod4_2 && all,
                ],
            }
        })
        .collect();
    let used = if mod4_2 { 5 } else { 4 };
    let mut out: Vec<CheckOutcome> = NAMES[..used]
        .iter()
        .map(|s| CheckOutcome::new(format!("{s} at N={n}")))
        .collect();
    for (p, row) in tuples.iter().zip(&rows) {
        for (i, o) in out.iter_mut().enumerate() {
            o.record(row.closed[i] == row.direct[i], || {
                format!(
                    "{p}: closed form {}, direct {}",
                    row.closed[i], row.direct[i]
                )
            });
        }
    }
    Ok(out)
}

/// A random element of SL(2, Z_2N) ⋉ Z_N², as a product of random
/// elementary matrices together with a random vector.
pub fn random_element(n: u64, rng: &mut impl Rng) -> SdElement {
    let m = 2 * n;
    let mut c = Mat2::identity(m).expect("valid modulus");
    for _ in 0..6 {
        let x = rng.random_range(0..m) as i64;
        let y = rng.random_range(0..m) as i64;
        c = c
            * Mat2::new(m, [1, x, 0, 1]).expect("valid")
            * Mat2::new(m, [1, 0, y, 1]).expect("valid");
    }
    let w = Vec2::new(
        n,
        [rng.random_range(0..n) as i64, rng.random_range(0..n) as i64],
    )
    .expect("valid");
    SdElement::new(n, c, w).expect("det 1 by construction")
}

/// Order, closure, inverses, normality and σ-invariance on cosets of K,
/// with `samples` random conjugating elements besides the generator lifts.
pub fn kernel_structure(n: u64, samples: usize, seed: u64) -> Result<Vec<CheckOutcome>> {
    let kernel = Kernel::new(n)?;
    let elems = kernel.elements();
    let mut order = CheckOutcome::new(format!("K has 8 distinct elements at N={n}"));
    let mut distinct = elems.to_vec();
    distinct.sort();
    distinct.dedup();
    order.record(distinct.len() == 8, || {
        format!("{} distinct", distinct.len())
    });

    let mut closed = CheckOutcome::new(format!("K closed under products and inverses at N={n}"));
    for x in elems {
        closed.record(kernel.contains(&x.inverse()), || format!("inverse of {x}"));
        for y in elems {
            closed.record(kernel.contains(&(*x * *y)), || format!("{x} · {y}"));
        }
    }

    let mut rng = StdRng::seed_from_u64(seed ^ n);
    let mut conjugators: Vec<SdElement> =
        (0..samples).map(|_| random_element(n, &mut rng)).collect();
    for idx in [
        0,
        GenParams::standard_witness(n)?.index(),
        GenParams::candidate_count(n) - 1,
    ] {
        let (t, r) = build_generators(&GenParams::from_index(n, idx))?;
        conjugators.extend([t, r]);
    }
    let mut normal = CheckOutcome::new(format!("K normal at N={n}"));
    let mut sigma = CheckOutcome::new(format!("σ constant on cosets of K at N={n}"));
    let mut coset = CheckOutcome::new(format!("P ~ Pκ for all κ ∈ K at N={n}"));
    for p in &conjugators {
        for kappa in elems {
            let conj = *p * *kappa * p.inverse();
            normal.record(kernel.contains(&conj), || format!("P={p}, κ={kappa}"));
            let pk = *p * *kappa;
            sigma.record(pk.sigma() == p.sigma(), || format!("P={p}, κ={kappa}"));
            coset.record(kernel.coset_equal(p, &pk)?, || format!("P={p}, κ={kappa}"));
        }
    }
    Ok(vec![order, closed, normal, sigma, coset])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::all_passed;

    #[test]
    fn full_agreement_small() {
        let out = criteria_vs_direct(2, &all_tuples(2).unwrap()).unwrap();
        assert_eq!(out.len(), 5);
        assert!(all_passed(&out), "{out:?}");
        assert_eq!(out[0].checked, 1024);
        let out = criteria_vs_direct(4, &all_tuples(4).unwrap()).unwrap();
        assert_eq!(out.len(), 4);
        assert!(all_passed(&out), "{out:?}");
    }

    #[test]
    fn random_tuples_are_reproducible() {
        assert_eq!(
            random_tuples(8, 50, 3).unwrap(),
            random_tuples(8, 50, 3).unwrap()
        );
    }

    #[test]
    fn kernel_structure_small() {
        for n in [2u64, 4, 6] {
            assert!(all_passed(&kernel_structure(n, 20, 1).unwrap()));
        }
    }
}
