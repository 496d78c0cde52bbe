use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use symmgraph::modular::WITNESS_PRIMES;
use symmgraph::polytext::{from_text, to_text};
use symmgraph::semiinv::{rank_exact, rank_modular, to_elementary, translation_check};
use symmgraph::symmetrize::{
    nonzero_test, symm_eval_exact, symm_eval_mod, symmetrize_full, ExpansionBudget, NonzeroOptions, Verdict,
};
use symmgraph::EdgeMatrix;

fn on(n: usize, max_e: i64) -> impl Strategy<Value = EdgeMatrix> {
    prop::collection::vec(0..=max_e, n * (n - 1) / 2).prop_map(move |u| EdgeMatrix::from_upper(n, &u).unwrap())
}

fn matrix(max_n: usize, max_e: i64) -> impl Strategy<Value = EdgeMatrix> {
    (2..=max_n).prop_flat_map(move |n| on(n, max_e))
}

// a matrix with one small integer point and one large positive point, both
// with distinct coordinates
fn with_points(max_n: usize, max_e: i64) -> impl Strategy<Value = (EdgeMatrix, Vec<i64>, Vec<u64>)> {
    (2..=max_n).prop_flat_map(move |n| {
        let small: Vec<i64> = (-100..=100).collect();
        (
            on(n, max_e),
            prop::sample::subsequence(small, n).prop_shuffle(),
            prop::collection::hash_set(1u64..=1_000_000, n).prop_map(|h| h.into_iter().collect()),
        )
    })
}

fn symm(m: &EdgeMatrix) -> symmgraph::ExactPoly {
    symmetrize_full(&m.graph_monomial(), &ExpansionBudget::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn eval_commutes_with_expansion((m, pt, ptm) in with_points(5, 2), k in 0usize..8) {
        let f = symm(&m);
        let pt: Vec<BigInt> = pt.into_iter().map(BigInt::from).collect();
        prop_assert_eq!(symm_eval_exact(&m, &pt).unwrap(), f.eval(&pt).unwrap());
        let p = WITNESS_PRIMES[k];
        prop_assert_eq!(symm_eval_mod(&m, &ptm, p).unwrap(), f.eval_mod(&ptm, p).unwrap());
    }

    #[test]
    fn result_is_symmetric_and_homogeneous(m in matrix(4, 3)) {
        let f = symm(&m);
        prop_assert!(f.is_symmetric());
        prop_assert!(f.terms().iter().all(|(t, _)| t.degree() == m.weight()));
    }

    #[test]
    fn relabeling_changes_at_most_the_sign(m in matrix(5, 2), k in 0usize..120) {
        let n = m.n();
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.rotate_left(k % n);
        sigma.swap(0, (k / n) % n);
        let (a, b) = (symm(&m), symm(&m.relabel(&sigma)));
        prop_assert!(a == b || a == b.neg());
    }

    #[test]
    fn even_matrices_are_nonzero(m in matrix(5, 2)) {
        let e = m.scaled(2);
        prop_assume!(!e.is_zero());
        let w = nonzero_test(&e, &NonzeroOptions::default());
        prop_assert_eq!(w.verdict, Verdict::Nonzero);
        prop_assert!(!symm(&e).is_zero());
    }

    #[test]
    fn verdict_agrees_with_expansion(m in matrix(5, 2), seed in 0u64..1000) {
        let opts = NonzeroOptions { seed, ..Default::default() };
        let w = nonzero_test(&m, &opts);
        let zero = symm(&m).is_zero();
        prop_assert_eq!(w.verdict == Verdict::ZeroExact, zero);
        if w.verdict == Verdict::Nonzero && w.point.is_some() {
            prop_assert!(w.replay(&m));
        }
    }

    #[test]
    fn text_round_trip(m in matrix(4, 2)) {
        let f = symm(&m);
        prop_assert_eq!(from_text(&to_text(&f), Some(m.n())).unwrap(), f);
    }

    #[test]
    fn elementary_form_round_trip(m in matrix(4, 2)) {
        let f = symm(&m);
        let p = to_elementary(&f).unwrap();
        let back = p.to_z();
        prop_assert_eq!(back, f.map_coefficients(|c| BigRational::from_integer(c.clone())));
        prop_assert!(translation_check(&p));
        if !f.is_zero() {
            prop_assert_eq!(p.weight(), Some(m.weight()));
        }
    }

    #[test]
    fn rank_is_stable(ms in prop::collection::vec(on(4, 2), 1..4), k in 1i64..5) {
        let polys: Vec<_> = ms.iter().map(symm).collect();
        let r = rank_exact(&polys).unwrap();
        let mut more = polys.clone();
        more.push(polys[0].scale(&BigInt::from(k)));
        more.reverse();
        prop_assert_eq!(rank_exact(&more).unwrap(), r);
        prop_assert!(rank_modular(&polys, 4, k as u64).unwrap() <= r);
    }
}
