use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use proptest::prelude::*;

use symmgraph::dims::{bounded_partition_counts, gaussian_binomial, p_w, semidim, DRule};

// partitions of w into at most n parts of size at most d, listed directly
fn brute(w: usize, n: usize, d: usize) -> u64 {
    fn go(w: usize, n: usize, max: usize) -> u64 {
        if w == 0 {
            return 1;
        }
        if n == 0 {
            return 0;
        }
        (1..=max.min(w)).map(|k| go(w - k, n - 1, k)).sum()
    }
    go(w, n, d)
}

fn binom(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn unimodal_up_to_the_middle(n in 1usize..=40, d in 1usize..=40) {
        let g = gaussian_binomial(n, d);
        for w in 2..=n * d / 2 {
            prop_assert!(g.coeff(w) >= g.coeff(w - 1), "w = {}", w);
        }
    }

    #[test]
    fn palindromic_with_binomial_sum(n in 0usize..=40, d in 0usize..=40) {
        let g = gaussian_binomial(n, d);
        prop_assert!(g.is_palindromic());
        prop_assert_eq!(g.degree(), n * d);
        prop_assert_eq!(g.coefficient_sum(), binom(n + d, d));
    }

    #[test]
    fn symmetric_in_n_and_d(n in 0usize..=25, d in 0usize..=25) {
        prop_assert_eq!(gaussian_binomial(n, d), gaussian_binomial(d, n));
    }

    #[test]
    fn dp_matches_listing(n in 1usize..=7, d in 1usize..=7, w in 0usize..=30) {
        prop_assert_eq!(p_w(n, d, w as i64), BigUint::from(brute(w, n, d)));
        let dp = bounded_partition_counts(n, d, w);
        prop_assert_eq!(&dp[w], &gaussian_binomial(n, d).coeff(w));
    }

    #[test]
    fn semidim_sign_flips_past_the_middle(n in 1usize..=15, d in 1usize..=15, w in 0i64..=120) {
        let mid = (n * d) as i64;
        let s = semidim(w, d, n);
        if 2 * w <= mid {
            prop_assert!(s >= BigInt::zero());
        }
        // p_w = p_{nd−w}, so the difference is antisymmetric about nd/2
        if w >= 1 && w <= mid {
            prop_assert_eq!(s, -semidim(mid - w + 1, d, n));
        }
    }

    #[test]
    fn offset_rules_parse(k in 0i64..500) {
        prop_assert_eq!(DRule::parse(&format!("w-{k}")), Some(DRule::Offset(-k)));
        prop_assert_eq!(DRule::parse(&format!("w+{k}")), Some(DRule::Offset(k)));
        prop_assert_eq!(DRule::parse(&k.to_string()), Some(DRule::Fixed(k as u64)));
    }
}
