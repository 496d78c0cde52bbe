//! Permutation enumeration: lexicographic successor, ranking, and splitting
//! S_n into contiguous rank ranges for parallel reduction.

/// `n!` as `u64`; panics above 20.
pub fn factorial(n: usize) -> u64 {
    assert!(n <= 20, "{n}! overflows u64");
    (1..=n as u64).product()
}

/// Advances to the lexicographically next arrangement. Returns `false` (and
/// leaves the slice sorted ascending) after the last one. Duplicates are
/// handled, so this walks distinct multiset permutations.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The permutation of `0..n` with lexicographic rank `rank`.
pub fn unrank(n: usize, mut rank: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let f = factorial(k);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

/// Splits `0..n!` into at most `blocks` contiguous, disjoint rank ranges
/// covering all of S_n.
pub fn rank_blocks(n: usize, blocks: usize) -> Vec<(u64, u64)> {
    let total = factorial(n);
    let k = (blocks.max(1) as u64).min(total);
    let step = total.div_ceil(k);
    (0..k)
        .map(|b| (b * step, ((b + 1) * step).min(total)))
        .filter(|(a, b)| a < b)
        .collect()
}

/// Calls `f` on every permutation with rank in `[start, end)`, in order.
pub fn for_each_in_range(n: usize, start: u64, end: u64, mut f: impl FnMut(&[usize])) {
    let mut p = unrank(n, start);
    for _ in start..end {
        f(&p);
        next_permutation(&mut p);
    }
}

/// Default number of rank blocks for a parallel sum over S_n.
pub fn default_blocks(n: usize) -> usize {
    let threads = rayon::current_num_threads().max(1);
    (threads * 4).min(factorial(n.min(20)) as usize).max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_walk_matches_unrank() {
        let mut p: Vec<usize> = (0..5).collect();
        let mut rank = 0;
        loop {
            assert_eq!(p, unrank(5, rank));
            rank += 1;
            if !next_permutation(&mut p) {
                break;
            }
        }
        assert_eq!(rank, 120);
    }

    #[test]
    fn multiset_permutations_are_distinct() {
        let mut v = vec![0, 0, 1, 2];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 12);
    }

    #[test]
    fn blocks_partition_the_group() {
        for blocks in [1, 3, 7, 720, 1000] {
            let r = rank_blocks(6, blocks);
            assert_eq!(r.first().unwrap().0, 0);
            assert_eq!(r.last().unwrap().1, 720);
            for w in r.windows(2) {
                assert_eq!(w[0].1, w[1].0);
            }
        }
    }
}
