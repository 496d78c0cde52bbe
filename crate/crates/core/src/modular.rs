//! Arithmetic modulo 62/63-bit primes and the fixed prime table used for
//! nonzero witnesses.

use crate::error::PolyError;

/// The eight largest primes below `2^63`, in decreasing order. Which one a
/// randomized run uses is picked by its seed.
pub const WITNESS_PRIMES: [u64; 8] = [
    9_223_372_036_854_775_783,
    9_223_372_036_854_775_643,
    9_223_372_036_854_775_549,
    9_223_372_036_854_775_507,
    9_223_372_036_854_775_433,
    9_223_372_036_854_775_421,
    9_223_372_036_854_775_417,
    9_223_372_036_854_775_399,
];

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Rejects composite moduli with a typed error.
pub fn check_prime(p: u64) -> Result<u64, PolyError> {
    if is_prime(p) {
        Ok(p)
    } else {
        Err(PolyError::NotPrime(p))
    }
}

/// Reduces a signed big integer into `[0, p)`.
pub fn reduce_bigint(v: &num_bigint::BigInt, p: u64) -> u64 {
    use num_traits::ToPrimitive;
    let r = v % num_bigint::BigInt::from(p);
    let r = if r.sign() == num_bigint::Sign::Minus {
        r + num_bigint::BigInt::from(p)
    } else {
        r
    };
    r.to_u64().expect("residue fits in u64")
}

#[inline]
pub fn reduce_i64(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// Rank of a dense matrix over `Z/p` by Gaussian elimination. Rows are
/// consumed.
pub fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][col], p).expect("nonzero pivot");
        for j in col..ncols {
            rows[rank][j] = mul_mod(rows[rank][j], inv, p);
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for j in col..ncols {
                row[j] = sub_mod(row[j], mul_mod(f, pivot_row[j], p), p);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_primes_are_prime_and_large() {
        for &p in &WITNESS_PRIMES {
            assert!(is_prime(p), "{p}");
            assert!(p >= 1 << 62);
        }
    }

    #[test]
    fn witness_primes_are_consecutive_from_the_top() {
        let mut top = u64::MAX / 2 + 1; // 2^63
        for &p in &WITNESS_PRIMES {
            assert!(((p + 1)..top).all(|c| !is_prime(c)));
            top = p;
        }
    }

    #[test]
    fn miller_rabin_small_cases() {
        let primes: Vec<u64> = (0..100).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                83, 89, 97
            ]
        );
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(check_prime(91).is_err());
    }

    #[test]
    fn modular_rank() {
        let p = WITNESS_PRIMES[0];
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank_mod(rows, p), 2);
    }
}
