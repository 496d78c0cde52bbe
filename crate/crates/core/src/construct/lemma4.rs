//! Nonnegative integer matrices with prescribed row sums and balanced
//! column sums.

use super::{require, to_u32};
use crate::edgemat::IntMatrix;
use crate::error::ConstructError;

/// An `m × n` matrix with row sums `b` and column sums `q + 1` on the first
/// `r` columns and `q` on the rest, where `Σ b = t = qn + r`.
///
/// Rows are filled top-down. Row `k` only depends on the running total
/// `t_k = b_1 + … + b_k` and on `b_k = ℓn + ρ`: if `ρ ≤ r_k` it is `ℓ`
/// except for `ℓ + 1` on columns `r_k − ρ + 1 ..= r_k`; otherwise `ℓ + 1`
/// except for `ℓ` on columns `r_k + 1 ..= n + r_k − ρ`.
pub fn lemma4_balanced(m: usize, n: usize, b: &[u64]) -> Result<IntMatrix, ConstructError> {
    require(m >= 1 && n >= 1, || format!("need m, n >= 1, got {m} x {n}"))?;
    require(b.len() == m, || format!("expected {m} row sums, got {}", b.len()))?;
    let nn = n as u64;
    let mut a = IntMatrix::zeros(m, n);
    let mut t = 0u64;
    for (k, &bk) in b.iter().enumerate() {
        t += bk;
        let r = (t % nn) as usize;
        if k == 0 {
            let q = t / nn;
            for j in 0..n {
                a.set(0, j, to_u32(if j < r { q + 1 } else { q })?);
            }
            continue;
        }
        let (l, rho) = (bk / nn, (bk % nn) as usize);
        for j in 0..n {
            let v = if rho <= r {
                if j >= r - rho && j < r {
                    l + 1
                } else {
                    l
                }
            } else if j >= r && j < n + r - rho {
                l
            } else {
                l + 1
            };
            a.set(k, j, to_u32(v)?);
        }
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_cases() {
        assert_eq!(lemma4_balanced(1, 3, &[5]).unwrap().to_rows(), vec![vec![2, 2, 1]]);
        assert_eq!(
            lemma4_balanced(2, 2, &[3, 1]).unwrap().to_rows(),
            vec![vec![2, 1], vec![0, 1]]
        );
        assert!(lemma4_balanced(2, 2, &[0, 0]).unwrap().is_zero());
    }

    #[test]
    fn sums_hold() {
        let b = [7, 0, 3, 11, 2];
        let a = lemma4_balanced(5, 4, &b).unwrap();
        assert_eq!(a.row_sums(), b.to_vec());
        assert_eq!(a.col_sums(), vec![6, 6, 6, 5]);
    }

    #[test]
    fn bad_input() {
        assert!(lemma4_balanced(0, 2, &[]).is_err());
        assert!(lemma4_balanced(2, 2, &[1]).is_err());
    }
}
