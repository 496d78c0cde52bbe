//! Strictly increasing compositions and their weights.
//!
//! Tuples are `(a_1, …, a_{s+1})` with `a_1 < … < a_{s+1}` and sum `n`; the set
//! of these is `𝕴(s, n)`, and `ℙ(s, n)` keeps those with `a_1 ≥ 1`. The weight
//! is `wt(n, α) = (n² − Σ a_i²)/2 = Σ_{i<j} a_i a_j`.

use num_bigint::BigUint;
use num_integer::{Integer, Roots};
use serde::{Deserialize, Serialize};

use super::require;
use crate::error::ConstructError;

/// `⌊(√(8n+1) − 1)/2⌋`, the largest `β` with `β(β+1)/2 ≤ n`.
pub fn beta(n: u64) -> u64 {
    let r = (8 * n as u128 + 1).sqrt();
    ((r - 1) / 2) as u64
}

/// `⌊n/(s+1) − s/2⌋`.
fn p1_closed(s: i64, n: i64) -> i64 {
    Integer::div_floor(&(2 * n - s * (s + 1)), &(2 * (s + 1)))
}

fn wp_greedy(s: i64, n: i64) -> Vec<i64> {
    let mut out = Vec::with_capacity(s as usize + 1);
    let mut used = 0i64;
    for j in 1..=s + 1 {
        let k = s + 2 - j;
        // ⌊(n − used)/k − (k − 1)/2⌋ over the common denominator 2k.
        let p = Integer::div_floor(&(2 * (n - used) - k * (k - 1)), &(2 * k));
        out.push(p);
        used += p;
    }
    out
}

fn wp_closed(s: i64, n: i64) -> Vec<i64> {
    let p1 = p1_closed(s, n);
    let e = n - s * (s + 1) / 2 - p1 * (s + 1);
    (1..=s + 1)
        .map(|j| if j <= s + 1 - e { p1 + j - 1 } else { p1 + j })
        .collect()
}

/// The extremal tuple `℘(s, n)`, computed by the floor recursion and by the
/// closed form; the two must agree.
pub fn wp(s: u64, n: u64) -> Vec<i64> {
    assert!(s >= 1 && n >= 1, "wp needs s, n >= 1");
    let (s, n) = (s as i64, n as i64);
    let a = wp_greedy(s, n);
    let b = wp_closed(s, n);
    assert_eq!(a, b, "internal error: wp recursion and closed form disagree for s={s}, n={n}");
    a
}

/// `wt(n, α)`. The entries of `α` must sum to `n`.
pub fn wt(n: u64, alpha: &[i64]) -> Result<i64, ConstructError> {
    let sum: i64 = alpha.iter().sum();
    require(sum == n as i64, || {
        format!("tuple {alpha:?} sums to {sum}, expected {n}")
    })?;
    let sq: i64 = alpha.iter().map(|a| a * a).sum();
    Ok((n as i64 * n as i64 - sq) / 2)
}

fn varpi_closed(s: i64, n: i64) -> i64 {
    let p = p1_closed(s, n) as i128;
    let (s1, n) = ((s + 1) as i128, n as i128);
    let s2 = s1 + 1;
    let num = 12 * s1 * s2 * p * p + 12 * (s1 * s1 * s2 - 2 * n * s2) * p + 3 * s1.pow(4)
        + 2 * s1.pow(3)
        - 3 * (1 + 4 * n) * s1 * s1
        - 2 * (1 + 6 * n) * s1
        + 24 * n * n;
    assert_eq!(num % 24, 0, "varpi closed form not integral");
    (num / 24) as i64
}

/// `ϖ(s, n) = wt(n, ℘(s, n))`, cross-checked against the quadratic closed
/// form in `⌊n/(s+1) − s/2⌋`.
pub fn varpi(s: u64, n: u64) -> i64 {
    let direct = wt(n, &wp(s, n)).expect("wp sums to n");
    let closed = varpi_closed(s as i64, n as i64);
    assert_eq!(direct, closed, "internal error: varpi routes disagree for s={s}, n={n}");
    direct
}

pub fn is_strictly_increasing(alpha: &[i64]) -> bool {
    alpha.windows(2).all(|w| w[0] < w[1])
}

/// Members of `𝕴(s, n)` with `a_1 ≥ lo`, in lexicographic order. `𝕴` itself
/// is infinite, so a lower bound on `a_1` is required.
pub fn enumerate_i(s: u64, n: i64, lo: i64) -> Vec<Vec<i64>> {
    fn rec(k: i64, min: i64, rem: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == 1 {
            if rem >= min {
                cur.push(rem);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let mut x = min;
        // the remaining k−1 entries are at least x+1, …, x+k−1
        while k * x + k * (k - 1) / 2 <= rem {
            cur.push(x);
            rec(k - 1, x + 1, rem - x, cur, out);
            cur.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    rec(s as i64 + 1, lo, n, &mut Vec::new(), &mut out);
    out
}

/// `ℙ(s, n)` in lexicographic order; empty exactly when `s ≥ β(n)`.
pub fn enumerate_p(s: u64, n: u64) -> Vec<Vec<i64>> {
    enumerate_i(s, n as i64, 1)
}

/// `(1, 2, …, s, n − s(s+1)/2)`.
pub fn v_tuple(s: u64, n: u64) -> Vec<i64> {
    let mut v: Vec<i64> = (1..=s as i64).collect();
    v.push(n as i64 - (s * (s + 1) / 2) as i64);
    v
}

/// `α + η(i, j)` (1-based, `i < j`): add one at `i`, remove one at `j`. The
/// result must still be strictly increasing.
pub fn modify(alpha: &[i64], i: usize, j: usize) -> Result<Vec<i64>, ConstructError> {
    require(1 <= i && i < j && j <= alpha.len(), || {
        format!("need 1 <= i < j <= {}, got ({i}, {j})", alpha.len())
    })?;
    let mut b = alpha.to_vec();
    b[i - 1] += 1;
    b[j - 1] -= 1;
    require(is_strictly_increasing(&b), || {
        format!("{b:?} is not strictly increasing")
    })?;
    Ok(b)
}

/// A chain of elementary modifications from `α ∈ 𝕴(s, n)` to `℘(s, n)`,
/// starting with `α` itself. Each step raises `wt`.
pub fn modification_path(alpha: &[i64]) -> Result<Vec<Vec<i64>>, ConstructError> {
    require(alpha.len() >= 2 && is_strictly_increasing(alpha), || {
        format!("{alpha:?} is not a strictly increasing tuple of length >= 2")
    })?;
    let mut cur = alpha.to_vec();
    let mut path = vec![cur.clone()];
    loop {
        let gaps: Vec<i64> = cur.windows(2).map(|w| w[1] - w[0]).collect();
        let next = if let Some(i) = gaps.iter().position(|&g| g > 2) {
            modify(&cur, i + 1, i + 2)?
        } else {
            let twos: Vec<usize> = (0..gaps.len()).filter(|&k| gaps[k] == 2).collect();
            if twos.len() < 2 {
                break;
            }
            modify(&cur, twos[0] + 1, twos[1] + 2)?
        };
        cur = next;
        path.push(cur.clone());
    }
    let s = alpha.len() as u64 - 1;
    let n: i64 = alpha.iter().sum();
    if n >= 1 {
        debug_assert_eq!(cur, wp(s, n as u64));
    }
    Ok(path)
}

/// `ν(w, 𝔞) = C(s − 1 + θ, s − 1)` with `θ = w − wt(n, 𝔞) ≥ 1`.
pub fn nu(w: u64, a: &[i64]) -> Result<BigUint, ConstructError> {
    let n: i64 = a.iter().sum();
    let theta = theta_of(w, n as u64, a)?;
    let s = a.len() as u64 - 1;
    Ok(binomial(s - 1 + theta, s - 1))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k.min(n));
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub(crate) fn theta_of(w: u64, n: u64, a: &[i64]) -> Result<u64, ConstructError> {
    require(a.len() >= 2, || "the shape needs at least two parts".into())?;
    let t = w as i64 - wt(n, a)?;
    if t < 1 {
        return Err(ConstructError::ThetaTooSmall(t));
    }
    Ok(t as u64)
}

/// The degree attached to `(w, 𝔞)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DOf {
    /// `r_1(M)` of the family construction, `N − m_1 + min{1 + ⌈θ/m_1⌉, θ}`.
    pub value: u64,
    /// The printed three-case formula.
    pub formula: u64,
    /// Set when the two differ (the `θ = 1`, `m_1 ≥ 2` case).
    pub discrepancy: bool,
}

pub fn d_of(w: u64, a: &[i64]) -> Result<DOf, ConstructError> {
    let n: i64 = a.iter().sum();
    let theta = theta_of(w, n as u64, a)?;
    let n = n as u64;
    let m1 = a[0] as u64;
    require(m1 >= 1, || "the first part must be positive".into())?;
    let formula = if m1 == 1 || theta == 1 {
        n - 1 + theta
    } else {
        n - m1 + 1 + theta.div_ceil(m1)
    };
    let value = n - m1 + (1 + theta.div_ceil(m1)).min(theta);
    Ok(DOf {
        value,
        formula,
        discrepancy: value != formula,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_brackets() {
        assert_eq!(beta(15), 5);
        assert_eq!(beta(3), 2);
        let n = 1_000_000_000_000u64;
        let b = beta(n) as u128;
        assert!(b * (b + 1) / 2 <= n as u128 && (n as u128) < (b + 1) * (b + 2) / 2);
    }

    #[test]
    fn wp_values() {
        assert_eq!(wp(4, 15), vec![1, 2, 3, 4, 5]);
        assert_eq!(wp(2, 6), vec![1, 2, 3]);
        assert_eq!(wp(1, 3), vec![1, 2]);
        assert_eq!(wp(3, 15), vec![2, 3, 4, 6]);
    }

    #[test]
    fn weights() {
        assert_eq!(wt(15, &[1, 2, 3, 9]).unwrap(), 65);
        assert!(wt(15, &[1, 2, 3]).is_err());
        assert_eq!(varpi(4, 15), 85);
        assert_eq!(varpi(2, 6), 11);
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_p(2, 6), vec![vec![1, 2, 3]]);
        assert_eq!(enumerate_p(4, 15), vec![vec![1, 2, 3, 4, 5]]);
        assert!(enumerate_p(5, 15).is_empty());
        assert_eq!(enumerate_i(1, 3, -1), vec![vec![-1, 4], vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn path_to_extremal() {
        let path = modification_path(&[1, 2, 3, 9]).unwrap();
        assert_eq!(path.last().unwrap(), &wp(3, 15));
        let w: Vec<i64> = path.iter().map(|a| wt(15, a).unwrap()).collect();
        assert!(w.windows(2).all(|p| p[0] < p[1]));
        assert!(modify(&[1, 2, 3], 1, 2).is_err());
    }

    #[test]
    fn nu_and_degree() {
        let a = wp(4, 15);
        assert_eq!(nu(95, &a).unwrap(), BigUint::from(286u32));
        assert_eq!(d_of(95, &a).unwrap().value, 24);
        assert!(matches!(nu(85, &a), Err(ConstructError::ThetaTooSmall(0))));
        let d = d_of(12, &[1, 2, 3]).unwrap();
        assert_eq!((d.value, d.discrepancy), (6, false));
        let d = d_of(75, &wp(2, 15)).unwrap();
        assert!(d.discrepancy);
        assert_eq!((d.value, d.formula), (12, 15));
    }
}
