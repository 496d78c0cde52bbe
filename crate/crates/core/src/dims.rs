//! Cayley–Sylvester counting: Gaussian binomials, bounded partitions, the
//! semi-invariant dimension `p_w − p_{w−1}`, and the PP lower bound.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::construct::partitions::{beta, binomial, wp, wt};
use crate::interval::{ceil, exp_enclosure, ln2_enclosure, root_enclosure, Interval};

/// Polynomial in `q` with nonnegative coefficients, index = power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QPoly {
    pub coeffs: Vec<BigUint>,
}

impl QPoly {
    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    pub fn coefficient_sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }
}

/// `(N+d choose d)_q = ∏_{i=1}^{d} (1 − q^{N+i}) / (1 − q^i)`. Each step
/// multiplies by the numerator factor and then divides exactly by
/// `1 − q^i`, which is a stride-`i` prefix sum.
pub fn gaussian_binomial(n: usize, d: usize) -> QPoly {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for i in 1..=d {
        let shift = n + i;
        let mut next = vec![BigInt::zero(); c.len() + n];
        for (k, v) in c.iter().enumerate() {
            next[k] += v;
            // terms past the final degree never feed back into the division
            if let Some(slot) = next.get_mut(k + shift) {
                *slot -= v;
            }
        }
        for k in i..next.len() {
            let prev = next[k - i].clone();
            next[k] += prev;
        }
        c = next;
    }
    QPoly {
        coeffs: c
            .into_iter()
            .map(|v| v.to_biguint().expect("Gaussian binomial coefficients are nonnegative"))
            .collect(),
    }
}

/// `p_0, …, p_{wmax}` for partitions with at most `n` parts, each at most
/// `d`, by adding one part size at a time.
pub fn bounded_partition_counts(n: usize, d: usize, wmax: usize) -> Vec<BigUint> {
    // dp[c][w]: partitions of w into exactly c parts from the sizes seen so far
    let mut dp = vec![vec![BigUint::zero(); wmax + 1]; n + 1];
    dp[0][0] = BigUint::one();
    for v in 1..=d.min(wmax) {
        for c in 1..=n {
            for w in v..=wmax {
                if dp[c - 1][w - v].is_zero() {
                    continue;
                }
                let add = dp[c - 1][w - v].clone();
                dp[c][w] += add;
            }
        }
    }
    (0..=wmax)
        .map(|w| dp.iter().map(|row| &row[w]).sum())
        .collect()
}

/// Partitions of `w` into at most `n` parts, each at most `d`.
pub fn p_w(n: usize, d: usize, w: i64) -> BigUint {
    if w < 0 || w as u128 > (n as u128) * (d as u128) {
        return BigUint::zero();
    }
    bounded_partition_counts(n, d, w as usize).pop().unwrap()
}

/// `p_w(N, d) − p_{w−1}(N, d)`, reported raw (it may be negative past the
/// middle degree).
pub fn semidim(w: i64, d: usize, n: usize) -> BigInt {
    if w < 0 {
        return BigInt::zero();
    }
    let counts = bounded_partition_counts(n, d, w as usize);
    let pw = BigInt::from(counts[w as usize].clone());
    let pw1 = if w >= 1 {
        BigInt::from(counts[w as usize - 1].clone())
    } else {
        BigInt::zero()
    };
    pw - pw1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PpBound {
    pub value: BigInt,
    /// `min{N, d} ≥ 8` and `w ≤ Nd/2`.
    pub valid: bool,
    /// `min{2w, d², N²}`.
    pub x: u64,
    /// Binary precision at which the ceiling was settled (0 when exact).
    pub precision: u32,
}

/// `⌈(4/1000) · x^{−9/4} · 2^{√x}⌉` with `x = min{2w, d², N²}`, evaluated
/// on rational enclosures whose precision doubles until both ends share a
/// ceiling.
pub fn pp_bound(n: u64, w: u64, d: u64) -> PpBound {
    let x = (2 * w).min(d * d).min(n * n);
    assert!(x >= 1, "the PP expression needs min(2w, d^2, N^2) >= 1");
    let valid = n.min(d) >= 8 && 2 * w <= n * d;
    let xb = BigUint::from(x);
    let c = BigRational::new(BigInt::from(4), BigInt::from(1000));
    let x2 = BigRational::from_integer(BigInt::from(x) * BigInt::from(x));

    let y = xb.nth_root(4);
    if num_traits::pow(y.clone(), 4) == xb {
        // √x = y², x^{1/4} = y: everything is rational
        let s = (&y * &y).to_u32().expect("exponent fits");
        let v = c * BigRational::from_integer(BigInt::one() << s)
            / (x2 * BigRational::from_integer(BigInt::from(y)));
        return PpBound {
            value: ceil(&v),
            valid,
            x,
            precision: 0,
        };
    }

    let mut p = 64u32;
    loop {
        let sq = root_enclosure(&xb, 2, p);
        let q4 = root_enclosure(&xb, 4, p);
        let ln2 = ln2_enclosure(p + 8);
        let k = sq.lo.floor();
        let fl = &sq.lo - &k;
        let fh = &sq.hi - &k;
        let expo = exp_enclosure(
            &Interval {
                lo: fl * &ln2.lo,
                hi: fh * &ln2.hi,
            },
            p / 2 + 16,
        );
        let two_k = BigRational::from_integer(BigInt::one() << k.to_integer().to_usize().unwrap());
        let base = &c * &two_k;
        let lo = &base * &expo.lo / (&x2 * &q4.hi);
        let hi = &base * &expo.hi / (&x2 * &q4.lo);
        let (a, b) = (ceil(&lo), ceil(&hi));
        if a == b && !lo.is_negative() {
            return PpBound {
                value: a,
                valid,
                x,
                precision: p,
            };
        }
        p *= 2;
        assert!(p <= 1 << 16, "PP ceiling did not settle");
    }
}

/// Degree attached to each row of a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DRule {
    /// `d = w + offset`.
    Offset(i64),
    Fixed(u64),
}

impl DRule {
    /// Parses `w-71`, `w+3`, `w` or a plain integer.
    pub fn parse(s: &str) -> Option<DRule> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('w') {
            if rest.is_empty() {
                return Some(DRule::Offset(0));
            }
            let (sign, num) = rest.split_at(1);
            let k: i64 = num.trim().parse().ok()?;
            return match sign {
                "+" => Some(DRule::Offset(k)),
                "-" => Some(DRule::Offset(-k)),
                _ => None,
            };
        }
        s.parse().ok().map(DRule::Fixed)
    }

    pub fn degree(&self, w: u64) -> Option<u64> {
        match *self {
            DRule::Offset(k) => u64::try_from(w as i64 + k).ok(),
            DRule::Fixed(d) => Some(d),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub w: u64,
    pub d: u64,
    /// `ν(w, ℘(β(N)−1, N))`, absent when `w < ϖ`.
    pub nu: Option<BigUint>,
    pub semidim: BigInt,
    pub pp: BigInt,
    pub valid: bool,
}

/// One row per weight, computed in parallel and returned in input order.
pub fn table(n: u64, weights: &[u64], rule: DRule) -> Vec<TableRow> {
    let s = beta(n).saturating_sub(1);
    let shape = (s >= 1).then(|| wp(s, n));
    weights
        .par_iter()
        .map(|&w| {
            let d = rule.degree(w).expect("degree rule gives a nonnegative degree");
            let pp = pp_bound(n, w, d);
            TableRow {
                w,
                d,
                nu: shape.as_ref().and_then(|a| nu_at_least_zero(n, w, a)),
                semidim: semidim(w as i64, d as usize, n as usize),
                pp: pp.value,
                valid: pp.valid,
            }
        })
        .collect()
}

// The family count extended to θ = 0, where it is C(s−1, s−1) = 1.
fn nu_at_least_zero(n: u64, w: u64, a: &[i64]) -> Option<BigUint> {
    let theta = u64::try_from(w as i64 - wt(n, a).ok()?).ok()?;
    let s = a.len() as u64 - 1;
    Some(binomial(s - 1 + theta, s - 1))
}

pub const TABLE_HEADER: &str = "w,nu,semidim,pp,valid";

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from(TABLE_HEADER);
    out.push('\n');
    for r in rows {
        let nu = r.nu.as_ref().map(|v| v.to_string()).unwrap_or_default();
        out.push_str(&format!("{},{},{},{},{}\n", r.w, nu, r.semidim, r.pp, r.valid));
    }
    out
}
