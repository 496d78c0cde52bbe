//! Outward-rounded rational enclosures for the transcendental pieces of the
//! PP bound: `√x`, `x^{1/4}`, `ln 2` and `exp` on `[0, 1]`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Closed interval with rational endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn point(v: BigRational) -> Self {
        Interval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

fn pow2(p: u32) -> BigInt {
    BigInt::one() << p
}

fn ratio(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// `x^{1/k}` enclosed at resolution `2^{-p}`; exact when `x` is a perfect
/// `k`-th power.
pub fn root_enclosure(x: &BigUint, k: u32, p: u32) -> Interval {
    let r = x.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *x {
        return Interval::point(BigRational::from_integer(BigInt::from(r)));
    }
    let scaled: BigUint = x << (k * p) as usize;
    let lo = BigInt::from(scaled.nth_root(k));
    let hi = &lo + 1;
    Interval {
        lo: ratio(lo, pow2(p)),
        hi: ratio(hi, pow2(p)),
    }
}

/// `ln 2 = Σ_{j≥1} 1/(j 2^j)`; the tail after `terms` terms is below
/// `1/((terms+1) 2^terms)`.
pub fn ln2_enclosure(terms: u32) -> Interval {
    let mut sum = BigRational::zero();
    for j in 1..=terms {
        sum += ratio(BigInt::one(), BigInt::from(j) * pow2(j));
    }
    let tail = ratio(BigInt::one(), BigInt::from(terms + 1) * pow2(terms));
    Interval {
        hi: &sum + tail,
        lo: sum,
    }
}

fn exp_partial(y: &BigRational, terms: u32) -> (BigRational, BigRational) {
    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    for j in 0..=terms {
        if j > 0 {
            term = term * y / BigRational::from_integer(BigInt::from(j));
        }
        sum += &term;
    }
    // next term y^{K+1}/(K+1)!
    let next = term * y / BigRational::from_integer(BigInt::from(terms + 1));
    (sum, next)
}

/// `exp(y)` for `y ∈ [lo, hi] ⊂ [0, 1]`, with Taylor remainder at most
/// `3 y^{K+1}/(K+1)!`.
pub fn exp_enclosure(y: &Interval, terms: u32) -> Interval {
    assert!(y.lo >= BigRational::zero() && y.hi <= BigRational::one());
    let (lo, _) = exp_partial(&y.lo, terms);
    let (hi, next) = exp_partial(&y.hi, terms);
    Interval {
        lo,
        hi: hi + next * BigRational::from_integer(BigInt::from(3)),
    }
}

/// Smallest integer `≥ v`.
pub fn ceil(v: &BigRational) -> BigInt {
    v.ceil().to_integer()
}
