//! The symmetrization operator `Symm_N(f) = Σ_{σ∈S_N} f(z_σ(1), …, z_σ(N))`.
//!
//! Three routes, which must agree wherever they overlap:
//!
//! * [`symmetrize_full`] expands exactly by grouping the terms of `f` into
//!   S_N-orbits of exponent vectors. The coefficient of `z^β` in `Symm_N(f)`
//!   is `|Stab(β)| · Σ_{α ∈ S_N·β} f_α`, so one pass over `f` suffices.
//! * [`symmetrize_by_permutations`] sums `f∘σ` over every σ, split into
//!   disjoint rank blocks of S_N that are reduced in parallel.
//! * [`symm_eval_mod`] / [`symm_eval_exact`] evaluate `Symm_N(δ(z, M))` at a
//!   point without expanding anything.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::edgemat::{graph_monomial_of, EdgeMatrix, Shape};
use crate::error::{PolyError, SymmError};
use crate::modular::{self, WITNESS_PRIMES};
use crate::perm;
use crate::poly::{ExactPoly, Monomial};

/// Caps on full expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionBudget {
    pub max_vars: usize,
    pub max_degree: u64,
}

impl Default for ExpansionBudget {
    fn default() -> Self {
        ExpansionBudget {
            max_vars: 8,
            max_degree: 64,
        }
    }
}

impl ExpansionBudget {
    pub fn unlimited() -> Self {
        ExpansionBudget {
            max_vars: usize::MAX,
            max_degree: u64::MAX,
        }
    }

    pub fn check(&self, vars: usize, degree: u64) -> Result<(), SymmError> {
        if vars > self.max_vars || degree > self.max_degree {
            return Err(SymmError::BudgetExceeded {
                vars,
                max_vars: self.max_vars,
                degree,
                max_degree: self.max_degree,
            });
        }
        Ok(())
    }
}

fn degree_of(f: &ExactPoly) -> u64 {
    f.terms().first().map_or(0, |(m, _)| m.degree())
}

/// Exact `Symm_N(f)` over all `N!` permutations of the ambient variables.
pub fn symmetrize_full(f: &ExactPoly, budget: &ExpansionBudget) -> Result<ExactPoly, SymmError> {
    budget.check(f.nvars(), degree_of(f))?;
    Ok(symmetrize_orbits(f))
}

fn symmetrize_orbits(f: &ExactPoly) -> ExactPoly {
    let n = f.nvars();
    let mut buckets: FxHashMap<Box<[u32]>, BigInt> = FxHashMap::default();
    for (m, c) in f.terms() {
        let mut key: Box<[u32]> = m.exponents().into();
        key.sort_unstable();
        match buckets.get_mut(&key) {
            Some(v) => *v += c,
            None => {
                buckets.insert(key, c.clone());
            }
        }
    }
    let mut terms = Vec::new();
    for (key, sum) in buckets {
        if sum.is_zero() {
            continue;
        }
        let coeff = sum * stabilizer_order(&key);
        let mut arrangement = key.to_vec();
        loop {
            terms.push((Monomial::from_exponents(arrangement.clone()), coeff.clone()));
            if !perm::next_permutation(&mut arrangement) {
                break;
            }
        }
    }
    ExactPoly::from_terms(n, terms)
}

/// `∏ (multiplicity)!` over the distinct values of a sorted exponent vector.
fn stabilizer_order(sorted: &[u32]) -> BigInt {
    let mut acc = BigInt::one();
    let mut run = 0u64;
    for (i, v) in sorted.iter().enumerate() {
        if i > 0 && sorted[i - 1] == *v {
            run += 1;
        } else {
            run = 1;
        }
        acc *= BigInt::from(run);
    }
    acc
}

/// `Symm_N(f)` as a literal sum of `f∘σ` over S_N, reduced in parallel over
/// disjoint rank blocks. Exact arithmetic makes the result independent of
/// the block split and thread count.
pub fn symmetrize_by_permutations(
    f: &ExactPoly,
    budget: &ExpansionBudget,
) -> Result<ExactPoly, SymmError> {
    budget.check(f.nvars(), degree_of(f))?;
    let n = f.nvars();
    let blocks = perm::rank_blocks(n, perm::default_blocks(n));
    let partial: Vec<FxHashMap<Monomial, BigInt>> = blocks
        .par_iter()
        .map(|&(start, end)| {
            let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
            perm::for_each_in_range(n, start, end, |sigma| {
                for (m, c) in f.terms() {
                    let k = m.permuted(sigma);
                    match acc.get_mut(&k) {
                        Some(v) => *v += c,
                        None => {
                            acc.insert(k, c.clone());
                        }
                    }
                }
            });
            acc
        })
        .collect();
    Ok(ExactPoly::from_terms(n, partial.into_iter().flatten()))
}

fn check_distinct<T: PartialEq>(point: &[T]) -> Result<(), SymmError> {
    for i in 0..point.len() {
        for j in (i + 1)..point.len() {
            if point[i] == point[j] {
                return Err(SymmError::RepeatedCoordinate(i, j));
            }
        }
    }
    Ok(())
}

fn check_len(m: &EdgeMatrix, got: usize) -> Result<(), SymmError> {
    if got != m.n() {
        return Err(PolyError::PointLength {
            expected: m.n(),
            got,
        }
        .into());
    }
    Ok(())
}

/// `Symm_N(δ(z, M))` at `point`, modulo the prime `p`.
pub fn symm_eval_mod(m: &EdgeMatrix, point: &[u64], p: u64) -> Result<u64, SymmError> {
    modular::check_prime(p)?;
    check_len(m, point.len())?;
    let pt: Vec<u64> = point.iter().map(|x| x % p).collect();
    check_distinct(&pt)?;
    let n = m.n();
    let edges = m.edges();
    // tables[e][x * n + y] = (p_x − p_y)^a_e
    let tables: Vec<Vec<u64>> = edges
        .iter()
        .map(|&(_, _, a)| {
            let mut t = vec![0u64; n * n];
            for x in 0..n {
                for y in 0..n {
                    if x != y {
                        let d = modular::sub_mod(pt[x], pt[y], p);
                        t[x * n + y] = modular::pow_mod(d, a as u64, p);
                    }
                }
            }
            t
        })
        .collect();
    let blocks = perm::rank_blocks(n, perm::default_blocks(n));
    let sum = blocks
        .par_iter()
        .map(|&(start, end)| {
            let mut acc = 0u64;
            perm::for_each_in_range(n, start, end, |sigma| {
                let mut prod = 1u64;
                for (e, &(i, j, _)) in edges.iter().enumerate() {
                    prod = modular::mul_mod(prod, tables[e][sigma[i] * n + sigma[j]], p);
                }
                acc = modular::add_mod(acc, prod, p);
            });
            acc
        })
        .reduce(|| 0, |a, b| modular::add_mod(a, b, p));
    Ok(sum)
}

/// `Symm_N(δ(z, M))` at an integer point, exactly.
pub fn symm_eval_exact(m: &EdgeMatrix, point: &[BigInt]) -> Result<BigInt, SymmError> {
    check_len(m, point.len())?;
    check_distinct(point)?;
    let n = m.n();
    let edges = m.edges();
    let tables: Vec<Vec<BigInt>> = edges
        .iter()
        .map(|&(_, _, a)| {
            let mut t = vec![BigInt::zero(); n * n];
            for x in 0..n {
                for y in 0..n {
                    if x != y {
                        t[x * n + y] = num_traits::pow(&point[x] - &point[y], a as usize);
                    }
                }
            }
            t
        })
        .collect();
    let blocks = perm::rank_blocks(n, perm::default_blocks(n));
    let partial: Vec<BigInt> = blocks
        .par_iter()
        .map(|&(start, end)| {
            let mut acc = BigInt::zero();
            perm::for_each_in_range(n, start, end, |sigma| {
                let mut prod = BigInt::one();
                for (e, &(i, j, _)) in edges.iter().enumerate() {
                    prod *= &tables[e][sigma[i] * n + sigma[j]];
                }
                acc += prod;
            });
            acc
        })
        .collect();
    Ok(partial.into_iter().sum())
}

/// `Symm_N(δ(z, M))` at a point, exactly or modulo an optional prime.
pub fn symm_eval(m: &EdgeMatrix, point: &[BigInt], modulus: Option<u64>) -> Result<BigInt, SymmError> {
    match modulus {
        None => symm_eval_exact(m, point),
        Some(p) => {
            modular::check_prime(p)?;
            let pt: Vec<u64> = point.iter().map(|x| modular::reduce_bigint(x, p)).collect();
            symm_eval_mod(m, &pt, p).map(BigInt::from)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Nonzero,
    ZeroExact,
    ZeroProbable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Justification {
    /// Every entry even and some entry positive: `Symm` is a sum of squares of
    /// a nonzero polynomial's images, hence nonzero.
    AllEvenEntries,
    /// Nonzero residue at a sampled point.
    ModularEvaluation,
    /// Nonzero integer value at a point, found after expansion.
    ExactEvaluation,
    /// Full expansion gave the zero polynomial.
    FullExpansion,
    /// Vanished at every sampled point; expansion not attempted.
    RepeatedVanishing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Policy {
    ExactIfSmall,
    WitnessOnly,
}

/// Outcome of a nonzero test. `NONZERO` backed by evaluation always carries
/// the point and the nonzero value; replaying the evaluation reproduces it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymmWitness {
    pub verdict: Verdict,
    pub justification: Justification,
    pub point: Option<Vec<u64>>,
    /// Decimal value at `point` (a residue when `modulus` is set).
    pub value: Option<String>,
    pub modulus: Option<u64>,
    pub trials: u32,
    pub seed: u64,
    /// Degree of `Symm_N(δ(z, M))`, i.e. `‖M‖/2`.
    pub degree: u64,
    /// Upper bound on the chance that a nonzero polynomial vanished at every
    /// sampled point (`ZERO_PROBABLE` only).
    pub failure_bound: Option<f64>,
}

impl SymmWitness {
    /// Re-evaluates the stored point; `true` when it reproduces the stored
    /// nonzero value.
    pub fn replay(&self, m: &EdgeMatrix) -> bool {
        let (Some(point), Some(value)) = (&self.point, &self.value) else {
            return false;
        };
        match self.modulus {
            Some(p) => symm_eval_mod(m, point, p)
                .map(|v| v != 0 && v.to_string() == *value)
                .unwrap_or(false),
            None => {
                let pt: Vec<BigInt> = point.iter().map(|&x| BigInt::from(x)).collect();
                symm_eval_exact(m, &pt)
                    .map(|v| !v.is_zero() && v.to_string() == *value)
                    .unwrap_or(false)
            }
        }
    }
}

/// Sample set for witness coordinates: `{1, …, SAMPLE_RANGE}`.
pub const SAMPLE_RANGE: usize = 1_000_000;
/// Above this many vertices the all-even shortcut skips computing a value.
const SHORTCUT_VALUE_CAP: usize = 10;

#[derive(Clone, Copy, Debug)]
pub struct NonzeroOptions {
    pub policy: Policy,
    pub trials: u32,
    pub seed: u64,
    pub budget: ExpansionBudget,
}

impl Default for NonzeroOptions {
    fn default() -> Self {
        NonzeroOptions {
            policy: Policy::ExactIfSmall,
            trials: 4,
            seed: 0,
            budget: ExpansionBudget::default(),
        }
    }
}

/// Seeded witness points: `trials` points of distinct coordinates drawn
/// without replacement from `{1, …, 10^6}`, each paired with a prime from the
/// fixed table.
pub fn witness_points(n: usize, trials: u32, seed: u64) -> Vec<(Vec<u64>, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|t| {
            let pt: Vec<u64> = sample(&mut rng, SAMPLE_RANGE, n)
                .into_iter()
                .map(|x| x as u64 + 1)
                .collect();
            let p = WITNESS_PRIMES[(seed.wrapping_add(t as u64) % WITNESS_PRIMES.len() as u64) as usize];
            (pt, p)
        })
        .collect()
}

/// Decides whether `Symm_N(δ(z, M))` is nonzero.
pub fn nonzero_test(m: &EdgeMatrix, opts: &NonzeroOptions) -> SymmWitness {
    let n = m.n();
    let degree = m.weight();
    let base = SymmWitness {
        verdict: Verdict::Nonzero,
        justification: Justification::ModularEvaluation,
        point: None,
        value: None,
        modulus: None,
        trials: opts.trials,
        seed: opts.seed,
        degree,
        failure_bound: None,
    };

    if m.all_even() && !m.is_zero() {
        let mut w = SymmWitness {
            justification: Justification::AllEvenEntries,
            ..base
        };
        if n <= SHORTCUT_VALUE_CAP {
            let point: Vec<u64> = (1..=n as u64).collect();
            let p = WITNESS_PRIMES[(opts.seed % WITNESS_PRIMES.len() as u64) as usize];
            let v = symm_eval_mod(m, &point, p).expect("valid point");
            if v != 0 {
                w.point = Some(point);
                w.value = Some(v.to_string());
                w.modulus = Some(p);
            }
        }
        return w;
    }

    for (point, p) in witness_points(n, opts.trials, opts.seed) {
        let v = symm_eval_mod(m, &point, p).expect("distinct sampled point");
        if v != 0 {
            return SymmWitness {
                point: Some(point),
                value: Some(v.to_string()),
                modulus: Some(p),
                ..base
            };
        }
    }

    if opts.policy == Policy::ExactIfSmall && opts.budget.check(n, degree).is_ok() {
        let full = symmetrize_full(&m.graph_monomial(), &opts.budget).expect("within budget");
        if full.is_zero() {
            return SymmWitness {
                verdict: Verdict::ZeroExact,
                justification: Justification::FullExpansion,
                ..base
            };
        }
        // Every sample vanished but the polynomial is not zero: search small
        // integer points until one evaluates nonzero.
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
        loop {
            let point: Vec<u64> = sample(&mut rng, SAMPLE_RANGE, n)
                .into_iter()
                .map(|x| x as u64 + 1)
                .collect();
            let pt: Vec<BigInt> = point.iter().map(|&x| BigInt::from(x)).collect();
            let v = full.eval(&pt).expect("arity");
            if !v.is_zero() {
                return SymmWitness {
                    justification: Justification::ExactEvaluation,
                    point: Some(point),
                    value: Some(v.to_string()),
                    ..base
                };
            }
        }
    }

    let per_trial = (degree as f64 / SAMPLE_RANGE as f64).min(1.0);
    SymmWitness {
        verdict: Verdict::ZeroProbable,
        justification: Justification::RepeatedVanishing,
        failure_bound: Some(per_trial.powi(opts.trials as i32)),
        ..base
    }
}

/// The sub-symmetrizations `δ_r(M*)`, each in the `m_r` local variables of
/// its block.
#[derive(Clone, Debug)]
pub struct BlockSymmetrization {
    pub polys: Vec<ExactPoly>,
    pub product_nonzero: bool,
}

pub fn symmetrize_block(
    m_star: &EdgeMatrix,
    shape: &Shape,
    budget: &ExpansionBudget,
) -> Result<BlockSymmetrization, SymmError> {
    let mut polys = Vec::with_capacity(shape.q());
    for set in shape.index_sets() {
        let block = m_star.principal(&set);
        let weight = block.norm() / 2;
        budget.check(set.len(), weight)?;
        let g = graph_monomial_of(&block);
        polys.push(symmetrize_full(&g, budget)?);
    }
    let product_nonzero = polys.iter().all(|p| !p.is_zero());
    Ok(BlockSymmetrization {
        polys,
        product_nonzero,
    })
}

/// Whether `a` and `b` agree up to a nonzero rational factor, via content and
/// sign normalization.
pub fn proportional(a: &ExactPoly, b: &ExactPoly) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    a.primitive_normalized() == b.primitive_normalized()
}

/// Leading coefficient sign of a symmetrization, handy in reports.
pub fn leading_sign(p: &ExactPoly) -> i8 {
    match p.leading_term() {
        None => 0,
        Some((_, c)) if c.is_negative() => -1,
        Some(_) => 1,
    }
}
