//! From symmetric polynomials in `z_1, …, z_N` to semi-invariants in
//! `a_0, …, a_N`.
//!
//! The binary form is `f(X) = ∏ (X + z_i) = X^N + e_1 X^{N−1} + ⋯ + e_N`, so
//! `e_i` is the plain elementary symmetric polynomial `σ_i(z)` and a
//! semi-invariant is `Q = a_0^d P(a_1/a_0, …, a_N/a_0)` for a translation
//! invariant `P`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::edgemat::EdgeMatrix;
use crate::error::{PolyError, SymmError};
use crate::modular::{is_prime, rank_mod};
use crate::poly::{ExactPoly, Monomial, Poly, RatPoly};
use crate::polytext::to_text_with_comments;
use crate::symmetrize::{symmetrize_full, ExpansionBudget};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemiInvError {
    #[error("polynomial is not symmetric in its variables")]
    NotSymmetric,
    #[error("polynomial is not translation invariant")]
    NotTranslationInvariant,
    #[error("e-degree {degree} exceeds the homogenization degree {d}")]
    DegreeBound { degree: u64, d: u64 },
    #[error("evaluation point coordinates must be distinct (index {0} and {1} agree)")]
    RepeatedCoordinate(usize, usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Symm(#[from] SymmError),
}

/// Largest prime below `2^62`, used by the modular rank fast path.
pub const RANK_PRIME: u64 = 4_611_686_018_427_387_847;

/// Polynomial in `e_1, …, e_N`; variable `i` of `poly` is `e_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElemPoly {
    pub poly: RatPoly,
}

impl ElemPoly {
    pub fn n(&self) -> usize {
        self.poly.nvars()
    }

    /// Weight of a monomial under `wt(e_i) = i`.
    fn monomial_weight(m: &Monomial) -> u64 {
        m.exponents()
            .iter()
            .enumerate()
            .map(|(i, &k)| (i as u64 + 1) * k as u64)
            .sum()
    }

    /// The common weight of all terms, or `None` for zero or mixed weights.
    pub fn weight(&self) -> Option<u64> {
        let mut it = self.poly.terms().iter().map(|(m, _)| Self::monomial_weight(m));
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    /// Total degree with each `e_i` counting one.
    pub fn e_degree(&self) -> u64 {
        self.poly
            .terms()
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    /// `(Q, den)` with `Q = den · P` integral and `den` the least such.
    pub fn to_integer(&self) -> (ExactPoly, BigInt) {
        let den = self
            .poly
            .terms()
            .iter()
            .fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));
        let scale = BigRational::from_integer(den.clone());
        let q = ExactPoly::from_terms(
            self.n(),
            self.poly
                .terms()
                .iter()
                .map(|(m, c)| (m.clone(), (c * &scale).to_integer())),
        );
        (q, den)
    }

    /// Substitutes `e_i = σ_i(z)`.
    pub fn to_z(&self) -> RatPoly {
        let n = self.n();
        let sig: Vec<RatPoly> = elementary(n)
            .iter()
            .map(|s| s.map_coefficients(|c| BigRational::from_integer(c.clone())))
            .collect();
        let mut cache = PowerCache::new(sig);
        let mut acc = RatPoly::zero(n);
        for (m, c) in self.poly.terms() {
            let t = cache.monomial(m.exponents()).scale(c);
            acc = acc.add(&t).expect("same ring");
        }
        acc
    }
}

/// `σ_1(z), …, σ_N(z)` in `N` variables.
pub fn elementary(n: usize) -> Vec<ExactPoly> {
    // coefficients of ∏ (1 + z_i Y), one polynomial per power of Y
    let mut layers = vec![ExactPoly::one(n)];
    for i in 0..n {
        let zi = ExactPoly::var(n, i);
        let mut next = layers.clone();
        next.push(ExactPoly::zero(n));
        for k in 0..layers.len() {
            let t = layers[k].mul(&zi).expect("same ring");
            next[k + 1] = next[k + 1].add(&t).expect("same ring");
        }
        layers = next;
    }
    layers.remove(0);
    layers
}

struct PowerCache<C: crate::poly::Coefficient> {
    base: Vec<Poly<C>>,
    powers: HashMap<(usize, u32), Poly<C>>,
}

impl<C: crate::poly::Coefficient> PowerCache<C> {
    fn new(base: Vec<Poly<C>>) -> Self {
        PowerCache {
            base,
            powers: HashMap::new(),
        }
    }

    fn power(&mut self, i: usize, k: u32) -> Poly<C> {
        if let Some(p) = self.powers.get(&(i, k)) {
            return p.clone();
        }
        let p = if k == 1 {
            self.base[i].clone()
        } else {
            self.power(i, k - 1).mul(&self.base[i]).expect("same ring")
        };
        self.powers.insert((i, k), p.clone());
        p
    }

    fn monomial(&mut self, exps: &[u32]) -> Poly<C> {
        let nvars = self.base[0].nvars();
        let mut acc = Poly::one(nvars);
        for (i, &k) in exps.iter().enumerate() {
            if k > 0 {
                acc = acc.mul(&self.power(i, k)).expect("same ring");
            }
        }
        acc
    }
}

/// Rewrites a symmetric `f` as a polynomial in `σ_1(z), …, σ_N(z)` by
/// repeatedly cancelling the graded-lex leading term.
pub fn to_elementary(f: &ExactPoly) -> Result<ElemPoly, SemiInvError> {
    let n = f.nvars();
    if !f.is_symmetric() {
        return Err(SemiInvError::NotSymmetric);
    }
    let mut cache = PowerCache::new(elementary(n));
    let mut rem = f.clone();
    let mut out: Vec<(Monomial, BigInt)> = Vec::new();
    while let Some((lead, c)) = rem.leading_term().cloned() {
        let lam = lead.exponents();
        // a symmetric polynomial leads with a partition
        let k: Vec<u32> = (0..n)
            .map(|i| lam[i] - if i + 1 < n { lam[i + 1] } else { 0 })
            .collect();
        let prod = cache.monomial(&k).scale(&c);
        rem = rem.sub(&prod)?;
        out.push((Monomial::from_exponents(k), c));
    }
    Ok(ElemPoly {
        poly: RatPoly::from_terms(
            n,
            out.into_iter()
                .map(|(m, c)| (m, BigRational::from_integer(c))),
        ),
    })
}

fn binom(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `E_i(t) = Σ_{j ≤ i} C(N−j, i−j) e_j t^{i−j}` in the ring
/// `e_1, …, e_N, t`.
fn shifted_elementary(n: usize) -> Vec<RatPoly> {
    let vars = n + 1;
    (1..=n)
        .map(|i| {
            let terms = (0..=i).map(|j| {
                let mut e = vec![0u32; vars];
                if j > 0 {
                    e[j - 1] = 1;
                }
                e[n] = (i - j) as u32;
                (
                    Monomial::from_exponents(e),
                    BigRational::from_integer(binom(n - j, i - j)),
                )
            });
            RatPoly::from_terms(vars, terms)
        })
        .collect()
}

fn embed(p: &RatPoly, vars: usize) -> RatPoly {
    RatPoly::from_terms(
        vars,
        p.terms().iter().map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            e.resize(vars, 0);
            (Monomial::from_exponents(e), c.clone())
        }),
    )
}

/// `P(E_1(t), …, E_N(t)) = P(e_1, …, e_N)` as polynomials in `e` and a
/// symbolic `t`.
pub fn translation_check(p: &ElemPoly) -> bool {
    let n = p.n();
    let mut cache = PowerCache::new(shifted_elementary(n));
    let mut shifted = RatPoly::zero(n + 1);
    for (m, c) in p.poly.terms() {
        let t = cache.monomial(m.exponents()).scale(c);
        shifted = shifted.add(&t).expect("same ring");
    }
    shifted == embed(&p.poly, n + 1)
}

/// A polynomial in `a_0, …, a_N` (variable `i` is `a_i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiInvariant {
    pub poly: ExactPoly,
    pub degree: u64,
    pub weight: u64,
    /// `poly = cleared_factor · a_0^d P(a_1/a_0, …)`.
    pub cleared_factor: BigRational,
    pub provenance: Option<EdgeMatrix>,
}

impl SemiInvariant {
    pub fn n(&self) -> usize {
        self.poly.nvars() - 1
    }

    /// Every term has degree `d` and weight `w` under `wt(a_i) = i`.
    pub fn is_homogeneous(&self) -> bool {
        self.poly.terms().iter().all(|(m, _)| {
            let w: u64 = m
                .exponents()
                .iter()
                .enumerate()
                .map(|(i, &k)| i as u64 * k as u64)
                .sum();
            m.degree() == self.degree && w == self.weight
        })
    }

    pub fn to_text(&self) -> String {
        let mut comments = vec![
            "variables a_0 .. a_N".to_string(),
            format!("degree {}", self.degree),
            format!("weight {}", self.weight),
            format!("cleared_factor {}", self.cleared_factor),
        ];
        if let Some(m) = &self.provenance {
            comments.push(format!(
                "provenance {}",
                serde_json::to_string(m).expect("matrix serializes")
            ));
        }
        to_text_with_comments(&self.poly, &comments)
    }
}

/// `a_0^d P(a_1/a_0, …, a_N/a_0)`, scaled to a primitive integer polynomial
/// with positive leading coefficient.
pub fn homogenize(p: &ElemPoly, d: u64) -> Result<SemiInvariant, SemiInvError> {
    let n = p.n();
    let degree = p.e_degree();
    if degree > d {
        return Err(SemiInvError::DegreeBound { degree, d });
    }
    if !translation_check(p) {
        return Err(SemiInvError::NotTranslationInvariant);
    }
    let weight = p.weight().unwrap_or(0);
    let terms: Vec<(Monomial, BigRational)> = p
        .poly
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut e = Vec::with_capacity(n + 1);
            e.push((d - m.degree()) as u32);
            e.extend_from_slice(m.exponents());
            (Monomial::from_exponents(e), c.clone())
        })
        .collect();
    let lcm = terms
        .iter()
        .fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));
    let ints: Vec<(Monomial, BigInt)> = terms
        .into_iter()
        .map(|(m, c)| (m, (c * BigRational::from_integer(lcm.clone())).to_integer()))
        .collect();
    let raw = ExactPoly::from_terms(n + 1, ints);
    let mut factor = BigRational::from_integer(lcm);
    let poly = raw.primitive_normalized();
    if let (Some((_, a)), Some((_, b))) = (raw.leading_term(), poly.leading_term()) {
        factor *= BigRational::new(b.clone(), a.clone());
    }
    Ok(SemiInvariant {
        poly,
        degree: d,
        weight,
        cleared_factor: factor,
        provenance: None,
    })
}

/// Expands `Symm_N(δ(z, M))`, rewrites it in the `e_i` and homogenizes at
/// degree `d`.
pub fn semi_invariant_of(
    m: &EdgeMatrix,
    d: u64,
    budget: &ExpansionBudget,
) -> Result<SemiInvariant, SemiInvError> {
    let g = symmetrize_full(&m.graph_monomial(), budget)?;
    let p = to_elementary(&g)?;
    let mut q = homogenize(&p, d)?;
    q.weight = m.weight();
    q.provenance = Some(m.clone());
    Ok(q)
}

fn coefficient_matrix(polys: &[ExactPoly]) -> Result<Vec<Vec<BigInt>>, SemiInvError> {
    let Some(first) = polys.first() else {
        return Ok(Vec::new());
    };
    for p in polys {
        if p.nvars() != first.nvars() {
            return Err(PolyError::AmbientMismatch {
                left: first.nvars(),
                right: p.nvars(),
            }
            .into());
        }
    }
    let mut monos: Vec<&Monomial> = polys.iter().flat_map(|p| p.terms().iter().map(|(m, _)| m)).collect();
    monos.sort_by(|a, b| b.cmp(a));
    monos.dedup();
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    Ok(polys
        .iter()
        .map(|p| {
            let mut row = vec![BigInt::zero(); monos.len()];
            for (m, c) in p.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect())
}

/// Rank over the rationals by fraction-free (Bareiss) elimination with
/// first-nonzero pivoting.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = &a[i][j] * &a[rank][col] - &a[i][col] * &a[rank][j];
                debug_assert!((&v % &prev).is_zero());
                a[i][j] = v / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Exact rank of the span of `polys` over the rationals.
pub fn rank_exact(polys: &[ExactPoly]) -> Result<usize, SemiInvError> {
    Ok(bareiss_rank(coefficient_matrix(polys)?))
}

/// Rank of the evaluation matrix at `points` seeded random points modulo
/// [`RANK_PRIME`]. Never exceeds the exact rank.
pub fn rank_modular(polys: &[ExactPoly], points: usize, seed: u64) -> Result<usize, SemiInvError> {
    let Some(first) = polys.first() else {
        return Ok(0);
    };
    let n = first.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<Vec<u64>> = (0..points)
        .map(|_| (0..n).map(|_| rand::Rng::gen_range(&mut rng, 1..RANK_PRIME)).collect())
        .collect();
    let rows = polys
        .iter()
        .map(|p| pts.iter().map(|x| p.eval_mod(x, RANK_PRIME)).collect())
        .collect::<Result<Vec<Vec<u64>>, _>>()?;
    Ok(rank_mod(rows, RANK_PRIME))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankMethod {
    Modular,
    Exact,
}

/// Modular rank first; full rank there is a certificate, otherwise the
/// exact path decides.
pub fn rank(polys: &[ExactPoly], seed: u64) -> Result<(usize, RankMethod), SemiInvError> {
    let r = rank_modular(polys, polys.len() + 2, seed)?;
    if r == polys.len() {
        return Ok((r, RankMethod::Modular));
    }
    Ok((rank_exact(polys)?, RankMethod::Exact))
}

/// Rank of the Jacobian `(∂f_i/∂z_j)` at an integer point with distinct
/// coordinates. Full rank certifies algebraic independence.
pub fn jacobian_rank(polys: &[ExactPoly], point: &[BigInt]) -> Result<usize, SemiInvError> {
    for i in 0..point.len() {
        for j in i + 1..point.len() {
            if point[i] == point[j] {
                return Err(SemiInvError::RepeatedCoordinate(i, j));
            }
        }
    }
    let mut rows = Vec::with_capacity(polys.len());
    for p in polys {
        let row = (0..p.nvars())
            .map(|j| p.derivative(j).eval(point))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(bareiss_rank(rows))
}

/// Jacobian rank at up to `attempts` seeded points with distinct coordinates
/// in `1..=10^6`, stopping at full rank. Returns the best rank and its point.
pub fn jacobian_rank_seeded(
    polys: &[ExactPoly],
    seed: u64,
    attempts: u32,
) -> Result<(usize, Vec<BigInt>), SemiInvError> {
    let n = polys.first().map_or(0, |p| p.nvars());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = (0, Vec::new());
    for _ in 0..attempts.max(1) {
        let pt: Vec<BigInt> = sample(&mut rng, 1_000_000, n)
            .into_iter()
            .map(|x| BigInt::from(x + 1))
            .collect();
        let r = jacobian_rank(polys, &pt)?;
        if r > best.0 || best.1.is_empty() {
            best = (r, pt);
        }
        if r == polys.len() {
            break;
        }
    }
    Ok(best)
}

/// Sign of the leading coefficient, for display.
pub fn leading_sign(p: &ElemPoly) -> i8 {
    match p.poly.leading_term() {
        Some((_, c)) if c.is_negative() => -1,
        Some(_) => 1,
        None => 0,
    }
}

#[doc(hidden)]
pub fn rank_prime_is_prime() -> bool {
    is_prime(RANK_PRIME) && RANK_PRIME < 1 << 62
}
