//! Sparse multivariate polynomials with exact coefficients.
//!
//! A polynomial lives in a fixed ambient ring of `nvars` variables. Terms are
//! kept sorted by descending graded-lexicographic order of their exponent
//! vectors, with no zero coefficients, so two equal polynomials always have
//! identical term lists.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use crate::error::PolyError;
use crate::modular;

/// Exponent vector, one slot per ambient variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e.into_boxed_slice())
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// Exponent vector of `m(z_σ(1), …, z_σ(n))`: variable `i` is renamed to
    /// `σ(i)`.
    pub fn permuted(&self, sigma: &[usize]) -> Monomial {
        let mut out = vec![0; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            out[sigma[i]] = e;
        }
        Monomial(out.into_boxed_slice())
    }
}

/// Graded lexicographic: total degree first, then the first differing
/// exponent (larger exponent on an earlier variable is larger).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Coefficient rings usable in [`Poly`].
pub trait Coefficient:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + fmt::Debug
    + Send
    + Sync
{
}

impl<T> Coefficient for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + for<'a> AddAssign<&'a T>
        + fmt::Debug
        + Send
        + Sync
{
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<C> {
    nvars: usize,
    terms: Vec<(Monomial, C)>,
}

/// Integer-coefficient polynomial, the workhorse type.
pub type ExactPoly = Poly<BigInt>;
/// Rational-coefficient polynomial.
pub type RatPoly = Poly<BigRational>;

/// Total degree, with the zero polynomial at minus infinity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Degree {
    MinusInfinity,
    Finite(u64),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyAnalysis {
    pub total_degree: Degree,
    pub var_degrees: Vec<u32>,
    pub is_homogeneous: bool,
    pub nterms: usize,
}

impl<C: Coefficient> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::from_terms(nvars, vec![(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_terms(nvars, vec![(Monomial::var(nvars, i), C::one())])
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates and
    /// dropping zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut acc: FxHashMap<Monomial, C> = FxHashMap::default();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            match acc.get_mut(&m) {
                Some(v) => *v += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(nvars, acc)
    }

    pub(crate) fn from_map(nvars: usize, map: FxHashMap<Monomial, C>) -> Self {
        let mut terms: Vec<(Monomial, C)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        // terms are sorted descending, so search with reversed comparison
        match self.terms.binary_search_by(|(k, _)| m.cmp(k)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    fn check_same_ring(&self, other: &Self) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::AmbientMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same_ring(other)?;
        Ok(Self::from_terms(
            self.nvars,
            self.terms.iter().chain(other.terms.iter()).cloned(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .filter(|(_, k)| !k.is_zero())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same_ring(other)?;
        let mut acc: FxHashMap<Monomial, C> = FxHashMap::default();
        acc.reserve(self.terms.len().saturating_mul(other.terms.len()).min(1 << 20));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb.clone();
                match acc.get_mut(&m) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Self::from_map(self.nvars, acc))
    }

    /// `self^e` by repeated squaring; `pow(0)` is the constant 1.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result
    }

    /// `f(z_σ(1), …, z_σ(n))` for a permutation given as a 0-based image
    /// table.
    pub fn permute_vars(&self, sigma: &[usize]) -> Self {
        assert_eq!(sigma.len(), self.nvars);
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| (m.permuted(sigma), c.clone())),
        )
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .first()
            .map_or(Degree::MinusInfinity, |(m, _)| Degree::Finite(m.degree()))
    }

    pub fn analyze(&self) -> PolyAnalysis {
        let mut var_degrees = vec![0u32; self.nvars];
        for (m, _) in &self.terms {
            for (d, &e) in var_degrees.iter_mut().zip(m.exponents()) {
                *d = (*d).max(e);
            }
        }
        let is_homogeneous = match self.terms.first() {
            None => true,
            Some((lead, _)) => {
                let d = lead.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        };
        PolyAnalysis {
            total_degree: self.total_degree(),
            var_degrees,
            is_homogeneous,
            nterms: self.terms.len(),
        }
    }

    /// `f∘σ == f` exactly.
    pub fn is_symmetric_under(&self, sigma: &[usize]) -> bool {
        &self.permute_vars(sigma) == self
    }

    /// `f∘σ == -f` exactly.
    pub fn is_antisymmetric_under(&self, sigma: &[usize]) -> bool {
        self.permute_vars(sigma) == self.neg()
    }

    /// Invariant under every adjacent transposition, hence under all of S_n.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            let mut sigma: Vec<usize> = (0..self.nvars).collect();
            sigma.swap(i, i + 1);
            self.is_symmetric_under(&sigma)
        })
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self
    where
        C: From<u32>,
    {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.0[i] > 0).map(|(m, c)| {
                let e = m.0[i];
                let mut exps = m.0.to_vec();
                exps[i] -= 1;
                (Monomial::from_exponents(exps), c.clone() * C::from(e))
            }),
        )
    }

    /// Exact evaluation at a point over the coefficient ring.
    pub fn eval(&self, point: &[C]) -> Result<C, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::PointLength {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            total += &t;
        }
        Ok(total)
    }

    /// Maps coefficients into another ring.
    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

impl ExactPoly {
    /// Evaluation at a rational point.
    pub fn eval_rational(&self, point: &[BigRational]) -> Result<BigRational, PolyError> {
        self.map_coefficients(|c| BigRational::from_integer(c.clone()))
            .eval(point)
    }

    /// Evaluation modulo a prime; the result is the reduction of the integer
    /// evaluation at the lifted point.
    pub fn eval_mod(&self, point: &[u64], p: u64) -> Result<u64, PolyError> {
        modular::check_prime(p)?;
        if point.len() != self.nvars {
            return Err(PolyError::PointLength {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let pt: Vec<u64> = point.iter().map(|x| x % p).collect();
        let mut total = 0u64;
        for (m, c) in &self.terms {
            let mut t = modular::reduce_bigint(c, p);
            for (&x, &e) in pt.iter().zip(m.exponents()) {
                if e > 0 {
                    t = modular::mul_mod(t, modular::pow_mod(x, e as u64, p), p);
                }
            }
            total = modular::add_mod(total, t, p);
        }
        Ok(total)
    }

    /// Gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .iter()
            .fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    /// Divides out the content and fixes the sign so that the leading
    /// coefficient is positive. Two polynomials are proportional over Q iff
    /// their normalized forms are equal.
    pub fn primitive_normalized(&self) -> ExactPoly {
        let Some((_, lead)) = self.terms.first() else {
            return self.clone();
        };
        let mut g = self.content();
        if lead.is_negative() {
            g = -g;
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c / &g))
                .collect(),
        }
    }

    /// Exact division of every coefficient by `d`; `None` if some coefficient
    /// is not divisible.
    pub fn div_exact(&self, d: &BigInt) -> Option<ExactPoly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            terms.push((m.clone(), q));
        }
        Some(Poly {
            nvars: self.nvars,
            terms,
        })
    }

    /// `z_i - z_j` in `nvars` variables.
    pub fn difference(nvars: usize, i: usize, j: usize) -> ExactPoly {
        Self::from_terms(
            nvars,
            [
                (Monomial::var(nvars, i), BigInt::one()),
                (Monomial::var(nvars, j), -BigInt::one()),
            ],
        )
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let is_one = m.degree() == 0;
            if !abs.is_one() || is_one {
                write!(f, "{abs}")?;
            }
            let mut first = abs.is_one();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "z{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
