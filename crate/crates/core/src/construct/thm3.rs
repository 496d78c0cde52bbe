//! Families of linearly independent semi-invariants of a fixed weight.
//!
//! For a shape `𝔞 = (m_1, …, m_{s+1}) ∈ ℙ(s, N)` and `θ = w − wt(N, 𝔞) ≥ 1`,
//! every composition `(θ_1, …, θ_s)` of `θ` gives one edge matrix `M` with
//! `M* = 0`: all-ones blocks between the parts, with the extra weight `θ_l`
//! spread over the block joining part 1 to part `l + 1`.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::lemma4::lemma4_balanced;
use super::partitions::{binomial, d_of, is_strictly_increasing, theta_of, DOf};
use super::require;
use crate::edgemat::{EdgeMatrix, IntMatrix, Shape};
use crate::error::ConstructError;
use crate::poly::ExactPoly;
use crate::symmetrize::{nonzero_test, symmetrize_full, ExpansionBudget, NonzeroOptions, SymmWitness};
use crate::thm1::{check_theorem1, Thm1Certificate, Thm1Options};

/// All `s`-part compositions of `theta` (nonnegative parts) in
/// colexicographic order: compared from the last part backwards.
pub fn compositions_colex(theta: u64, s: usize) -> Vec<Vec<u64>> {
    fn rec(k: usize, rem: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if k == 1 {
            cur.push(rem);
            let mut c = cur.clone();
            c.reverse();
            out.push(c);
            cur.pop();
            return;
        }
        // cur holds the tail (θ_s, θ_{s−1}, …); smallest last part first
        for x in 0..=rem {
            cur.push(x);
            rec(k - 1, rem - x, cur, out);
            cur.pop();
        }
    }
    assert!(s >= 1);
    let mut out = Vec::new();
    rec(s, theta, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy, Debug)]
pub struct Thm3Options {
    /// Expand `φ = Symm_N(δ(z, M))` when within the budget.
    pub expand: bool,
    pub budget: ExpansionBudget,
    /// Compute a nonzero witness for each member when `N` is at most this.
    pub witness_max_n: usize,
    pub seed: u64,
    pub trials: u32,
    /// Run the block criterion on `M` and `M′`.
    pub check: bool,
}

impl Default for Thm3Options {
    fn default() -> Self {
        Thm3Options {
            expand: false,
            budget: ExpansionBudget::default(),
            witness_max_n: 9,
            seed: 0,
            trials: 4,
            check: true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Thm3Member {
    pub composition: Vec<u64>,
    pub matrix: EdgeMatrix,
    /// Row sums of `M`; the first is the family degree.
    pub row_sums: Vec<u64>,
    pub r1_strictly_max: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Thm1Certificate>,
    /// Shape used for `M′`; empty when `M′` is a single zero block.
    pub shape_prime: Vec<usize>,
    /// `None` when `M′` has one block (its symmetrization is then a nonzero
    /// constant) or checks were skipped.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_prime: Option<Thm1Certificate>,
    #[serde(skip)]
    pub phi: Option<ExactPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SymmWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Thm3Instance {
    pub n: usize,
    pub shape: Vec<usize>,
    pub w: u64,
    pub theta: u64,
    pub nu: BigUint,
    pub degree: DOf,
    /// Requested homogenization degree, at least `degree.value`.
    pub d: u64,
    pub family: Vec<Thm3Member>,
}

/// Builds the member matrix for one composition.
pub fn member_matrix(parts: &[usize], comp: &[u64]) -> Result<EdgeMatrix, ConstructError> {
    let s = parts.len() - 1;
    let m = parts[0];
    assert_eq!(comp.len(), s);
    let raw = lemma4_balanced(s, m, comp)?;
    // Columns by descending sum, stable on ties.
    let sums = raw.col_sums();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&x, &y| sums[y].cmp(&sums[x]));
    let mut b = IntMatrix::zeros(s, m);
    for (new, &old) in order.iter().enumerate() {
        for i in 0..s {
            b.set(i, new, raw.get(i, old));
        }
    }
    let csum = b.col_sums();
    if let Some(u) = (0..m).rev().find(|&j| csum[j] >= 1) {
        if u >= 1 {
            let v = (0..s).find(|&i| b.get(i, u) >= 1).expect("column u is nonzero");
            b.set(v, u, b.get(v, u) - 1);
            b.set(v, 0, b.get(v, 0) + 1);
        }
    }
    let mut a_blocks = Vec::with_capacity(s);
    for l in 0..s {
        let row: Vec<u64> = (0..m).map(|i| b.get(l, i) as u64).collect();
        a_blocks.push(lemma4_balanced(m, parts[l + 1], &row)?);
    }
    Ok(EdgeMatrix::from_blocks(
        parts,
        |r| IntMatrix::zeros(parts[r], parts[r]),
        |r, c| {
            let ones = IntMatrix::filled(parts[r], parts[c], 1);
            if r == 0 {
                ones.plus(&a_blocks[c - 1])
            } else {
                ones
            }
        },
    ))
}

/// The full family for `(N, 𝔞, w)` at homogenization degree `d`.
pub fn thm3_family(
    n: usize,
    a: &[i64],
    w: u64,
    d: u64,
    opts: &Thm3Options,
) -> Result<Thm3Instance, ConstructError> {
    require(n >= 3, || format!("N must be at least 3, got {n}"))?;
    require(a.len() >= 2, || "the shape needs at least two parts".into())?;
    require(a[0] >= 1 && is_strictly_increasing(a), || {
        format!("{a:?} is not in P(s, N)")
    })?;
    let sum: i64 = a.iter().sum();
    require(sum == n as i64, || format!("{a:?} sums to {sum}, not {n}"))?;
    let theta = theta_of(w, n as u64, a)?;
    let degree = d_of(w, a)?;
    require(d >= degree.value, || {
        format!("d = {d} is below the family degree {}", degree.value)
    })?;
    let parts: Vec<usize> = a.iter().map(|&x| x as usize).collect();
    let s = parts.len() - 1;
    let comps = compositions_colex(theta, s);
    let nu = binomial(s as u64 - 1 + theta, s as u64 - 1);
    assert_eq!(BigUint::from(comps.len()), nu);

    let shape = Shape::new(parts.clone())?;
    let mut prime_parts = parts.clone();
    prime_parts[0] -= 1;
    if prime_parts[0] == 0 {
        prime_parts.remove(0);
    }
    let prime_shape = Shape::new(prime_parts.clone())?;

    let family = comps
        .into_par_iter()
        .map(|comp| build_member(&parts, &shape, &prime_shape, comp, w, opts))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Thm3Instance {
        n,
        shape: parts,
        w,
        theta,
        nu,
        degree,
        d,
        family,
    })
}

fn build_member(
    parts: &[usize],
    shape: &Shape,
    prime_shape: &Shape,
    comp: Vec<u64>,
    w: u64,
    opts: &Thm3Options,
) -> Result<Thm3Member, ConstructError> {
    let matrix = member_matrix(parts, &comp)?;
    assert_eq!(matrix.norm(), 2 * w, "member has the wrong weight");
    let row_sums = matrix.row_sums();
    let r1_strictly_max = row_sums[1..].iter().all(|&r| r < row_sums[0]);
    let t1 = Thm1Options {
        budget: opts.budget,
        seed: opts.seed,
        trials: opts.trials,
    };
    let (certificate, certificate_prime) = if opts.check {
        let c = check_theorem1(&matrix, shape, &t1).expect("shape fits");
        let cp = if prime_shape.q() >= 2 {
            let prime = EdgeMatrix::from_int_matrix(matrix.delete_vertex(0));
            Some(check_theorem1(&prime, prime_shape, &t1).expect("shape fits"))
        } else {
            None
        };
        (Some(c), cp)
    } else {
        (None, None)
    };
    let phi = if opts.expand && opts.budget.check(matrix.n(), w).is_ok() {
        Some(symmetrize_full(&matrix.graph_monomial(), &opts.budget).expect("within budget"))
    } else {
        None
    };
    let witness = (matrix.n() <= opts.witness_max_n).then(|| {
        nonzero_test(
            &matrix,
            &NonzeroOptions {
                seed: opts.seed,
                trials: opts.trials,
                budget: opts.budget,
                ..Default::default()
            },
        )
    });
    Ok(Thm3Member {
        composition: comp,
        matrix,
        row_sums,
        r1_strictly_max,
        certificate,
        shape_prime: if prime_shape.q() >= 2 {
            prime_shape.parts().to_vec()
        } else {
            Vec::new()
        },
        certificate_prime,
        phi,
        witness,
    })
}
