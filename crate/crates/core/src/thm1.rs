//! Hypothesis checker for the block criterion on edge matrices.
//!
//! Under a shape `m_1 ≤ … ≤ m_q` (q ≥ 2) the matrix splits as `M = M* + M**`.
//! The criterion asks for
//!
//! * (1) every off-diagonal block `M_rs` strictly positive,
//! * (2) `‖M_rs‖` a function of `(m_r, m_s)` alone, even when `m_r = m_s`,
//! * (3) every `‖M_rs‖` even,
//! * (i) strictly increasing parts, or `M* = 0`,
//! * (ii) `∏ δ_r(M*) ≠ 0` (needed with (2)),
//! * (iii) every entry of `M*` even (needed with (3)),
//! * (iv) least nonzero entry of `M**` above the largest entry of `M*`,
//!
//! and concludes `Symm_N(δ(z, M)) ≠ 0` when (1), (i), (iv) hold together with
//! either (2) and (ii), or (3) and (iii). A failed check says nothing about
//! zero-ness.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::edgemat::{block_decompose, graph_monomial_of, BlockView, EdgeMatrix, Shape};
use crate::error::Thm1Error;
use crate::symmetrize::{
    nonzero_test, symmetrize_full, ExpansionBudget, NonzeroOptions, Policy, Verdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    /// Could not be decided within the expansion budget.
    Inconclusive,
    /// The condition is only required on a route that is already closed.
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub status: Status,
    pub detail: String,
    /// Offending indices on failure: block pairs `(r, s)` or entries `(i, j)`,
    /// 1-based.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witness: Vec<usize>,
}

impl Condition {
    fn pass(detail: impl Into<String>) -> Self {
        Condition {
            status: Status::Pass,
            detail: detail.into(),
            witness: Vec::new(),
        }
    }

    fn fail(detail: impl Into<String>, witness: Vec<usize>) -> Self {
        Condition {
            status: Status::Fail,
            detail: detail.into(),
            witness,
        }
    }

    fn with(status: Status, detail: impl Into<String>) -> Self {
        Condition {
            status,
            detail: detail.into(),
            witness: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Route {
    #[serde(rename = "1+2")]
    OneAndTwo,
    #[serde(rename = "1+3")]
    OneAndThree,
    #[serde(rename = "FAIL")]
    Fail,
}

/// `‖M_rs‖` for one block pair, `r < s`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockNorm {
    pub r: usize,
    pub s: usize,
    pub m_r: usize,
    pub m_s: usize,
    pub norm: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Thm1Certificate {
    pub shape: Vec<usize>,
    /// `vertex_map[old] = new` when the supplied shape had to be sorted.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex_map: Option<Vec<usize>>,
    pub cond1: Condition,
    pub cond2: Condition,
    pub cond3: Condition,
    pub cond_i: Condition,
    pub cond_ii: Condition,
    pub cond_iii: Condition,
    pub cond_iv: Condition,
    pub route: Route,
    /// Every route whose conditions all hold, in checking order.
    pub routes_satisfied: Vec<Route>,
    /// `CERTIFIED_NONZERO` or `UNDECIDED-BY-THM1`.
    pub conclusion: String,
    pub b_table: Vec<BlockNorm>,
    /// Least nonzero entry of `M**`.
    pub min_offdiag: Option<u32>,
    /// Greatest entry of `M*`.
    pub max_diagblock: u32,
    /// Set when the shape repeats a part with `M* = 0`, so evenness in (2)
    /// was enforced for equal parts.
    pub repeated_parts_branch: bool,
}

impl Thm1Certificate {
    pub fn passes(&self) -> bool {
        self.route != Route::Fail
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Thm1Options {
    pub budget: ExpansionBudget,
    pub seed: u64,
    pub trials: u32,
}

impl Default for Thm1Options {
    fn default() -> Self {
        Thm1Options {
            budget: ExpansionBudget::default(),
            seed: 0,
            trials: 4,
        }
    }
}

/// Checks the criterion for `m` under `shape` (already sorted).
pub fn check_theorem1(
    m: &EdgeMatrix,
    shape: &Shape,
    opts: &Thm1Options,
) -> Result<Thm1Certificate, Thm1Error> {
    if shape.q() < 2 {
        return Err(Thm1Error::SingleBlock);
    }
    let view = block_decompose(m, shape)?;
    Ok(certify(&view, opts))
}

/// Like [`check_theorem1`] for parts in any order: the parts are sorted and
/// the matrix relabeled to match before checking.
pub fn check_theorem1_unsorted(
    m: &EdgeMatrix,
    parts: &[usize],
    opts: &Thm1Options,
) -> Result<Thm1Certificate, Thm1Error> {
    let norm = Shape::normalize(parts)?;
    if norm.shape.q() < 2 {
        return Err(Thm1Error::SingleBlock);
    }
    if norm.shape.n() != m.n() {
        return Err(crate::error::MatrixError::ShapeMismatch {
            parts: parts.to_vec(),
            sum: norm.shape.n(),
            n: m.n(),
        }
        .into());
    }
    let identity = norm.vertex_map.iter().enumerate().all(|(i, &j)| i == j);
    let relabeled = m.relabel(&norm.vertex_map);
    let mut cert = check_theorem1(&relabeled, &norm.shape, opts)?;
    if !identity {
        cert.vertex_map = Some(norm.vertex_map);
    }
    Ok(cert)
}

fn certify(view: &BlockView, opts: &Thm1Options) -> Thm1Certificate {
    let q = view.shape.q();
    let parts = view.shape.parts().to_vec();

    let mut b_table = Vec::new();
    for r in 0..q {
        for s in (r + 1)..q {
            b_table.push(BlockNorm {
                r: r + 1,
                s: s + 1,
                m_r: parts[r],
                m_s: parts[s],
                norm: view.block(r, s).norm(),
            });
        }
    }

    let cond1 = condition_1(view);
    let (cond2, repeated_parts_branch) = condition_2(&b_table, view);
    let cond3 = match b_table.iter().find(|b| b.norm % 2 == 1) {
        None => Condition::pass("every off-diagonal block has even norm"),
        Some(b) => Condition::fail(
            format!("block ({}, {}) has odd norm {}", b.r, b.s, b.norm),
            vec![b.r, b.s],
        ),
    };

    let star_zero = view.m_star.is_zero();
    let cond_i = if view.shape.is_strict() {
        Condition::pass("parts strictly increasing")
    } else if star_zero {
        Condition::pass("repeated parts, M* = 0")
    } else {
        Condition::fail("repeated parts and M* has a nonzero entry", Vec::new())
    };

    let cond_ii = if cond1.holds() && cond2.holds() {
        condition_ii(view, opts)
    } else {
        Condition::with(Status::NotApplicable, "(1) and (2) do not both hold")
    };

    let cond_iii = match first_odd_entry(&view.m_star) {
        None => Condition::pass("every entry of M* is even"),
        Some((i, j, v)) => Condition::fail(
            format!("M* entry ({}, {}) = {v} is odd", i + 1, j + 1),
            vec![i + 1, j + 1],
        ),
    };

    let max_diagblock = view.m_star.max_entry();
    let min_offdiag = view
        .m_2star
        .as_int_matrix()
        .entries()
        .iter()
        .copied()
        .filter(|&v| v > 0)
        .min();
    let cond_iv = match min_offdiag {
        None => Condition::fail("M** has no nonzero entry", Vec::new()),
        Some(lo) if lo > max_diagblock => Condition::pass(format!(
            "least nonzero entry of M** is {lo} > {max_diagblock}"
        )),
        Some(lo) => Condition::fail(
            format!("least nonzero entry of M** is {lo}, not above {max_diagblock}"),
            Vec::new(),
        ),
    };

    let common = cond1.holds() && cond_i.holds() && cond_iv.holds();
    let mut routes_satisfied = Vec::new();
    if common && cond2.holds() && cond_ii.holds() {
        routes_satisfied.push(Route::OneAndTwo);
    }
    if common && cond3.holds() && cond_iii.holds() {
        routes_satisfied.push(Route::OneAndThree);
    }
    let route = routes_satisfied.first().copied().unwrap_or(Route::Fail);
    let conclusion = if route == Route::Fail {
        "UNDECIDED-BY-THM1"
    } else {
        "CERTIFIED_NONZERO"
    }
    .to_string();

    Thm1Certificate {
        shape: parts,
        vertex_map: None,
        cond1,
        cond2,
        cond3,
        cond_i,
        cond_ii,
        cond_iii,
        cond_iv,
        route,
        routes_satisfied,
        conclusion,
        b_table,
        min_offdiag,
        max_diagblock,
        repeated_parts_branch,
    }
}

fn condition_1(view: &BlockView) -> Condition {
    let q = view.shape.q();
    for r in 0..q {
        for s in (r + 1)..q {
            let b = view.block(r, s);
            for a in 0..b.rows() {
                for c in 0..b.cols() {
                    if b.get(a, c) == 0 {
                        let i = view.index_sets[r][a] + 1;
                        let j = view.index_sets[s][c] + 1;
                        return Condition::fail(
                            format!("block ({}, {}) has a zero at entry ({i}, {j})", r + 1, s + 1),
                            vec![r + 1, s + 1, i, j],
                        );
                    }
                }
            }
        }
    }
    Condition::pass("every off-diagonal block is positive")
}

fn condition_2(b_table: &[BlockNorm], view: &BlockView) -> (Condition, bool) {
    let repeated = !view.shape.is_strict() && view.m_star.is_zero();
    for (k, b) in b_table.iter().enumerate() {
        if b.norm == 0 {
            return (
                Condition::fail(format!("block ({}, {}) has norm 0", b.r, b.s), vec![b.r, b.s]),
                repeated,
            );
        }
        if b.m_r == b.m_s && b.norm % 2 == 1 {
            return (
                Condition::fail(
                    format!(
                        "equal parts {} but block ({}, {}) has odd norm {}",
                        b.m_r, b.r, b.s, b.norm
                    ),
                    vec![b.r, b.s],
                ),
                repeated,
            );
        }
        if let Some(o) = b_table[..k]
            .iter()
            .find(|o| o.m_r == b.m_r && o.m_s == b.m_s && o.norm != b.norm)
        {
            return (
                Condition::fail(
                    format!(
                        "blocks ({}, {}) and ({}, {}) share sizes ({}, {}) but have norms {} and {}",
                        o.r, o.s, b.r, b.s, b.m_r, b.m_s, o.norm, b.norm
                    ),
                    vec![o.r, o.s, b.r, b.s],
                ),
                repeated,
            );
        }
    }
    (
        Condition::pass("block norms depend only on part sizes"),
        repeated,
    )
}

/// Each `δ_r(M*)` must be nonzero. Zero blocks give `m_r!`; otherwise a
/// modular witness is tried first and, if every sample vanishes, the block
/// is expanded within the budget.
fn condition_ii(view: &BlockView, opts: &Thm1Options) -> Condition {
    let mut methods = Vec::new();
    for (r, set) in view.index_sets.iter().enumerate() {
        let block = view.m_star.principal(set);
        if block.is_zero() || set.len() < 2 {
            methods.push(format!("δ_{} = {}!", r + 1, set.len()));
            continue;
        }
        let em = EdgeMatrix::from_int_matrix(block.clone());
        let w = nonzero_test(
            &em,
            &NonzeroOptions {
                policy: Policy::WitnessOnly,
                trials: opts.trials,
                seed: opts.seed,
                budget: opts.budget,
            },
        );
        if w.verdict == Verdict::Nonzero {
            methods.push(format!("δ_{} nonzero by witness", r + 1));
            continue;
        }
        match symmetrize_full(&graph_monomial_of(&block), &opts.budget) {
            Ok(p) if p.is_zero() => {
                return Condition::fail(format!("δ_{}(M*) = 0", r + 1), vec![r + 1]);
            }
            Ok(_) => methods.push(format!("δ_{} nonzero by expansion", r + 1)),
            Err(e) => {
                return Condition::with(
                    Status::Inconclusive,
                    format!("δ_{}(M*): {e}", r + 1),
                )
            }
        }
    }
    Condition::pass(methods.join("; "))
}

fn first_odd_entry(m: &EdgeMatrix) -> Option<(usize, usize, u32)> {
    let n = m.n();
    for i in 0..n {
        for j in (i + 1)..n {
            let v = m.get(i, j);
            if v % 2 == 1 {
                return Some((i, j, v));
            }
        }
    }
    None
}

/// Weight and maximal row sum of `Symm_N(δ(z, M))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDegree {
    pub w: u64,
    pub d_max: u64,
    pub is_regular: bool,
}

pub fn weight_degree(m: &EdgeMatrix) -> WeightDegree {
    let rows = m.row_sums();
    let d_max = rows.iter().copied().max().unwrap_or(0);
    WeightDegree {
        w: m.weight(),
        d_max,
        is_regular: rows.iter().all(|&r| r == d_max),
    }
}

/// Largest matrix size the shape search accepts.
pub const SEARCH_MAX_N: usize = 12;

/// First shape with `q ≥ 2`, in lexicographic order of sorted parts, under
/// which the criterion holds for the matrix as labeled.
pub fn search_shape(m: &EdgeMatrix, opts: &Thm1Options) -> Option<Thm1Certificate> {
    if m.n() > SEARCH_MAX_N {
        return None;
    }
    Shape::enumerate(m.n(), 2)
        .par_iter()
        .filter_map(|s| check_theorem1(m, s, opts).ok().filter(|c| c.passes()))
        .find_first(|_| true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edgemat::IntMatrix;

    fn two_block(c: &[Vec<u32>]) -> EdgeMatrix {
        let cm = IntMatrix::from_rows(c);
        let k = cm.rows();
        EdgeMatrix::from_blocks(
            &[k, cm.cols()],
            |r| IntMatrix::zeros([k, cm.cols()][r], [k, cm.cols()][r]),
            |_, _| cm.clone(),
        )
    }

    #[test]
    fn single_block_rejected() {
        let m = crate::edgemat::d_edge(3);
        let s = Shape::new(vec![3]).unwrap();
        assert_eq!(
            check_theorem1(&m, &s, &Default::default()),
            Err(Thm1Error::SingleBlock)
        );
    }

    #[test]
    fn odd_block_norm_fails_both_routes() {
        let m = two_block(&[vec![3, 3, 3], vec![3, 4, 3], vec![3, 3, 4]]);
        let c = check_theorem1(&m, &Shape::new(vec![3, 3]).unwrap(), &Default::default()).unwrap();
        assert_eq!(c.route, Route::Fail);
        assert_eq!(c.cond2.status, Status::Fail);
        assert_eq!(c.cond3.status, Status::Fail);
        assert_eq!(c.conclusion, "UNDECIDED-BY-THM1");
        assert!(c.repeated_parts_branch);
    }

    #[test]
    fn unsorted_shape_relabels() {
        // Block of size 2 given first in the matrix but listed second.
        let m = EdgeMatrix::from_blocks(
            &[2, 1],
            |r| IntMatrix::d_matrix([2, 1][r], [2, 1][r]).scaled(2),
            |_, _| IntMatrix::filled(2, 1, 3),
        );
        let c = check_theorem1_unsorted(&m, &[2, 1], &Default::default()).unwrap();
        assert_eq!(c.shape, vec![1, 2]);
        assert_eq!(c.vertex_map, Some(vec![1, 2, 0]));
        assert!(c.passes());
    }

    #[test]
    fn weight_degree_of_d4() {
        let wd = weight_degree(&crate::edgemat::d_edge(4));
        assert_eq!(wd, WeightDegree { w: 6, d_max: 3, is_regular: true });
    }
}
