//! Edge matrices of loopless multigraphs, shapes, and block decomposition.
//!
//! An [`EdgeMatrix`] is a symmetric nonnegative integer matrix with zero
//! diagonal; entry `(i, j)` is the number of edges between vertices `i` and
//! `j`. Its graph-monomial is `∏_{i<j} (z_i − z_j)^{a_ij}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::MatrixError;
use crate::poly::{ExactPoly, Monomial};

/// Dense `rows × cols` matrix of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn filled(rows: usize, cols: usize, value: u32) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row_sum(&self, i: usize) -> u64 {
        (0..self.cols).map(|j| self.get(i, j) as u64).sum()
    }

    pub fn col_sum(&self, j: usize) -> u64 {
        (0..self.rows).map(|i| self.get(i, j) as u64).sum()
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.rows).map(|i| self.row_sum(i)).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        (0..self.cols).map(|j| self.col_sum(j)).collect()
    }

    /// Sum of all entries.
    pub fn norm(&self) -> u64 {
        self.data.iter().map(|&v| v as u64).sum()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    /// Entrywise sum; panics on size mismatch or overflow.
    pub fn plus(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.checked_add(*b).expect("entry overflow"))
                .collect(),
        }
    }

    pub fn scaled(&self, k: u32) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|a| a.checked_mul(k).expect("entry overflow"))
                .collect(),
        }
    }

    /// `D_(m,n)`: 0 on the main diagonal, 1 elsewhere.
    pub fn d_matrix(rows: usize, cols: usize) -> IntMatrix {
        let mut m = IntMatrix::filled(rows, cols, 1);
        for i in 0..rows.min(cols) {
            m.set(i, i, 0);
        }
        m
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }
}

/// Symmetric, zero-diagonal, nonnegative integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EdgeMatrix {
    m: IntMatrix,
}

impl EdgeMatrix {
    /// Validates a raw `n × n` row-major entry list.
    pub fn validate(n: usize, raw: &[i64]) -> Result<EdgeMatrix, MatrixError> {
        if n < 2 {
            return Err(MatrixError::TooSmall(n));
        }
        if raw.len() != n * n {
            return Err(MatrixError::EntryCount {
                expected: n * n,
                got: raw.len(),
            });
        }
        let at = |i: usize, j: usize| raw[i * n + j];
        for i in 0..n {
            if at(i, i) != 0 {
                return Err(MatrixError::NonzeroDiagonal { i, value: at(i, i) });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if at(i, j) < 0 {
                    return Err(MatrixError::NegativeEntry { i, j, value: at(i, j) });
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if at(i, j) != at(j, i) {
                    return Err(MatrixError::Asymmetric {
                        i,
                        j,
                        a_ij: at(i, j),
                        a_ji: at(j, i),
                    });
                }
            }
        }
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = at(i, j);
                let v = u32::try_from(v).map_err(|_| MatrixError::EntryOverflow { i, j, value: v })?;
                m.set(i, j, v);
            }
        }
        Ok(EdgeMatrix { m })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<EdgeMatrix, MatrixError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::EntryCount {
                expected: n * n,
                got: rows.iter().map(|r| r.len()).sum(),
            });
        }
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        Self::validate(n, &flat)
    }

    /// Builds from the strict upper triangle, row-major:
    /// `a_12, a_13, …, a_1n, a_23, …, a_{n−1,n}`.
    pub fn from_upper(n: usize, upper: &[i64]) -> Result<EdgeMatrix, MatrixError> {
        if n < 2 {
            return Err(MatrixError::TooSmall(n));
        }
        let expected = n * (n - 1) / 2;
        if upper.len() != expected {
            return Err(MatrixError::EntryCount {
                expected,
                got: upper.len(),
            });
        }
        let mut raw = vec![0i64; n * n];
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                raw[i * n + j] = upper[k];
                raw[j * n + i] = upper[k];
                k += 1;
            }
        }
        Self::validate(n, &raw)
    }

    /// Builds from a 1-based edge list `(i, j, multiplicity)` with `i < j`.
    /// Repeated edges accumulate.
    pub fn from_edges(n: usize, edges: &[(usize, usize, i64)]) -> Result<EdgeMatrix, MatrixError> {
        if n < 2 {
            return Err(MatrixError::TooSmall(n));
        }
        let mut raw = vec![0i64; n * n];
        for &(i, j, mult) in edges {
            if i == 0 || j == 0 || i >= j || j > n {
                return Err(MatrixError::BadEdge { i, j, n });
            }
            raw[(i - 1) * n + (j - 1)] += mult;
            raw[(j - 1) * n + (i - 1)] += mult;
        }
        Self::validate(n, &raw)
    }

    /// Wraps a square matrix already known to be valid; panics otherwise.
    pub fn from_int_matrix(m: IntMatrix) -> EdgeMatrix {
        assert_eq!(m.rows(), m.cols());
        let n = m.rows();
        for i in 0..n {
            assert_eq!(m.get(i, i), 0, "zero diagonal");
            for j in 0..i {
                assert_eq!(m.get(i, j), m.get(j, i), "symmetric");
            }
        }
        EdgeMatrix { m }
    }

    /// Assembles a symmetric block matrix from its upper blocks. `upper(r, s)`
    /// must return the `parts[r] × parts[s]` block for `r < s`; diagonal
    /// blocks come from `diag(r)`.
    pub fn from_blocks(
        parts: &[usize],
        diag: impl Fn(usize) -> IntMatrix,
        upper: impl Fn(usize, usize) -> IntMatrix,
    ) -> EdgeMatrix {
        let n: usize = parts.iter().sum();
        let offs = offsets(parts);
        let mut m = IntMatrix::zeros(n, n);
        for r in 0..parts.len() {
            let d = diag(r);
            assert_eq!((d.rows(), d.cols()), (parts[r], parts[r]));
            for i in 0..parts[r] {
                for j in 0..parts[r] {
                    m.set(offs[r] + i, offs[r] + j, d.get(i, j));
                }
            }
            for s in (r + 1)..parts.len() {
                let b = upper(r, s);
                assert_eq!((b.rows(), b.cols()), (parts[r], parts[s]));
                for i in 0..parts[r] {
                    for j in 0..parts[s] {
                        m.set(offs[r] + i, offs[s] + j, b.get(i, j));
                        m.set(offs[s] + j, offs[r] + i, b.get(i, j));
                    }
                }
            }
        }
        EdgeMatrix::from_int_matrix(m)
    }

    pub fn n(&self) -> usize {
        self.m.rows()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.m.get(i, j)
    }

    pub fn as_int_matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.m.row_sums()
    }

    /// Sum of all entries; always even.
    pub fn norm(&self) -> u64 {
        self.m.norm()
    }

    /// Degree of the graph-monomial, `‖M‖/2`.
    pub fn weight(&self) -> u64 {
        self.norm() / 2
    }

    pub fn max_entry(&self) -> u32 {
        self.m.entries().iter().copied().max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn all_even(&self) -> bool {
        self.m.entries().iter().all(|v| v % 2 == 0)
    }

    /// Constant row sum, if the matrix is regular.
    pub fn regular_degree(&self) -> Option<u64> {
        let rs = self.row_sums();
        let d = rs[0];
        rs.iter().all(|&r| r == d).then_some(d)
    }

    /// Strict upper triangle, row-major.
    pub fn upper(&self) -> Vec<u32> {
        let n = self.n();
        let mut v = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                v.push(self.get(i, j));
            }
        }
        v
    }

    /// Edges `(i, j, multiplicity)` with `i < j`, 0-based, positive
    /// multiplicity only.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let n = self.n();
        let mut v = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let a = self.get(i, j);
                if a > 0 {
                    v.push((i, j, a));
                }
            }
        }
        v
    }

    pub fn plus(&self, other: &EdgeMatrix) -> EdgeMatrix {
        EdgeMatrix {
            m: self.m.plus(&other.m),
        }
    }

    pub fn scaled(&self, k: u32) -> EdgeMatrix {
        EdgeMatrix { m: self.m.scaled(k) }
    }

    /// The matrix `σMσ⁻¹`: vertex `i` is renamed to `sigma[i]`.
    pub fn relabel(&self, sigma: &[usize]) -> EdgeMatrix {
        let n = self.n();
        assert_eq!(sigma.len(), n);
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(sigma[i], sigma[j], self.get(i, j));
            }
        }
        EdgeMatrix { m }
    }

    /// Principal submatrix on the given vertices, in the given order.
    pub fn principal(&self, vertices: &[usize]) -> IntMatrix {
        let k = vertices.len();
        let mut m = IntMatrix::zeros(k, k);
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    /// Deletes vertex `v`.
    pub fn delete_vertex(&self, v: usize) -> IntMatrix {
        let keep: Vec<usize> = (0..self.n()).filter(|&i| i != v).collect();
        self.principal(&keep)
    }

    /// The graph-monomial `∏_{i<j} (z_i − z_j)^{a_ij}` in `n` variables.
    pub fn graph_monomial(&self) -> ExactPoly {
        graph_monomial_of(self.as_int_matrix())
    }

    pub fn to_json(&self) -> MatrixFile {
        MatrixFile {
            n: self.n(),
            upper: Some(self.upper().into_iter().map(i64::from).collect()),
            edges: None,
        }
    }
}

/// Graph-monomial of a square matrix read through its strict upper triangle
/// (so it also applies to the diagonal blocks of a block view).
pub fn graph_monomial_of(m: &IntMatrix) -> ExactPoly {
    let n = m.rows();
    let mut factors: Vec<(usize, usize, u32)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let a = m.get(i, j);
            if a > 0 {
                factors.push((i, j, a));
            }
        }
    }
    // Multiply the largest binomial powers first; the running product stays
    // smaller when heavy factors share variables early.
    factors.sort_by(|a, b| b.2.cmp(&a.2).then((a.0, a.1).cmp(&(b.0, b.1))));
    let mut acc = ExactPoly::one(n);
    for (i, j, a) in factors {
        acc = acc.mul(&binomial_power(n, i, j, a)).expect("same ring");
    }
    acc
}

/// `(z_i − z_j)^a` expanded directly from the binomial theorem.
fn binomial_power(n: usize, i: usize, j: usize, a: u32) -> ExactPoly {
    let mut terms = Vec::with_capacity(a as usize + 1);
    let mut c = BigInt::one();
    for k in 0..=a {
        // term C(a,k) z_i^{a-k} (-z_j)^k
        let mut e = vec![0u32; n];
        e[i] = a - k;
        e[j] = k;
        let signed = if k % 2 == 1 { -c.clone() } else { c.clone() };
        terms.push((Monomial::from_exponents(e), signed));
        c = c * BigInt::from(a - k) / BigInt::from(k + 1);
    }
    debug_assert!(c.is_zero());
    ExactPoly::from_terms(n, terms)
}

/// Start offsets of the parts.
pub fn offsets(parts: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    parts
        .iter()
        .map(|&p| {
            let o = acc;
            acc += p;
            o
        })
        .collect()
}

/// Nondecreasing composition `m_1 ≤ … ≤ m_q` of `n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Shape {
    parts: Vec<usize>,
}

/// A shape built from unsorted parts, with the vertex relabeling that moves
/// each original block to its sorted position.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalizedShape {
    pub shape: Shape,
    /// Order in which the supplied parts were placed (stable sort by size).
    pub part_order: Vec<usize>,
    /// `vertex_map[old] = new` vertex index, for [`EdgeMatrix::relabel`].
    pub vertex_map: Vec<usize>,
}

impl Shape {
    /// Accepts only nondecreasing positive parts.
    pub fn new(parts: Vec<usize>) -> Result<Shape, MatrixError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(MatrixError::BadShape(parts));
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(MatrixError::BadShape(parts));
        }
        Ok(Shape { parts })
    }

    /// Sorts arbitrary positive parts and reports the permutation used.
    pub fn normalize(parts: &[usize]) -> Result<NormalizedShape, MatrixError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(MatrixError::BadShape(parts.to_vec()));
        }
        let mut order: Vec<usize> = (0..parts.len()).collect();
        order.sort_by_key(|&k| parts[k]);
        let old_offs = offsets(parts);
        let n: usize = parts.iter().sum();
        let mut vertex_map = vec![0; n];
        let mut next = 0;
        for &k in &order {
            for i in 0..parts[k] {
                vertex_map[old_offs[k] + i] = next;
                next += 1;
            }
        }
        let sorted: Vec<usize> = order.iter().map(|&k| parts[k]).collect();
        Ok(NormalizedShape {
            shape: Shape { parts: sorted },
            part_order: order,
            vertex_map,
        })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn q(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] < w[1])
    }

    /// The index sets `A_r` as 0-based vertex lists.
    pub fn index_sets(&self) -> Vec<Vec<usize>> {
        offsets(&self.parts)
            .into_iter()
            .zip(&self.parts)
            .map(|(o, &m)| (o..o + m).collect())
            .collect()
    }

    /// All partitions of `n` into at least `min_parts` parts, each in
    /// nondecreasing order, sorted lexicographically.
    pub fn enumerate(n: usize, min_parts: usize) -> Vec<Shape> {
        fn rec(rem: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rem == 0 {
                out.push(cur.clone());
                return;
            }
            for p in min..=rem {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, 1, &mut Vec::new(), &mut out);
        out.sort();
        out.into_iter()
            .filter(|p| p.len() >= min_parts)
            .map(|parts| Shape { parts })
            .collect()
    }
}

/// `M = M* + M**` under a shape.
#[derive(Clone, Debug)]
pub struct BlockView {
    pub shape: Shape,
    /// Block-diagonal part.
    pub m_star: EdgeMatrix,
    /// Off-diagonal part.
    pub m_2star: EdgeMatrix,
    /// `blocks[r][s]` is the `m_r × m_s` block `M_rs`.
    pub blocks: Vec<Vec<IntMatrix>>,
    /// The index sets `A_r`, 0-based.
    pub index_sets: Vec<Vec<usize>>,
}

impl BlockView {
    pub fn block(&self, r: usize, s: usize) -> &IntMatrix {
        &self.blocks[r][s]
    }
}

pub fn block_decompose(m: &EdgeMatrix, shape: &Shape) -> Result<BlockView, MatrixError> {
    if shape.n() != m.n() {
        return Err(MatrixError::ShapeMismatch {
            parts: shape.parts().to_vec(),
            sum: shape.n(),
            n: m.n(),
        });
    }
    let sets = shape.index_sets();
    let n = m.n();
    let mut star = IntMatrix::zeros(n, n);
    let mut two_star = IntMatrix::zeros(n, n);
    let mut blocks = Vec::with_capacity(shape.q());
    for (r, ar) in sets.iter().enumerate() {
        let mut row = Vec::with_capacity(shape.q());
        for (s, as_) in sets.iter().enumerate() {
            let mut b = IntMatrix::zeros(ar.len(), as_.len());
            for (a, &i) in ar.iter().enumerate() {
                for (c, &j) in as_.iter().enumerate() {
                    let v = m.get(i, j);
                    b.set(a, c, v);
                    if r == s {
                        star.set(i, j, v);
                    } else {
                        two_star.set(i, j, v);
                    }
                }
            }
            row.push(b);
        }
        blocks.push(row);
    }
    Ok(BlockView {
        shape: shape.clone(),
        m_star: EdgeMatrix::from_int_matrix(star),
        m_2star: EdgeMatrix::from_int_matrix(two_star),
        blocks,
        index_sets: sets,
    })
}

/// Named standard matrices.
#[derive(Clone, Debug)]
pub enum Standard {
    /// `D_n`.
    D(usize),
    /// `D_(m,n)`.
    DRect(usize, usize),
    /// All-ones `m × n`.
    Ones(usize, usize),
    /// `k · A`.
    Scaled(u32, IntMatrix),
}

pub fn standard(kind: Standard) -> IntMatrix {
    match kind {
        Standard::D(n) => IntMatrix::d_matrix(n, n),
        Standard::DRect(m, n) => IntMatrix::d_matrix(m, n),
        Standard::Ones(m, n) => IntMatrix::filled(m, n, 1),
        Standard::Scaled(k, a) => a.scaled(k),
    }
}

/// `D_n` as an edge matrix (n ≥ 2).
pub fn d_edge(n: usize) -> EdgeMatrix {
    EdgeMatrix::from_int_matrix(IntMatrix::d_matrix(n, n))
}

/// JSON matrix file: either the strict upper triangle or an edge list.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[i64; 3]>>,
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<EdgeMatrix, MatrixError> {
        let f: MatrixFile =
            serde_json::from_str(text).map_err(|e| MatrixError::Json(e.to_string()))?;
        f.into_matrix()
    }

    pub fn into_matrix(self) -> Result<EdgeMatrix, MatrixError> {
        match (self.upper, self.edges) {
            (Some(u), None) => EdgeMatrix::from_upper(self.n, &u),
            (None, Some(e)) => {
                let mut edges = Vec::with_capacity(e.len());
                for [i, j, k] in e {
                    if i < 1 || j < 1 {
                        return Err(MatrixError::BadEdge {
                            i: i.max(0) as usize,
                            j: j.max(0) as usize,
                            n: self.n,
                        });
                    }
                    edges.push((i as usize, j as usize, k));
                }
                EdgeMatrix::from_edges(self.n, &edges)
            }
            _ => Err(MatrixError::Json(
                "exactly one of `upper` or `edges` is required".into(),
            )),
        }
    }
}

impl Serialize for EdgeMatrix {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(ser)
    }
}

impl<'de> Deserialize<'de> for EdgeMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        MatrixFile::deserialize(de)?
            .into_matrix()
            .map_err(serde::de::Error::custom)
    }
}
