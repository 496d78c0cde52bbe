//! Regular edge matrices with block structure, each built so that the block
//! criterion applies with the returned shape.

use serde::Serialize;

use super::{require, to_u32};
use crate::edgemat::{EdgeMatrix, IntMatrix, Shape};
use crate::error::ConstructError;
use crate::symmetrize::{nonzero_test, NonzeroOptions, SymmWitness, Verdict};

#[derive(Clone, Debug, Serialize)]
pub struct Thm2Output {
    pub matrix: EdgeMatrix,
    pub shape: Shape,
    pub n: usize,
    /// Common row sum.
    pub d: u64,
    /// `N d / 2`.
    pub w: u64,
    /// Nonzero witness for the input matrix (the bordering construction only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_witness: Option<SymmWitness>,
}

fn output(matrix: EdgeMatrix, parts: Vec<usize>) -> Thm2Output {
    let d = matrix.regular_degree().expect("construction is regular");
    let n = matrix.n();
    Thm2Output {
        w: matrix.weight(),
        matrix,
        shape: Shape::new(parts).expect("sorted positive parts"),
        n,
        d,
        input_witness: None,
    }
}

/// `2aI + bD_m`.
fn diag_plus_d(m: usize, a: u64, b: u64) -> Result<IntMatrix, ConstructError> {
    Ok(IntMatrix::identity(m)
        .scaled(to_u32(2 * a)?)
        .plus(&IntMatrix::d_matrix(m, m).scaled(to_u32(b)?)))
}

/// An all-even member of `E(N, d)`: `d·D_2` blocks for even `N`, and for odd
/// `N` (where `4 | d`) a `(d/2)·D_3` block beside an all-even matrix on the
/// other `N − 3` vertices.
pub fn lemma2_even(n: usize, d: u64) -> Result<EdgeMatrix, ConstructError> {
    require(n >= 2, || format!("need N >= 2, got {n}"))?;
    require(d >= 1 && (n as u64 * d).is_multiple_of(4), || {
        format!("N d = {} is not a positive multiple of 4", n as u64 * d)
    })?;
    // Row sums of an all-even matrix are even.
    require(d.is_multiple_of(2), || format!("d = {d} is odd, so no all-even matrix has row sums d"))?;
    let mut sizes = Vec::new();
    let mut rest = n;
    if n % 2 == 1 {
        require(n >= 3, || "N = 1 has no edges".into())?;
        sizes.push(3);
        rest -= 3;
    }
    sizes.extend(std::iter::repeat_n(2, rest / 2));
    let mut blocks = Vec::new();
    for &k in &sizes {
        let scale = if k == 3 { d / 2 } else { d };
        blocks.push(IntMatrix::d_matrix(k, k).scaled(to_u32(scale)?));
    }
    Ok(EdgeMatrix::from_blocks(
        &sizes,
        |r| blocks[r].clone(),
        |r, s| IntMatrix::zeros(sizes[r], sizes[s]),
    ))
}

/// `n` blocks of size `m`, zero on the diagonal and `2aI + bD_m` elsewhere;
/// `d = 2a(n−1) + (m−1)(n−1)b`.
pub fn thm2_i(m: usize, n: usize, a: u64, b: u64) -> Result<Thm2Output, ConstructError> {
    require(m >= 1 && n >= 2, || format!("need m >= 1 and n >= 2, got m={m}, n={n}"))?;
    require(m * n >= 3, || format!("N = mn = {} must be at least 3", m * n))?;
    require(a >= 1 && b >= 1, || "a and b must be positive".into())?;
    let blk = diag_plus_d(m, a, b)?;
    let parts = vec![m; n];
    let mat = EdgeMatrix::from_blocks(&parts, |_| IntMatrix::zeros(m, m), |_, _| blk.clone());
    let out = output(mat, parts);
    debug_assert_eq!(out.d, 2 * a * (n as u64 - 1) + (m as u64 - 1) * (n as u64 - 1) * b);
    Ok(out)
}

/// `n` blocks of size `m` joined as in [`thm2_i`], plus one block of size
/// `mn − r` joined to everything by the constant
/// `c = (2(n−1)a + (m−1)(n−1)b)/r`. `N = 2mn − r`, `d = mnc`.
pub fn thm2_ii(m: usize, n: usize, r: usize, a: u64, b: u64) -> Result<Thm2Output, ConstructError> {
    require(m >= 1 && n >= 2, || format!("need m >= 1 and n >= 2, got m={m}, n={n}"))?;
    require(r >= 1 && r < m * n, || format!("need 1 <= r <= mn - 1 = {}, got r={r}", m * n - 1))?;
    require(a >= 1 && b >= 1, || "a and b must be positive".into())?;
    require(2 * m * n - r >= 3, || "N = 2mn - r must be at least 3".into())?;
    let (mm, nn) = (m as u64, n as u64);
    let num = 2 * (nn - 1) * a + (mm - 1) * (nn - 1) * b;
    if !num.is_multiple_of(r as u64) {
        return Err(ConstructError::NotIntegral {
            name: "c",
            numerator: num as i128,
            denominator: r as i128,
        });
    }
    let c = to_u32(num / r as u64)?;
    let k = m * n - r;
    let blk = diag_plus_d(m, a, b)?;
    let (parts, special) = if k <= m {
        (std::iter::once(k).chain(std::iter::repeat_n(m, n)).collect::<Vec<_>>(), 0)
    } else {
        (std::iter::repeat_n(m, n).chain(std::iter::once(k)).collect::<Vec<_>>(), n)
    };
    let mat = EdgeMatrix::from_blocks(
        &parts,
        |i| IntMatrix::zeros(parts[i], parts[i]),
        |i, j| {
            if i == special || j == special {
                IntMatrix::filled(parts[i], parts[j], c)
            } else {
                blk.clone()
            }
        },
    );
    let out = output(mat, parts);
    debug_assert_eq!(out.d, mm * nn * c as u64);
    Ok(out)
}

/// The three quotients `a = (m+l−n)d/(2lm)`, `b = (l+n−m)d/(2ln)`,
/// `c = (m+n−l)d/(2mn)`, or the first that is not an integer.
fn thm2_iii_abc(l: u64, m: u64, n: u64, d: u64) -> Result<(u64, u64, u64), ConstructError> {
    let q = |name: &'static str, num: u64, den: u64| {
        if num.is_multiple_of(den) {
            Ok(num / den)
        } else {
            Err(ConstructError::NotIntegral {
                name,
                numerator: num as i128,
                denominator: den as i128,
            })
        }
    };
    Ok((
        q("a", (m + l - n) * d, 2 * l * m)?,
        q("b", (l + n - m) * d, 2 * l * n)?,
        q("c", (m + n - l) * d, 2 * m * n)?,
    ))
}

fn thm2_iii_check(l: usize, m: usize, n: usize) -> Result<(), ConstructError> {
    require(l >= 1 && l < m && m < n && n < l + m, || {
        format!("need 1 <= l < m < n < l + m, got ({l}, {m}, {n})")
    })
}

/// Whether `a`, `b`, `c` of [`thm2_iii`] are all integers for this `d`.
pub fn y_membership(l: usize, m: usize, n: usize, d: u64) -> Result<bool, ConstructError> {
    thm2_iii_check(l, m, n)?;
    require(d >= 1, || "d must be positive".into())?;
    Ok(thm2_iii_abc(l as u64, m as u64, n as u64, d).is_ok())
}

/// Three blocks of sizes `l < m < n`, joined by the constants `a`, `b`, `c`.
pub fn thm2_iii(l: usize, m: usize, n: usize, d: u64) -> Result<Thm2Output, ConstructError> {
    thm2_iii_check(l, m, n)?;
    require(d >= 1, || "d must be positive".into())?;
    let (a, b, c) = thm2_iii_abc(l as u64, m as u64, n as u64, d)?;
    let vals = [[0, to_u32(a)?, to_u32(b)?], [0, 0, to_u32(c)?]];
    let parts = vec![l, m, n];
    let mat = EdgeMatrix::from_blocks(
        &parts,
        |i| IntMatrix::zeros(parts[i], parts[i]),
        |i, j| IntMatrix::filled(parts[i], parts[j], vals[i][j]),
    );
    Ok(output(mat, parts))
}

/// The skew family: [`thm2_ii`] with `m = 1`, `n = 4uv + 2v + 1`,
/// `r = 8uv − 4tv + 4v`, `a = (2s+1)(2u−t+1)`, `b = 1`. Gives
/// `N = 2(2tv + 1)` and `d = (2s+1)(2u+1)(4uv+2v+1)`.
pub fn thm2_iv(s: u64, t: u64, u: u64, v: u64) -> Result<Thm2Output, ConstructError> {
    require(t >= 1 && u >= 1 && v >= 1, || "t, u, v must be positive".into())?;
    require(t <= 2 * u && 2 * u < 2 * t, || {
        format!("need t <= 2u <= 2t - 1, got t={t}, u={u}")
    })?;
    let n = 4 * u * v + 2 * v + 1;
    let r = 8 * u * v + 4 * v - 4 * t * v;
    let a = (2 * s + 1) * (2 * u + 1 - t);
    let out = thm2_ii(1, n as usize, r as usize, a, 1)?;
    debug_assert_eq!(out.n as u64, 2 * (2 * t * v + 1));
    debug_assert_eq!(out.d, (2 * s + 1) * (2 * u + 1) * n);
    Ok(out)
}

/// Borders `E ∈ E(N, d)` by `N − 1` new vertices, each joined to every old
/// vertex with multiplicity `d`; the result lies in `E(2N − 1, dN)`.
pub fn thm2_v(e: &EdgeMatrix, opts: &NonzeroOptions) -> Result<Thm2Output, ConstructError> {
    let d = e
        .regular_degree()
        .ok_or_else(|| ConstructError::Precondition("input matrix is not regular".into()))?;
    require(d >= 1, || "input matrix has no edges".into())?;
    require((e.max_entry() as u64) < d, || {
        format!("every entry must be below d = {d}, found {}", e.max_entry())
    })?;
    let witness = nonzero_test(e, opts);
    require(witness.verdict == Verdict::Nonzero, || {
        format!("input symmetrization is not certified nonzero ({:?})", witness.verdict)
    })?;
    let n = e.n();
    let dd = to_u32(d)?;
    let parts = vec![n - 1, n];
    let mat = EdgeMatrix::from_blocks(
        &parts,
        |i| {
            if i == 0 {
                IntMatrix::zeros(n - 1, n - 1)
            } else {
                e.as_int_matrix().clone()
            }
        },
        |_, _| IntMatrix::filled(n - 1, n, dd),
    );
    let mut out = output(mat, parts);
    out.input_witness = Some(witness);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma2_cases() {
        let e = lemma2_even(4, 2).unwrap();
        assert_eq!(
            e.as_int_matrix().to_rows(),
            vec![vec![0, 2, 0, 0], vec![2, 0, 0, 0], vec![0, 0, 0, 2], vec![0, 0, 2, 0]]
        );
        let e = lemma2_even(3, 4).unwrap();
        assert_eq!(e, crate::edgemat::d_edge(3).scaled(2));
        let e = lemma2_even(5, 4).unwrap();
        assert_eq!(e.regular_degree(), Some(4));
        assert!(e.all_even());
        assert!(lemma2_even(3, 2).is_err());
        assert!(lemma2_even(4, 1).is_err());
    }

    #[test]
    fn thm2_i_small() {
        let o = thm2_i(2, 2, 1, 1).unwrap();
        assert_eq!((o.n, o.d), (4, 3));
        assert_eq!(
            o.matrix.as_int_matrix().to_rows(),
            vec![vec![0, 0, 2, 1], vec![0, 0, 1, 2], vec![2, 1, 0, 0], vec![1, 2, 0, 0]]
        );
    }

    #[test]
    fn thm2_iii_example() {
        let o = thm2_iii(2, 5, 6, 40).unwrap();
        assert_eq!((o.n, o.d), (13, 40));
        assert_eq!(o.matrix.get(0, 2), 2);
        assert_eq!(o.matrix.get(0, 7), 5);
        assert_eq!(o.matrix.get(2, 7), 6);
        assert!(matches!(
            thm2_iii(2, 5, 6, 20),
            Err(ConstructError::NotIntegral { name: "b", .. })
        ));
        assert!(y_membership(2, 5, 6, 40).unwrap());
        assert!(!y_membership(2, 5, 6, 120 / 7).unwrap());
    }

    #[test]
    fn thm2_iv_example() {
        let o = thm2_iv(0, 2, 1, 1).unwrap();
        assert_eq!((o.n, o.d, o.w), (10, 21, 105));
        assert!(thm2_iv(0, 3, 1, 1).is_err());
    }

    #[test]
    fn thm2_ii_integrality() {
        assert!(matches!(
            thm2_ii(2, 2, 2, 1, 1),
            Err(ConstructError::NotIntegral { name: "c", .. })
        ));
        let o = thm2_ii(2, 2, 1, 1, 1).unwrap();
        assert_eq!((o.n, o.d), (7, 12));
        assert_eq!(o.shape.parts(), &[2, 2, 3]);
    }
}
