//! Fraction-free determinants over the polynomial ring.

use crate::error::Result;
use crate::exact::{MultiPoly, UniPoly};

/// Square matrix of polynomials, row major.
pub type PolyMatrix = Vec<Vec<MultiPoly>>;

/// Determinant by Bareiss elimination.
///
/// Every intermediate entry is a minor of the input, so each step's division
/// by the previous pivot is exact. Zero pivots are handled by swapping in a
/// lower row with a nonzero entry in the pivot column.
pub fn det_bareiss(matrix: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = matrix.len();
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    debug_assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
    let mut m: PolyMatrix = matrix.to_vec();
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(MultiPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Determinant of the matrix whose first rows are `rows` (each of length
/// `rows.len() + 1`) and whose last row is `1, x, …, x^n`, expanded by
/// cofactors along that last row.
pub fn det_bordered_by_powers(rows: &[Vec<MultiPoly>]) -> Result<UniPoly> {
    let n = rows.len();
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let minor: PolyMatrix = rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let d = det_bareiss(&minor)?;
        coeffs.push(if (n + j) % 2 == 1 { -d } else { d });
    }
    UniPoly::from_coeffs(coeffs)
}

/// Product of two matrices of compatible shape.
pub fn mat_mul(a: &[Vec<MultiPoly>], b: &[Vec<MultiPoly>]) -> PolyMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = MultiPoly::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc += &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn is_identity(m: &[Vec<MultiPoly>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
    })
}
