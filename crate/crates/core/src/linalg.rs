//! Exact dense integer linear algebra used to audit the polar-multiplicity
//! system.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Integer;

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn determinant(matrix: &[Vec<Integer>]) -> Result<Integer> {
    let size = matrix.len();
    if matrix.iter().any(|row| row.len() != size) {
        return Err(Error::MalformedSystem("matrix is not square".into()));
    }
    if size == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<Integer>> = matrix.to_vec();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for p in 0..size - 1 {
        if a[p][p].is_zero() {
            match (p + 1..size).find(|&r| !a[r][p].is_zero()) {
                Some(r) => {
                    a.swap(p, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for r in p + 1..size {
            for c in p + 1..size {
                let v = (&a[r][c] * &a[p][p] - &a[r][p] * &a[p][c]) / &prev;
                a[r][c] = v;
            }
            a[r][p] = BigInt::zero();
        }
        prev = a[p][p].clone();
    }
    Ok(sign * a[size - 1][size - 1].clone())
}

pub fn mat_vec(matrix: &[Vec<Integer>], x: &[Integer]) -> Result<Vec<Integer>> {
    matrix
        .iter()
        .map(|row| {
            if row.len() != x.len() {
                return Err(Error::LengthMismatch {
                    what: "vector",
                    expected: row.len(),
                    got: x.len(),
                });
            }
            Ok(row.iter().zip(x).map(|(a, b)| a * b).sum())
        })
        .collect()
}
