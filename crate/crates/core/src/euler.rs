//! Local Euler obstruction `e(s, n) = Eu_0(Σ^s)`.
//!
//! The value does not depend on `k`, so nothing here takes it. Two routes
//! are provided: the stratified recurrence obtained from the
//! Brasselet–Lê–Seade formula and the binomial closed form `C(n, s-1)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::binomial;
use crate::error::{check_s_n, Error, Result};
use crate::strata::{chi_bar_slice, chi_slice, normal_slice};
use crate::Integer;

/// `e(s, n)` from
/// `e(s,n) = Σ_{i=2}^{s} (χ̄(i,n) - χ̄(i-1,n)) · e(s-i+1, n-i+1)`, `e(1, m) = 1`.
pub fn eu_recurrence(s: u32, n: u32) -> Result<Integer> {
    check_s_n(s, n)?;
    let mut memo = HashMap::new();
    recurrence(s, n, &mut memo)
}

fn recurrence(s: u32, n: u32, memo: &mut HashMap<(u32, u32), Integer>) -> Result<Integer> {
    if s == 1 {
        return Ok(BigInt::one());
    }
    if let Some(v) = memo.get(&(s, n)) {
        return Ok(v.clone());
    }
    let mut acc = BigInt::zero();
    for i in 2..=s {
        let jump = chi_bar_slice(i, n)? - chi_bar_slice(i - 1, n)?;
        let (s_cut, n_cut) = normal_slice(s, n, i)?;
        acc += jump * recurrence(s_cut, n_cut, memo)?;
    }
    memo.insert((s, n), acc.clone());
    Ok(acc)
}

/// `e(s, n) = C(n, s-1)`.
pub fn eu_closed(s: u32, n: u32) -> Result<Integer> {
    check_s_n(s, n)?;
    Ok(binomial(i64::from(n), i64::from(s) - 1))
}

/// The Euler obstruction of `Σ^s` as a constructible function: its value on
/// each open stratum `Σ^i \ Σ^{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructibleFunction {
    s: u32,
    n: u32,
    coeffs: Vec<Integer>,
}

impl ConstructibleFunction {
    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Value on `Σ^i \ Σ^{i-1}`, `1 <= i <= s`.
    pub fn at(&self, i: u32) -> Option<&Integer> {
        if i == 0 {
            return None;
        }
        self.coeffs.get(i as usize - 1)
    }

    /// Values ordered by stratum, index 0 is the origin.
    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }
}

/// `e_p(s,n) = Σ_{i=1}^{s} C(n-i+1, s-i) · 1_{Σ^i \ Σ^{i-1}}(p)`.
pub fn eu_constructible(s: u32, n: u32) -> Result<ConstructibleFunction> {
    check_s_n(s, n)?;
    let (si, ni) = (i64::from(s), i64::from(n));
    let coeffs = (1..=si).map(|i| binomial(ni - i + 1, si - i)).collect();
    Ok(ConstructibleFunction { s, n, coeffs })
}

/// `Eu_0(X) = Σ_i χ(V_i ∩ B_ε ∩ l^{-1}(δ)) · Eu_{V_i}(X)`.
///
/// `chi_slices[i]` is the Euler characteristic of the slice of the *open*
/// stratum; converting cumulative slice values is up to the caller (see
/// [`open_stratum_slice_chis`]).
pub fn eu_from_strata(chi_slices: &[Integer], eu_values: &[Integer]) -> Result<Integer> {
    if chi_slices.len() != eu_values.len() {
        return Err(Error::LengthMismatch {
            what: "eu_values",
            expected: chi_slices.len(),
            got: eu_values.len(),
        });
    }
    Ok(chi_slices.iter().zip(eu_values).map(|(c, e)| c * e).sum())
}

/// Slice Euler characteristics of the open strata `Σ^i \ Σ^{i-1}` of the
/// generic variety, by inclusion–exclusion: `χ(i,n) - χ(i-1,n)`, with
/// `χ(Σ^0 ∩ …) = 0`.
pub fn open_stratum_slice_chis(s: u32, n: u32) -> Result<Vec<Integer>> {
    check_s_n(s, n)?;
    let mut out = Vec::with_capacity(s as usize);
    let mut prev = BigInt::zero();
    for i in 1..=s {
        let cur = chi_slice(i, n)?;
        out.push(&cur - &prev);
        prev = cur;
    }
    Ok(out)
}

/// Rows `0..=rows` of the triangle of spaces `Σ^1_n, …, Σ^n_n, Hom(C^n, C^{n+k})`
/// with each space replaced by its Euler obstruction at the origin.
pub fn pascal_triangle_of_spaces(rows: u32) -> Vec<Vec<Integer>> {
    (0..=rows)
        .map(|n| {
            let mut row: Vec<Integer> = (0..n)
                .map(|i| eu_closed(i + 1, n).expect("1 <= i+1 <= n"))
                .collect();
            // the whole space is smooth
            row.push(BigInt::one());
            row
        })
        .collect()
}
