//! Rank stratification of `Hom(C^n, C^{n+k})`.
//!
//! `Σ^i` is the closed set of matrices of rank `< i`; `Σ^0 = ∅`,
//! `Σ^1 = {0}` and `Sing(Σ^s) = Σ^{s-1}`. Only discrete invariants of the
//! strata are modeled.

use num_bigint::BigInt;

use crate::combinatorics::{binomial, parity_sign};
use crate::error::{check_s_n, domain, Result};
use crate::Integer;

/// `Σ^s ⊂ Hom(C^n, C^{n+k})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StrataSpec {
    n: u32,
    k: u32,
    s: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrataGeometry {
    pub codim: u64,
    pub dim: u64,
}

impl StrataSpec {
    pub fn new(n: u32, k: u32, s: u32) -> Result<Self> {
        if n < 1 {
            return Err(domain(format!("n must be >= 1 (got n={n})")));
        }
        check_s_n(s, n)?;
        Ok(StrataSpec { n, k, s })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Dimension of the ambient matrix space, `n(n+k)`.
    pub fn ambient_dim(&self) -> u64 {
        ambient_dim(self.n, self.k)
    }

    pub fn geometry(&self) -> StrataGeometry {
        let codim = codim(self.n, self.k, self.s);
        StrataGeometry {
            codim,
            dim: self.ambient_dim() - codim,
        }
    }

    /// The same stratification with a different rank bound.
    pub fn with_s(&self, s: u32) -> Result<Self> {
        StrataSpec::new(self.n, self.k, s)
    }
}

pub fn ambient_dim(n: u32, k: u32) -> u64 {
    u64::from(n) * u64::from(n + k)
}

/// `(n-s+1)(n+k-s+1)`; caller guarantees `1 <= s <= n`.
fn codim(n: u32, k: u32, s: u32) -> u64 {
    u64::from(n - s + 1) * u64::from(n + k - s + 1)
}

/// Codimension and dimension of `Σ^s`.
pub fn strata_geometry(spec: StrataSpec) -> StrataGeometry {
    spec.geometry()
}

/// `dim Σ^i` in `Hom(C^n, C^{n+k})`.
pub fn stratum_dim(n: u32, k: u32, i: u32) -> Result<u64> {
    Ok(StrataSpec::new(n, k, i)?.geometry().dim)
}

/// Normal slice to `Σ^i \ Σ^{i-1}` inside `Σ^s`: near such a point `Σ^s`
/// looks like `Σ^{s-i+1} ⊂ Hom(C^{n-i+1}, C^{n-i+1+k})` times a ball.
pub fn normal_slice(s: u32, n: u32, i: u32) -> Result<(u32, u32)> {
    check_s_n(s, n)?;
    if i < 1 || i > s {
        return Err(domain(format!(
            "stratum index must satisfy 1 <= i <= s (got i={i}, s={s})"
        )));
    }
    Ok((s - i + 1, n - i + 1))
}

/// Reduced Euler characteristic of the generic slice `Σ^i ∩ ℓ^{-1}(1)`:
/// `(-1)^i C(n-1, i-1)`.
pub fn chi_bar_slice(i: u32, n: u32) -> Result<Integer> {
    check_slice(i, n)?;
    let (i, n) = (i64::from(i), i64::from(n));
    Ok(parity_sign(i) * binomial(n - 1, i - 1))
}

/// `χ = 1 + χ̄` of the generic slice. For `i = 1` this is the empty Milnor
/// fiber of a linear form on `{0}`, so the value is 0.
pub fn chi_slice(i: u32, n: u32) -> Result<Integer> {
    Ok(BigInt::from(1) + chi_bar_slice(i, n)?)
}

fn check_slice(i: u32, n: u32) -> Result<()> {
    if i < 1 || i > n {
        return Err(domain(format!(
            "slice index must satisfy 1 <= i <= n (got i={i}, n={n})"
        )));
    }
    Ok(())
}
