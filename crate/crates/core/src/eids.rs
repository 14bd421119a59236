//! Invariants of an EIDS `X = F^{-1}(Σ^t)` for `F: C^q → Hom(C^n, C^{n+k})`.
//!
//! `_iX = F^{-1}(Σ^i)` has dimension `d(i) = q - (n-i+1)(n+k-i+1)`. The
//! analytic quantities (Euler characteristics of stabilizations, top polar
//! multiplicities, Euler obstructions of the strata, multiplicities of pairs
//! of modules, reduced Euler characteristics of slices) are inputs; missing
//! ones are reported, never defaulted.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{alternating_sum, binomial, parity_sign, Sign};
use crate::error::{check_s_n, domain, Error, Result};
use crate::euler::eu_closed;
use crate::strata::{ambient_dim, chi_slice, stratum_dim, StrataSpec};
use crate::Integer;

/// `n_{it} = (-1)^{k(t-i)} C(n-i, n-t)`.
pub fn n_coefficient(i: u32, t: u32, n: u32, k: u32) -> Result<Integer> {
    if i < 1 || i > t || t > n {
        return Err(domain(format!(
            "n-coefficient needs 1 <= i <= t <= n (got i={i}, t={t}, n={n})"
        )));
    }
    let e = i64::from(k) * i64::from(t - i);
    Ok(parity_sign(e) * binomial(i64::from(n - i), i64::from(n - t)))
}

/// `d(i) = dim _iX = q - codim Σ^i`. Negative when `_iX` is empty.
pub fn section_dim(q: u32, n: u32, k: u32, i: u32) -> Result<i64> {
    let codim = StrataSpec::new(n, k, i)?.geometry().codim;
    Ok(i64::from(q) - codim as i64)
}

fn require_stable_range(q: u32, n: u32, k: u32) -> Result<()> {
    let ambient = ambient_dim(n, k);
    if u64::from(q) < ambient {
        return Err(Error::Hypothesis(format!(
            "stabilization formula needs q >= n(n+k) = {ambient} (got q={q})"
        )));
    }
    Ok(())
}

/// Per-stratum analytic inputs for `_iX`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StratumInvariants {
    pub i: u32,
    /// `χ` of the stabilization of `_iX`; required for `i = 1`.
    pub chi_stab: Option<Integer>,
    /// `m_{d(i)}(_iX)`; required for `i >= 2`.
    pub m_top: Option<Integer>,
    /// `Eu_0(_iX)`; required for `i >= 2`.
    pub eu0: Option<Integer>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EidsProblem {
    pub q: u32,
    pub n: u32,
    pub k: u32,
    pub t: u32,
    pub strata: Vec<StratumInvariants>,
}

impl EidsProblem {
    pub fn validate(&self) -> Result<()> {
        if self.q < 1 {
            return Err(domain("q must be >= 1"));
        }
        StrataSpec::new(self.n, self.k, self.t)?;
        for (pos, st) in self.strata.iter().enumerate() {
            if st.i < 1 || st.i > self.t {
                return Err(domain(format!(
                    "stratum index must satisfy 1 <= i <= t (got i={}, t={})",
                    st.i, self.t
                )));
            }
            if self.strata[..pos].iter().any(|o| o.i == st.i) {
                return Err(domain(format!("stratum {} listed twice", st.i)));
            }
        }
        Ok(())
    }

    pub fn stratum(&self, i: u32) -> Option<&StratumInvariants> {
        self.strata.iter().find(|st| st.i == i)
    }

    pub fn d(&self, i: u32) -> Result<i64> {
        section_dim(self.q, self.n, self.k, i)
    }

    fn require(&self, i: u32, field: &'static str) -> Result<&Integer> {
        let st = self.stratum(i);
        let value = match field {
            "chi_stab" => st.and_then(|s| s.chi_stab.as_ref()),
            "m_top" => st.and_then(|s| s.m_top.as_ref()),
            _ => st.and_then(|s| s.eu0.as_ref()),
        };
        value.ok_or(Error::MissingInvariant { stratum: i, field })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilization {
    pub chi: Integer,
    /// Some `m_{d(i)}(_iX)` with `i >= 2` is nonzero. The sign attached to
    /// those terms has no independent cross-check.
    pub polar_terms_nonzero: bool,
}

/// `χ(X̃) = (-1)^{d(t)-d(1)} n_{1t} χ(_1X̃)
///        + Σ_{i=2}^{t} n_{it} ((-1)^{d(t)} m_{d(i)}(_iX) + (-1)^{d(t)-d(i)} Eu_0(_iX))`.
pub fn chi_stabilization(problem: &EidsProblem) -> Result<Stabilization> {
    problem.validate()?;
    let EidsProblem { q, n, k, t, .. } = *problem;
    require_stable_range(q, n, k)?;

    let d_t = problem.d(t)?;
    let d_1 = problem.d(1)?;
    let chi1 = problem.require(1, "chi_stab")?;
    let mut chi = parity_sign(d_t - d_1) * n_coefficient(1, t, n, k)? * chi1;
    let mut polar_terms_nonzero = false;
    for i in 2..=t {
        let m = problem.require(i, "m_top")?;
        let eu = problem.require(i, "eu0")?;
        polar_terms_nonzero |= !m.is_zero();
        let d_i = problem.d(i)?;
        let inner = parity_sign(d_t) * m.clone() + parity_sign(d_t - d_i) * eu.clone();
        chi += n_coefficient(i, t, n, k)? * inner;
    }
    Ok(Stabilization {
        chi,
        polar_terms_nonzero,
    })
}

/// Stabilization Euler characteristic for a good approximation:
/// `(-1)^{d(t)-d(1)} n_{1t} χ(_1X̃) + Σ_{i=2}^{t} (-1)^{d(t)-d(i)} n_{it} C(n, i-1)`.
pub fn chi_stabilization_good_approx(q: u32, n: u32, k: u32, t: u32, chi1: &Integer) -> Result<Integer> {
    StrataSpec::new(n, k, t)?;
    require_stable_range(q, n, k)?;
    let d_t = section_dim(q, n, k, t)?;
    let d_1 = section_dim(q, n, k, 1)?;
    let mut chi = parity_sign(d_t - d_1) * n_coefficient(1, t, n, k)? * chi1.clone();
    for i in 2..=t {
        let d_i = section_dim(q, n, k, i)?;
        chi += parity_sign(d_t - d_i) * n_coefficient(i, t, n, k)? * eu_closed(i, n)?;
    }
    Ok(chi)
}

/// `χ` of the Milnor fiber of an ICIS of dimension `dim` with Milnor number
/// `mu`: a bouquet of `mu` spheres of real dimension `dim`.
pub fn icis_chi_from_milnor(dim: i64, mu: &Integer) -> Integer {
    BigInt::one() + parity_sign(dim) * mu.clone()
}

/// [`chi_stabilization_good_approx`] with `χ(_1X̃)` given through the Milnor
/// number of the ICIS `_1X`.
pub fn chi_stabilization_good_approx_from_milnor(
    q: u32,
    n: u32,
    k: u32,
    t: u32,
    mu: &Integer,
) -> Result<Integer> {
    require_stable_range(q, n, k)?;
    let d_1 = section_dim(q, n, k, 1)?;
    chi_stabilization_good_approx(q, n, k, t, &icis_chi_from_milnor(d_1, mu))
}

/// Reduced Euler characteristic of the stabilization for `n = t = 2`
/// (maximal minors of a `2 × (2+k)` matrix): `(-1)^{q-3} μ(_1X)`.
pub fn chi_bar_maximal_minors(q: u32, mu: &Integer) -> Integer {
    parity_sign(i64::from(q) - 3) * mu.clone()
}

/// `χ(_1X̃) = m_0 - m_1 + … + (-1)^{d} m_d` for the ICIS `_1X`.
pub fn icis_chi_from_polar(polar_mults: &[Integer]) -> Integer {
    alternating_sum(polar_mults, Sign::Plus)
}

/// The `s × s` polar-multiplicity system `A · x = B`.
///
/// Stored in the printed anti-triangular layout: row `r` (0-based) is the
/// equation for `Σ^{s-r}`, whose entries are `n_{1,s-r}, …, n_{s-r,s-r}`
/// followed by zeros. `rhs` follows the same row order, so
/// `rhs()[r] = b_{s-r}`; use [`TriangularSystem::b`] for stratum order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularSystem {
    size: usize,
    matrix: Vec<Vec<Integer>>,
    rhs: Vec<Integer>,
}

impl TriangularSystem {
    /// Checks the shape: square, `1` on the anti-diagonal, zeros below it.
    pub fn new(matrix: Vec<Vec<Integer>>, rhs: Vec<Integer>) -> Result<Self> {
        let size = matrix.len();
        if rhs.len() != size {
            return Err(Error::LengthMismatch {
                what: "rhs",
                expected: size,
                got: rhs.len(),
            });
        }
        for (r, row) in matrix.iter().enumerate() {
            if row.len() != size {
                return Err(Error::MalformedSystem(format!(
                    "row {r} has {} entries, expected {size}",
                    row.len()
                )));
            }
            let anti = size - 1 - r;
            if !row[anti].is_one() {
                return Err(Error::MalformedSystem(format!(
                    "anti-diagonal entry in row {r} is {}, expected 1",
                    row[anti]
                )));
            }
            if row[anti + 1..].iter().any(|v| !v.is_zero()) {
                return Err(Error::MalformedSystem(format!(
                    "row {r} has nonzero entries below the anti-diagonal"
                )));
            }
        }
        Ok(TriangularSystem { size, matrix, rhs })
    }

    /// `A` for `Hom(C^n, C^{n+k})` and `s` strata, with right-hand side given
    /// in stratum order `b_1, …, b_s`.
    pub fn with_stratum_rhs(n: u32, k: u32, s: u32, b: &[Integer]) -> Result<Self> {
        StrataSpec::new(n, k, s)?;
        if b.len() != s as usize {
            return Err(Error::LengthMismatch {
                what: "b",
                expected: s as usize,
                got: b.len(),
            });
        }
        let mut matrix = Vec::with_capacity(s as usize);
        for r in 0..s {
            let t = s - r;
            let row = (1..=s)
                .map(|i| {
                    if i <= t {
                        n_coefficient(i, t, n, k)
                    } else {
                        Ok(BigInt::zero())
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            matrix.push(row);
        }
        let rhs = b.iter().rev().cloned().collect();
        TriangularSystem::new(matrix, rhs)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn matrix(&self) -> &[Vec<Integer>] {
        &self.matrix
    }

    /// Right-hand side in row order.
    pub fn rhs(&self) -> &[Integer] {
        &self.rhs
    }

    /// `b_i`, `1 <= i <= size`.
    pub fn b(&self, i: usize) -> Option<&Integer> {
        if i == 0 || i > self.size {
            return None;
        }
        self.rhs.get(self.size - i)
    }

    /// Coefficient of `x_i` in the equation for `Σ^t`.
    fn coefficient(&self, i: usize, t: usize) -> &Integer {
        &self.matrix[self.size - t][i - 1]
    }
}

/// `b_i = (-1)^{d'_i} χ(Σ^i) + (-1)^{d'_i - 1} χ(Σ^i ∩ H)` for the generic
/// variety, with `d'_i = dim Σ^i`, `χ(Σ^i) = 1` (a cone) and `χ(Σ^i ∩ H)`
/// the generic slice value (0 for the point `Σ^1`).
pub fn generic_rhs(n: u32, k: u32, s: u32) -> Result<Vec<Integer>> {
    StrataSpec::new(n, k, s)?;
    (1..=s)
        .map(|i| {
            let d = stratum_dim(n, k, i)? as i64;
            Ok(parity_sign(d) * BigInt::one() + parity_sign(d - 1) * chi_slice(i, n)?)
        })
        .collect()
}

pub fn build_generic_system(n: u32, k: u32, s: u32) -> Result<TriangularSystem> {
    TriangularSystem::with_stratum_rhs(n, k, s, &generic_rhs(n, k, s)?)
}

/// Forward substitution `x_1 = b_1`, `x_t = b_t - Σ_{i<t} n_{it} x_i`.
/// Returns `x_i = m_{d_i}(_iX)` in stratum order.
pub fn solve_polar_multiplicities(system: &TriangularSystem) -> Result<Vec<Integer>> {
    let mut x: Vec<Integer> = Vec::with_capacity(system.size);
    for t in 1..=system.size {
        let mut value = system.b(t).expect("t in range").clone();
        for (i, xi) in x.iter().enumerate() {
            value -= system.coefficient(i + 1, t) * xi;
        }
        x.push(value);
    }
    Ok(x)
}

/// Which section formula applies for a given source dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectionRegime {
    /// `q < n(n+k)`: `F` is an immersion off the origin.
    BelowAmbient,
    /// `q > n(n+k)`: `F` is a submersion on the strata other than `{0}`.
    AboveAmbient,
}

pub fn section_regime(q: u32, n: u32, k: u32) -> Result<SectionRegime> {
    let ambient = ambient_dim(n, k);
    match u64::from(q).cmp(&ambient) {
        std::cmp::Ordering::Less => Ok(SectionRegime::BelowAmbient),
        std::cmp::Ordering::Greater => Ok(SectionRegime::AboveAmbient),
        std::cmp::Ordering::Equal => Err(Error::Hypothesis(format!(
            "no section formula covers q = n(n+k) = {ambient}"
        ))),
    }
}

fn check_section_inputs(s: u32, n: u32, chi_bar_star: &[Integer]) -> Result<()> {
    check_s_n(s, n)?;
    if s < 2 {
        return Err(domain(format!("section formula needs s >= 2 (got s={s})")));
    }
    if chi_bar_star.len() != s as usize - 1 {
        return Err(Error::LengthMismatch {
            what: "chi_bar_star",
            expected: s as usize - 1,
            got: chi_bar_star.len(),
        });
    }
    Ok(())
}

/// `Eu_0(X) = e(s-1, n-1) + Σ_{i=2}^{s} χ̄_*(i,n) C(n-i, s-i)` for
/// `n(n+k) > q`. `chi_bar_star[j]` is `χ̄_*(j+2, n)`.
pub fn eu_section_low_q(s: u32, n: u32, chi_bar_star: &[Integer]) -> Result<Integer> {
    check_section_inputs(s, n, chi_bar_star)?;
    let (si, ni) = (i64::from(s), i64::from(n));
    let mut eu = eu_closed(s - 1, n - 1)?;
    for (i, chi) in (2..=si).zip(chi_bar_star) {
        eu += chi * binomial(ni - i, si - i);
    }
    Ok(eu)
}

/// `Eu_0(X) = C(n, s-1) + χ̄(_1X ∩ H) C(n-1, s-1) + Σ_{i=2}^{s} χ̄_*(i,n) C(n-1, s-1)`
/// for `q > n(n+k)`, evaluated as written.
pub fn eu_section_high_q(
    s: u32,
    n: u32,
    chi_bar_1h: &Integer,
    chi_bar_star: &[Integer],
) -> Result<Integer> {
    check_section_inputs(s, n, chi_bar_star)?;
    let (si, ni) = (i64::from(s), i64::from(n));
    let weight = binomial(ni - 1, si - 1);
    let star: Integer = chi_bar_star.iter().sum();
    Ok(binomial(ni, si - 1) + chi_bar_1h * &weight + star * weight)
}

/// `Eu_0(M) = Σ_{i=0}^{d-1} (-1)^i m_0(P_i(M))`.
///
/// An empty list (zero-dimensional locus) gives 0; callers should surface
/// that as a warning.
pub fn eu_of_module(polar_mults: &[Integer]) -> Integer {
    alternating_sum(polar_mults, Sign::Plus)
}

/// `Eu_0(X) = Σ_{i=0}^{d-1} (-1)^i e(M_i, N_i) + Eu_0(F^*(JM(Σ^r)))`, with
/// `M_0 = N_0 = 0` so the first pair multiplicity must vanish.
pub fn eu_via_pair_multiplicities(pair_mults: &[Integer], eu_pullback: &Integer) -> Result<Integer> {
    if let Some(first) = pair_mults.first() {
        if !first.is_zero() {
            return Err(Error::NonZeroLeadingPair(first.to_string()));
        }
    }
    Ok(alternating_sum(pair_mults, Sign::Plus) + eu_pullback)
}

/// Source dimensions `q` with `dim Σ^{r+1} < q < n(n+k)`, where `r` is the
/// kernel rank: `Σ̄_r` (kernel rank `>= r`) is `Σ^{r+1}` in rank-bound
/// indexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QWindow {
    pub kernel_rank: u32,
    /// `r + 1`, the same variety in rank-bound indexing.
    pub rank_bound: u32,
    pub lower_exclusive: u64,
    pub upper_exclusive: u64,
}

impl QWindow {
    pub fn values(&self) -> impl Iterator<Item = u64> {
        (self.lower_exclusive + 1)..self.upper_exclusive
    }

    pub fn is_empty(&self) -> bool {
        self.lower_exclusive + 1 >= self.upper_exclusive
    }
}

pub fn good_approx_q_window(n: u32, k: u32, r: u32) -> Result<QWindow> {
    if r + 1 > n {
        return Err(domain(format!(
            "kernel rank must satisfy r + 1 <= n (got r={r}, n={n})"
        )));
    }
    Ok(QWindow {
        kernel_rank: r,
        rank_bound: r + 1,
        lower_exclusive: stratum_dim(n, k, r + 1)?,
        upper_exclusive: ambient_dim(n, k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{determinant, mat_vec};
    use crate::strata::chi_bar_slice;

    fn int(v: i64) -> Integer {
        BigInt::from(v)
    }

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().copied().map(BigInt::from).collect()
    }

    fn problem(q: u32, n: u32, k: u32, t: u32, chi1: i64, rest: &[(i64, i64)]) -> EidsProblem {
        let mut strata = vec![StratumInvariants {
            i: 1,
            chi_stab: Some(int(chi1)),
            ..Default::default()
        }];
        for (idx, &(m, eu)) in rest.iter().enumerate() {
            strata.push(StratumInvariants {
                i: idx as u32 + 2,
                chi_stab: None,
                m_top: Some(int(m)),
                eu0: Some(int(eu)),
            });
        }
        EidsProblem { q, n, k, t, strata }
    }

    #[test]
    fn n_coefficient_examples() {
        for n in 1..=20 {
            for k in 0..=10 {
                for i in 1..=n {
                    assert_eq!(n_coefficient(i, i, n, k).unwrap(), int(1));
                }
            }
        }
        assert_eq!(n_coefficient(1, 2, 2, 1).unwrap(), int(-1));
        assert_eq!(n_coefficient(1, 2, 3, 0).unwrap(), int(2));
        assert!(n_coefficient(3, 2, 4, 0).is_err());
        assert!(n_coefficient(1, 5, 4, 0).is_err());
    }

    #[test]
    fn stabilization_maximal_minors() {
        for k in 0..4 {
            let q = 2 * (2 + k) + 1;
            for c in -5..=5 {
                let p = problem(q, 2, k, 2, c, &[(0, 2)]);
                let st = chi_stabilization(&p).unwrap();
                assert_eq!(st.chi, int(2 - c));
                assert!(!st.polar_terms_nonzero);
            }
        }
    }

    #[test]
    fn stabilization_icis_case() {
        let p = problem(7, 2, 1, 1, 13, &[]);
        assert_eq!(chi_stabilization(&p).unwrap().chi, int(13));
    }

    #[test]
    fn stabilization_agrees_with_good_approx_example() {
        let p = problem(9, 3, 0, 2, 1, &[(0, 3)]);
        let general = chi_stabilization(&p).unwrap().chi;
        assert_eq!(general, chi_stabilization_good_approx(9, 3, 0, 2, &int(1)).unwrap());
    }

    #[test]
    fn stabilization_errors() {
        let p = problem(5, 2, 1, 2, 0, &[(0, 2)]);
        assert!(matches!(chi_stabilization(&p), Err(Error::Hypothesis(_))));

        let mut p = problem(6, 2, 1, 2, 0, &[(0, 2)]);
        p.strata[1].eu0 = None;
        assert_eq!(
            chi_stabilization(&p),
            Err(Error::MissingInvariant { stratum: 2, field: "eu0" })
        );

        let p = EidsProblem { q: 6, n: 2, k: 1, t: 2, strata: vec![] };
        assert_eq!(
            chi_stabilization(&p),
            Err(Error::MissingInvariant { stratum: 1, field: "chi_stab" })
        );

        let mut p = problem(6, 2, 1, 2, 0, &[(0, 2)]);
        p.strata[1].i = 1;
        assert!(matches!(chi_stabilization(&p), Err(Error::Domain(_))));
    }

    #[test]
    fn nonzero_polar_terms_are_flagged() {
        let p = problem(6, 2, 1, 2, 0, &[(4, 2)]);
        let st = chi_stabilization(&p).unwrap();
        assert!(st.polar_terms_nonzero);
        // d(2) = 6 - 2 = 4, so the m-term enters with sign +1.
        assert_eq!(st.chi, int(6));
    }

    #[test]
    fn good_approx_special_cases() {
        for k in 0..4 {
            for q in (2 * (2 + k))..(2 * (2 + k) + 4) {
                for c in -4..=4 {
                    assert_eq!(
                        chi_stabilization_good_approx(q, 2, k, 2, &int(c)).unwrap(),
                        int(2 - c)
                    );
                }
            }
        }
        assert!(chi_stabilization_good_approx(5, 2, 1, 2, &int(0)).is_err());
    }

    #[test]
    fn good_approx_t2_general_n() {
        // n_{12} = ±(n-1), so the ICIS term carries weight n-1 once n > 2.
        for n in 2..=8 {
            for k in 0..=3 {
                let q = n * (n + k);
                for c in -3..=3 {
                    let expected = int(i64::from(n)) - int(i64::from(n) - 1) * int(c);
                    assert_eq!(chi_stabilization_good_approx(q, n, k, 2, &int(c)).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn generic_variety_is_a_cone() {
        // F = identity: X = Σ^t is its own stabilization, a cone, χ = 1; the
        // ICIS _1X is the origin, χ = 1.
        for n in 1..=8 {
            for k in 0..=3 {
                for t in 1..=n {
                    let q = n * (n + k);
                    assert_eq!(
                        chi_stabilization_good_approx(q, n, k, t, &int(1)).unwrap(),
                        int(1),
                        "n={n} k={k} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn milnor_forms() {
        for k in 0..3 {
            for q in (2 * (2 + k))..(2 * (2 + k) + 5) {
                for mu in 0..6 {
                    let chi = chi_stabilization_good_approx_from_milnor(q, 2, k, 2, &int(mu)).unwrap();
                    assert_eq!(chi - 1, chi_bar_maximal_minors(q, &int(mu)));
                }
            }
        }
        assert_eq!(icis_chi_from_milnor(0, &int(3)), int(4));
        assert_eq!(icis_chi_from_milnor(1, &int(3)), int(-2));
    }

    #[test]
    fn generic_rhs_first_entry() {
        for n in 1..10 {
            for k in 0..4 {
                assert_eq!(generic_rhs(n, k, 1).unwrap(), ints(&[1]));
            }
        }
    }

    #[test]
    fn generic_system_example() {
        let sys = build_generic_system(3, 1, 2).unwrap();
        let d2 = stratum_dim(3, 1, 2).unwrap() as i64;
        let b2 = parity_sign(d2) * int(1) + parity_sign(d2 - 1) * int(3);
        assert_eq!(sys.b(2), Some(&b2));
        assert_eq!(solve_polar_multiplicities(&sys).unwrap(), ints(&[1, 0]));
        assert_eq!(sys.matrix()[1], ints(&[1, 0]));
    }

    #[test]
    fn generic_solutions_and_determinants() {
        for n in 1..=12 {
            for k in 0..=5 {
                for s in 1..=n {
                    let sys = build_generic_system(n, k, s).unwrap();
                    let x = solve_polar_multiplicities(&sys).unwrap();
                    let mut expected = vec![int(0); s as usize];
                    expected[0] = int(1);
                    assert_eq!(x, expected, "n={n} k={k} s={s}");
                    // a unit anti-diagonal with zeros below gives the sign of
                    // the order-reversing permutation
                    let s = i64::from(s);
                    assert_eq!(
                        determinant(sys.matrix()).unwrap(),
                        int(i64::from(parity_sign(s * (s - 1) / 2)))
                    );
                }
            }
        }
    }

    #[test]
    fn solver_round_trip() {
        let sys = TriangularSystem::with_stratum_rhs(5, 2, 4, &ints(&[7, -3, 11, 0])).unwrap();
        let x = solve_polar_multiplicities(&sys).unwrap();
        assert_eq!(mat_vec(sys.matrix(), &x).unwrap(), sys.rhs());
        let one = TriangularSystem::with_stratum_rhs(3, 0, 1, &ints(&[42])).unwrap();
        assert_eq!(solve_polar_multiplicities(&one).unwrap(), ints(&[42]));
    }

    #[test]
    fn malformed_systems_rejected() {
        let bad = vec![ints(&[1, 1]), ints(&[2, 0])];
        assert!(matches!(
            TriangularSystem::new(bad, ints(&[0, 0])),
            Err(Error::MalformedSystem(_))
        ));
        let bad = vec![ints(&[0, 1]), ints(&[1, 5])];
        assert!(TriangularSystem::new(bad, ints(&[0, 0])).is_err());
        let ok = vec![ints(&[3, 1]), ints(&[1, 0])];
        assert!(TriangularSystem::new(ok.clone(), ints(&[0])).is_err());
        assert!(TriangularSystem::new(ok, ints(&[0, 0])).is_ok());
    }

    #[test]
    fn section_low_q() {
        for n in 2..=20 {
            for s in 2..=n {
                let generic: Vec<Integer> = (2..=s).map(|i| chi_bar_slice(i, n).unwrap()).collect();
                assert_eq!(eu_section_low_q(s, n, &generic).unwrap(), eu_closed(s, n).unwrap());
                let zeros = vec![int(0); s as usize - 1];
                assert_eq!(eu_section_low_q(s, n, &zeros).unwrap(), eu_closed(s - 1, n - 1).unwrap());
            }
        }
        for x in -5..5 {
            assert_eq!(eu_section_low_q(2, 2, &[int(x)]).unwrap(), int(1 + x));
        }
        assert!(matches!(
            eu_section_low_q(3, 4, &[int(1)]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(eu_section_low_q(1, 4, &[]).is_err());
    }

    #[test]
    fn section_high_q() {
        for mu in 0..5 {
            for chi2 in -3..3 {
                for q in 7..12 {
                    let a = int(i64::from(parity_sign(i64::from(q) - 1)) * mu);
                    let eu = eu_section_high_q(2, 2, &a, &[int(chi2)]).unwrap();
                    assert_eq!(eu, int(2) + a + int(chi2));
                }
            }
        }
        for n in 2..10 {
            for s in 2..=n {
                let zeros = vec![int(0); s as usize - 1];
                assert_eq!(eu_section_high_q(s, n, &int(0), &zeros).unwrap(), eu_closed(s, n).unwrap());
            }
        }
        assert_eq!(eu_section_high_q(2, 3, &int(5), &[int(7)]).unwrap(), int(3 + 10 + 14));
    }

    #[test]
    fn regimes() {
        assert_eq!(section_regime(5, 2, 1).unwrap(), SectionRegime::BelowAmbient);
        assert_eq!(section_regime(7, 2, 1).unwrap(), SectionRegime::AboveAmbient);
        assert!(matches!(section_regime(6, 2, 1), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn module_obstruction() {
        assert_eq!(eu_of_module(&ints(&[1])), int(1));
        assert_eq!(eu_of_module(&ints(&[5, 2])), int(3));
        assert_eq!(eu_of_module(&ints(&[3, 2, 1])), int(2));
        assert_eq!(eu_of_module(&[]), int(0));
    }

    #[test]
    fn module_obstruction_under_reversal() {
        // Lê–Teissier ordering: Σ_{i} (-1)^{d-i-1} m_{d-i-1} lists the
        // multiplicities top-down, starting with sign (-1)^{d-1}.
        let m = ints(&[4, -1, 7, 2, 9]);
        let d = m.len() as i64;
        let reversed: Vec<Integer> = m.iter().rev().cloned().collect();
        assert_eq!(
            eu_of_module(&m),
            alternating_sum(&reversed, Sign::from_parity(d - 1))
        );
    }

    #[test]
    fn pair_multiplicities() {
        assert_eq!(eu_via_pair_multiplicities(&ints(&[0, 0, 0]), &int(4)).unwrap(), int(4));
        assert_eq!(eu_via_pair_multiplicities(&ints(&[0, 5]), &int(7)).unwrap(), int(2));
        assert_eq!(eu_via_pair_multiplicities(&ints(&[0]), &int(9)).unwrap(), int(9));
        assert_eq!(
            eu_via_pair_multiplicities(&ints(&[1, 5]), &int(7)),
            Err(Error::NonZeroLeadingPair("1".into()))
        );
    }

    #[test]
    fn q_window() {
        let w = good_approx_q_window(2, 1, 1).unwrap();
        assert_eq!(w.values().collect::<Vec<_>>(), vec![5]);
        assert_eq!(w.rank_bound, 2);
        for n in 2..10 {
            let w = good_approx_q_window(n, 1, 1).unwrap();
            let expected: Vec<u64> = ((2 * n as u64 + 1)..(u64::from(n) * u64::from(n + 1))).collect();
            assert_eq!(w.values().collect::<Vec<_>>(), expected);
        }
        // r = n - 1: Σ^n is a hypersurface when k = 0, window empty
        let w = good_approx_q_window(3, 0, 2).unwrap();
        assert!(w.is_empty());
        assert_eq!(w.values().count(), 0);
        assert!(good_approx_q_window(2, 1, 2).is_err());
    }

    #[test]
    fn icis_polar() {
        assert_eq!(icis_chi_from_polar(&ints(&[1])), int(1));
        assert_eq!(icis_chi_from_polar(&ints(&[2, 3, 4])), int(3));
    }
}
