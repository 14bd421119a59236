//! Chern–Schwartz–MacPherson cycles of `Σ^s`.
//!
//! The local CSM cycle is the integer combination of the closures
//! `[Σ^1], …, [Σ^s]` whose Euler obstruction is identically 1 on `Σ^s`.
//! The same coefficients express `c_CSM(Σ^s)` in the Chern–Mather classes
//! `c_CM(Σ^{j+1})`; those classes are not computed here.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::combinatorics::{binomial, parity_sign};
use crate::error::{check_s_n, domain, Result};
use crate::euler::eu_closed;
use crate::strata::StrataSpec;
use crate::Integer;

/// Dense coefficients of `Σ_{i=0}^{s-1} c_i [Σ^{i+1}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsmCycle {
    s: u32,
    n: u32,
    coeffs: Vec<Integer>,
}

impl CsmCycle {
    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `coeffs()[i]` multiplies `[Σ^{i+1}]`.
    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    /// The total class `c_CSM(Σ^s)` written in the Chern–Mather basis.
    pub fn chern_mather_expansion(&self) -> String {
        format_combination(&self.coeffs, |i| format!("c_CM(Σ^{})", i + 1))
    }
}

/// Prints as `[csm] = -2·[Σ^1] + 1·[Σ^2]`.
impl fmt::Display for CsmCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[csm] = {}",
            format_combination(&self.coeffs, |i| format!("[Σ^{}]", i + 1))
        )
    }
}

fn format_combination(coeffs: &[Integer], basis: impl Fn(usize) -> String) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if i == 0 {
            out.push_str(&format!("{c}·{}", basis(i)));
        } else {
            let op = if c.is_negative() { '-' } else { '+' };
            out.push_str(&format!(" {op} {}·{}", c.abs(), basis(i)));
        }
    }
    out
}

/// `[csm(Σ^s)] = Σ_{i=0}^{s-1} (-1)^{s-1+i} C(n-i-1, s-i-1) [Σ^{i+1}]`.
pub fn csm_cycle(s: u32, n: u32) -> Result<CsmCycle> {
    check_s_n(s, n)?;
    let (si, ni) = (i64::from(s), i64::from(n));
    let coeffs = (0..si)
        .map(|i| parity_sign(si - 1 + i) * binomial(ni - i - 1, si - i - 1))
        .collect();
    Ok(CsmCycle { s, n, coeffs })
}

/// Euler obstruction of the weighted cycle at a point of `Σ^j \ Σ^{j-1}`.
///
/// `[Σ^{i+1}]` with `i+1 < j` does not pass through the point; the others
/// contribute their coefficient times `e(i-j+2, n-j+1)`.
pub fn evaluate_cycle_at_stratum(cycle: &CsmCycle, j: u32) -> Result<Integer> {
    if j < 1 || j > cycle.s {
        return Err(domain(format!(
            "stratum index must satisfy 1 <= j <= s (got j={j}, s={})",
            cycle.s
        )));
    }
    let mut acc = BigInt::zero();
    for i in (j - 1)..cycle.s {
        acc += &cycle.coeffs[i as usize] * eu_closed(i + 2 - j, cycle.n + 1 - j)?;
    }
    Ok(acc)
}

/// Coefficient in `[P_{d-d_{i+1}}(Σ^s)] = (-1)^{s+d_{i+1}} C(n-i+1, s-i-1) c_CM(Σ^{i+1})`,
/// returned in pieces so the parity can be audited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarClassCoefficient {
    pub sign: i32,
    pub magnitude: Integer,
    /// `s + d_{i+1}` with `d_{i+1} = dim Σ^{i+1}`.
    pub parity_exponent: u64,
    /// `d - d_{i+1}`, the codimension index of the polar variety.
    pub polar_index: u64,
    /// `C(n-i-1, s-i-1)`, the CSM coefficient magnitude of the same stratum,
    /// for side-by-side comparison (the two top arguments differ by 2).
    pub csm_magnitude: Integer,
}

impl PolarClassCoefficient {
    pub fn value(&self) -> Integer {
        self.sign * self.magnitude.clone()
    }
}

pub fn polar_class_coefficient(spec: StrataSpec, i: u32) -> Result<PolarClassCoefficient> {
    let (s, n) = (spec.s(), spec.n());
    if i >= s {
        return Err(domain(format!(
            "polar index must satisfy 0 <= i < s (got i={i}, s={s})"
        )));
    }
    let d = spec.geometry().dim;
    let d_next = spec.with_s(i + 1)?.geometry().dim;
    let parity_exponent = u64::from(s) + d_next;
    let (si, ni, ii) = (i64::from(s), i64::from(n), i64::from(i));
    Ok(PolarClassCoefficient {
        sign: if parity_exponent % 2 == 0 { 1 } else { -1 },
        magnitude: binomial(ni - ii + 1, si - ii - 1),
        parity_exponent,
        polar_index: d - d_next,
        csm_magnitude: binomial(ni - ii - 1, si - ii - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::BinomialTable;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().copied().map(BigInt::from).collect()
    }

    #[test]
    fn cycle_examples() {
        for n in 1..8 {
            assert_eq!(csm_cycle(1, n).unwrap().coeffs(), ints(&[1]).as_slice());
        }
        assert_eq!(csm_cycle(2, 2).unwrap().coeffs(), ints(&[-1, 1]).as_slice());
        assert_eq!(csm_cycle(2, 3).unwrap().coeffs(), ints(&[-2, 1]).as_slice());
        assert!(csm_cycle(3, 2).is_err());
    }

    #[test]
    fn display_forms() {
        let c = csm_cycle(2, 3).unwrap();
        assert_eq!(c.to_string(), "[csm] = -2·[Σ^1] + 1·[Σ^2]");
        assert_eq!(
            csm_cycle(3, 4).unwrap().to_string(),
            "[csm] = 3·[Σ^1] - 2·[Σ^2] + 1·[Σ^3]"
        );
        assert_eq!(c.chern_mather_expansion(), "-2·c_CM(Σ^1) + 1·c_CM(Σ^2)");
    }

    #[test]
    fn evaluation_examples() {
        let c = csm_cycle(2, 2).unwrap();
        assert_eq!(evaluate_cycle_at_stratum(&c, 1).unwrap(), BigInt::from(1));
        assert_eq!(evaluate_cycle_at_stratum(&c, 2).unwrap(), BigInt::from(1));
        // -2·e(1,3) + 1·e(2,3) = -2 + 3
        let c = csm_cycle(2, 3).unwrap();
        assert_eq!(evaluate_cycle_at_stratum(&c, 1).unwrap(), BigInt::from(1));
        let c = csm_cycle(3, 5).unwrap();
        assert_eq!(evaluate_cycle_at_stratum(&c, 2).unwrap(), BigInt::from(1));
        assert!(evaluate_cycle_at_stratum(&c, 0).is_err());
        assert!(evaluate_cycle_at_stratum(&c, 4).is_err());
    }

    #[test]
    fn cycle_structure() {
        let table = BinomialTable::new(30);
        for n in 1..=25 {
            for s in 1..=n {
                let c = csm_cycle(s, n).unwrap();
                assert_eq!(c.coeffs().len(), s as usize);
                assert_eq!(c.coeffs()[s as usize - 1], BigInt::from(1));
                for (i, coeff) in c.coeffs().iter().enumerate() {
                    let i = i as i64;
                    let (s, n) = (i64::from(s), i64::from(n));
                    assert_eq!(coeff.abs(), table.get(n - i - 1, s - i - 1));
                    let expected = if (s - 1 + i) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(coeff.signum(), BigInt::from(expected));
                }
            }
        }
    }

    #[test]
    fn polar_coefficient_examples() {
        let spec = StrataSpec::new(2, 1, 2).unwrap();
        let p = polar_class_coefficient(spec, 0).unwrap();
        assert_eq!(p.parity_exponent, 2);
        assert_eq!(p.sign, 1);
        assert_eq!(p.magnitude, BigInt::from(3));
        assert_eq!(p.csm_magnitude, BigInt::from(1));
        assert_eq!(p.polar_index, 4);

        let spec = StrataSpec::new(3, 0, 2).unwrap();
        let p = polar_class_coefficient(spec, 1).unwrap();
        assert_eq!(p.parity_exponent, 7);
        assert_eq!(p.sign, -1);
        assert_eq!(p.magnitude, BigInt::from(1));
        assert_eq!(p.value(), BigInt::from(-1));

        for s in 1..6 {
            let spec = StrataSpec::new(6, 2, s).unwrap();
            assert_eq!(
                polar_class_coefficient(spec, s - 1).unwrap().magnitude,
                BigInt::from(1)
            );
            assert!(polar_class_coefficient(spec, s).is_err());
        }
    }
}
