//! Exact binomials, signed sums and the two alternating binomial identities
//! that drive the closed forms for the Euler obstruction and the CSM cycle.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::Integer;

/// `C(a, b)` with the extended convention: zero whenever `b < 0`, `b > a`
/// or `a < 0`.
pub fn binomial(a: i64, b: i64) -> Integer {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    // acc stays C(a - b + j, j) after step j, so each division is exact.
    for j in 1..=b {
        acc *= a - b + j;
        acc /= j;
    }
    acc
}

/// `(-1)^e` for a signed exponent.
pub fn parity_sign(e: i64) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Cached Pascal triangle `C(a, b)` for `0 <= b <= a <= capacity`.
///
/// Immutable after construction, so it can be shared freely across threads.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<Integer>>,
}

impl BinomialTable {
    pub fn new(capacity: usize) -> Self {
        let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(capacity + 1);
        for a in 0..=capacity {
            let mut row = Vec::with_capacity(a + 1);
            row.push(BigInt::one());
            for b in 1..a {
                let prev = &rows[a - 1];
                row.push(&prev[b - 1] + &prev[b]);
            }
            if a > 0 {
                row.push(BigInt::one());
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn capacity(&self) -> usize {
        self.rows.len() - 1
    }

    /// Same convention as [`binomial`]; falls back to direct computation
    /// past the cached capacity.
    pub fn get(&self, a: i64, b: i64) -> Integer {
        if a < 0 || b < 0 || b > a {
            return BigInt::zero();
        }
        match self.rows.get(a as usize) {
            Some(row) => row[b as usize].clone(),
            None => binomial(a, b),
        }
    }

    pub fn row(&self, a: usize) -> Option<&[Integer]> {
        self.rows.get(a).map(Vec::as_slice)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(e: i64) -> Self {
        if parity_sign(e) > 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// `Σ_j start · (-1)^j · values[j]`; the empty sum is zero.
pub fn alternating_sum(values: &[Integer], start: Sign) -> Integer {
    let mut sign = start;
    let mut acc = BigInt::zero();
    for v in values {
        match sign {
            Sign::Plus => acc += v,
            Sign::Minus => acc -= v,
        }
        sign = sign.flip();
    }
    acc
}

/// Outcome of checking `Σ_{i=2}^{s} (-1)^i C(n-1, i-1) C(n-i, s-i) = C(n-1, s-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma2Check {
    pub n: u32,
    pub s: u32,
    /// Left side, summed term by term.
    pub lhs: Integer,
    /// `C(n-1, s-1)`.
    pub rhs: Integer,
    /// `C(n, s-1)`, an alternative right side that fails in general (n=5, s=3).
    pub proof_end_rhs: Integer,
    /// `false` for `s = 1`, where the sum is empty.
    pub in_range: bool,
}

impl Lemma2Check {
    pub fn holds(&self) -> bool {
        self.in_range && self.lhs == self.rhs
    }

    pub fn proof_end_form_holds(&self) -> bool {
        self.lhs == self.proof_end_rhs
    }
}

pub fn lemma2_lhs(n: u32, s: u32) -> Integer {
    let (n, s) = (i64::from(n), i64::from(s));
    (2..=s)
        .map(|i| parity_sign(i) * binomial(n - 1, i - 1) * binomial(n - i, s - i))
        .sum()
}

pub fn verify_lemma2(n: u32, s: u32) -> Result<Lemma2Check> {
    crate::error::check_s_n(s, n)?;
    let (ni, si) = (i64::from(n), i64::from(s));
    Ok(Lemma2Check {
        n,
        s,
        lhs: lemma2_lhs(n, s),
        rhs: binomial(ni - 1, si - 1),
        proof_end_rhs: binomial(ni, si - 1),
        in_range: s >= 2,
    })
}

/// `Σ_{i=0}^{s-1} (-1)^{s-1+i} C(n-i-1, s-i-1) C(n, i)`, summed term by term.
/// The binomials sit in a "V" shape in Pascal's triangle.
pub fn v_property_sum(n: u32, s: u32) -> Integer {
    let (n, s) = (i64::from(n), i64::from(s));
    (0..s)
        .map(|i| parity_sign(s - 1 + i) * binomial(n - i - 1, s - i - 1) * binomial(n, i))
        .sum()
}

/// Whether the V-shaped alternating sum equals 1.
pub fn verify_v_property(n: u32, s: u32) -> Result<bool> {
    crate::error::check_s_n(s, n)?;
    Ok(v_property_sum(n, s).is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> Integer {
        BigInt::from(v)
    }

    fn factorial(m: i64) -> Integer {
        (1..=m).fold(BigInt::one(), |acc, j| acc * j)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(3, 5), int(0));
        for n in 1..20 {
            assert_eq!(binomial(n - 1, 0), int(1));
        }
        assert_eq!(binomial(-1, 0), int(0));
        assert_eq!(binomial(5, -1), int(0));
    }

    #[test]
    fn binomial_matches_factorial_ratio() {
        for a in 0..=60 {
            for b in 0..=a {
                let ratio = factorial(a) / (factorial(b) * factorial(a - b));
                assert_eq!(binomial(a, b), ratio, "C({a},{b})");
            }
        }
    }

    #[test]
    fn binomial_beyond_u64() {
        // C(100, 49), independently known.
        let expected: Integer = "98913082887808032681188722800".parse().unwrap();
        assert_eq!(binomial(100, 49), expected);
    }

    #[test]
    fn table_agrees_with_direct_and_is_symmetric() {
        let t = BinomialTable::new(40);
        assert_eq!(t.capacity(), 40);
        for a in 0..=40i64 {
            for b in 0..=a {
                assert_eq!(t.get(a, b), binomial(a, b));
                assert_eq!(t.get(a, b), t.get(a, a - b));
            }
        }
        assert_eq!(t.get(50, 25), binomial(50, 25));
        assert_eq!(t.get(3, 4), int(0));
        assert_eq!(t.row(2).unwrap(), &[int(1), int(2), int(1)]);
    }

    #[test]
    fn lemma2_examples() {
        let c = verify_lemma2(5, 2).unwrap();
        assert_eq!(c.lhs, int(4));
        assert!(c.holds());

        assert!(verify_lemma2(4, 4).unwrap().holds());

        let c = verify_lemma2(1, 1).unwrap();
        assert!(!c.in_range);
        assert_eq!(c.lhs, int(0));
        assert_eq!(c.rhs, int(1));
        assert!(!c.holds());

        assert!(verify_lemma2(3, 4).is_err());
        assert!(verify_lemma2(3, 0).is_err());
    }

    #[test]
    fn lemma2_proof_end_form_is_not_the_identity() {
        // n=5, s=3: lhs = 12 - 6 = 6 = C(4,2), while C(5,2) = 10.
        let c = verify_lemma2(5, 3).unwrap();
        assert_eq!(c.lhs, int(6));
        assert!(c.holds());
        assert!(!c.proof_end_form_holds());
    }

    #[test]
    fn lemma2_sweep() {
        for n in 2..=40 {
            for s in 2..=n {
                assert!(verify_lemma2(n, s).unwrap().holds(), "n={n} s={s}");
            }
        }
    }

    #[test]
    fn v_property_examples_and_sweep() {
        for n in 1..=30 {
            assert!(verify_v_property(n, 1).unwrap());
        }
        assert!(verify_v_property(4, 3).unwrap());
        assert!(verify_v_property(10, 10).unwrap());
        for n in 1..=40 {
            for s in 1..=n {
                assert!(verify_v_property(n, s).unwrap(), "n={n} s={s}");
            }
        }
        assert!(verify_v_property(2, 3).is_err());
    }

    #[test]
    fn alternating_sum_examples() {
        assert_eq!(alternating_sum(&[int(1)], Sign::Plus), int(1));
        assert_eq!(alternating_sum(&[int(3), int(2)], Sign::Plus), int(1));
        assert_eq!(alternating_sum(&[], Sign::Plus), int(0));
        assert_eq!(alternating_sum(&[int(3), int(2)], Sign::Minus), int(-1));
    }

    fn ints() -> impl Strategy<Value = Vec<Integer>> {
        prop::collection::vec(any::<i64>().prop_map(BigInt::from), 0..12)
    }

    proptest! {
        #[test]
        fn alternating_sum_telescopes(a in ints(), b in ints()) {
            let joined: Vec<Integer> = a.iter().chain(b.iter()).cloned().collect();
            let tail = parity_sign(a.len() as i64) * alternating_sum(&b, Sign::Plus);
            prop_assert_eq!(
                alternating_sum(&joined, Sign::Plus),
                alternating_sum(&a, Sign::Plus) + tail
            );
        }

        #[test]
        fn pascal_recurrence(a in 2i64..80, b in 1i64..79) {
            prop_assume!(b < a);
            prop_assert_eq!(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b));
        }
    }
}
