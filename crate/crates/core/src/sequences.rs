//! Exact integer sequences and triangles: Fibonacci, Lucas, Padovan,
//! binomial coefficients with the boundary conventions used by the
//! cube-factor formulas, and the Lucas triangle.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Terms `F_0 .. F_{count-1}` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci_terms(count: usize) -> Vec<BigUint> {
    second_order_terms(BigUint::zero(), BigUint::one(), count)
}

/// Terms `L_0 .. L_{count-1}` with `L_0 = 2`, `L_1 = 1`.
pub fn lucas_terms(count: usize) -> Vec<BigUint> {
    second_order_terms(BigUint::from(2u32), BigUint::one(), count)
}

fn second_order_terms(a: BigUint, b: BigUint, count: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(count);
    let (mut a, mut b) = (a, b);
    for _ in 0..count {
        let next = &a + &b;
        out.push(std::mem::replace(&mut a, std::mem::replace(&mut b, next)));
    }
    out
}

/// Terms `p_0 .. p_{count-1}` with `p_0 = p_1 = p_2 = 1` and
/// `p_n = p_{n-2} + p_{n-3}`.
pub fn padovan_terms(count: usize) -> Vec<BigUint> {
    let mut out: Vec<BigUint> = Vec::with_capacity(count);
    for n in 0..count {
        let term = if n < 3 { BigUint::one() } else { &out[n - 2] + &out[n - 3] };
        out.push(term);
    }
    out
}

pub fn fib(n: usize) -> BigUint {
    fibonacci_terms(n + 1).pop().unwrap()
}

pub fn lucas(n: usize) -> BigUint {
    lucas_terms(n + 1).pop().unwrap()
}

pub fn padovan(n: usize) -> BigUint {
    padovan_terms(n + 1).pop().unwrap()
}

/// `p_n` as the binomial sum `sum_{j=floor((n+1)/3)}^{floor(n/2)} C(j+1, n-2j)`.
pub fn padovan_closed(n: usize) -> BigUint {
    let (lo, hi) = ((n + 1) / 3, n / 2);
    (lo..=hi).map(|j| binom_ext(j as i64 + 1, n as i64 - 2 * j as i64)).sum()
}

/// Binomial coefficient extended to all integer pairs.
///
/// Ordinary `C(n, k)` on `0 <= k <= n`, the single extra value
/// `C(-1, -1) = 1`, and zero everywhere else.
pub fn binom_ext(n: i64, k: i64) -> BigUint {
    if n == -1 && k == -1 {
        return BigUint::one();
    }
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 1..=k {
        // acc = C(n - k + i, i) after this step; the division is exact.
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `C(numerator / 3, k)`, read as zero when 3 does not divide `numerator`.
pub fn binom_third(numerator: i64, k: i64) -> BigUint {
    if numerator.rem_euclid(3) != 0 {
        BigUint::zero()
    } else {
        binom_ext(numerator.div_euclid(3), k)
    }
}

/// `C(n, k) + C(n-1, k-1)` over the extended binomial, defined for every
/// integer pair. Agrees with [`lucas_triangle`] inside the triangle.
pub fn lucas_triangle_ext(n: i64, k: i64) -> BigUint {
    binom_ext(n, k) + binom_ext(n - 1, k - 1)
}

/// Lucas triangle entry `Y(n, k) = C(n, k) + C(n-1, k-1)`.
pub fn lucas_triangle(n: u64, k: i64) -> Result<BigUint> {
    if k < 0 || k as u64 > n {
        return Err(Error::TriangleIndex { n, k });
    }
    Ok(lucas_triangle_ext(n as i64, k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleRow {
    pub n: usize,
    pub entries: Vec<BigUint>,
}

/// Rows `0 .. count-1` of the Lucas triangle built by the additive
/// recurrence `Y(n, k) = Y(n-1, k-1) + Y(n-1, k)` for interior entries,
/// with edges `Y(n, 0) = 1` (n >= 1) and `Y(n, n) = 2`.
pub fn lucas_triangle_rows(count: usize) -> Vec<TriangleRow> {
    let mut rows: Vec<TriangleRow> = Vec::with_capacity(count);
    for n in 0..count {
        let entries = if n == 0 {
            vec![BigUint::from(2u32)]
        } else {
            let prev = &rows[n - 1].entries;
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigUint::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigUint::from(2u32));
            row
        };
        rows.push(TriangleRow { n, entries });
    }
    rows
}

/// Named sequences exposed on the command line and through the C ABI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedSequence {
    Fibonacci,
    Lucas,
    Padovan,
}

impl NamedSequence {
    pub fn terms(self, count: usize) -> Vec<BigUint> {
        match self {
            NamedSequence::Fibonacci => fibonacci_terms(count),
            NamedSequence::Lucas => lucas_terms(count),
            NamedSequence::Padovan => padovan_terms(count),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedSequence::Fibonacci => "fibonacci",
            NamedSequence::Lucas => "lucas",
            NamedSequence::Padovan => "padovan",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "fibonacci" | "fib" => Some(NamedSequence::Fibonacci),
            "lucas" => Some(NamedSequence::Lucas),
            "padovan" => Some(NamedSequence::Padovan),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fib(0), big(0));
        assert_eq!(fib(1), big(1));
        assert_eq!(fib(7), big(13));
    }

    #[test]
    fn lucas_values() {
        assert_eq!(lucas(0), big(2));
        assert_eq!(lucas(1), big(1));
        assert_eq!(lucas(5), big(11));
    }

    #[test]
    fn padovan_values() {
        assert_eq!(padovan(2), big(1));
        assert_eq!(padovan(5), big(3));
        assert_eq!(padovan(9), big(9));
    }

    #[test]
    fn padovan_closed_values() {
        assert_eq!(padovan_closed(5), big(3));
        assert_eq!(padovan_closed(6), big(4));
        assert_eq!(padovan_closed(0), big(1));
    }

    #[test]
    fn padovan_closed_matches_recurrence_to_500() {
        let terms = padovan_terms(501);
        for (n, t) in terms.iter().enumerate() {
            assert_eq!(&padovan_closed(n), t, "n = {n}");
        }
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binom_ext(-1, -1), big(1));
        assert_eq!(binom_third(7, 2), big(0));
        assert_eq!(binom_ext(4, 2), big(6));
        assert_eq!(binom_third(12, 2), big(6));
        assert_eq!(binom_third(-3, -1), big(1));
        assert_eq!(binom_ext(60, 30), "118264581564861424".parse().unwrap());
    }

    #[test]
    fn binomial_support_is_exact() {
        for n in -6i64..=12 {
            for k in -6i64..=14 {
                let inside = (0..=n).contains(&k) || (n, k) == (-1, -1);
                assert_eq!(!binom_ext(n, k).is_zero(), inside, "({n}, {k})");
            }
        }
    }

    #[test]
    fn lucas_triangle_entries() {
        assert_eq!(lucas_triangle(0, 0).unwrap(), big(2));
        assert_eq!(lucas_triangle(4, 2).unwrap(), big(9));
        assert_eq!(lucas_triangle(5, 3).unwrap(), big(16));
        assert!(lucas_triangle(3, 4).is_err());
        assert!(lucas_triangle(3, -1).is_err());
    }

    #[test]
    fn lucas_triangle_formula_matches_recurrence() {
        let rows = lucas_triangle_rows(65);
        for row in &rows {
            assert_eq!(row.entries.len(), row.n + 1);
            for (k, e) in row.entries.iter().enumerate() {
                assert_eq!(&lucas_triangle(row.n as u64, k as i64).unwrap(), e);
            }
            if row.n >= 1 {
                let sum: BigUint = row.entries.iter().sum();
                assert_eq!(sum, big(3) << (row.n - 1));
                assert_eq!(row.entries[0], big(1));
                assert_eq!(row.entries[row.n], big(2));
            }
        }
    }

    #[test]
    fn cassini_identity() {
        let f: Vec<BigInt> = fibonacci_terms(202).into_iter().map(BigInt::from).collect();
        for n in 1..=200 {
            let lhs = &f[n + 1] * &f[n - 1] - &f[n] * &f[n];
            let rhs = if n % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    proptest! {
        #[test]
        fn pascal_rule_holds(n in 1i64..80, k in 1i64..80) {
            prop_assume!(k <= n);
            prop_assert_eq!(binom_ext(n, k), binom_ext(n - 1, k - 1) + binom_ext(n - 1, k));
        }

        #[test]
        fn third_division_convention(a in -40i64..200, k in -3i64..60) {
            let v = binom_third(a, k);
            if a % 3 != 0 {
                prop_assert!(v.is_zero());
            } else {
                prop_assert_eq!(v, binom_ext(a / 3, k));
            }
        }
    }
}
