//! Truncated expansion of the generating functions `sum_n Q(G_n, x) y^n`.
//!
//! The denominator `1 - y^2 (x + y)` is inverted as its geometric series
//! `sum_j (x y^2 + y^3)^j`, built by repeated multiplication, so this route
//! shares nothing with the three-term recurrence it is checked against.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::{CubeFactorPolynomial, Family};

/// Bivariate series truncated in `y`: `rows[j][k]` is the coefficient of
/// `y^j x^k`.
type Bivariate = Vec<Vec<BigInt>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesExpansion {
    pub family: Family,
    pub order: usize,
    /// `terms[n]` is the coefficient of `y^n`, a polynomial in `x`.
    pub terms: Vec<Vec<BigInt>>,
}

impl SeriesExpansion {
    /// The `y^n` coefficient as a cube factor polynomial, or `None` when `n`
    /// is past the order or a coefficient came out negative.
    pub fn polynomial(&self, n: usize) -> Option<CubeFactorPolynomial> {
        let row = self.terms.get(n)?;
        let coeffs = row
            .iter()
            .map(|c| if c.is_negative() { None } else { c.to_biguint() })
            .collect::<Option<Vec<BigUint>>>()?;
        Some(CubeFactorPolynomial::new(self.family, n, coeffs))
    }
}

fn trim(mut row: Vec<BigInt>) -> Vec<BigInt> {
    while row.len() > 1 && row.last().is_some_and(Zero::is_zero) {
        row.pop();
    }
    if row.is_empty() {
        row.push(BigInt::zero());
    }
    row
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn poly_add_into(acc: &mut Vec<BigInt>, p: &[BigInt]) {
    if acc.len() < p.len() {
        acc.resize(p.len(), BigInt::zero());
    }
    for (a, b) in acc.iter_mut().zip(p) {
        *a += b;
    }
}

fn series_mul(a: &Bivariate, b: &Bivariate, order: usize) -> Bivariate {
    let mut out: Bivariate = vec![vec![BigInt::zero()]; order + 1];
    let live = |row: &Vec<BigInt>| !row.iter().all(Zero::is_zero);
    for (i, ai) in a.iter().enumerate().take(order + 1).filter(|(_, r)| live(r)) {
        for (j, bj) in b.iter().enumerate().take(order + 1 - i).filter(|(_, r)| live(r)) {
            let prod = poly_mul(ai, bj);
            poly_add_into(&mut out[i + j], &prod);
        }
    }
    out
}

fn series_from(rows: &[&[i64]], order: usize) -> Bivariate {
    (0..=order)
        .map(|j| match rows.get(j) {
            Some(r) => r.iter().map(|&c| BigInt::from(c)).collect(),
            None => vec![BigInt::zero()],
        })
        .collect()
}

/// `sum_j (x y^2 + y^3)^j` truncated at `y^order`.
fn inverse_denominator(order: usize) -> Bivariate {
    let step = series_from(&[&[0], &[0], &[0, 1], &[1]], order);
    let mut power = series_from(&[&[1]], order);
    let mut total = power.clone();
    // (x y^2 + y^3)^j starts at y^{2j}.
    for _ in 1..=order / 2 {
        power = series_mul(&power, &step, order);
        for (t, p) in total.iter_mut().zip(&power) {
            poly_add_into(t, p);
        }
    }
    total
}

/// Expansion of `(1 + y(x + y)) / (1 - y^2(x + y))` for Gamma, and of
/// `(1 + y)(1 + y - y^3) / (1 - x y^2 - y^3) + (x - 2) y` for Omega.
pub fn gf_series(family: Family, order: usize) -> SeriesExpansion {
    let numerator = match family {
        Family::Gamma => series_from(&[&[1], &[0, 1], &[1]], order),
        Family::Omega => {
            let a = series_from(&[&[1], &[1]], order);
            let b = series_from(&[&[1], &[1], &[0], &[-1]], order);
            series_mul(&a, &b, order)
        }
    };
    let mut expansion = series_mul(&numerator, &inverse_denominator(order), order);
    if family == Family::Omega && order >= 1 {
        poly_add_into(&mut expansion[1], &[BigInt::from(-2), BigInt::one()]);
    }
    SeriesExpansion { family, order, terms: expansion.into_iter().map(trim).collect() }
}

/// Coefficients of `(1 + y) / (1 - y^2 (1 + y))` up to `y^order`.
pub fn padovan_gf_series(order: usize) -> Vec<BigUint> {
    let mut inverse = vec![BigUint::zero(); order + 1];
    let mut power = inverse.clone();
    power[0] = BigUint::one();
    inverse[0] = BigUint::one();
    for _ in 1..=order / 2 {
        // power *= y^2 + y^3
        let mut next = vec![BigUint::zero(); order + 1];
        for (i, c) in power.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for shift in [2, 3] {
                if i + shift <= order {
                    next[i + shift] += c;
                }
            }
        }
        power = next;
        for (acc, c) in inverse.iter_mut().zip(&power) {
            *acc += c;
        }
    }
    (0..=order)
        .map(|n| {
            let mut v = inverse[n].clone();
            if n >= 1 {
                v += &inverse[n - 1];
            }
            v
        })
        .collect()
}
