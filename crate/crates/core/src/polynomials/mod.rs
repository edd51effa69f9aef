//! Optimal cube factor polynomials `Q(G_n, x) = sum_k q_k x^k` for the
//! Fibonacci cubes (`Gamma`) and matchable Lucas cubes (`Omega`).
//!
//! Three independent routes produce the coefficients: the three-term
//! recurrence ([`qpoly_rec`]), the binomial closed forms ([`q_closed`]),
//! and truncated expansion of the bivariate generating functions
//! ([`series::gf_series`]).

pub mod identities;
pub mod series;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequences::{binom_third, lucas_triangle_ext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gamma,
    Omega,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Gamma, Family::Omega];

    pub fn name(self) -> &'static str {
        match self {
            Family::Gamma => "gamma",
            Family::Omega => "omega",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Family::Gamma => "Γ",
            Family::Omega => "Ω",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s.to_ascii_lowercase().as_str() {
            "gamma" | "fibonacci" => Some(Family::Gamma),
            "omega" | "lucas" => Some(Family::Omega),
            _ => None,
        }
    }

    /// Smallest `n` at which `Q_n = x Q_{n-2} + Q_{n-3}` takes over from the
    /// base cases.
    pub fn recurrence_start(self) -> usize {
        match self {
            Family::Gamma => 3,
            Family::Omega => 5,
        }
    }

    fn base_case(self, n: usize) -> &'static [u32] {
        match (self, n) {
            (_, 0) => &[1],
            (_, 1) => &[0, 1],
            (_, 2) => &[1, 1],
            (Family::Omega, 3) => &[0, 2],
            (Family::Omega, 4) => &[1, 1, 1],
            _ => unreachable!("no base case for {self} {n}"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coefficients of `Q(G_n, x)`, `coeffs[k] = q_k`, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeFactorPolynomial {
    pub family: Family,
    pub n: usize,
    pub coeffs: Vec<BigUint>,
}

impl CubeFactorPolynomial {
    pub fn new(family: Family, n: usize, mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigUint::zero());
        }
        CubeFactorPolynomial { family, n, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `q_k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn eval_at(&self, x: &BigInt) -> BigInt {
        eval_at(&self.coeffs, x)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolynomialJson::from(self)).expect("plain struct serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PolynomialJson = serde_json::from_str(text)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| c.parse::<BigUint>().map_err(|_| Error::FactorFormat(format!("bad coefficient {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(CubeFactorPolynomial::new(raw.family, raw.n, coeffs))
    }

    /// Space-separated coefficient row, the layout of the printed tables.
    pub fn table_row(&self) -> String {
        join(&self.coeffs, " ")
    }

    pub fn csv_row(&self) -> String {
        join(&self.coeffs, ",")
    }
}

fn join(coeffs: &[BigUint], sep: &str) -> String {
    coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for CubeFactorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = if c.is_one() && k > 0 { String::new() } else { c.to_string() };
            terms.push(match k {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{k}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    family: Family,
    n: usize,
    coeffs: Vec<String>,
}

impl From<&CubeFactorPolynomial> for PolynomialJson {
    fn from(p: &CubeFactorPolynomial) -> Self {
        PolynomialJson { family: p.family, n: p.n, coeffs: p.coeffs.iter().map(ToString::to_string).collect() }
    }
}

/// Exact `sum_k coeffs[k] * x^k` by Horner's rule.
pub fn eval_at(coeffs: &[BigUint], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + BigInt::from(c.clone()))
}

/// `Q(G_0, x) .. Q(G_{max_n}, x)` by the recurrence.
pub fn qpoly_table(family: Family, max_n: usize) -> Vec<CubeFactorPolynomial> {
    let start = family.recurrence_start();
    let mut table: Vec<CubeFactorPolynomial> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let coeffs = if n < start {
            family.base_case(n).iter().map(|&c| BigUint::from(c)).collect()
        } else {
            let shifted = &table[n - 2].coeffs;
            let lower = &table[n - 3].coeffs;
            let len = (shifted.len() + 1).max(lower.len());
            (0..len)
                .map(|k| {
                    let a = k.checked_sub(1).and_then(|j| shifted.get(j)).cloned().unwrap_or_default();
                    a + lower.get(k).cloned().unwrap_or_default()
                })
                .collect()
        };
        table.push(CubeFactorPolynomial::new(family, n, coeffs));
    }
    table
}

pub fn qpoly_rec(family: Family, n: usize) -> CubeFactorPolynomial {
    qpoly_table(family, n).pop().unwrap()
}

/// Closed-form coefficient `q_k(G_n)`.
///
/// Gamma: `C((n+k)/3, k) + C((n+k+1)/3, k)`.
/// Omega (n >= 2): `C((n+k+1)/3 - 1, k) + C((n+k)/3 - 1, k-1) + Y((n+k-1)/3, k)`.
/// A term whose upper index is not an integer contributes zero. Omega at
/// `n < 2` falls back to the base cases.
pub fn q_closed(family: Family, n: usize, k: usize) -> BigUint {
    let (n, k) = (n as i64, k as i64);
    match family {
        Family::Gamma => binom_third(n + k, k) + binom_third(n + k + 1, k),
        Family::Omega if n < 2 => qpoly_rec(family, n as usize).coeff(k as usize),
        Family::Omega => {
            let third = if (n + k - 1) % 3 == 0 { lucas_triangle_ext((n + k - 1) / 3, k) } else { BigUint::zero() };
            binom_third(n + k + 1 - 3, k) + binom_third(n + k - 3, k - 1) + third
        }
    }
}

/// Polynomial assembled from [`q_closed`] coefficients for `k = 0..=n`.
pub fn qpoly_closed(family: Family, n: usize) -> CubeFactorPolynomial {
    let coeffs = (0..=n.max(1)).map(|k| q_closed(family, n, k)).collect();
    CubeFactorPolynomial::new(family, n, coeffs)
}

/// Which route computes a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Recurrence,
    Closed,
    GeneratingFunction,
}

impl Method {
    pub fn parse(s: &str) -> Option<Method> {
        match s {
            "rec" | "recurrence" => Some(Method::Recurrence),
            "closed" => Some(Method::Closed),
            "gf" => Some(Method::GeneratingFunction),
            _ => None,
        }
    }
}

pub fn qpoly(family: Family, n: usize, method: Method) -> CubeFactorPolynomial {
    match method {
        Method::Recurrence => qpoly_rec(family, n),
        Method::Closed => qpoly_closed(family, n),
        Method::GeneratingFunction => {
            series::gf_series(family, n).polynomial(n).expect("expansion to order n has a term at y^n")
        }
    }
}
