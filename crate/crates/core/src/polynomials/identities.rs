//! Diagonal sums over the coefficient triangles and the identity audit.
//!
//! Every observed value here is read off recurrence-built polynomials. The
//! derived formulas only ever appear on the "expected" side of a check.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::series::{gf_series, padovan_gf_series};
use super::{q_closed, qpoly_table, CubeFactorPolynomial, Family};
use crate::report::{first_mismatch, Report};
use crate::sequences::{binom_ext, fibonacci_terms, lucas_terms, lucas_triangle_ext, padovan_closed, padovan_terms};

/// Diagonal readings of the coefficient triangle around row `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalProfile {
    pub family: Family,
    pub n: usize,
    /// `q_k(G_{n-k})` for `k = 0..=n`.
    pub antidiagonal: Vec<BigUint>,
    pub antidiagonal_sum: BigUint,
    /// `q_k(G_{n+2k})` for `k = 0..=cap`.
    pub shifted: Vec<BigUint>,
    /// `sum_k q_k(G_{n-4k})`.
    pub skew_sum: BigUint,
}

pub fn antidiagonal_profile(family: Family, n: usize, cap: usize) -> DiagonalProfile {
    let table = qpoly_table(family, n + 2 * cap);
    profile_from(&table, family, n, cap)
}

fn profile_from(table: &[CubeFactorPolynomial], family: Family, n: usize, cap: usize) -> DiagonalProfile {
    let antidiagonal: Vec<BigUint> = (0..=n).map(|k| table[n - k].coeff(k)).collect();
    let shifted = (0..=cap).map(|k| table[n + 2 * k].coeff(k)).collect();
    let skew_sum = (0..=n / 4).map(|k| table[n - 4 * k].coeff(k)).sum();
    DiagonalProfile { family, n, antidiagonal_sum: antidiagonal.iter().sum(), antidiagonal, shifted, skew_sum }
}

fn diagonal_sums(table: &[CubeFactorPolynomial], n: usize) -> (BigUint, BigUint) {
    let anti = (0..=n).map(|k| table[n - k].coeff(k)).sum();
    let skew = (0..=n / 4).map(|k| table[n - 4 * k].coeff(k)).sum();
    (anti, skew)
}

/// `n` written as `3m + r` with `r` in `{-1, 0, 1}`.
fn split3(n: usize) -> (i64, i64) {
    let n = n as i64;
    match n.rem_euclid(3) {
        0 => (n / 3, 0),
        1 => ((n - 1) / 3, 1),
        _ => ((n + 1) / 3, -1),
    }
}

fn pow2(e: i64) -> BigUint {
    BigUint::from(1u32) << e as usize
}

/// Checks the polynomial identities and diagonal-sum identities against recurrence-built
/// polynomials for `0 <= n <= n_max`. Failures are recorded in the report.
pub fn identity_audit(family: Family, n_max: usize) -> Report {
    let n_max = n_max.max(5);
    let table = qpoly_table(family, n_max);
    let fib = fibonacci_terms(n_max + 3);
    let luc = lucas_terms(n_max + 3);
    let pad = padovan_terms(n_max + 3);
    let one = BigInt::from(1);
    let two = BigInt::from(2);

    let mut report = Report::new(format!("identities {family} n<={n_max}"));

    let closed_from = if family == Family::Omega { 2 } else { 0 };
    let (cases, fail) = first_mismatch((closed_from..=n_max).flat_map(|n| {
        let table = &table;
        (0..=n).map(move |k| (format!("n={n} k={k}"), q_closed(family, n, k), table[n].coeff(k)))
    }));
    report.check("closed form = recurrence", cases, fail);

    let series = gf_series(family, n_max);
    let (cases, fail) = first_mismatch((0..=n_max).map(|n| {
        let observed = series.polynomial(n).map(|p| p.table_row()).unwrap_or_else(|| "<negative coefficient>".into());
        (format!("n={n}"), observed, table[n].table_row())
    }));
    report.check("generating function = recurrence", cases, fail);

    let (cases, fail) = first_mismatch(
        padovan_gf_series(n_max).into_iter().zip(&pad).enumerate().map(|(n, (g, p))| (format!("n={n}"), g, p.clone())),
    );
    report.check("Padovan generating function", cases, fail);

    let (cases, fail) = first_mismatch(
        (0..=n_max).map(|n| (format!("n={n}"), table[n].eval_at(&one), BigInt::from(pad[n + 1].clone()))),
    );
    report.check("Q(1) = p(n+1)", cases, fail);

    match family {
        Family::Gamma => {
            let (cases, fail) = first_mismatch(
                (0..=n_max).map(|n| (format!("n={n}"), table[n].eval_at(&two), BigInt::from(fib[n + 2].clone()))),
            );
            report.check("Q(2) = F(n+2)", cases, fail);
            let (cases, fail) =
                first_mismatch((0..=n_max).map(|n| (format!("n={n}"), table[n].degree(), n.div_ceil(2))));
            report.check("degree = ceil(n/2)", cases, fail);
            let (cases, fail) =
                first_mismatch((0..=n_max).map(|n| (format!("n={n}"), table[n].nonzero_terms(), (n + 4) / 3)));
            report.check("nonzero terms = floor((n+4)/3)", cases, fail);
        }
        Family::Omega => {
            let (cases, fail) = first_mismatch(
                (2..=n_max).map(|n| (format!("n={n}"), table[n].eval_at(&two), BigInt::from(luc[n].clone()))),
            );
            report.check("Q(2) = L(n)", cases, fail);
            let (cases, fail) = first_mismatch((2..=n_max).map(|n| (format!("n={n}"), table[n].degree(), n / 2)));
            report.check("degree = floor(n/2)", cases, fail);
            let (cases, fail) =
                first_mismatch((4..=n_max).map(|n| (format!("n={n}"), table[n].nonzero_terms(), (n + 5) / 3)));
            report.check("nonzero terms = floor((n+5)/3)", cases, fail);
        }
    }

    match family {
        Family::Gamma => gamma_diagonals(&mut report, &table, &fib, n_max),
        Family::Omega => omega_diagonals(&mut report, &table, &fib, &luc, n_max),
    }
    report
}

fn gamma_diagonals(report: &mut Report, table: &[CubeFactorPolynomial], fib: &[BigUint], n_max: usize) {
    // q_k = C(m, k) when n + k is 3m - 1 or 3m, and 0 when n + k = 3m + 1.
    let (cases, fail) = first_mismatch((0..=n_max).flat_map(|n| {
        (0..=n).map(move |k| {
            let (m, r) = split3(n + k);
            let expected = if r == 1 { BigUint::zero() } else { binom_ext(m, k as i64) };
            (format!("n={n} k={k}"), table[n].coeff(k), expected)
        })
    }));
    report.check("case split of the closed form", cases, fail);

    let (cases, fail) = first_mismatch((0..=n_max).flat_map(|n| {
        (0..=n / 2).map(move |k| {
            let (m, r) = split3(n);
            let expected = if r == 1 { BigUint::zero() } else { binom_ext(m, k as i64) };
            (format!("n={n} k={k}"), table[n - k].coeff(k), expected)
        })
    }));
    report.check("q_k(G[n-k]) = C(m,k) or 0", cases, fail);

    let (cases, fail) = first_mismatch((0..=n_max).flat_map(|n| {
        (0..=(n_max - n) / 2).map(move |k| {
            let (m, r) = split3(n);
            let expected = if r == 1 { BigUint::zero() } else { binom_ext(k as i64 + m, k as i64) };
            (format!("n={n} k={k}"), table[n + 2 * k].coeff(k), expected)
        })
    }));
    report.check("q_k(G[n+2k]) = C(k+m,k) or 0", cases, fail);

    let (cases, fail) = first_mismatch((0..=n_max).map(|n| {
        let (m, r) = split3(n);
        let expected = if r == 1 { BigUint::zero() } else { pow2(m) };
        (format!("n={n}"), diagonal_sums(table, n).0, expected)
    }));
    report.check("antidiagonal sum = 2^m or 0", cases, fail);

    let skew: Vec<BigUint> = (0..=n_max).map(|n| diagonal_sums(table, n).1).collect();
    let detail = fibonacci_shift_scan(&skew, fib, |n| {
        let (m, r) = split3(n);
        (r != 1).then_some(m)
    });
    report.info("skew sum = F(m) for n = 3m-1, 3m", detail);

    let max_cube_claim = (0..=n_max).find(|&n| table[n].degree() != n / 2);
    report.info(
        "maximum cube dimension floor(n/2)",
        match max_cube_claim {
            Some(n) => format!(
                "the polynomials have degree ceil(n/2); first difference at n={n} (degree {} vs {})",
                table[n].degree(),
                n / 2
            ),
            None => "degree agrees with floor(n/2) throughout".into(),
        },
    );

    let (cases, fail) = first_mismatch(
        (0..=2 * n_max).map(|n| (format!("n={n}"), padovan_closed(n), padovan_terms(n + 1).pop().unwrap())),
    );
    report.check("p(n) = sum_j C(j+1, n-2j)", cases, fail);
}

/// Reports which index shift `s` makes `observed[n] = F(m(n) + s)` hold
/// (and `observed[n] = 0` wherever `m(n)` is `None`).
fn fibonacci_shift_scan(observed: &[BigUint], fib: &[BigUint], index: impl Fn(usize) -> Option<i64>) -> String {
    let fib_at = |i: i64| (i >= 0).then(|| fib.get(i as usize).cloned()).flatten();
    let mismatch = |shift: i64| {
        observed.iter().enumerate().find_map(|(n, obs)| {
            let expected = match index(n) {
                Some(m) => fib_at(m + shift),
                None => Some(BigUint::zero()),
            };
            (expected.as_ref() != Some(obs)).then(|| (n, obs.clone(), expected))
        })
    };
    let printed = match mismatch(0) {
        None => "printed index holds".to_string(),
        Some((n, obs, exp)) => format!(
            "printed index fails first at n={n} (observed {obs}, F(m) = {})",
            exp.map(|e| e.to_string()).unwrap_or_else(|| "undefined".into())
        ),
    };
    let matching: Vec<String> = (-3i64..=3)
        .filter(|&s| mismatch(s).is_none())
        .map(|s| match s {
            0 => "F(m)".to_string(),
            s if s > 0 => format!("F(m+{s})"),
            s => format!("F(m{s})"),
        })
        .collect();
    let found = if matching.is_empty() {
        "no shift in [-3, 3] matches".to_string()
    } else {
        format!("matches {} for 0<=n<={}", matching.join(", "), observed.len() - 1)
    };
    format!("{printed}; {found}")
}

fn omega_diagonals(
    report: &mut Report,
    table: &[CubeFactorPolynomial],
    fib: &[BigUint],
    luc: &[BigUint],
    n_max: usize,
) {
    // Omega case split: n + k = 3m - 1, 3m, 3m + 1 give C(m-1,k), C(m-1,k-1), Y(m,k).
    let omega_split = |n: usize, k: usize| {
        let (m, r) = split3(n);
        let k = k as i64;
        match r {
            -1 => binom_ext(m - 1, k),
            0 => binom_ext(m - 1, k - 1),
            _ => lucas_triangle_ext(m, k),
        }
    };
    let (cases, fail) = first_mismatch(
        (2..=n_max)
            .flat_map(|n| (2..=n).map(move |k| (format!("n={n} k={k}"), table[n].coeff(k), omega_split(n + k, k)))),
    );
    report.check("case split of the closed form (k >= 2)", cases, fail);

    let (cases, fail) = first_mismatch(
        (2..=n_max)
            .flat_map(|n| (2..=n).map(move |k| (format!("n={n} k={k}"), table[n - k].coeff(k), omega_split(n, k)))),
    );
    report.check("q_k(O[n-k]) case split (k >= 2)", cases, fail);

    let (cases, fail) = first_mismatch((3..=n_max).map(|n| {
        let (m, r) = split3(n);
        let expected = if r == 1 { pow2(m - 1) * 3u32 } else { pow2(m - 1) };
        (format!("n={n}"), diagonal_sums(table, n).0, expected)
    }));
    report.check("antidiagonal sum = 2^(m-1) or 3*2^(m-1)", cases, fail);

    let (cases, fail) = first_mismatch((6..=n_max).map(|n| {
        let (m, r) = split3(n);
        let m = m as usize;
        let expected = match r {
            -1 => fib[m].clone(),
            0 => fib[m - 1].clone(),
            _ => luc[m].clone(),
        };
        (format!("n={n}"), diagonal_sums(table, n).1, expected)
    }));
    report.check("skew sum = F(m), F(m-1), L(m)", cases, fail);

    // q_k(O[n+2k]) for n != 1, k >= 1, under the printed and the substituted readings.
    let cases: Vec<(usize, usize, BigUint)> = (0..=n_max)
        .filter(|&n| n != 1)
        .flat_map(|n| (1..=(n_max - n) / 2).map(move |k| (n, k, table[n + 2 * k].coeff(k))))
        .collect();
    let reading = |printed: bool| {
        cases.iter().find_map(|(n, k, obs)| {
            let (m, r) = split3(*n);
            let k = *k as i64;
            let expected = match (r, printed) {
                (-1, true) => binom_ext(m + k, k),
                (0, true) => binom_ext(m + k - 1, k),
                (-1, false) => binom_ext(m + k - 1, k),
                (0, false) => binom_ext(m + k - 1, k - 1),
                _ => lucas_triangle_ext(m + k, k),
            };
            (&expected != obs).then(|| format!("n={n} k={k}: observed {obs}, formula {expected}"))
        })
    };
    let describe = |label: &str, r: Option<String>| match r {
        None => format!("{label} reading matches all {} cases", cases.len()),
        Some(why) => format!("{label} reading fails first at {why}"),
    };
    report.info(
        "q_k(O[n+2k]) shifted-index identity",
        format!(
            "{}; {}",
            describe("printed C(m+k,k)/C(m+k-1,k)", reading(true)),
            describe("substituted C(m+k-1,k)/C(m+k-1,k-1)", reading(false))
        ),
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn profile_examples() {
        assert_eq!(antidiagonal_profile(Family::Gamma, 6, 2).antidiagonal_sum, BigUint::from(4u32));
        assert_eq!(antidiagonal_profile(Family::Omega, 7, 2).antidiagonal_sum, BigUint::from(6u32));
        assert_eq!(antidiagonal_profile(Family::Gamma, 7, 2).antidiagonal_sum, BigUint::zero());
    }

    #[test]
    fn gamma_skew_sum_small_cases() {
        let sums: Vec<u64> = [5, 6, 8, 9]
            .iter()
            .map(|&n| antidiagonal_profile(Family::Gamma, n, 0).skew_sum.try_into().unwrap())
            .collect();
        assert_eq!(sums, vec![2, 2, 3, 3]);
    }

    #[test]
    fn shifted_profile_reads_upward() {
        let p = antidiagonal_profile(Family::Gamma, 2, 3);
        // q_k(G[2+2k]) = C(k+1, k) = k + 1.
        let v: Vec<u64> = p.shifted.iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(v, vec![1, 2, 3, 4]);
    }

    #[test]
    fn gamma_audit_entries() {
        let r = identity_audit(Family::Gamma, 30);
        for name in [
            "closed form = recurrence",
            "generating function = recurrence",
            "Q(1) = p(n+1)",
            "Q(2) = F(n+2)",
            "antidiagonal sum = 2^m or 0",
        ] {
            assert_eq!(r.get(name).unwrap().status, Status::Pass, "{name}: {r}");
        }
        let skew = r.get("skew sum = F(m) for n = 3m-1, 3m").unwrap();
        assert_eq!(skew.status, Status::Info);
        assert!(skew.detail.contains("matches F(m+1)"), "{}", skew.detail);
    }

    #[test]
    fn omega_audit_entries() {
        let r = identity_audit(Family::Omega, 30);
        assert_eq!(r.get("Q(2) = L(n)").unwrap().status, Status::Pass);
        assert_eq!(r.get("closed form = recurrence").unwrap().status, Status::Pass);
        let shifted = r.get("q_k(O[n+2k]) shifted-index identity").unwrap();
        assert!(shifted.detail.contains("substituted C(m+k-1,k)/C(m+k-1,k-1) reading matches"));
    }
}
