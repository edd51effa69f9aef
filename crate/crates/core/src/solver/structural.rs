//! The recursive factor: for `n` past the base cases,
//! `G_n = 00·G_{n-2} ∪ 10·G_{n-2} ∪ 010·G_{n-3}`, and the two copies of
//! `G_{n-2}` are matched by `00w ~ 10w`. Each part of a factor of `G_{n-2}`
//! therefore lifts to a cube one dimension higher, and a factor of
//! `G_{n-3}` covers the rest.

use super::{CubeFactor, InducedCube};
use crate::error::{Error, Result};
use crate::graphs::{build, LabeledGraph};
use crate::polynomials::Family;

/// Parts of the structural factor as `(dimension, labels)`.
pub fn structural_parts(family: Family, n: usize) -> Vec<(usize, Vec<String>)> {
    let base: Option<&[(usize, &[&str])]> = match (family, n) {
        (_, 0) => Some(&[(0, &[""])]),
        (_, 1) => Some(&[(1, &["0", "1"])]),
        (Family::Gamma, 2) => Some(&[(1, &["00", "10"]), (0, &["01"])]),
        (Family::Omega, 2) => Some(&[(1, &["00", "01"]), (0, &["1"])]),
        (Family::Omega, 3) => Some(&[(1, &["000", "001"]), (1, &["01", "1"])]),
        (Family::Omega, 4) => Some(&[(2, &["0000", "0001", "1000", "1001"]), (1, &["001", "101"]), (0, &["01"])]),
        _ => None,
    };
    if let Some(base) = base {
        return base.iter().map(|(k, ls)| (*k, ls.iter().map(|s| s.to_string()).collect())).collect();
    }
    let mut parts: Vec<(usize, Vec<String>)> = structural_parts(family, n - 2)
        .into_iter()
        .map(|(k, ls)| {
            let mut lifted: Vec<String> = ls.iter().map(|w| format!("00{w}")).collect();
            lifted.extend(ls.iter().map(|w| format!("10{w}")));
            (k + 1, lifted)
        })
        .collect();
    parts.extend(
        structural_parts(family, n - 3).into_iter().map(|(k, ls)| (k, ls.iter().map(|w| format!("010{w}")).collect())),
    );
    parts
}

/// The structural factor of `G_n`, as indices into [`build`]`(family, n)`.
pub fn structural_factor(family: Family, n: usize) -> Result<CubeFactor> {
    let g = build(family, n)?;
    structural_factor_on(&g)
}

/// The structural factor of a family graph, whatever cap it was built with.
pub(super) fn structural_factor_on(g: &LabeledGraph) -> Result<CubeFactor> {
    let family =
        g.family().ok_or_else(|| Error::FactorFormat("structural factors exist only for family graphs".into()))?;
    let parts = structural_parts(family, g.index())
        .into_iter()
        .map(|(k, ls)| {
            let vertices = ls
                .iter()
                .map(|l| g.index_of(l).ok_or_else(|| Error::UnknownLabel(l.clone())))
                .collect::<Result<Vec<_>>>()?;
            Ok(InducedCube::new(k, vertices))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CubeFactor::new(parts))
}
