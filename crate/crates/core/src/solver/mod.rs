//! Cube factors: spanning partitions of a graph into induced hypercubes.
//!
//! Three independent solvers produce them:
//! - [`exact_min_factor`]: branch and bound over all induced cubes for a
//!   factor with the fewest parts;
//! - [`greedy_layered_factor`]: from the top dimension down, pack as many
//!   cubes of the current dimension as possible into what is left;
//! - [`structural_factor`]: the recursive construction that lifts a factor
//!   of `G(n-2)` across the `00`/`10` prefixes and adds a factor of `G(n-3)`.
//!
//! [`verify_factor`] checks any of them against the graph.

mod cubes;
mod exact;
mod greedy;
mod structural;

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

pub use cubes::{cube_dimension, enumerate_cubes, InducedCube};
pub use exact::{exact_min_factor, EXACT_CAP};
pub use greedy::greedy_layered_factor;
pub use structural::{structural_factor, structural_parts};

use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;
use crate::polynomials::CubeFactorPolynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeFactor {
    pub parts: Vec<InducedCube>,
}

impl CubeFactor {
    /// Parts in canonical order: descending dimension, then vertex arrays.
    pub fn new(mut parts: Vec<InducedCube>) -> Self {
        parts.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.vertices.cmp(&b.vertices)));
        CubeFactor { parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part counts by declared dimension.
    pub fn profile(&self) -> FactorProfile {
        let top = self.parts.iter().map(|p| p.dim).max().unwrap_or(0);
        let mut counts = vec![0u64; top + 1];
        for p in &self.parts {
            counts[p.dim] += 1;
        }
        FactorProfile { counts }
    }

    pub fn to_json(&self, g: &LabeledGraph) -> String {
        let parts: Vec<PartJson> = self
            .parts
            .iter()
            .map(|p| PartJson { k: p.dim, vertices: p.vertices.iter().map(|&v| g.label(v).to_string()).collect() })
            .collect();
        serde_json::to_string(&parts).expect("plain struct serializes")
    }

    /// Reads `[{"k": .., "vertices": [labels]}]`. Declared dimensions are
    /// kept as given; [`verify_factor`] is what checks them.
    pub fn from_json(g: &LabeledGraph, text: &str) -> Result<Self> {
        let parts: Vec<PartJson> = serde_json::from_str(text)?;
        let parts = parts
            .into_iter()
            .map(|p| {
                let vertices = p
                    .vertices
                    .iter()
                    .map(|l| g.index_of(l).ok_or_else(|| Error::UnknownLabel(l.clone())))
                    .collect::<Result<Vec<_>>>()?;
                Ok(InducedCube::new(p.k, vertices))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CubeFactor::new(parts))
    }

    /// Human-readable listing, one part per line.
    pub fn describe(&self, g: &LabeledGraph) -> String {
        self.parts
            .iter()
            .map(|p| {
                let labels: Vec<&str> = p.vertices.iter().map(|&v| g.label(v)).collect();
                format!("Q{} {{{}}}\n", p.dim, labels.join(", "))
            })
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct PartJson {
    k: usize,
    vertices: Vec<String>,
}

/// `counts[k]` is the number of `k`-dimensional parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorProfile {
    pub counts: Vec<u64>,
}

impl FactorProfile {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn covered_vertices(&self) -> u64 {
        self.counts.iter().enumerate().map(|(k, &c)| c << k).sum()
    }

    pub fn as_polynomial_coeffs(&self) -> Vec<BigUint> {
        let mut coeffs: Vec<BigUint> = self.counts.iter().map(|&c| BigUint::from(c)).collect();
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| *c == BigUint::ZERO) {
            coeffs.pop();
        }
        coeffs
    }

    pub fn matches(&self, poly: &CubeFactorPolynomial) -> bool {
        self.as_polynomial_coeffs() == poly.coeffs
    }
}

impl fmt::Display for FactorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.counts.iter().map(u64::to_string).collect();
        f.write_str(&words.join(" "))
    }
}

/// First problem found when checking a factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VertexOutOfRange { part: usize, vertex: usize },
    Overlap { vertex: String, first: usize, second: usize },
    Uncovered { vertex: String },
    NotACube { part: usize, size: usize },
    WrongDimension { part: usize, declared: usize, actual: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange { part, vertex } => {
                write!(f, "part {part} names vertex id {vertex}, which is not in the graph")
            }
            Violation::Overlap { vertex, first, second } => {
                write!(f, "vertex {vertex:?} lies in parts {first} and {second}")
            }
            Violation::Uncovered { vertex } => write!(f, "vertex {vertex:?} is not covered"),
            Violation::NotACube { part, size } => {
                write!(f, "part {part} ({size} vertices) does not induce a hypercube")
            }
            Violation::WrongDimension { part, declared, actual } => {
                write!(f, "part {part} is declared Q{declared} but induces Q{actual}")
            }
        }
    }
}

/// Checks disjointness, coverage and the induced-cube property of every
/// part; returns the profile on success.
pub fn verify_factor(g: &LabeledGraph, f: &CubeFactor) -> Result<FactorProfile, Violation> {
    let mut owner = vec![usize::MAX; g.vertex_count()];
    for (i, part) in f.parts.iter().enumerate() {
        for &v in &part.vertices {
            if v >= owner.len() {
                return Err(Violation::VertexOutOfRange { part: i, vertex: v });
            }
            if owner[v] != usize::MAX {
                return Err(Violation::Overlap { vertex: g.label(v).to_string(), first: owner[v], second: i });
            }
            owner[v] = i;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Violation::Uncovered { vertex: g.label(v).to_string() });
    }
    for (i, part) in f.parts.iter().enumerate() {
        match cube_dimension(g, &part.vertices) {
            None => return Err(Violation::NotACube { part: i, size: part.vertices.len() }),
            Some(d) if d != part.dim => {
                return Err(Violation::WrongDimension { part: i, declared: part.dim, actual: d })
            }
            Some(_) => {}
        }
    }
    Ok(f.profile())
}

/// Which solver to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMethod {
    Exact,
    Greedy,
    Structural,
}

impl SolveMethod {
    pub const ALL: [SolveMethod; 3] = [SolveMethod::Exact, SolveMethod::Greedy, SolveMethod::Structural];

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "exact" => Some(SolveMethod::Exact),
            "greedy" => Some(SolveMethod::Greedy),
            "structural" => Some(SolveMethod::Structural),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SolveMethod::Exact => "exact",
            SolveMethod::Greedy => "greedy",
            SolveMethod::Structural => "structural",
        }
    }
}

/// Runs `method` on `g`. The structural method needs `g` to be a family
/// member.
pub fn solve(g: &LabeledGraph, method: SolveMethod) -> Result<CubeFactor> {
    match method {
        SolveMethod::Exact => exact_min_factor(g),
        SolveMethod::Greedy => greedy_layered_factor(g),
        SolveMethod::Structural => structural::structural_factor_on(g),
    }
}
