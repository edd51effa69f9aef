//! Minimum cube factors by branch and bound.

use std::collections::HashMap;

use super::{enumerate_cubes, CubeFactor};
use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;

/// Largest vertex count the exact solver accepts; vertex sets are `u64`
/// masks.
pub const EXACT_CAP: usize = 64;

/// Shared cube table for the exact and greedy searches.
pub(super) struct CubeTable {
    pub masks: Vec<u64>,
    pub dims: Vec<usize>,
    /// Indices of cubes containing each vertex, in table order.
    pub by_vertex: Vec<Vec<usize>>,
    pub vertices: Vec<Vec<usize>>,
}

impl CubeTable {
    /// All induced cubes, highest dimension first and lexicographic within
    /// a dimension.
    pub fn new(g: &LabeledGraph, what: &'static str) -> Result<Self> {
        let n = g.vertex_count();
        if n > EXACT_CAP {
            return Err(Error::CapExceeded { what, n, cap: EXACT_CAP });
        }
        let groups = enumerate_cubes(g, n.max(1).ilog2() as usize);
        let mut table =
            CubeTable { masks: Vec::new(), dims: Vec::new(), by_vertex: vec![Vec::new(); n], vertices: Vec::new() };
        for group in groups.into_iter().rev() {
            for cube in group {
                let id = table.masks.len();
                for &v in &cube.vertices {
                    table.by_vertex[v].push(id);
                }
                table.masks.push(cube.mask());
                table.dims.push(cube.dim);
                table.vertices.push(cube.vertices);
            }
        }
        Ok(table)
    }

    pub fn top_dim(&self) -> usize {
        self.dims.first().copied().unwrap_or(0)
    }
}

struct Search<'a> {
    table: &'a CubeTable,
    best: u32,
    best_parts: Vec<usize>,
    stack: Vec<usize>,
    /// Proven lower bounds on the number of parts needed for a mask.
    memo: HashMap<u64, u32>,
}

impl Search<'_> {
    /// `ceil(sum_v 2^-s(v))` where `s(v)` is the dimension of the largest
    /// cube inside `uncovered` that contains `v`. Each part of dimension `d`
    /// contributes exactly one to the sum of `2^-d` over its vertices, and
    /// `d <= s(v)`, so this never exceeds the true optimum.
    fn lower_bound(&self, uncovered: u64) -> u32 {
        let top = self.table.top_dim();
        let mut assigned = 0u64;
        let mut weight = 0u64;
        for (i, &m) in self.table.masks.iter().enumerate() {
            if m & !uncovered != 0 {
                continue;
            }
            let fresh = m & !assigned;
            if fresh != 0 {
                weight += (fresh.count_ones() as u64) << (top - self.table.dims[i]);
                assigned |= fresh;
                if assigned == uncovered {
                    break;
                }
            }
        }
        weight.div_ceil(1 << top) as u32
    }

    fn run(&mut self, uncovered: u64, depth: u32) {
        if uncovered == 0 {
            if depth < self.best {
                self.best = depth;
                self.best_parts = self.stack.clone();
            }
            return;
        }
        let known = self.memo.get(&uncovered).copied().unwrap_or(0);
        let need = known.max(self.lower_bound(uncovered));
        if depth + need >= self.best {
            return;
        }
        let v = uncovered.trailing_zeros() as usize;
        for &c in &self.table.by_vertex[v] {
            let m = self.table.masks[c];
            if m & !uncovered == 0 {
                self.stack.push(c);
                self.run(uncovered & !m, depth + 1);
                self.stack.pop();
            }
        }
        // Anything cheaper than best - depth would have been found above.
        self.memo.insert(uncovered, need.max(self.best - depth));
    }
}

/// A cube factor with the fewest parts. Ties are broken by search order:
/// the lowest uncovered vertex is always covered next, trying its cubes from
/// the highest dimension down and lexicographically within one dimension.
pub fn exact_min_factor(g: &LabeledGraph) -> Result<CubeFactor> {
    let table = CubeTable::new(g, "exact solver vertex count")?;
    let n = g.vertex_count();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search =
        Search { table: &table, best: n as u32 + 1, best_parts: Vec::new(), stack: Vec::new(), memo: HashMap::new() };
    search.run(full, 0);
    Ok(CubeFactor::new(
        search
            .best_parts
            .iter()
            .map(|&c| super::InducedCube { dim: table.dims[c], vertices: table.vertices[c].clone() })
            .collect(),
    ))
}
