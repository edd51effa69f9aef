//! Layered greedy factors: a maximum packing of top-dimensional cubes, then
//! a maximum packing of the next dimension in what remains, down to single
//! vertices.

use std::collections::HashMap;

use super::exact::CubeTable;
use super::{CubeFactor, InducedCube};
use crate::error::Result;
use crate::graphs::LabeledGraph;

struct Packing<'a> {
    table: &'a CubeTable,
    /// Cubes of the current dimension, in table order.
    layer: Vec<usize>,
    by_vertex: Vec<Vec<usize>>,
    dim: usize,
    best: u32,
    best_parts: Vec<usize>,
    stack: Vec<usize>,
    /// Proven upper bounds on the packing size inside a mask.
    memo: HashMap<u64, u32>,
}

impl Packing<'_> {
    fn run(&mut self, avail: u64, count: u32) {
        let coverable =
            self.layer.iter().map(|&c| self.table.masks[c]).filter(|&m| m & !avail == 0).fold(0u64, |acc, m| acc | m);
        if coverable == 0 {
            if count > self.best {
                self.best = count;
                self.best_parts = self.stack.clone();
            }
            return;
        }
        let room = coverable.count_ones() >> self.dim;
        let cap = self.memo.get(&coverable).copied().map_or(room, |m| m.min(room));
        if count + cap <= self.best {
            return;
        }
        let v = coverable.trailing_zeros() as usize;
        for i in 0..self.by_vertex[v].len() {
            let c = self.by_vertex[v][i];
            let m = self.table.masks[c];
            if m & !coverable == 0 {
                self.stack.push(c);
                self.run(coverable & !m, count + 1);
                self.stack.pop();
            }
        }
        self.run(coverable & !(1u64 << v), count);
        // A larger packing would have raised best above this.
        self.memo.insert(coverable, cap.min(self.best.saturating_sub(count)));
    }
}

/// Greedy layered factor. Each layer is an exact maximum packing, with ties
/// broken by search order (lowest vertex first, cubes lexicographic).
pub fn greedy_layered_factor(g: &LabeledGraph) -> Result<CubeFactor> {
    let table = CubeTable::new(g, "greedy solver vertex count")?;
    let n = g.vertex_count();
    let mut remaining = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut parts = Vec::new();
    for dim in (1..=table.top_dim()).rev() {
        let layer: Vec<usize> =
            (0..table.masks.len()).filter(|&c| table.dims[c] == dim && table.masks[c] & !remaining == 0).collect();
        let mut by_vertex = vec![Vec::new(); n];
        for &c in &layer {
            for &v in &table.vertices[c] {
                by_vertex[v].push(c);
            }
        }
        let mut packing = Packing {
            table: &table,
            layer,
            by_vertex,
            dim,
            best: 0,
            best_parts: Vec::new(),
            stack: Vec::new(),
            memo: HashMap::new(),
        };
        packing.run(remaining, 0);
        for &c in &packing.best_parts {
            remaining &= !table.masks[c];
            parts.push(InducedCube { dim, vertices: table.vertices[c].clone() });
        }
    }
    while remaining != 0 {
        let v = remaining.trailing_zeros() as usize;
        remaining &= remaining - 1;
        parts.push(InducedCube { dim: 0, vertices: vec![v] });
    }
    Ok(CubeFactor::new(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build_gamma;
    use crate::solver::verify_factor;

    #[test]
    fn gamma_four_profile() {
        let g = build_gamma(4).unwrap();
        let f = greedy_layered_factor(&g).unwrap();
        assert_eq!(verify_factor(&g, &f).unwrap().counts, vec![0, 2, 1]);
    }

    #[test]
    fn empty_layers_are_skipped() {
        let g = build_gamma(1).unwrap();
        let f = greedy_layered_factor(&g).unwrap();
        assert_eq!(f.profile().counts, vec![0, 1]);
    }
}
