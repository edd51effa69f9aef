//! Recognition and enumeration of induced hypercubes.

use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;

use crate::graphs::LabeledGraph;

/// A vertex subset inducing a `dim`-cube. `vertices` is sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InducedCube {
    pub dim: usize,
    pub vertices: Vec<usize>,
}

impl InducedCube {
    pub fn new(dim: usize, mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        InducedCube { dim, vertices }
    }

    pub fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | 1 << v)
    }
}

/// Dimension `d` if `vertices` induces a `d`-cube in `g`, else `None`.
///
/// Coordinates are recovered from a breadth-first layering around the first
/// vertex: each neighbor of the root owns one bit and every other vertex takes
/// the union of its lower neighbors' coordinates. The set is a cube exactly
/// when this yields a bijection onto `{0,1}^d` under which every induced edge
/// flips one bit and every vertex has induced degree `d`.
pub fn cube_dimension(g: &LabeledGraph, vertices: &[usize]) -> Option<usize> {
    let size = vertices.len();
    if size == 0 || !size.is_power_of_two() {
        return None;
    }
    let dim = size.trailing_zeros() as usize;
    let local: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    if local.len() != size {
        return None;
    }
    let inner: Vec<Vec<usize>> =
        vertices.iter().map(|&v| g.neighbors(v).filter_map(|w| local.get(&w).copied()).collect()).collect();
    if inner.iter().any(|nbrs| nbrs.len() != dim) {
        return None;
    }

    let mut layer = vec![usize::MAX; size];
    let mut coord = vec![0usize; size];
    layer[0] = 0;
    for (bit, &w) in inner[0].iter().enumerate() {
        layer[w] = 1;
        coord[w] = 1 << bit;
    }
    let mut frontier: Vec<usize> = inner[0].clone();
    let mut depth = 1;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &v in &frontier {
            for &w in &inner[v] {
                if layer[w] == usize::MAX {
                    layer[w] = depth + 1;
                    next.push(w);
                }
            }
        }
        for &w in &next {
            let down: Vec<usize> = inner[w].iter().copied().filter(|&u| layer[u] == depth).collect();
            coord[w] = down.iter().fold(0, |acc, &u| acc | coord[u]);
            if down.len() != depth + 1 || coord[w].count_ones() as usize != depth + 1 {
                return None;
            }
        }
        frontier = next;
        depth += 1;
    }
    if layer.contains(&usize::MAX) {
        return None;
    }
    let mut seen = FixedBitSet::with_capacity(size);
    if coord.iter().any(|&c| seen.put(c)) {
        return None;
    }
    let flips_one_bit =
        inner.iter().enumerate().all(|(v, nbrs)| nbrs.iter().all(|&w| (coord[v] ^ coord[w]).count_ones() == 1));
    flips_one_bit.then_some(dim)
}

/// All induced cubes of dimension `0..=k_max`, grouped by dimension, each
/// group sorted lexicographically by vertex array.
///
/// A `(k+1)`-cube is two disjoint `k`-cubes joined by a perfect matching of
/// edges that is an isomorphism between them. Each `k`-cube is tried against
/// every matching that sends it along graph edges, and the union is kept when
/// it passes [`cube_dimension`].
pub fn enumerate_cubes(g: &LabeledGraph, k_max: usize) -> Vec<Vec<InducedCube>> {
    let mut out: Vec<Vec<InducedCube>> = vec![(0..g.vertex_count()).map(|v| InducedCube::new(0, vec![v])).collect()];
    for k in 0..k_max {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        for cube in &out[k] {
            for partner in matched_copies(g, &cube.vertices) {
                let mut union = cube.vertices.clone();
                union.extend(partner);
                union.sort_unstable();
                if !found.contains(&union) && cube_dimension(g, &union) == Some(k + 1) {
                    found.insert(union);
                }
            }
        }
        if found.is_empty() {
            break;
        }
        out.push(found.into_iter().map(|v| InducedCube { dim: k + 1, vertices: v }).collect());
    }
    out
}

/// Images of `cube` under injective maps `f` with `v ~ f(v)` for every
/// vertex, `f(v)` outside the cube, and `f(u) ~ f(v)` along a spanning tree
/// of the cube. Candidates are filtered by the caller.
fn matched_copies(g: &LabeledGraph, cube: &[usize]) -> Vec<Vec<usize>> {
    let inside: FixedBitSet = {
        let mut s = FixedBitSet::with_capacity(g.vertex_count());
        cube.iter().for_each(|&v| s.insert(v));
        s
    };
    // Breadth-first order over the cube, with a tree parent for each vertex.
    let mut order = vec![0usize];
    let mut parent = vec![usize::MAX; cube.len()];
    let position: HashMap<usize, usize> = cube.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut visited = vec![false; cube.len()];
    visited[0] = true;
    let mut head = 0;
    while head < order.len() {
        let i = order[head];
        head += 1;
        for w in g.neighbors(cube[i]) {
            if let Some(&j) = position.get(&w) {
                if !visited[j] {
                    visited[j] = true;
                    parent[j] = i;
                    order.push(j);
                }
            }
        }
    }

    let walk = Walk { g, cube, inside: &inside, order: &order, parent: &parent };
    let mut results = Vec::new();
    walk.extend(0, &mut vec![usize::MAX; cube.len()], &mut results);
    results
}

struct Walk<'a> {
    g: &'a LabeledGraph,
    cube: &'a [usize],
    inside: &'a FixedBitSet,
    order: &'a [usize],
    parent: &'a [usize],
}

impl Walk<'_> {
    fn extend(&self, step: usize, image: &mut [usize], results: &mut Vec<Vec<usize>>) {
        if step == self.order.len() {
            results.push(image.to_vec());
            return;
        }
        let i = self.order[step];
        let p = self.parent[i];
        let candidates: Vec<usize> = self
            .g
            .neighbors(self.cube[i])
            .filter(|&w| !self.inside.contains(w))
            .filter(|&w| p == usize::MAX || self.g.adjacent(w, image[p]))
            .filter(|w| !image.contains(w))
            .collect();
        for w in candidates {
            image[i] = w;
            self.extend(step + 1, image, results);
        }
        image[i] = usize::MAX;
    }
}
