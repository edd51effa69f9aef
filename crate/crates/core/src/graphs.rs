//! Fibonacci cubes and matchable Lucas cubes as explicit labeled graphs.
//!
//! `Gamma(n)` is built directly from its definition: binary strings of
//! length `n` with no two consecutive ones, adjacent at Hamming distance one.
//!
//! `Omega(n)` starts from the paths `Omega(0..=3)` and for `n >= 4` is the
//! disjoint union `0·Omega(n-1) ∪ 10·Omega(n-2)` plus the perfect matching
//! `10·w ~ 00·w`, which joins the second copy to the canonical
//! `Omega(n-2)` sitting inside `Omega(n-1)` under the prefix `0`. Labels are
//! the prefix code generated by this recursion, so in both families the
//! canonical subcopies are exactly the prefix classes.
//!
//! Every graph keeps its vertices sorted by label; vertex ids are positions
//! in that order.

use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::polynomials::Family;

/// Largest `n` built unless a caller raises the cap.
pub const DEFAULT_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Family(Family),
    Custom,
}

/// A named vertex subset that induces a smaller member of a family.
///
/// `vertices[i]` is the vertex matching vertex `i` of `build(family, index)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcopy {
    pub name: &'static str,
    pub prefix: &'static str,
    pub family: Family,
    pub index: usize,
    pub vertices: Vec<usize>,
}

impl Subcopy {
    /// Display name such as `10·Γ3`.
    pub fn alias(&self) -> String {
        format!("{}·{}{}", self.prefix, self.family.symbol(), self.index)
    }
}

#[derive(Clone, Debug)]
pub struct LabeledGraph {
    kind: GraphKind,
    n: usize,
    labels: Vec<String>,
    adjacency: Vec<FixedBitSet>,
    subcopies: Vec<Subcopy>,
}

impl LabeledGraph {
    /// Graph over arbitrary labels. Vertices are re-sorted by label; edge
    /// endpoints refer to positions in `labels` as given.
    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut position = vec![0; labels.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let sorted = order.iter().map(|&i| labels[i].clone()).collect();
        let edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (position[a], position[b])).collect();
        Self::assemble(GraphKind::Custom, 0, sorted, &edges)
    }

    fn assemble(kind: GraphKind, n: usize, labels: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let count = labels.len();
        let mut adjacency = vec![FixedBitSet::with_capacity(count); count];
        for &(a, b) in edges {
            assert_ne!(a, b, "self-loop on {}", labels[a]);
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        LabeledGraph { kind, n, labels, adjacency, subcopies: Vec::new() }
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn family(&self) -> Option<Family> {
        match self.kind {
            GraphKind::Family(f) => Some(f),
            GraphKind::Custom => None,
        }
    }

    pub fn index(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].ones()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones(..)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count()).flat_map(|u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v))).collect()
    }

    pub fn is_connected(&self) -> bool {
        let count = self.vertex_count();
        if count == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(count);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen.put(w) {
                    stack.push(w);
                }
            }
        }
        seen.count_ones(..) == count
    }

    pub fn subcopies(&self) -> &[Subcopy] {
        &self.subcopies
    }

    pub fn subcopy(&self, name: &str) -> Result<&Subcopy> {
        self.subcopies
            .iter()
            .find(|s| s.name == name || s.alias() == name)
            .ok_or_else(|| Error::UnknownSubcopy(name.to_string()))
    }

    /// Induced subgraph on `vertices` (kept in the given order), with new
    /// labels.
    pub fn induced(&self, vertices: &[usize], labels: Vec<String>) -> LabeledGraph {
        let local: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                if let Some(&j) = local.get(&w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        LabeledGraph::from_edges(labels, &edges)
    }

    /// The annotated subcopy as a standalone graph carrying the smaller
    /// member's labels, after checking that the correspondence is an
    /// isomorphism onto `build(family, index)`.
    pub fn canonical_subgraph(&self, name: &str) -> Result<LabeledGraph> {
        let copy = self.subcopy(name)?;
        let reference = build_with_cap(copy.family, copy.index, usize::MAX)?;
        let mismatch = |reason: String| Error::SubcopyMismatch { name: name.to_string(), reason };
        if reference.vertex_count() != copy.vertices.len() {
            return Err(mismatch(format!("{} vertices, expected {}", copy.vertices.len(), reference.vertex_count())));
        }
        let mut sub = self.induced(&copy.vertices, reference.labels.clone());
        if sub.adjacency != reference.adjacency {
            return Err(mismatch("edge sets differ under the canonical correspondence".into()));
        }
        sub.kind = GraphKind::Family(copy.family);
        sub.n = copy.index;
        Ok(sub)
    }

    fn annotate(&mut self, name: &'static str, prefix: &'static str, family: Family, index: usize) {
        let reference_labels = family_labels(family, index);
        let vertices = reference_labels
            .iter()
            .map(|l| self.index_of(&format!("{prefix}{l}")).expect("prefix class is present"))
            .collect();
        self.subcopies.push(Subcopy { name, prefix, family, index, vertices });
    }

    pub fn name(&self) -> String {
        match self.kind {
            GraphKind::Family(f) => format!("{}_{}", f.name(), self.n),
            GraphKind::Custom => "custom".into(),
        }
    }

    /// One `label label` pair per edge, lexicographically sorted.
    pub fn to_edgelist(&self) -> String {
        let mut lines: Vec<(&str, &str)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (self.label(u), self.label(v));
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        lines.sort_unstable();
        lines.iter().fold(String::new(), |mut out, (a, b)| {
            let _ = writeln!(out, "{a} {b}");
            out
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("graph {} {{\n", self.name());
        for l in &self.labels {
            let _ = writeln!(out, "  \"{l}\";");
        }
        for line in self.to_edgelist().lines() {
            let (a, b) = line.split_once(' ').expect("edge line has two labels");
            let _ = writeln!(out, "  \"{a}\" -- \"{b}\";");
        }
        out.push_str("}\n");
        out
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::EdgeList => self.to_edgelist(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    EdgeList,
}

impl ExportFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "dot" => Some(ExportFormat::Dot),
            "edgelist" => Some(ExportFormat::EdgeList),
            _ => None,
        }
    }
}

pub fn build(family: Family, n: usize) -> Result<LabeledGraph> {
    build_with_cap(family, n, DEFAULT_CAP)
}

pub fn build_with_cap(family: Family, n: usize, cap: usize) -> Result<LabeledGraph> {
    if n > cap {
        return Err(Error::CapExceeded { what: "graph", n, cap });
    }
    let mut g = match family {
        Family::Gamma => gamma_graph(n),
        Family::Omega => omega_graph(n),
    };
    let split_from = match family {
        Family::Gamma => 3,
        Family::Omega => 5,
    };
    if n >= 1 {
        g.annotate("first", "0", family, n - 1);
    }
    if n >= 2 && (family == Family::Gamma || n >= 4) {
        g.annotate("second", "10", family, n - 2);
    }
    if n >= split_from || (family == Family::Omega && n == 4) {
        g.annotate("pair", "00", family, n - 2);
    }
    if n >= split_from {
        g.annotate("third", "010", family, n - 3);
    }
    Ok(g)
}

pub fn build_gamma(n: usize) -> Result<LabeledGraph> {
    build(Family::Gamma, n)
}

pub fn build_omega(n: usize) -> Result<LabeledGraph> {
    build(Family::Omega, n)
}

fn gamma_strings(n: usize) -> Vec<String> {
    let mut out = Vec::new();
    let mut stack = vec![String::new()];
    while let Some(s) = stack.pop() {
        if s.len() == n {
            out.push(s);
            continue;
        }
        // Pushed in reverse so the pop order is lexicographic.
        if !s.ends_with('1') {
            stack.push(format!("{s}1"));
        }
        stack.push(format!("{s}0"));
    }
    out
}

fn gamma_graph(n: usize) -> LabeledGraph {
    let labels = gamma_strings(n);
    let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let mut edges = Vec::new();
    for (i, l) in labels.iter().enumerate() {
        let mut bytes = l.clone().into_bytes();
        for pos in 0..n {
            bytes[pos] ^= b'0' ^ b'1';
            if let Some(&j) = std::str::from_utf8(&bytes).ok().and_then(|s| index.get(s)) {
                if i < j {
                    edges.push((i, j));
                }
            }
            bytes[pos] ^= b'0' ^ b'1';
        }
    }
    LabeledGraph::assemble(GraphKind::Family(Family::Gamma), n, labels, &edges)
}

fn omega_base(n: usize) -> Vec<&'static str> {
    match n {
        0 => vec![""],
        1 => vec!["0", "1"],
        2 => vec!["00", "01", "1"],
        3 => vec!["000", "001", "01", "1"],
        _ => unreachable!(),
    }
}

type Layer = (Vec<String>, Vec<(usize, usize)>);

fn omega_layers(n: usize) -> Vec<Layer> {
    let mut layers: Vec<Layer> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let layer = if i < 4 {
            let labels: Vec<String> = omega_base(i).into_iter().map(String::from).collect();
            let edges = (1..labels.len()).map(|v| (v - 1, v)).collect();
            (labels, edges)
        } else {
            let (a_labels, a_edges) = &layers[i - 1];
            let (b_labels, b_edges) = &layers[i - 2];
            let offset = a_labels.len();
            let labels =
                a_labels.iter().map(|l| format!("0{l}")).chain(b_labels.iter().map(|l| format!("10{l}"))).collect();
            let mut edges = a_edges.clone();
            edges.extend(b_edges.iter().map(|&(u, v)| (u + offset, v + offset)));
            // The canonical Omega(i-2) inside Omega(i-1) is its first
            // |Omega(i-2)| vertices, so B vertex j meets A vertex j.
            edges.extend((0..b_labels.len()).map(|j| (j, j + offset)));
            (labels, edges)
        };
        layers.push(layer);
    }
    layers
}

fn omega_graph(n: usize) -> LabeledGraph {
    let (labels, edges) = omega_layers(n).pop().unwrap();
    LabeledGraph::assemble(GraphKind::Family(Family::Omega), n, labels, &edges)
}

fn family_labels(family: Family, n: usize) -> Vec<String> {
    match family {
        Family::Gamma => gamma_strings(n),
        Family::Omega => omega_layers(n).pop().unwrap().0,
    }
}

/// A vertex bijection `map` with `a.adjacent(u, v) == b.adjacent(map[u], map[v])`,
/// found by backtracking with degree filtering. Meant for small graphs.
pub fn find_isomorphism(a: &LabeledGraph, b: &LabeledGraph) -> Option<Vec<usize>> {
    let count = a.vertex_count();
    if count != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let mut deg_a: Vec<usize> = (0..count).map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<usize> = (0..count).map(|v| b.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return None;
    }
    let mut map = vec![usize::MAX; count];
    let mut used = vec![false; count];
    fn extend(a: &LabeledGraph, b: &LabeledGraph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == map.len() {
            return true;
        }
        for w in 0..map.len() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).any(|u| a.adjacent(u, v) != b.adjacent(map[u], w)) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(a, b, v + 1, map, used) {
                return true;
            }
            used[w] = false;
        }
        map[v] = usize::MAX;
        false
    }
    extend(a, b, 0, &mut map, &mut used).then_some(map)
}
