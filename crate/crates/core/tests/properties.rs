use petgraph::algo::{connected_components, is_isomorphic};
use petgraph::graph::UnGraph;
use proptest::prelude::*;

use cubefactor::graphs::{build, LabeledGraph};
use cubefactor::polynomials::{qpoly, Method};
use cubefactor::solver::{solve, verify_factor, CubeFactor, InducedCube, SolveMethod};
use cubefactor::verify::grid_plus_pendant;
use cubefactor::Family;

fn to_petgraph(g: &LabeledGraph) -> UnGraph<(), ()> {
    let edges: Vec<(u32, u32)> = g.edges().into_iter().map(|(u, v)| (u as u32, v as u32)).collect();
    let mut p = UnGraph::<(), ()>::from_edges(&edges);
    while p.node_count() < g.vertex_count() {
        p.add_node(());
    }
    p
}

#[test]
fn subcopies_are_isomorphic_to_smaller_members() {
    for family in Family::ALL {
        for n in 0..=10 {
            let g = build(family, n).unwrap();
            assert_eq!(connected_components(&to_petgraph(&g)), 1, "{}", g.name());
            for copy in g.subcopies() {
                let sub = g.induced(&copy.vertices, (0..copy.vertices.len()).map(|i| format!("{i:03}")).collect());
                let member = build(copy.family, copy.index).unwrap();
                assert!(is_isomorphic(&to_petgraph(&sub), &to_petgraph(&member)), "{} {}", g.name(), copy.alias());
            }
        }
    }
}

#[test]
fn omega_four_against_petgraph() {
    let o4 = build(Family::Omega, 4).unwrap();
    assert!(is_isomorphic(&to_petgraph(&o4), &to_petgraph(&grid_plus_pendant())));
    // A pendant on a middle grid vertex gives a different graph.
    let middle = LabeledGraph::from_edges(
        ["a1", "a2", "a3", "b1", "b2", "b3", "p"].map(String::from).to_vec(),
        &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5), (1, 6)],
    );
    assert!(!is_isomorphic(&to_petgraph(&o4), &to_petgraph(&middle)));
}

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::Gamma), Just(Family::Omega)]
}

fn method() -> impl Strategy<Value = SolveMethod> {
    prop_oneof![Just(SolveMethod::Exact), Just(SolveMethod::Greedy), Just(SolveMethod::Structural)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn three_routes_agree(family in family(), n in 0usize..90) {
        let rec = qpoly(family, n, Method::Recurrence);
        prop_assert_eq!(&qpoly(family, n, Method::GeneratingFunction), &rec);
        if family == Family::Gamma || n >= 2 {
            prop_assert_eq!(&qpoly(family, n, Method::Closed), &rec);
        }
    }

    #[test]
    fn profiles_account_for_every_vertex(family in family(), n in 0usize..8, method in method()) {
        let g = build(family, n).unwrap();
        let f = solve(&g, method).unwrap();
        let profile = verify_factor(&g, &f).unwrap();
        prop_assert_eq!(profile.covered_vertices(), g.vertex_count() as u64);
        prop_assert_eq!(profile.total(), f.len() as u64);
    }

    #[test]
    fn corrupted_factors_are_rejected(family in family(), n in 1usize..8, pick in any::<prop::sample::Index>(), mode in 0u8..3) {
        let g = build(family, n).unwrap();
        let f = solve(&g, SolveMethod::Structural).unwrap();
        let mut parts = f.parts.clone();
        let i = pick.index(parts.len());
        match mode {
            // Drop a part.
            0 => { parts.remove(i); }
            // Cover one of its vertices twice.
            1 => {
                let j = (i + 1) % parts.len();
                let v = parts[j].vertices[0];
                if i == j { parts.push(InducedCube::new(0, vec![v])); } else { parts[i].vertices.push(v); parts[i].vertices.sort_unstable(); }
            }
            // Misstate its dimension.
            _ => { parts[i].dim += 1; }
        }
        prop_assert!(verify_factor(&g, &CubeFactor::new(parts)).is_err());
    }
}
