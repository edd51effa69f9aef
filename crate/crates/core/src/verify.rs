//! The `verify` suites: identity checks over the polynomial tables, and
//! graph-level oracle checks that build the graphs and run every solver.

use num_bigint::{BigInt, BigUint};

use crate::graphs::{self, find_isomorphism, ExportFormat, LabeledGraph};
use crate::oeis::{fetch_bfile, shift_scan, FetchOptions, LocalSequence};
use crate::polynomials::identities::{antidiagonal_profile, identity_audit};
use crate::polynomials::series::padovan_gf_series;
use crate::polynomials::{q_closed, qpoly, qpoly_table, Family, Method};
use crate::report::{first_mismatch, Report};
use crate::sequences::{
    binom_ext, fib, fibonacci_terms, lucas, lucas_terms, lucas_triangle, lucas_triangle_rows, padovan, padovan_closed,
    padovan_terms, NamedSequence,
};
use crate::solver::{
    enumerate_cubes, exact_min_factor, greedy_layered_factor, structural_factor, verify_factor, CubeFactor,
};

/// Largest `n` at which the solvers run in the oracle suite.
pub const SOLVER_MAX_N: usize = 8;
/// Largest `n` for graph cardinality checks.
pub const GRAPH_MAX_N: usize = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Oracle,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "identities" => Some(Suite::Identities),
            "oracle" => Some(Suite::Oracle),
            "all" => Some(Suite::All),
            _ => None,
        }
    }
}

pub fn run_suite(suite: Suite, max_n: usize) -> Report {
    let mut report = Report::new(format!("verify max-n {max_n}"));
    if suite != Suite::Oracle {
        report.extend(sequence_checks());
        for family in Family::ALL {
            report.extend(identity_audit(family, max_n));
        }
    }
    if suite != Suite::Identities {
        report.extend(graph_checks(max_n.min(GRAPH_MAX_N)));
        report.extend(solver_checks(max_n.min(SOLVER_MAX_N)));
    }
    report
}

/// Sequence identities at fixed bounds; all of them are cheap.
pub fn sequence_checks() -> Report {
    let mut r = Report::new("sequences");
    let pad = padovan_terms(501);
    let (cases, fail) = first_mismatch((0..=500).map(|n| (format!("n={n}"), padovan_closed(n), pad[n].clone())));
    r.check("padovan closed sum = recurrence (n<=500)", cases, fail);

    let gf = padovan_gf_series(500);
    let (cases, fail) = first_mismatch((0..=500).map(|n| (format!("n={n}"), gf[n].clone(), pad[n].clone())));
    r.check("padovan generating function (n<=500)", cases, fail);

    let f: Vec<BigInt> = fibonacci_terms(202).into_iter().map(BigInt::from).collect();
    let (cases, fail) = first_mismatch((1..=200).map(|n| {
        let sign = if n % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        (format!("n={n}"), &f[n + 1] * &f[n - 1] - &f[n] * &f[n], sign)
    }));
    r.check("Cassini identity (n<=200)", cases, fail);

    let rows = lucas_triangle_rows(65);
    let (cases, fail) = first_mismatch(rows.iter().flat_map(|row| {
        row.entries.iter().enumerate().map(move |(k, e)| {
            let formula = lucas_triangle(row.n as u64, k as i64).expect("k within row");
            (format!("Y({},{k})", row.n), formula, e.clone())
        })
    }));
    r.check("Lucas triangle formula = recurrence (n<=64)", cases, fail);
    let (cases, fail) = first_mismatch(rows.iter().skip(1).map(|row| {
        let sum: BigUint = row.entries.iter().sum();
        (format!("row {}", row.n), sum, BigUint::from(3u32) << (row.n - 1))
    }));
    r.check("Lucas triangle row sums = 3*2^(n-1)", cases, fail);

    let (cases, fail) = first_mismatch((-6i64..=12).flat_map(|n| {
        (-6i64..=14).map(move |k| {
            let inside = (0..=n).contains(&k) || (n, k) == (-1, -1);
            (format!("C({n},{k})"), binom_ext(n, k) != BigUint::ZERO, inside)
        })
    }));
    r.check("extended binomial support", cases, fail);

    let spot = [
        ("F(7)", fib(7), 13u32),
        ("L(5)", lucas(5), 11),
        ("p(9)", padovan(9), 9),
        ("C(-1,-1)", binom_ext(-1, -1), 1),
        ("Y(5,3)", lucas_triangle(5, 3).unwrap_or_default(), 16),
    ];
    let (cases, fail) =
        first_mismatch(spot.into_iter().map(|(name, got, want)| (name.to_string(), got, BigUint::from(want))));
    r.check("spot values", cases, fail);
    r
}

/// The drawing of `O_4`: a 2x3 grid with a pendant on one corner.
pub fn grid_plus_pendant() -> LabeledGraph {
    let labels = ["a1", "a2", "a3", "b1", "b2", "b3", "p"].map(String::from).to_vec();
    LabeledGraph::from_edges(labels, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5), (0, 6)])
}

pub fn graph_checks(max_n: usize) -> Report {
    let mut r = Report::new(format!("graphs n<={max_n}"));
    let built: Vec<(Family, Vec<LabeledGraph>)> = Family::ALL
        .iter()
        .map(|&f| (f, (0..=max_n).map(|n| graphs::build(f, n).expect("within default cap")).collect()))
        .collect();
    let fibs = fibonacci_terms(max_n + 3);
    let lucs = lucas_terms(max_n + 3);

    for (family, gs) in &built {
        let (cases, fail) = first_mismatch(gs.iter().enumerate().map(|(n, g)| {
            let want = match family {
                Family::Gamma => fibs[n + 2].clone(),
                Family::Omega if n < 2 => BigUint::from(n + 1),
                Family::Omega => lucs[n].clone(),
            };
            (format!("n={n}"), BigUint::from(g.vertex_count()), want)
        }));
        let name = match family {
            Family::Gamma => "|V| = F(n+2)",
            Family::Omega => "|V| = L(n) (n>=2), 1, 2",
        };
        r.check(format!("{family} {name}"), cases, fail);

        let (cases, fail) =
            first_mismatch(gs.iter().enumerate().map(|(n, g)| (format!("n={n}"), g.is_connected(), true)));
        r.check(format!("{family} connected"), cases, fail);

        let limit = max_n.min(10);
        let mut subcopies = 0;
        let mut failure = None;
        for g in &gs[..=limit] {
            for copy in g.subcopies() {
                subcopies += 1;
                if let Err(e) = g.canonical_subgraph(copy.name) {
                    failure.get_or_insert_with(|| format!("{}: {e}", g.name()));
                }
            }
        }
        r.check(format!("{family} subcopies induce the named members (n<={limit})"), subcopies, failure);

        let split_from = family.recurrence_start();
        let (cases, fail) = first_mismatch(gs[..=limit].iter().skip(split_from).map(|g| {
            let mut seen = vec![0u8; g.vertex_count()];
            for name in ["pair", "third"] {
                let copy = g.subcopy(name).expect("annotated from the split index on");
                let lifted = if name == "pair" {
                    // The pair subcopy is 00·G(n-2); its partner is 10·G(n-2).
                    let second = g.subcopy("second").expect("present with pair");
                    copy.vertices.iter().chain(&second.vertices).copied().collect::<Vec<_>>()
                } else {
                    copy.vertices.clone()
                };
                lifted.iter().for_each(|&v| seen[v] += 1);
            }
            (g.name(), seen.iter().all(|&c| c == 1), true)
        }));
        r.check(format!("{family} 00/10 pair and 010 part partition the vertices"), cases, fail);
    }

    let gamma = &built[0].1;
    let (cases, fail) = first_mismatch(gamma.iter().map(|g| {
        let n = g.vertex_count();
        let bad = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| {
            let d = g.label(u).bytes().zip(g.label(v).bytes()).filter(|(a, b)| a != b).count();
            g.adjacent(u, v) != (d == 1)
        });
        (g.name(), bad.map_or("ok".to_string(), |(u, v)| format!("{}~{}", g.label(u), g.label(v))), "ok".into())
    }));
    r.check("gamma adjacency = Hamming distance 1", cases, fail);

    let omega = &built[1].1;
    let (cases, fail) = first_mismatch(omega.iter().enumerate().skip(4).map(|(n, g)| {
        let first = &g.subcopy("first").expect("n>=1").vertices;
        let second = &g.subcopy("second").expect("n>=4").vertices;
        let perfect = second.iter().all(|&b| first.iter().filter(|&&a| g.adjacent(a, b)).count() == 1);
        (format!("n={n}"), perfect, true)
    }));
    r.check("omega cross edges are a perfect matching on 10·O(n-2)", cases, fail);

    let (cases, fail) = first_mismatch(omega.iter().enumerate().skip(4).map(|(n, g)| {
        let want = omega[n - 1].edge_count() + omega[n - 2].edge_count() + omega[n - 2].vertex_count();
        (format!("n={n}"), g.edge_count(), want)
    }));
    r.check("omega E(n) = E(n-1) + E(n-2) + |V(n-2)|", cases, fail);

    if max_n >= 7 {
        let drawn = [(1usize, 0usize), (2, 1), (3, 2), (4, 3), (7, 8), (11, 15), (18, 30), (29, 56)];
        let (cases, fail) = first_mismatch(
            drawn
                .iter()
                .enumerate()
                .map(|(n, &(v, e))| (format!("n={n}"), (omega[n].vertex_count(), omega[n].edge_count()), (v, e)))
                .map(|(c, a, b)| (c, format!("{a:?}"), format!("{b:?}"))),
        );
        r.check("omega vertex and edge counts for n<=7", cases, fail);
    }
    if max_n >= 4 {
        let iso = find_isomorphism(&omega[4], &grid_plus_pendant());
        match iso {
            Some(map) => r.pass(
                "omega 4 is the 2x3 grid with a corner pendant",
                format!(
                    "isomorphism {}",
                    map.iter()
                        .enumerate()
                        .map(|(v, &w)| format!("{}->{}", omega[4].label(v), grid_plus_pendant().label(w)))
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
            ),
            None => r.check("omega 4 is the 2x3 grid with a corner pendant", 1, Some("no isomorphism".into())),
        }
    }
    if max_n >= 2 {
        let edgelist = gamma[1].export(ExportFormat::EdgeList);
        let dot = gamma[2].export(ExportFormat::Dot);
        let ok = edgelist == "0 1\n" && dot.matches(" -- ").count() == 2 && dot == gamma[2].export(ExportFormat::Dot);
        r.check("export formats", 2, (!ok).then(|| format!("edge list {edgelist:?}")));
    }
    r
}

pub fn solver_checks(max_n: usize) -> Report {
    let mut r = Report::new(format!("factors n<={max_n}"));
    for family in Family::ALL {
        let polys = qpoly_table(family, max_n);
        let pad = padovan_terms(max_n + 2);
        let mut cube_cases = 0;
        let mut cube_fail = None;
        let mut rows = Vec::new();
        for n in 0..=max_n {
            let g = graphs::build(family, n).expect("within default cap");
            let name = g.name();
            let cubes = enumerate_cubes(&g, n);
            for (k, group) in cubes.iter().enumerate() {
                for c in group {
                    cube_cases += 1;
                    let edges = c
                        .vertices
                        .iter()
                        .enumerate()
                        .flat_map(|(i, &u)| c.vertices[i + 1..].iter().map(move |&v| (u, v)))
                        .filter(|&(u, v)| g.adjacent(u, v))
                        .count();
                    if edges != k << k >> 1 {
                        cube_fail.get_or_insert_with(|| format!("{name}: a {k}-cube with {edges} edges"));
                    }
                }
            }
            let edge_cubes: Vec<(usize, usize)> =
                cubes.get(1).map_or_else(Vec::new, |c| c.iter().map(|c| (c.vertices[0], c.vertices[1])).collect());
            if edge_cubes != g.edges() {
                cube_fail.get_or_insert_with(|| format!("{name}: 1-cubes differ from the edge set"));
            }

            let run = |solver: fn(&LabeledGraph) -> crate::Result<CubeFactor>| solver(&g).expect("within cap");
            let exact = run(exact_min_factor);
            let greedy = run(greedy_layered_factor);
            let structural = structural_factor(family, n).expect("within cap");
            let again = run(exact_min_factor);
            rows.push((n, name, g, exact, greedy, structural, again));
        }
        r.check(
            format!("{family} enumerated k-cubes have k*2^(k-1) edges, 1-cubes are the edges"),
            cube_cases,
            cube_fail,
        );

        let check_all = |r: &mut Report, what: &str, pick: &dyn Fn(&Row) -> &CubeFactor| {
            let (cases, fail) = first_mismatch(rows.iter().map(|row| {
                let outcome = match verify_factor(&row.2, pick(row)) {
                    Ok(_) => "valid".to_string(),
                    Err(v) => v.to_string(),
                };
                (row.1.clone(), outcome, "valid".to_string())
            }));
            r.check(format!("{family} {what} factors verify"), cases, fail);
        };
        check_all(&mut r, "exact", &|row| &row.3);
        check_all(&mut r, "greedy", &|row| &row.4);
        check_all(&mut r, "structural", &|row| &row.5);

        let (cases, fail) =
            first_mismatch(rows.iter().map(|row| (row.1.clone(), BigUint::from(row.3.len()), pad[row.0 + 1].clone())));
        r.check(format!("{family} exact part count = p(n+1)"), cases, fail);

        for (what, idx) in [("greedy", 4usize), ("structural", 5)] {
            let (cases, fail) = first_mismatch(rows.iter().map(|row| {
                let f = if idx == 4 { &row.4 } else { &row.5 };
                (
                    row.1.clone(),
                    f.profile().as_polynomial_coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "),
                    polys[row.0].table_row(),
                )
            }));
            r.check(format!("{family} {what} profile = recurrence"), cases, fail);
        }

        let differing: Vec<String> = rows
            .iter()
            .filter(|row| !row.3.profile().matches(&polys[row.0]))
            .map(|row| format!("{} ({})", row.1, row.3.profile()))
            .collect();
        r.info(
            format!("{family} exact profile vs recurrence"),
            if differing.is_empty() {
                format!("the minimum factor found has the recurrence profile for every n<={max_n}")
            } else {
                format!("minimum factors with a different profile: {}", differing.join(", "))
            },
        );

        let (cases, fail) = first_mismatch(rows.iter().map(|row| (row.1.clone(), row.3 == row.6, true)));
        r.check(format!("{family} exact search is deterministic"), cases, fail);

        let (cases, fail) = first_mismatch(rows.iter().map(|row| {
            let back = CubeFactor::from_json(&row.2, &row.5.to_json(&row.2)).map_err(|e| e.to_string());
            (row.1.clone(), back.as_ref().ok() == Some(&row.5), true)
        }));
        r.check(format!("{family} factor JSON round trip"), cases, fail);
    }

    // Closed form and series routes against shifted diagonals of the
    // recurrence table.
    let mut cases = 0;
    let mut failure = None;
    for family in Family::ALL {
        for n in 2..=max_n {
            let profile = antidiagonal_profile(family, n, 4);
            for (k, v) in profile.shifted.iter().enumerate() {
                cases += 1;
                if *v != q_closed(family, n + 2 * k, k) {
                    failure.get_or_insert_with(|| format!("{family} n={n} k={k}"));
                }
            }
            let gf = qpoly(family, n, Method::GeneratingFunction);
            cases += 1;
            if gf.coeffs.iter().sum::<BigUint>() != profile_sum(family, n) {
                failure.get_or_insert_with(|| format!("{family} n={n}: series row sum"));
            }
        }
    }
    r.check("shifted diagonals and series rows agree with the closed form", cases, failure);
    r
}

type Row = (usize, String, LabeledGraph, CubeFactor, CubeFactor, CubeFactor, CubeFactor);

fn profile_sum(family: Family, n: usize) -> BigUint {
    qpoly(family, n, Method::Closed).coeffs.iter().sum()
}

/// Local sequences and the OEIS entries they should line up with.
pub const OEIS_PAIRS: [(&str, LocalSequence); 4] = [
    ("A000931", LocalSequence::Named(NamedSequence::Padovan)),
    ("A000045", LocalSequence::Named(NamedSequence::Fibonacci)),
    ("A000032", LocalSequence::Named(NamedSequence::Lucas)),
    ("A029635", LocalSequence::LucasTriangle),
];

/// Shift scans against the b-files in [`OEIS_PAIRS`]. Fetch and cache
/// errors are returned rather than recorded.
pub fn oeis_checks(opts: &FetchOptions) -> crate::Result<Report> {
    let mut r = Report::new("oeis");
    for (id, local) in OEIS_PAIRS {
        let remote = fetch_bfile(id, opts)?;
        let scan = shift_scan(&local.record(200), &remote, -5..=5);
        let name = format!("{} against {id}", local.name());
        match scan.best() {
            Some(best) => r.pass(name, format!("shift {:+} over {} terms", best.shift, best.overlap)),
            None => r.check(name, scan.results.len(), Some("no shift in -5..=5 matches".into())),
        }
    }
    Ok(r)
}
