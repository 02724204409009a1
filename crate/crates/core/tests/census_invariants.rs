//! Census-level invariants: engine independence of the report, coherence of
//! the polynomial-equality classes, the perfect-matching corner, and the
//! generator at its upper limit.

mod common;

use ecpoly::canon::canonical_code;
use ecpoly::census::{census_report, generate_cubic, partition_by_polynomial};
use ecpoly::engines::{edge_cover_polynomial, Engine};
use ecpoly::graph::Graph;
use num_bigint::{BigInt, BigUint};

/// Independent perfect matching counter: match the lowest free vertex or
/// fail, never consulting the counting engines.
fn count_perfect_matchings(g: &Graph) -> u64 {
    fn rec(g: &Graph, free: u64) -> u64 {
        if free == 0 {
            return 1;
        }
        let v = free.trailing_zeros() as usize;
        let mut total = 0;
        let mut candidates = g.adj(v) & free;
        while candidates != 0 {
            let u = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            total += rec(g, free & !(1 << v) & !(1 << u));
        }
        total
    }
    if g.order() % 2 != 0 {
        return 0;
    }
    rec(
        g,
        if g.order() == 64 {
            u64::MAX
        } else {
            (1 << g.order()) - 1
        },
    )
}

fn mixed_corpus() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 2..=6usize {
        let mut seen = std::collections::HashSet::new();
        for g in common::all_labeled_graphs(n) {
            if g.has_isolated_vertex() {
                continue;
            }
            if seen.insert(canonical_code(&g).unwrap()) {
                graphs.push(g);
            }
        }
    }
    graphs
}

#[test]
fn census_report_is_engine_independent() {
    for n in [6usize, 8, 10] {
        let dp = census_report(n, 3, Engine::Dp).unwrap();
        let ie = census_report(n, 3, Engine::InclusionExclusion).unwrap();
        let brute = census_report(n, 3, Engine::Brute).unwrap();
        assert_eq!(dp.graphs, ie.graphs);
        assert_eq!(dp.matrix, ie.matrix);
        assert_eq!(dp.classes, ie.classes);
        assert_eq!(dp.matrix, brute.matrix);
        assert_eq!(dp.classes, brute.classes);
    }
}

#[test]
fn generator_handles_order_twelve() {
    let graphs = generate_cubic(12).unwrap();
    assert_eq!(graphs.len(), 94);
    assert_eq!(graphs.iter().filter(|g| g.is_connected()).count(), 85);
    for g in &graphs {
        assert_eq!(g.degree_stats().regular_k, Some(3));
    }
}

#[test]
fn equivalence_classes_group_known_pairs() {
    let graphs = mixed_corpus();
    assert_eq!(graphs.len(), 1 + 2 + 7 + 23 + 122);
    let classes = partition_by_polynomial(&graphs, Engine::InclusionExclusion).unwrap();
    assert_eq!(classes.len(), 143);

    // The path on three vertices and the two-edge matching share E = x^2
    // without being isomorphic.
    let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
    let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
    let x_squared = classes
        .iter()
        .find(|c| c.members.contains(&canonical_code(&p3).unwrap()))
        .expect("P3's class present");
    assert!(x_squared
        .members
        .contains(&canonical_code(&two_k2).unwrap()));
    assert_eq!(x_squared.polynomial.to_string(), "x^2");
}

#[test]
fn regular_members_force_degree_homogeneous_classes() {
    let graphs = mixed_corpus();
    let by_code: std::collections::HashMap<_, _> = graphs
        .iter()
        .map(|g| (canonical_code(g).unwrap(), g))
        .collect();
    let classes = partition_by_polynomial(&graphs, Engine::Dp).unwrap();
    let mut classes_with_regular = 0;
    for class in &classes {
        let members: Vec<&&Graph> = class.members.iter().map(|c| &by_code[c]).collect();
        let regular: Option<(usize, usize)> = members.iter().find_map(|g| {
            g.degree_stats()
                .regular_k
                .filter(|&k| k >= 2)
                .map(|k| (k, g.order()))
        });
        if let Some((k, n)) = regular {
            classes_with_regular += 1;
            for g in &members {
                assert_eq!(
                    g.degree_stats().regular_k,
                    Some(k),
                    "class of a {k}-regular graph contains {g:?}"
                );
                assert_eq!(g.order(), n);
            }
        }
    }
    assert!(classes_with_regular > 10, "corpus has regular graphs");
}

#[test]
fn minimum_covers_of_perfectly_matchable_graphs_are_matchings() {
    let mut checked = 0;
    let corpus = mixed_corpus()
        .into_iter()
        .chain(generate_cubic(8).unwrap())
        .chain(std::iter::once(Graph::petersen()));
    for g in corpus {
        let n = g.order();
        if n % 2 != 0 || g.maximum_matching_size() != n / 2 {
            continue;
        }
        let pm = count_perfect_matchings(&g);
        assert!(pm > 0);
        let e_half = edge_cover_polynomial(&g, Engine::Dp).unwrap().coeff(n / 2);
        assert_eq!(e_half, BigUint::from(pm), "{g:?}");
        checked += 1;
    }
    assert!(checked > 40, "only {checked} perfectly matchable graphs");

    assert_eq!(count_perfect_matchings(&Graph::petersen()), 6);
}

#[test]
fn petersen_total_cover_count() {
    // Sum of the engine-computed coefficient row.
    let p = edge_cover_polynomial(&Graph::petersen(), Engine::InclusionExclusion).unwrap();
    assert_eq!(p.evaluate(&BigInt::from(1)), BigInt::from(10870));
}
