//! Property tests for the format round-trips, canonical labeling, and the
//! polynomial algebra.

mod common;

use ecpoly::canon::canonical_code;
use ecpoly::engines::{edge_cover_polynomial, Engine};
use ecpoly::graph::Graph;
use ecpoly::graph6::{parse_graph6, to_graph6};
use ecpoly::poly::EcPolynomial;
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::prelude::*;

/// A labeled graph of order 0..=12 from a bit pool.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |picks| {
            let mut pairs = Vec::new();
            let mut pos = 0;
            for j in 1..n {
                for i in 0..j {
                    if picks[pos] {
                        pairs.push((i, j));
                    }
                    pos += 1;
                }
            }
            Graph::from_edge_list(n, &pairs).unwrap()
        })
    })
}

fn arb_poly() -> impl Strategy<Value = EcPolynomial> {
    proptest::collection::vec(0u64..50, 0..8)
        .prop_map(|cs| EcPolynomial::from_coeffs(cs.into_iter().map(BigUint::from).collect()))
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        let line = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&line).unwrap(), g);
    }

    #[test]
    fn graph6_parser_never_panics(s in "\\PC{0,20}") {
        // Arbitrary text either parses or errors, never panics.
        let _ = parse_graph6(&s);
    }

    #[test]
    fn canonical_code_relabel_invariant(g in arb_graph(8), seed in any::<u64>()) {
        let n = g.order();
        // Fisher-Yates from the seed.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let relabeled = g.relabel(&perm);
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&relabeled).unwrap());
    }

    #[test]
    fn gallai_identity(g in arb_graph(10)) {
        prop_assume!(g.order() > 0 && !g.has_isolated_vertex());
        prop_assert_eq!(g.edge_cover_number() + g.maximum_matching_size(), g.order());
    }

    #[test]
    fn evaluation_is_multiplicative(p in arb_poly(), q in arb_poly(), x in -5i64..=5) {
        let x = BigInt::from(x);
        let lhs = p.multiply(&q).evaluate(&x);
        prop_assert_eq!(lhs, p.evaluate(&x) * q.evaluate(&x));
    }

    #[test]
    fn binomial_power_recognition_round_trip(a in 0usize..6, b in 0usize..9) {
        let p = EcPolynomial::monomial_times_binomial_power(a, b);
        prop_assert_eq!(p.as_monomial_times_binomial_power().unwrap(), Some((a, b)));
    }

    #[test]
    fn corona_degree_shape(g in arb_graph(7), i in 1usize..=3) {
        prop_assume!(g.order() * (1 + i) <= 64);
        let n = g.order();
        let corona = g.corona_empty(i).unwrap();
        let stats = corona.degree_stats();
        // Exactly n*i pendants, and each original degree grew by i.
        prop_assert_eq!(stats.degrees.iter().filter(|&&d| d == 1).count(),
            n * i + (0..n).filter(|&v| g.degree(v) + i == 1).count());
        for v in 0..n {
            prop_assert_eq!(corona.degree(v), g.degree(v) + i);
        }
        prop_assert_eq!(corona.order(), n * (1 + i));
        prop_assert_eq!(corona.size(), g.size() + n * i);
    }
}

/// Engine output on disjoint unions factors as the polynomial product.
#[test]
fn disjoint_union_multiplicativity_exhaustive() {
    use rayon::prelude::*;

    // One representative per isomorphism class of isolated-free graphs with
    // 2..=6 vertices (the unit case n=0 is covered separately).
    let mut reps: Vec<Graph> = Vec::new();
    for n in 2..=6usize {
        let mut seen = std::collections::HashSet::new();
        for g in common::all_labeled_graphs(n) {
            if g.has_isolated_vertex() {
                continue;
            }
            if seen.insert(canonical_code(&g).unwrap()) {
                reps.push(g);
            }
        }
    }
    assert_eq!(reps.len(), 1 + 2 + 7 + 23 + 122);

    let polys: Vec<EcPolynomial> = reps
        .iter()
        .map(|g| edge_cover_polynomial(g, Engine::InclusionExclusion).unwrap())
        .collect();

    let pairs: Vec<(usize, usize)> = (0..reps.len())
        .flat_map(|i| (i..reps.len()).map(move |j| (i, j)))
        .collect();
    pairs.into_par_iter().for_each(|(i, j)| {
        let union = reps[i].disjoint_union(&reps[j]).unwrap();
        let direct = edge_cover_polynomial(&union, Engine::InclusionExclusion).unwrap();
        assert_eq!(
            direct,
            polys[i].multiply(&polys[j]),
            "union of {:?} and {:?}",
            reps[i],
            reps[j]
        );
    });

    // Unit: the empty graph is the multiplicative identity.
    let empty = Graph::from_edge_list(0, &[]).unwrap();
    let e = edge_cover_polynomial(&empty, Engine::Dp).unwrap();
    assert!(e.is_unit());
    assert_eq!(polys[0].multiply(&e), polys[0]);
}

/// Support is contiguous from rho through m on isolated-free graphs.
#[test]
fn support_contiguity() {
    for g in common::random_isolated_free(60, 2, 10, 0xC0FFEE) {
        let p = edge_cover_polynomial(&g, Engine::Dp).unwrap();
        let rho = p.low_degree().unwrap();
        let m = p.degree().unwrap();
        assert_eq!(rho, g.edge_cover_number());
        assert_eq!(m, g.size());
        for i in rho..=m {
            assert!(!p.coeff(i).is_zero(), "gap at {i} for {g:?}");
        }
    }
}
