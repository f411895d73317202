//! Property tests over randomly generated small graphs: representation
//! invariants, ordering guarantees, monotonicity of the infection process,
//! and agreement between the fast and reference potential paths.

use proptest::prelude::*;

use bootperc::bounds::min_perc_lower_bound;
use bootperc::degeneracy::{compute_ordering, degeneracy_bruteforce, verify_ordering};
use bootperc::graph::check_graph_invariants;
use bootperc::minperc::enumerate_minimal_percolating_sets;
use bootperc::percolation::{is_minimal_percolating, run};
use bootperc::potential::{
    compute_potential_trace, compute_potential_trace_by_recount, verify_claim,
};
use bootperc::{Graph, Rational, VertexSet};

/// Random graph on 1..=max_n vertices with an arbitrary edge subset.
fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A graph together with one vertex subset.
fn graph_with_subset(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    small_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        proptest::collection::vec(any::<bool>(), n).prop_map(move |bits| {
            let mut set = VertexSet::empty(n);
            for (v, &take) in bits.iter().enumerate() {
                if take {
                    set.insert(v);
                }
            }
            (g.clone(), set)
        })
    })
}

/// A graph with a nested pair of subsets a0 inside a0_prime.
fn graph_with_nested_subsets(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    graph_with_subset(max_n).prop_flat_map(|(g, small)| {
        let n = g.n();
        proptest::collection::vec(any::<bool>(), n).prop_map(move |bits| {
            let mut big = small.clone();
            for (v, &take) in bits.iter().enumerate() {
                if take {
                    big.insert(v);
                }
            }
            (g.clone(), small.clone(), big)
        })
    })
}

proptest! {
    #[test]
    fn generated_graphs_satisfy_invariants_and_round_trip(g in small_graph(10)) {
        check_graph_invariants(&g).unwrap();
        let back = Graph::from_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(g, back);
    }

    #[test]
    fn peeling_ordering_is_valid_and_optimal(g in small_graph(7)) {
        let ord = compute_ordering(&g);
        prop_assert!(verify_ordering(&g, ord.order(), ord.d()).unwrap());
        if ord.d() > 0 {
            prop_assert!(!verify_ordering(&g, ord.order(), ord.d() - 1).unwrap());
        }
        prop_assert_eq!(ord.d(), degeneracy_bruteforce(&g).unwrap());
    }

    #[test]
    fn infection_is_monotone_in_the_initial_set(
        (g, a0, a0_prime) in graph_with_nested_subsets(10),
        r in 1usize..=4,
    ) {
        let small = run(&g, &a0, r).unwrap();
        let big = run(&g, &a0_prime, r).unwrap();
        prop_assert!(small.a_f().is_subset_of(big.a_f()));
    }

    #[test]
    fn infection_is_antitone_in_the_threshold(
        (g, a0) in graph_with_subset(10),
        r in 1usize..=3,
        bump in 0usize..=3,
    ) {
        let loose = run(&g, &a0, r).unwrap();
        let strict = run(&g, &a0, r + bump).unwrap();
        prop_assert!(strict.a_f().is_subset_of(loose.a_f()));
    }

    #[test]
    fn traces_validate_and_respect_degree_limits(
        (g, a0) in graph_with_subset(10),
        r in 1usize..=4,
    ) {
        let trace = run(&g, &a0, r).unwrap();
        trace.validate(&g).unwrap();
        prop_assert!(trace.tau() <= trace.infection_order().len());
        for v in 0..g.n() {
            if g.degree(v) < r && !a0.contains(v) {
                prop_assert!(!trace.a_f().contains(v));
            }
        }
    }

    #[test]
    fn potential_paths_agree_and_claim_holds(
        (g, a0) in graph_with_subset(10),
        extra in 1usize..=3,
    ) {
        let ord = compute_ordering(&g);
        let r = ord.d() + extra;
        let trace = run(&g, &a0, r).unwrap();
        let fast = compute_potential_trace(&g, &ord, &trace).unwrap();
        let slow = compute_potential_trace_by_recount(&g, &ord, &trace).unwrap();
        prop_assert_eq!(&fast, &slow);
        prop_assert!(fast.initial() <= (ord.d() * a0.len()) as u64);
        prop_assert!(verify_claim(&fast).unwrap());
        // once the potential hits zero nothing else can fire
        for (i, &psi) in fast.psi().iter().enumerate() {
            if psi == 0 {
                prop_assert_eq!(i, fast.psi().len() - 1);
            }
        }
    }

    #[test]
    fn minimal_set_enumeration_is_sound_and_bounded(g in small_graph(6), r in 1usize..=3) {
        let sets = enumerate_minimal_percolating_sets(&g, r, g.n()).unwrap();
        let d = compute_ordering(&g).d();
        for s in &sets {
            prop_assert!(is_minimal_percolating(&g, s, r).unwrap());
            if r > d {
                let bound = min_perc_lower_bound(g.n(), d, r);
                prop_assert!(Rational::from_int(s.len() as i64) >= bound);
            }
        }
        // sorted by size, then lexicographically
        for pair in sets.windows(2) {
            let (a, b) = (pair[0].to_vec(), pair[1].to_vec());
            prop_assert!((a.len(), a) <= (b.len(), b));
        }
    }
}
