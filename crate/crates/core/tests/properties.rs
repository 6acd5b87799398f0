//! Property tests for the structural and spectral invariants, checked
//! against independent oracles (triple brute force, polynomial bisection).

mod support;

use cover_energy::covering::{self, CoverSet};
use cover_energy::families::{gen_star_rays, StarParams};
use cover_energy::graph::{Distance, Graph};
use cover_energy::io;
use cover_energy::spectral::{self, CLUSTER_TOLERANCE};
use num_traits::ToPrimitive;
use proptest::prelude::*;

// Frozen from `support::real_roots_bisection` on λ⁵ − λ⁴ − 4λ³ + 2λ² + 3λ − 1,
// the exact characteristic polynomial of the 5-vertex star (2 rays of
// length 2) with the center covered.
const STAR2_EIGENVALUES: [f64; 5] = [
    2.1700864866260337,
    1.0,
    0.3111078174659819,
    -1.0,
    -1.4811943040920156,
];
const STAR2_ENERGY: f64 = 5.962388608184031;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e);
            Graph::new(n, edges).expect("generated edges are valid")
        })
    })
}

fn arb_graph_with_cover(max_n: usize) -> impl Strategy<Value = (Graph, CoverSet)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        prop::collection::vec(any::<bool>(), n).prop_map(move |mask| {
            let members = mask
                .iter()
                .enumerate()
                .filter(|(_, &m)| m)
                .map(|(v, _)| v);
            let q = CoverSet::three(members, n).expect("members in range");
            (g.clone(), q)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn p3_count_matches_triple_bruteforce(g in arb_graph(9)) {
        let enumerated = g.enumerate_p3();
        let expected: usize = g.vertices().map(|v| {
            let d = g.degree(v);
            d * d.saturating_sub(1) / 2
        }).sum();
        prop_assert_eq!(enumerated.len(), expected);

        let brute = support::p3_bruteforce(&g);
        let listed: std::collections::BTreeSet<_> = enumerated
            .iter()
            .map(|p| (p.first, p.middle, p.last))
            .collect();
        prop_assert_eq!(listed.len(), enumerated.len());
        prop_assert_eq!(listed, brute);
    }

    #[test]
    fn distance_is_zero_exactly_on_the_set(
        (g, q) in arb_graph_with_cover(9)
    ) {
        let dist = g.distances_from_set(q.members());
        for v in g.vertices() {
            prop_assert_eq!(dist[v] == Distance::Hops(0), q.contains(v));
        }
        // Lipschitz along edges when both ends are reachable.
        for &(u, v) in g.edges() {
            if let (Some(du), Some(dv)) = (dist[u].hops(), dist[v].hops()) {
                prop_assert!(du.abs_diff(dv) <= 1, "edge ({u}, {v}): {du} vs {dv}");
            }
        }
    }

    #[test]
    fn covering_monotone_under_supersets(
        (g, extra) in arb_graph_with_cover(8)
    ) {
        let base = covering::min_3_covering_exact(&g);
        prop_assert!(covering::is_3_covering(&g, &base));
        let members = base.members().iter().copied().chain(extra.members().iter().copied());
        let superset = CoverSet::three(members, g.vertex_count()).expect("in range");
        prop_assert!(covering::is_3_covering(&g, &superset));
    }

    #[test]
    fn spectrum_identities(
        (g, q) in arb_graph_with_cover(8)
    ) {
        let m = spectral::build_covering_matrix(&g, &q);
        let s = spectral::eigenvalues_symmetric(&m).expect("symmetric input converges");
        prop_assert_eq!(s.len(), g.vertex_count());

        // Trace identity: Σλ = |Q|; Frobenius identity: Σλ² = 2|E| + |Q|.
        let sum: f64 = s.eigenvalues().iter().sum();
        let sum_sq: f64 = s.eigenvalues().iter().map(|x| x * x).sum();
        prop_assert!((sum - q.len() as f64).abs() < 1e-9, "trace: {sum}");
        let expected_sq = 2.0 * g.edge_count() as f64 + q.len() as f64;
        prop_assert!((sum_sq - expected_sq).abs() < 1e-9, "frobenius: {sum_sq}");

        // Energy bounds |trace| and descends sorted.
        let report = spectral::covering_energy(&g, &q).expect("converges");
        prop_assert!(report.energy >= sum.abs() - 1e-12);
        for w in s.eigenvalues().windows(2) {
            prop_assert!(w[0] >= w[1]);
        }
    }

    #[test]
    fn char_poly_tracks_trace_and_roots(
        (g, q) in arb_graph_with_cover(7)
    ) {
        let m = spectral::build_covering_matrix(&g, &q);
        let p = spectral::char_poly(&m);
        prop_assert_eq!(p.degree(), g.vertex_count());

        // Coefficient of λ^(n−1) is −|Q| (minus the trace), exactly.
        if g.vertex_count() > 0 {
            let c1 = p.coefficients()[1].to_i64().expect("small coefficient");
            prop_assert_eq!(c1, -(q.len() as i64));
        }

        // Every numeric eigenvalue is a root of the exact polynomial.
        let s = spectral::eigenvalues_symmetric(&m).expect("converges");
        for &lambda in s.eigenvalues() {
            let residual = p.scaled_residual(lambda);
            prop_assert!(residual < 1e-6, "λ = {lambda}: residual {residual}");
        }
    }

    #[test]
    fn energy_invariant_under_relabeling(
        ((g, q), perm) in arb_graph_with_cover(8).prop_flat_map(|gq| {
            let n = gq.0.vertex_count();
            (Just(gq), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })
    ) {
        let relabeled_edges = g.edges().iter().map(|&(u, v)| (perm[u], perm[v]));
        let relabeled = Graph::new(g.vertex_count(), relabeled_edges).expect("permutation keeps validity");
        let relabeled_q = CoverSet::three(
            q.members().iter().map(|&v| perm[v]),
            g.vertex_count(),
        ).expect("in range");

        let original = spectral::covering_energy(&g, &q).expect("converges");
        let shuffled = spectral::covering_energy(&relabeled, &relabeled_q).expect("converges");
        prop_assert!(
            (original.energy - shuffled.energy).abs() < 1e-9,
            "{} vs {}", original.energy, shuffled.energy
        );
    }

    #[test]
    fn graph_formats_round_trip(g in arb_graph(9)) {
        let text = io::write_edge_list(&g);
        prop_assert_eq!(&io::parse_edge_list(&text).expect("round trip"), &g);
        let json = io::write_json(&g, None);
        let (parsed, cover) = io::parse_json(&json).expect("round trip");
        prop_assert_eq!(&parsed, &g);
        prop_assert!(cover.is_none());
    }
}

#[test]
fn star2_spectrum_matches_bisection_oracle() {
    // Oracle: roots of the exact characteristic polynomial.
    let oracle = support::real_roots_bisection(&[1.0, -1.0, -4.0, 2.0, 3.0, -1.0], 20_000);
    assert_eq!(oracle.len(), 5);
    let mut oracle_desc = oracle.clone();
    oracle_desc.reverse();
    for (o, frozen) in oracle_desc.iter().zip(STAR2_EIGENVALUES) {
        assert!((o - frozen).abs() < 1e-10, "oracle {o} vs frozen {frozen}");
    }

    let g = gen_star_rays(StarParams { rays: 2, ray_len: 2 }).unwrap();
    let q = CoverSet::three([0], 5).unwrap();
    let m = spectral::build_covering_matrix(&g, &q);
    let s = spectral::eigenvalues_symmetric(&m).unwrap();
    for (computed, frozen) in s.eigenvalues().iter().zip(STAR2_EIGENVALUES) {
        assert!((computed - frozen).abs() < 1e-10, "{computed} vs {frozen}");
    }

    let report = spectral::covering_energy(&g, &q).unwrap();
    assert!((report.energy - STAR2_ENERGY).abs() < 1e-10);
    assert!((support::poly_eval(&[1.0, -1.0, -3.0, 1.0], oracle_desc[0])).abs() < 1e-9);
}

#[test]
fn star_clusters_have_expected_multiplicities() {
    for m in 2..=8 {
        let g = gen_star_rays(StarParams { rays: m, ray_len: 2 }).unwrap();
        let q = CoverSet::three([0], g.vertex_count()).unwrap();
        let s = spectral::eigenvalues_symmetric(&spectral::build_covering_matrix(&g, &q)).unwrap();
        for target in [1.0, -1.0] {
            let cluster = s
                .clusters()
                .iter()
                .find(|c| (c.value - target).abs() <= CLUSTER_TOLERANCE)
                .unwrap_or_else(|| panic!("m={m}: no cluster at {target}"));
            assert_eq!(cluster.multiplicity, m - 1, "m={m}, target {target}");
        }
    }
}

#[test]
fn exact_search_is_deterministic() {
    let g = cover_energy::families::gen_random(10, 0.3, 99).unwrap();
    let a = covering::min_3_covering_exact(&g);
    let b = covering::min_3_covering_exact(&g);
    assert_eq!(a, b);
}
