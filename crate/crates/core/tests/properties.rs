mod common;

use antiramsey::chromatic::chromatic_number;
use antiramsey::coloring::Coloring;
use antiramsey::counts::{h_count, h_prime_count, simonovits_bound, turan_count};
use antiramsey::decomposition::{decomposition_family, embeds_with_padding, subchromatic};
use antiramsey::gadget::regular_triangle_free;
use antiramsey::graph::{h_graph, h_prime_graph, turan};
use antiramsey::graph6::{from_graph6, to_graph6};
use antiramsey::oracle::{ar_exact, ar_exact_with, OracleOptions, DEFAULT_BUDGET};
use antiramsey::{
    canonical_form, contains_subgraph, has_rainbow_copy, representing_graphs, Graph, GraphFamily,
};
use proptest::prelude::*;

fn graph_on(n: usize) -> impl Strategy<Value = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).prop_map(move |m| common::from_mask(n, m))
}

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(graph_on)
}

fn coloring(min_n: usize, max_n: usize, max_colors: u32) -> impl Strategy<Value = Coloring> {
    (min_n..=max_n).prop_flat_map(move |n| {
        let m = n * n.saturating_sub(1) / 2;
        prop::collection::vec(0..max_colors, m).prop_map(move |c| Coloring::new(n, c).unwrap())
    })
}

/// A graph on `n <= max_n` vertices with at least one edge, without isolated vertices.
fn member(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(graph_on)
        .prop_filter("needs an edge", |g| g.edge_count() > 0)
        .prop_map(|g| g.strip_isolated())
}

/// Host with class capacities large enough that only `χ(L - S) <= p - 1` matters.
fn roomy_host(m: &Graph, p: usize, l: &Graph) -> Graph {
    common::padding_host(m, p, l.n() * (p - 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn edge_bound_holds_for_partite_graphs(
        p in 1usize..=5,
        assignment in prop::collection::vec((0usize..5, any::<bool>()), 0..=20),
        density in 0.0f64..=1.0,
        seed in any::<u64>(),
    ) {
        let n = assignment.len();
        let class: Vec<usize> = assignment.iter().map(|&(c, _)| c % p).collect();
        let mut state = seed;
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let r = (state >> 11) as f64 / (1u64 << 53) as f64;
                if class[a] != class[b] && r < density {
                    edges.push((a, b));
                }
            }
        }
        let mut sizes = vec![0u64; p];
        for &c in &class {
            sizes[c] += 1;
        }
        let e = edges.len() as i64;
        prop_assert!(e <= simonovits_bound(n as u64, p as u64, &sizes).unwrap());
    }
}

proptest! {
    #[test]
    fn host_edge_counts(n in 0usize..40, p in 1usize..7, k in 1usize..6) {
        prop_assert_eq!(turan(n, p).unwrap().edge_count() as u64, turan_count(n as u64, p as u64).unwrap());
        if k <= n + 1 {
            let (n64, p64, k64) = (n as u64, p as u64, k as u64);
            prop_assert_eq!(h_graph(n, p, k).unwrap().edge_count() as u64, h_count(n64, p64, k64).unwrap());
            prop_assert_eq!(
                h_prime_graph(n, p, k).unwrap().edge_count() as u64,
                h_prime_count(n64, p64, k64).unwrap()
            );
        }
    }

    #[test]
    fn turan_chromatic_number(n in 1usize..30, p in 1usize..8) {
        prop_assert_eq!(chromatic_number(&turan(n, p).unwrap()).unwrap(), p.min(n));
    }

    #[test]
    fn canonical_form_decides_isomorphism(
        (a, b, perm) in (1usize..=6).prop_flat_map(|n| {
            (graph_on(n), graph_on(n), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
        prop_assert_eq!(same, common::iso(&a, &b));
        prop_assert_eq!(canonical_form(&a.relabel(&perm)).unwrap(), canonical_form(&a).unwrap());
    }

    #[test]
    fn containment_matches_brute_force(pattern in small_graph(5), host in small_graph(7)) {
        prop_assert_eq!(contains_subgraph(&pattern, &host).unwrap(), common::contains(&pattern, &host));
    }

    #[test]
    fn chromatic_matches_brute_force(g in small_graph(7)) {
        prop_assert_eq!(chromatic_number(&g).unwrap(), common::chromatic(&g));
    }

    #[test]
    fn triangle_free_gadgets(m in 0usize..24, d in 0usize..5) {
        if let Ok(g) = regular_triangle_free(m, d) {
            let degrees = g.degrees();
            prop_assert!(g.is_triangle_free());
            prop_assert_eq!(g.n(), m);
            let short = degrees.iter().filter(|&&x| x + 1 == d).count();
            prop_assert!(degrees.iter().all(|&x| x == d || x + 1 == d));
            prop_assert_eq!(short, (m * d) % 2);
        }
    }

    #[test]
    fn rainbow_matches_brute_force(c in coloring(1, 5, 5), pattern in member(4)) {
        prop_assert_eq!(has_rainbow_copy(&c, &pattern).unwrap(), common::rainbow_copy(&c, &pattern));
    }

    #[test]
    fn splitting_a_colour_keeps_rainbow_copies(
        c in coloring(2, 6, 4),
        pattern in member(4),
        pick in any::<prop::sample::Index>(),
    ) {
        let edges: Vec<(usize, usize)> = antiramsey::coloring::kn_edges(c.n()).collect();
        let (u, v) = edges[pick.index(edges.len())];
        if has_rainbow_copy(&c, &pattern).unwrap() {
            prop_assert!(has_rainbow_copy(&c.recolor_fresh(u, v), &pattern).unwrap());
        }
    }

    #[test]
    fn rainbow_iff_some_representing_graph_contains(c in coloring(2, 5, 4), pattern in member(4)) {
        let via_reps = representing_graphs(&c)
            .unwrap()
            .any(|r| common::contains(&pattern, &r.graph));
        prop_assert_eq!(via_reps, has_rainbow_copy(&c, &pattern).unwrap());
    }

    #[test]
    fn normalize_is_idempotent(c in coloring(0, 7, 9)) {
        let once = c.normalize();
        prop_assert!(once.is_normalized());
        prop_assert_eq!(once.normalize(), once.clone());
        prop_assert_eq!(once.num_colors(), c.num_colors());
        for (i, j) in (0..c.colors().len()).flat_map(|i| (0..i).map(move |j| (i, j))) {
            prop_assert_eq!(c.colors()[i] == c.colors()[j], once.colors()[i] == once.colors()[j]);
        }
    }

    #[test]
    fn json_round_trip(c in coloring(0, 7, 9)) {
        let c = c.normalize();
        prop_assert_eq!(Coloring::from_json(&c.to_json()).unwrap(), c.clone());
        let text = serde_json::to_string(&c).unwrap();
        prop_assert_eq!(serde_json::from_str::<Coloring>(&text).unwrap(), c);
    }

    #[test]
    fn graph6_round_trip(g in (0usize..=11).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let edges = antiramsey::coloring::kn_edges(n).zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn padding_test_matches_explicit_host(l in small_graph(5), m in small_graph(4), p in 1usize..=3, t in 0usize..=3) {
        let host = common::padding_host(&m, p, t);
        prop_assert_eq!(embeds_with_padding(&l, &m, p, t).unwrap(), common::contains(&l, &host));
        if embeds_with_padding(&l, &m, p, t).unwrap() {
            prop_assert!(embeds_with_padding(&l, &m, p, t + 1).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decomposition_family_is_sound_minimal_antichain(
        members in prop::collection::vec(member(5), 1..=2)
    ) {
        let f = GraphFamily::from_graphs(&members).unwrap();
        let p = subchromatic(&f).unwrap();
        let d = decomposition_family(&f).unwrap();
        prop_assert!(!d.is_empty());
        let ms = d.graphs();
        for (i, a) in ms.iter().enumerate() {
            for (j, b) in ms.iter().enumerate() {
                if i != j {
                    prop_assert!(!contains_subgraph(a, b).unwrap(), "{:?} inside {:?}", a, b);
                }
            }
        }
        for m in &ms {
            prop_assert!(f.iter().any(|l| contains_subgraph(l, &roomy_host(m, p, l)).unwrap()));
            for e in 0..m.edge_count() {
                let smaller = m.without_edge(e).strip_isolated();
                prop_assert!(!f.iter().any(|l| contains_subgraph(l, &roomy_host(&smaller, p, l)).unwrap()));
            }
        }
    }

    #[test]
    fn oracle_matches_naive_enumeration(g in member(4).prop_filter("two edges", |g| g.edge_count() >= 2)) {
        let f = GraphFamily::from_graphs([&g]).unwrap();
        let r = ar_exact(4, &f, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(r.value, Some(common::naive_ar(4, std::slice::from_ref(&g))));
        prop_assert!(!common::rainbow_copy(&r.witness, &g));
        prop_assert_eq!(ar_exact(4, &f, DEFAULT_BUDGET).unwrap(), r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn oracle_pruning_is_sound(
        n in 4usize..=5,
        g in member(4).prop_filter("two edges", |g| g.edge_count() >= 2),
    ) {
        let f = GraphFamily::from_graphs([&g]).unwrap();
        let full = ar_exact(n, &f, DEFAULT_BUDGET).unwrap().value;
        for (prune_rainbow, prune_bound) in [(false, false), (true, false), (false, true)] {
            let opts = OracleOptions { budget: DEFAULT_BUDGET, prune_rainbow, prune_bound };
            prop_assert_eq!(ar_exact_with(n, &f, &opts, |_, _| {}).unwrap().value, full);
        }
    }
}
