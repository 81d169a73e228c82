use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use contraction_core::cvc::{min_cvc_via, Route};
use contraction_core::generate::random_connected;
use contraction_core::io::{parse_edge_list, write_edge_list};
use contraction_core::kernel::kernelize;
use contraction_core::oracle::{contractible_within, min_contractions_search};
use contraction_core::path::{extract_path_witness, solve_path};
use contraction_core::reductions::{rbds_to_tree_instance, RbdsInstance};
use contraction_core::tree::{extract_tree_witness, solve_tree};
use contraction_core::universal::{build_universal, verify_universal};
use contraction_core::witness::{contraction_cost, quotient, verify};
use contraction_core::{Color, Graph, Mode, Target, TwoColoring, WitnessStructure};

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..0.7f64, any::<u64>())
        .prop_map(|(n, p, seed)| random_connected(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Coloring compatible with `ws`: singleton parts get color one; along a
/// path, big parts alternate in order; in a tree, big parts take the parity
/// of their depth, which differs across every quotient edge.
fn compatible_coloring(g: &Graph, ws: &WitnessStructure, target: Target) -> TwoColoring {
    let q = quotient(g, ws).unwrap();
    let mut depth = vec![usize::MAX; q.vertex_count()];
    let mut big_depth = vec![0; q.vertex_count()];
    let mut roots: Vec<usize> = q.vertices().collect();
    roots.sort_by_key(|&v| q.degree(v));
    for root in roots {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        big_depth[root] = usize::from(ws.parts()[root].len() > 1);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in q.neighbors(x) {
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    big_depth[y] = big_depth[x] + usize::from(ws.parts()[y].len() > 1);
                    queue.push_back(y);
                }
            }
        }
    }
    let mut colors = vec![Color::One; g.vertex_count()];
    for (i, part) in ws.parts().iter().enumerate() {
        if part.len() > 1 {
            let c = match target {
                Target::Path => big_depth[i] % 2 == 1,
                Target::Tree => depth[i] % 2 == 1,
            };
            for &v in part {
                colors[v] = Color::from_bit(c);
            }
        }
    }
    TwoColoring::new(colors)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn contraction_drops_one_vertex(g in any_graph(8), pick in any::<prop::sample::Index>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let (h, mapping) = g.contract_edge(u, v).unwrap();
        prop_assert_eq!(h.vertex_count(), g.vertex_count() - 1);
        prop_assert!(h.edge_count() < g.edge_count());
        prop_assert_eq!(mapping.apply(u), mapping.apply(v));
        prop_assert_eq!(g.is_connected(), h.is_connected());
    }

    #[test]
    fn edge_list_round_trip(g in any_graph(9)) {
        let text = write_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g.clone());
        prop_assert_eq!(write_edge_list(&parse_edge_list(&text).unwrap()), text);
    }

    #[test]
    fn kernel_is_safe_and_small(g in connected(10), k in 0usize..=3) {
        let r = kernelize(&g, k).unwrap();
        prop_assert_eq!(r.trace.len(), g.vertex_count() - r.reduced.vertex_count());
        let min = min_contractions_search(&g, Target::Path).unwrap().unwrap();
        if min <= k {
            prop_assert!(r.reduced.vertex_count() <= 5 * k + 3);
        }
        if r.decided_no {
            prop_assert!(min > k);
        } else {
            let reduced = min_contractions_search(&r.reduced, Target::Path).unwrap().unwrap();
            prop_assert_eq!(reduced <= k, min <= k);
        }
        if let Some(ws) = contractible_within(&r.reduced, Target::Path, k).unwrap() {
            prop_assert!(verify(&g, &r.lift(&ws), Target::Path, k));
        }
    }

    #[test]
    fn path_solver_is_monotone_and_sound(g in connected(7)) {
        let mut previous = false;
        for k in 0..g.vertex_count() {
            let v = solve_path(&g, k, Mode::Deterministic).unwrap();
            prop_assert!(!previous || v.answer);
            previous = v.answer;
            if let Some(ws) = &v.witness {
                prop_assert!(verify(&g, ws, Target::Path, k));
            }
        }
    }

    #[test]
    fn compatible_colorings_recover_optimal_paths(g in connected(7)) {
        let min = min_contractions_search(&g, Target::Path).unwrap().unwrap();
        let ws = contractible_within(&g, Target::Path, min).unwrap().unwrap();
        let c = compatible_coloring(&g, &ws, Target::Path);
        let found = extract_path_witness(&g, &c).unwrap().unwrap();
        prop_assert!(contraction_cost(&found) <= min);
    }

    #[test]
    fn compatible_colorings_recover_optimal_trees_in_blocks(g in connected(7)) {
        prop_assume!(g.vertex_count() >= 3 && g.biconnected_components().unwrap().len() == 1);
        let min = min_contractions_search(&g, Target::Tree).unwrap().unwrap();
        let ws = contractible_within(&g, Target::Tree, min).unwrap().unwrap();
        let c = compatible_coloring(&g, &ws, Target::Tree);
        let found = extract_tree_witness(&g, &c, min + 1).unwrap().unwrap();
        prop_assert!(contraction_cost(&found) <= min);
    }

    #[test]
    fn tree_minimum_is_additive_over_blocks(g in connected(7)) {
        let whole = min_contractions_search(&g, Target::Tree).unwrap().unwrap();
        let by_blocks: usize = g
            .biconnected_components()
            .unwrap()
            .iter()
            .map(|b| min_contractions_search(&g.induced(b), Target::Tree).unwrap().unwrap())
            .sum();
        prop_assert_eq!(whole, by_blocks);
    }

    #[test]
    fn tree_solver_is_sound(g in connected(8), k in 0usize..5, seed in any::<u64>()) {
        for mode in [Mode::Deterministic, Mode::Randomized(seed)] {
            let v = solve_tree(&g, k, mode).unwrap();
            if let Some(ws) = &v.witness {
                prop_assert!(verify(&g, ws, Target::Tree, k));
            }
        }
    }

    #[test]
    fn cvc_routes_agree(g in connected(11)) {
        prop_assume!(g.edge_count() > 0);
        let a = min_cvc_via(&g, g.vertex_count(), Route::Subsets).unwrap().unwrap();
        let b = min_cvc_via(&g, g.vertex_count(), Route::Branching).unwrap().unwrap();
        prop_assert_eq!(a.len(), b.len());
    }

    #[test]
    fn universal_families_are_universal(n in 1usize..=12, t in 0usize..=4) {
        prop_assume!(t <= n);
        prop_assert!(verify_universal(&build_universal(n, t)).unwrap());
    }

    #[test]
    fn gadget_parameter_and_size(
        red in 1usize..=4,
        blue in 1usize..=4,
        masks in proptest::collection::vec(1u8..16, 4),
        t in 0usize..=4,
    ) {
        prop_assume!(t <= red);
        let edges: Vec<_> = (0..red)
            .flat_map(|a| {
                let m = masks[a] & ((1 << blue) - 1);
                let m = if m == 0 { 1 } else { m };
                (0..blue).filter(move |&b| m >> b & 1 == 1).map(move |b| (a, b))
            })
            .collect();
        let r = RbdsInstance { red, blue, edges, t };
        let (g, k) = rbds_to_tree_instance(&r).unwrap();
        prop_assert!(k <= 2 * red);
        prop_assert_eq!(g.vertex_count(), red + 1 + blue + red * (k + 1));
        prop_assert!(g.is_connected());
    }
}
