mod common;

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use proptest::sample::Index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use topsnut::coloring::{is_proper, kempe_change, klein_edge_coloring, search_colorings};
use topsnut::graph::{canonical_code, graph_matrix, parse_graph_text, to_graph_text, Graph, GraphMatrix, Rule};
use topsnut::keylock::{
    build_chain, enumerate_locks, set_matrix, verify_twin_odd_graceful, ChainKind, ChainSeed, ChainSpec, ChainStep,
    SetRule,
};
use topsnut::labelling::{dual_labelling, search_labellings, verify_labelling, LabellingKind, SearchBudget};
use topsnut::planar::{
    count_flippable, flip_edge, flippable_edges, offspring_vertex, parse_embedding, recursive_mpg, split_vertex,
    to_embedding_text, FacePolicy,
};

fn graph(max_p: usize) -> impl Strategy<Value = Graph> {
    (1..=max_p).prop_flat_map(|p| {
        prop::collection::vec(any::<bool>(), p * (p - 1) / 2).prop_map(move |mask| {
            let pairs = (0..p).flat_map(|i| (i + 1..p).map(move |j| (i, j)));
            Graph::new(p, pairs.zip(mask).filter(|(_, m)| *m).map(|(e, _)| e)).unwrap()
        })
    })
}

fn tree(max_p: usize) -> impl Strategy<Value = Graph> {
    (3..=max_p).prop_flat_map(|p| prop::collection::vec(0..p, p - 2).prop_map(|code| prufer_tree(&code)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kempe_change_is_a_proper_involution(g in graph(7), pick: Index, seed: Index, b in 1u8..=4) {
        let all = search_colorings(&g, 4, SearchBudget::solutions(40)).unwrap().found;
        prop_assume!(!all.is_empty());
        let c = pick.get(&all);
        let v = seed.index(g.order());
        let a = c.color(v);
        prop_assume!(a != b);
        let d = kempe_change(&g, c, a, b, v).unwrap();
        prop_assert!(is_proper(&g, d.colors()));
        prop_assert_eq!(&kempe_change(&g, &d, a, b, v).unwrap(), c);
        // swapping the colour names gives the same chain
        prop_assert_eq!(kempe_change(&g, c, b, a, v).unwrap(), d);
    }

    #[test]
    fn klein_labels_never_identity(n in 0usize..8, s: u64, pick: Index) {
        let g = recursive_mpg(n, &FacePolicy::Seeded(s)).unwrap();
        let all = search_colorings(g.graph(), 4, SearchBudget::solutions(16)).unwrap().found;
        let h = klein_edge_coloring(g.graph(), pick.get(&all)).unwrap();
        prop_assert!(h.iter().all(|(_, x)| (1..=3).contains(&x)));
        prop_assert_eq!(h.iter().count(), g.size());
    }

    #[test]
    fn stacked_graphs_stay_triangulations(n in 0usize..10, s: u64, w: Index, j: Index) {
        let g = recursive_mpg(n, &FacePolicy::Seeded(s)).unwrap();
        let p = g.order();
        prop_assert_eq!((p, g.size()), (n + 3, 3 * n + 3));
        prop_assert_eq!(g.euler(), 2);
        if p >= 5 {
            let f = count_flippable(&g).unwrap();
            prop_assert!(f >= p - 2 && f <= g.size());
        } else {
            prop_assert!(count_flippable(&g).is_err());
        }
        let v = w.index(p);
        let j = j.index(g.rotation(v).len() + 1);
        let j = j.max(1);
        let s = split_vertex(&g, v, j).unwrap();
        prop_assert_eq!((s.order(), s.size(), s.euler()), (p + 1, g.size() + 2, 2));
        if j >= 2 {
            let o = offspring_vertex(&g, v, j).unwrap();
            prop_assert_eq!((o.order(), o.euler()), (p + 2, 2));
        }
        for e in flippable_edges(&g).into_iter().take(3) {
            let h = flip_edge(&g, e).unwrap();
            prop_assert_eq!(h.euler(), 2);
            prop_assert_eq!(h.size(), g.size());
        }
    }

    #[test]
    fn embedding_text_round_trips(n in 0usize..8, s: u64) {
        let g = recursive_mpg(n, &FacePolicy::Seeded(s)).unwrap();
        let text = to_embedding_text(&g);
        let back = parse_embedding(&text).unwrap();
        prop_assert_eq!(to_embedding_text(&back), text);
    }

    #[test]
    fn twin_verifier_matches_definition(
        kg in graph(5),
        lg in graph(5),
        kl in prop::collection::vec(0u64..=12, 5),
        ll in prop::collection::vec(0u64..=12, 5),
    ) {
        let q = kg.size();
        prop_assume!(q > 0 && lg.size() == q);
        let kl = &kl[..kg.order()];
        let ll = &ll[..lg.order()];
        let key = labelled(kg.clone(), kl, Rule::Free);
        let lock = labelled(lg.clone(), ll, Rule::Free);
        let covered: BTreeSet<u64> = kl.iter().chain(ll).copied().collect();
        let want = is_twin_half(&kg, kl) && is_twin_half(&lg, ll) && covered.len() == 2 * q + 1;
        prop_assert_eq!(verify_twin_odd_graceful(&key, &lock).unwrap(), want);
    }

    #[test]
    fn enumerated_locks_are_sound(t in tree(6), pick: Index) {
        let keys = search_labellings(&t, LabellingKind::OddGraceful, SearchBudget::solutions(8)).unwrap().found;
        let l = pick.get(&keys);
        let labels: Vec<u64> = t.vertices().map(|v| l.vertex(v).unwrap()).collect();
        let key = labelled(t.clone(), &labels, Rule::TwinOddGraceful);
        let candidates = graphs_with_edges_upto(t.size(), 6);
        for lock in enumerate_locks(&key, &candidates).unwrap() {
            prop_assert!(verify_twin_odd_graceful(&key, &lock).unwrap());
        }
    }

    #[test]
    fn dual_preserves_gracefulness(t in tree(8), pick: Index) {
        for kind in [LabellingKind::Graceful, LabellingKind::OddGraceful] {
            let found = search_labellings(&t, kind, SearchBudget::solutions(8)).unwrap().found;
            let l = pick.get(&found);
            let labels: Vec<u64> = t.vertices().map(|v| l.vertex(v).unwrap()).collect();
            let g = labelled(t.clone(), &labels, kind.rule());
            let d = dual_labelling(&g).unwrap();
            prop_assert!(verify_labelling(&d, kind).unwrap());
            prop_assert_eq!(dual_labelling(&d).unwrap().vertex_labels(), g.vertex_labels());
        }
    }

    #[test]
    fn canonical_code_ignores_vertex_names(g in graph(6), labels in prop::collection::vec(0u64..20, 6), s: u64) {
        let gpw = labelled(g.clone(), &labels[..g.order()], Rule::Free);
        let copy = shuffled_copy(&mut ChaCha8Rng::seed_from_u64(s), &gpw);
        prop_assert_eq!(canonical_code(&gpw).unwrap(), canonical_code(&copy).unwrap());
    }

    #[test]
    fn graph_and_matrix_text_round_trip(g in graph(7), labels in prop::collection::vec(0u64..50, 7)) {
        let gpw = labelled(g.clone(), &labels[..g.order()], Rule::Free);
        let text = to_graph_text(&gpw);
        prop_assert_eq!(&parse_graph_text(&text, Rule::Free).unwrap(), &gpw);
        let m = graph_matrix(&gpw);
        prop_assert!(m.is_symmetric());
        let back = GraphMatrix::parse_text(&m.to_text()).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(canonical_code(&back.to_gpw().unwrap()).unwrap(), canonical_code(&gpw).unwrap());
    }

    #[test]
    fn set_matrices_are_symmetric(g in graph(6), sets in prop::collection::vec(prop::collection::btree_set(0u64..10, 0..4), 6)) {
        let sets: BTreeMap<usize, BTreeSet<u64>> = sets.into_iter().take(g.order()).enumerate().collect();
        for rule in [SetRule::Union, SetRule::SymmetricDifference] {
            let m = set_matrix(&g, &sets, rule).unwrap();
            prop_assert!(m.is_symmetric());
            for v in g.vertices() {
                prop_assert_eq!(m.get(v, v), &sets[&v]);
            }
        }
    }

    #[test]
    fn chains_are_deterministic(t in tree(7), m in 1usize..6) {
        let labels = topsnut::labelling::find_labelling(&t, LabellingKind::Graceful).unwrap().unwrap();
        let seed = ChainSeed::Single(labelled(t, &labels, Rule::Graceful));
        let spec = ChainSpec { kind: ChainKind::Recursive, m, step: ChainStep::Dual };
        let a = build_chain(&seed, &spec).unwrap();
        prop_assert_eq!(a.len(), m);
        prop_assert_eq!(&a, &build_chain(&seed, &spec).unwrap());
        for w in a.windows(3) {
            prop_assert_eq!(&w[0].gpw, &w[2].gpw);
        }
    }
}
