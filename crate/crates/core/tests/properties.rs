use brauer_cover::dot::{covering_dot, graph_dot, quiver_dot};
use brauer_cover::fixtures;
use brauer_cover::random::{self, random_admissible_weight, random_brauer, random_weight, small_groups};
use brauer_cover::smash::smash_brauer_finite;
use brauer_cover::{
    is_admissible, is_homogeneous_brauer, is_homogeneous_quiver, ribbon_iso, smash_quiver, BoundQuiver,
    BrauerPermutation, GWeight,
};
use proptest::prelude::*;

fn case(seed: u64, group: usize, admissible: bool) -> (BrauerPermutation, GWeight) {
    let mut rng = random::rng(seed);
    let b = random_brauer(&mut rng, random::MAX_HALF_EDGES);
    let g = &small_groups()[group];
    let w = if admissible { random_admissible_weight(&mut rng, &b, g) } else { random_weight(&mut rng, &b, g) };
    (b, w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn brauer_json_round_trip(seed in any::<u64>()) {
        let (b, w) = case(seed, 2, false);
        let text = serde_json::to_string(&b.to_data()).unwrap();
        let back = BrauerPermutation::from_data(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(&b, &back);
        let wtext = serde_json::to_string(&w.to_data().unwrap()).unwrap();
        let wback = GWeight::from_data(&serde_json::from_str(&wtext).unwrap()).unwrap();
        prop_assert_eq!(w.values(), wback.values());
    }

    #[test]
    fn quiver_json_round_trip(seed in any::<u64>()) {
        let (b, _) = case(seed, 0, false);
        let q = b.bound_quiver();
        let text = serde_json::to_string(&q.to_data()).unwrap();
        let back = BoundQuiver::from_data(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(q.to_data(), back.to_data());
    }

    #[test]
    fn admissible_implies_homogeneous(seed in any::<u64>(), group in 0usize..5, bias in any::<bool>()) {
        let (b, w) = case(seed, group, bias);
        if is_admissible(&b, &w).unwrap().holds() {
            prop_assert!(is_homogeneous_brauer(&b, &w).unwrap().holds());
        }
    }

    #[test]
    fn brauer_and_quiver_homogeneity_agree(seed in any::<u64>(), group in 0usize..5, bias in any::<bool>()) {
        let (b, w) = case(seed, group, bias);
        let q = b.bound_quiver();
        prop_assert_eq!(
            is_homogeneous_brauer(&b, &w).unwrap().holds(),
            is_homogeneous_quiver(&q, &w.to_arrow_weight()).unwrap().holds()
        );
    }

    #[test]
    fn cover_has_group_many_copies(seed in any::<u64>(), group in 0usize..5) {
        let (b, w) = case(seed, group, true);
        let n = w.group().enumerate().unwrap().len();
        let bw = smash_brauer_finite(&b, &w).unwrap();
        prop_assert_eq!(bw.len(), b.len() * n);
        prop_assert_eq!(bw.brauer_graph().edges.len(), b.brauer_graph().edges.len() * n);
    }

    #[test]
    fn renaming_is_a_ribbon_isomorphism(seed in any::<u64>()) {
        let (b, _) = case(seed, 0, false);
        let r = b.renamed(|s| format!("r{s}")).unwrap();
        let iso = ribbon_iso(&b, &r).expect("renamed copy is isomorphic");
        prop_assert!(iso.is_valid(&b, &r));
    }

    #[test]
    fn dot_is_deterministic(seed in any::<u64>(), group in 0usize..5) {
        let (b, w) = case(seed, group, true);
        prop_assert_eq!(graph_dot(&b.brauer_graph()), graph_dot(&b.clone().brauer_graph()));
        let q = b.bound_quiver();
        prop_assert_eq!(quiver_dot(&q), quiver_dot(&b.bound_quiver()));
        let aw = w.to_arrow_weight();
        let c1 = smash_quiver(&q, &aw, None).unwrap();
        let c2 = smash_quiver(&q, &aw, None).unwrap();
        prop_assert_eq!(covering_dot(&c1), covering_dot(&c2));
    }
}

#[test]
fn fixture_base_expectations() {
    for f in fixtures::all() {
        let e = &f.expected;
        let Some(b) = &f.brauer else { continue };
        let g = b.brauer_graph();
        if let Some(v) = e.vertices {
            assert_eq!(g.vertices.len(), v, "{}", f.id);
        }
        if let Some(n) = e.edges {
            assert_eq!(g.edges.len(), n, "{}", f.id);
        }
        let q = b.bound_quiver();
        if let Some(n) = e.arrows {
            assert_eq!(q.arrows.len(), n, "{}", f.id);
        }
        if let Some(n) = e.relations {
            assert_eq!(q.relations.len(), n, "{}", f.id);
        }
    }
}
