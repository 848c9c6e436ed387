use graceful_core::lobster::{label_along, label_lobster, label_lobster_traced, strip_step, LobsterError, StripCase};
use graceful_core::search::{brute_force_labellings, enumerate_family, Caps, Family, Mode};
use graceful_core::{end_edge_perfect_matching, spike, LabelPermutation, Tree};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Spike of a random caterpillar with `half` vertices, with shuffled vertex ids.
fn random_matched_lobster(rng: &mut impl Rng, half: usize) -> Tree {
    let spine = rng.gen_range(1..=half);
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    for v in spine..half {
        edges.push((rng.gen_range(0..spine), v));
    }
    let cat = Tree::new(half, edges).unwrap();
    let t = spike(&cat).tree;
    let mut names: Vec<usize> = (0..t.n()).collect();
    names.shuffle(rng);
    Tree::new(t.n(), t.edges().iter().map(|&(u, v)| (names[u], names[v]))).unwrap()
}

#[test]
fn every_small_matched_lobster_gets_a_verified_quad() {
    let caps = Caps::default();
    for n in (4..=16).step_by(2) {
        for (t, m) in enumerate_family(n, Family::LobsterEndEdgePm, &caps).unwrap() {
            let traced = label_lobster_traced(&t).unwrap();
            traced.quad.verify(&t, &m).unwrap();
            assert_eq!(traced.depth(), (n - 4) / 2 + 1);
        }
    }
}

#[test]
fn quad_members_are_found_by_exhaustive_search() {
    let caps = Caps::default();
    for n in (4..=12).step_by(2) {
        for (t, m) in enumerate_family(n, Family::LobsterEndEdgePm, &caps).unwrap() {
            let all = brute_force_labellings(&t, Mode::Strong(&m), false, &caps).unwrap();
            let quad = label_lobster(&t).unwrap();
            for (name, f) in quad.members() {
                assert!(all.binary_search(f).is_ok(), "{name} missing for {t:?}");
            }
        }
    }
}

#[test]
fn peeling_shifts_labels_and_adds_the_two_largest_edges() {
    let caps = Caps::default();
    for n in (6..=14).step_by(2) {
        for (t, m) in enumerate_family(n, Family::LobsterEndEdgePm, &caps).unwrap() {
            let traced = label_lobster_traced(&t).unwrap();
            let spine = &traced.spine;
            let strip = strip_step(&t, spine).unwrap();
            let (child, _) = label_along(&strip.tree, &strip.matching, &strip.spine).unwrap();
            let to_zero = match strip.case {
                StripCase::Bare => LabelPermutation::complement(n - 2),
                StripCase::Branch => LabelPermutation::pair_swap(n - 2).unwrap(),
            };
            let h = to_zero.apply(&child.f).unwrap();
            let f = &traced.quad.f;
            for (w, id) in strip.map.iter().enumerate() {
                if let Some(id) = id {
                    assert_eq!(f.get(w), h.get(*id) + 1);
                }
            }
            for &(u, v) in strip.tree.edges() {
                let (a, b) = (
                    strip.map.iter().position(|&x| x == Some(u)).unwrap(),
                    strip.map.iter().position(|&x| x == Some(v)).unwrap(),
                );
                assert_eq!(f.edge_label(a, b).unwrap(), h.edge_label(u, v).unwrap());
            }
            for &(x, y) in strip.matching.pairs() {
                assert_eq!(h.get(x) + h.get(y) + 2, n - 1);
            }
            let v = spine.vertices();
            assert_eq!(f.edge_label(v[0], v[1]).unwrap(), n - 1);
            assert_eq!(f.edge_label(v[1], v[2]).unwrap(), n - 2);
            assert!(m.contains(v[0], v[1]));
        }
    }
}

#[test]
fn thousand_random_instances_up_to_200_vertices() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let half = rng.gen_range(2..=100);
        let t = random_matched_lobster(&mut rng, half);
        let m = end_edge_perfect_matching(&t).unwrap();
        let quad = label_lobster(&t).unwrap_or_else(|e| panic!("{e}: {t:?}"));
        quad.verify(&t, &m).unwrap();
    }
}

#[test]
fn rejects_trees_outside_the_family() {
    assert_eq!(label_lobster(&Tree::path(6)).unwrap_err(), LobsterError::NoEndEdgeMatching);
    assert!(matches!(label_lobster(&Tree::path(5)), Err(LobsterError::Size(5))));
    let spider = Tree::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
    assert_eq!(label_lobster(&spike(&spider).tree).unwrap_err(), LobsterError::NotLobster);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_caterpillar_spikes(seed in any::<u64>(), half in 2usize..60) {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let t = random_matched_lobster(&mut rng, half);
        let m = end_edge_perfect_matching(&t).unwrap();
        let quad = label_lobster(&t).unwrap();
        prop_assert!(quad.verify(&t, &m).is_ok());
        let [v0, v1, v2, u2] = quad.anchors();
        prop_assert_eq!((quad.f.get(v0), quad.f1.get(v1), quad.f2.get(v2), quad.f3.get(u2)), (0, 0, 0, 0));
    }
}

#[test]
fn tie_break_orientation_always_suffices() {
    let caps = Caps::default();
    let (mut total, mut reverse_ok) = (0, 0);
    for n in (6..=16).step_by(2) {
        for (t, m) in enumerate_family(n, Family::LobsterEndEdgePm, &caps).unwrap() {
            let traced = label_lobster_traced(&t).unwrap();
            assert!(!traced.reversed, "{t:?}");
            total += 1;
            if let Ok((quad, _)) = label_along(&t, &m, &traced.spine.reversed()) {
                quad.verify(&t, &m).unwrap();
                reverse_ok += 1;
            }
        }
    }
    println!("reversed tie-break spine also labels {reverse_ok} of {total} instances");
}
