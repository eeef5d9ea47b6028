use std::collections::{BTreeSet, HashSet, VecDeque};

use denom_core::arc_model::{enumerate_arcs, ideal_of_tagged, ArcMultiset, TaggedTriangulation};
use denom_core::cluster_engine::{b_matrix_of, explore, ExploreMode, Seed};
use denom_core::intersection::{intersection_vector, multiset_intersection_vector};
use denom_core::modification::{multiset_diamond, recover_from_diamond, signature};
use denom_core::surface_model::{standard_triangulation, MarkedSurface, Triangle};
use denom_core::verifier::{compatible_multisets, lockstep};

fn disk(m: u32, p: u32) -> MarkedSurface {
    MarkedSurface::disk(m, p).unwrap()
}

#[test]
fn flips_are_involutions_on_reachable_triangulations() {
    for s in [disk(6, 0), disk(4, 1)] {
        let start = standard_triangulation(&s).unwrap();
        let mut seen: HashSet<Vec<Triangle>> = HashSet::new();
        let mut queue = VecDeque::from([start]);
        while let Some(t) = queue.pop_front() {
            if !seen.insert(t.canonical_triangles()) {
                continue;
            }
            for e in t.arcs() {
                if !t.is_flippable(e) {
                    continue;
                }
                let f = t.flip(e).unwrap();
                assert_eq!(
                    f.flip(e).unwrap().canonical_triangles(),
                    t.canonical_triangles()
                );
                queue.push_back(f);
            }
        }
        assert!(seen.len() > 1);
    }
}

#[test]
fn clusters_are_maximal_and_flips_pair_up() {
    for (s, n, count) in [(disk(6, 0), 3, 14), (disk(4, 1), 4, 50)] {
        let model = enumerate_arcs(&s).unwrap();
        let clusters = model.geometric_clusters().unwrap();
        assert_eq!(clusters.len(), count);
        let keys: BTreeSet<Vec<usize>> = clusters
            .iter()
            .map(|c| {
                let mut k = c.clone();
                k.sort();
                k
            })
            .collect();
        for c in &clusters {
            assert_eq!(c.len(), n);
            let mut neighbours = BTreeSet::new();
            for k in 0..n {
                let f = model.geometric_flip(c, k).unwrap();
                assert_ne!(f[k], c[k]);
                assert_eq!(model.geometric_flip(&f, k).unwrap(), *c);
                let mut key = f.clone();
                key.sort();
                assert!(keys.contains(&key));
                neighbours.insert(key);
            }
            assert_eq!(neighbours.len(), n, "flip graph is {n}-regular");
        }
    }
}

#[test]
fn conjugate_pairs_are_compatible() {
    for s in [disk(4, 1), disk(3, 2)] {
        let model = enumerate_arcs(&s).unwrap();
        for a in model.arcs() {
            let incident = s.puncture_ids().filter(|&p| a.arc.has_end(p)).count();
            if a.is_loop() || incident != 1 {
                continue;
            }
            let (x, y) = model.conjugate_pair_of(a).unwrap();
            assert!(model.compatible(&x, &y).unwrap());
            assert_ne!(x, y);
        }
    }
}

#[test]
fn strong_admissible_tagged_gives_strong_admissible_ideal() {
    for s in [disk(3, 1), disk(5, 1), disk(4, 2)] {
        let model = enumerate_arcs(&s).unwrap();
        let t = TaggedTriangulation::standard(&model);
        assert!(t.is_strong_admissible());
        let (ideal, circ) = ideal_of_tagged(&t).unwrap();
        assert!(ideal.is_strong_admissible());
        assert_eq!(circ.len(), t.len());
    }
}

#[test]
fn diamond_round_trip_up_to_degree_three() {
    let model = enumerate_arcs(&disk(4, 1)).unwrap();
    let (sets, truncated) = compatible_multisets(
        model.arcs().len(),
        3,
        |i, j| model.compatible_ids(i, j),
        None,
    );
    assert!(!truncated);
    for set in sets {
        let c = ArcMultiset::new(set.iter().map(|&i| model.arc(i).clone()).collect());
        let d = multiset_diamond(&model, &c).unwrap();
        let back = recover_from_diamond(&model, &d, &signature(&model, &c).sigma).unwrap();
        assert_eq!(back, c);
    }
}

#[test]
fn empty_multiset_has_zero_vector() {
    let model = enumerate_arcs(&disk(4, 1)).unwrap();
    let t = TaggedTriangulation::standard(&model);
    let v = multiset_intersection_vector(&model, t.arcs(), &ArcMultiset::empty()).unwrap();
    assert_eq!(v, vec![0; t.len()]);
}

#[test]
fn initial_arcs_have_minus_unit_vectors() {
    let model = enumerate_arcs(&disk(5, 1)).unwrap();
    let t = TaggedTriangulation::standard(&model);
    let b = b_matrix_of(&t).unwrap();
    let ls = lockstep(&model, &t, b).unwrap();
    for (i, a) in t.arcs().iter().enumerate() {
        let mut unit = vec![0i64; t.len()];
        unit[i] = -1;
        assert_eq!(intersection_vector(&model, t.arcs(), a).unwrap(), unit);
        let id = model.arc_id(a).unwrap();
        let pair = ls.pairs.iter().find(|p| p.arc == id).unwrap();
        assert_eq!(pair.denominator, unit);
    }
    assert_eq!(ls.mismatches().count(), 0);
}

#[test]
fn both_b_signs_give_the_same_exchange_graph() {
    let model = enumerate_arcs(&disk(4, 1)).unwrap();
    let t = TaggedTriangulation::standard(&model);
    let b = b_matrix_of(&t).unwrap();
    let full = ExploreMode::Full { cap: 1000 };
    let plus = explore(&Seed::initial(b.clone()), full).unwrap();
    let minus = explore(&Seed::initial(b.negated()), full).unwrap();
    assert_eq!(plus.variable_count(), 16);
    assert_eq!(minus.variable_count(), 16);
    assert_eq!(plus.cluster_count(), minus.cluster_count());
    let d = |e: &denom_core::cluster_engine::Exploration| -> BTreeSet<Vec<i64>> {
        e.denominators.iter().cloned().collect()
    };
    assert_eq!(d(&plus), d(&minus));
}
