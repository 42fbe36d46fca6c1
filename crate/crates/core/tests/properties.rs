mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use groupwidth::complex::SimplicialComplex;
use groupwidth::homology::{betti1, BoundaryPair, FieldSpec, H1Context};
use groupwidth::morse::{hcwr_value, quotient_graph, validate_labeling, MorseLabeling};
use groupwidth::search::{enumerate_normalized_labelings, exhaustive_min};

use common::*;

fn fields() -> [FieldSpec; 3] {
    [FieldSpec::Rationals, FieldSpec::prime(2).unwrap(), FieldSpec::prime(3).unwrap()]
}

/// Random complexes on 3..=7 vertices from a mask over triangles and edges.
fn complex_strategy(connected: bool) -> impl Strategy<Value = SimplicialComplex> {
    (3usize..=7).prop_flat_map(move |n| {
        let tris: Vec<Vec<usize>> =
            (0..n).flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| vec![a, b, c]))).collect();
        let edges: Vec<Vec<usize>> = (0..n).flat_map(|a| (a + 1..n).map(move |b| vec![a, b])).collect();
        (
            proptest::collection::vec(proptest::bool::weighted(0.3), tris.len()),
            proptest::collection::vec(proptest::bool::weighted(0.3), edges.len()),
        )
            .prop_map(move |(tm, em)| {
                let mut tops: Vec<Vec<usize>> = Vec::new();
                tops.extend(tris.iter().zip(&tm).filter(|(_, &b)| b).map(|(t, _)| t.clone()));
                tops.extend(edges.iter().zip(&em).filter(|(_, &b)| b).map(|(e, _)| e.clone()));
                if connected {
                    tops.extend((1..n).map(|v| vec![v - 1, v]));
                }
                SimplicialComplex::build(&tops, n).unwrap()
            })
    })
}

/// A connected complex with one of its valid labelings, chosen uniformly among normalized ones.
fn labeled_strategy() -> impl Strategy<Value = (SimplicialComplex, MorseLabeling)> {
    (complex_strategy(true), any::<prop::sample::Index>()).prop_map(|(k, idx)| {
        let all = enumerate_normalized_labelings(&k).unwrap();
        let f = idx.get(&all).clone();
        (k, f)
    })
}

fn subset(n: usize, mask: u32) -> Vec<usize> {
    (0..n).filter(|v| mask >> v & 1 == 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn faces_of_every_simplex_are_present(k in complex_strategy(false)) {
        for s in k.simplices() {
            for skip in 0..s.len() {
                let face: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                if !face.is_empty() {
                    prop_assert!(k.contains(&face));
                }
            }
            prop_assert!(s.windows(2).all(|w| w[0] < w[1]));
        }
        for v in 0..k.vertex_count() {
            prop_assert!(k.contains(&[v]));
        }
        let distinct: BTreeSet<_> = k.simplices().collect();
        prop_assert_eq!(distinct.len(), k.simplex_count());
    }

    #[test]
    fn boundary_of_boundary_vanishes(k in complex_strategy(false)) {
        prop_assert!(BoundaryPair::new(&k).chain_condition_holds());
        let c = chains(&k);
        for row in &c.d1 {
            for t in &c.d2_rows {
                let dot: i64 = row.iter().zip(t).map(|(a, b)| a * b).sum();
                prop_assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn betti_numbers_match_dense_elimination(k in complex_strategy(false)) {
        for f in fields() {
            prop_assert_eq!(betti1(&k, f), betti1_oracle(&k, f));
        }
    }

    #[test]
    fn betti1_ignores_vertex_order(k in complex_strategy(false), seed in any::<u64>()) {
        let n = k.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut rng = groupwidth::search::Lcg::new(seed);
        for i in (1..n).rev() {
            perm.swap(i, rng.below(i + 1));
        }
        let r = k.relabel(&perm).unwrap();
        prop_assert_eq!(r.f_vector(), k.f_vector());
        prop_assert_eq!(betti1(&r, FieldSpec::Rationals), betti1(&k, FieldSpec::Rationals));
    }

    #[test]
    fn image_rank_matches_nullspace_oracle(k in complex_strategy(false), mask in any::<u32>()) {
        let s = subset(k.vertex_count(), mask);
        for f in fields() {
            let ctx = H1Context::new(&k, f);
            prop_assert_eq!(ctx.image_rank_of_vertex_set(&s), image_rank_oracle(&k, &s, f));
        }
    }

    #[test]
    fn image_rank_is_monotone_and_bounded(k in complex_strategy(false), a in any::<u32>(), b in any::<u32>()) {
        let n = k.vertex_count();
        let small = subset(n, a & b);
        let large = subset(n, a);
        for f in fields() {
            let ctx = H1Context::new(&k, f);
            let (rs, rl) = (ctx.image_rank_of_vertex_set(&small), ctx.image_rank_of_vertex_set(&large));
            prop_assert!(rs <= rl);
            let sub = k.induced_subcomplex(&large);
            prop_assert!(rl <= betti1(sub.as_complex(), f).min(ctx.betti1()));
            prop_assert_eq!(ctx.image_rank(&sub).unwrap(), rl);
        }
    }

    #[test]
    fn image_rank_is_subadditive_on_disjoint_pieces(k in complex_strategy(false), a in any::<u32>(), b in any::<u32>()) {
        let n = k.vertex_count();
        let (x, y) = (subset(n, a & !b), subset(n, b & !a));
        let both = subset(n, (a & !b) | (b & !a));
        let ctx = H1Context::new(&k, FieldSpec::Rationals);
        // the union may gain edges between the pieces, so compare against the pieces' own graphs
        let mut edges = Vec::new();
        for piece in [&x, &y] {
            for &u in piece.iter() {
                for &w in k.neighbors(u) {
                    if w > u && piece.contains(&w) {
                        edges.push((u, w));
                    }
                }
            }
        }
        let union = ctx.image_rank_of_graph(&both, &edges, usize::MAX);
        prop_assert!(union <= ctx.image_rank_of_vertex_set(&x) + ctx.image_rank_of_vertex_set(&y));
    }

    #[test]
    fn width_matches_oracle((k, f) in labeled_strategy()) {
        prop_assert!(validate_labeling(&k, &f).unwrap().is_empty());
        for field in fields() {
            let r = hcwr_value(&k, &f, field).unwrap();
            prop_assert_eq!(r.max_rank, hcwr_oracle(&k, f.labels(), field));
            prop_assert!(r.max_rank <= betti1(&k, field));
            prop_assert_eq!(r.max_rank, r.per_slab.iter().map(|s| s.rank).max().unwrap());
        }
    }

    #[test]
    fn width_ignores_translation_and_reflection((k, f) in labeled_strategy(), c in -5i64..5) {
        for field in fields() {
            let base = hcwr_value(&k, &f, field).unwrap();
            let moved = hcwr_value(&k, &f.shifted(c), field).unwrap();
            let flipped = hcwr_value(&k, &f.negated(), field).unwrap();
            prop_assert_eq!(base.max_rank, moved.max_rank);
            prop_assert_eq!(base.max_rank, flipped.max_rank);
            prop_assert_eq!(base.qf_betti1, flipped.qf_betti1);
            let mut a: Vec<usize> = base.per_slab.iter().map(|s| s.rank).collect();
            let mut b: Vec<usize> = flipped.per_slab.iter().map(|s| s.rank).collect();
            a.sort_unstable();
            b.sort_unstable();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn quotient_graph_incidences((k, f) in labeled_strategy()) {
        let q = quotient_graph(&k, &f).unwrap();
        let lab = f.labels();
        let (lo, hi) = (f.min_label().unwrap(), f.max_label().unwrap());
        for e in &q.edges {
            let (below, above) = (&q.vertices[e.ends.0], &q.vertices[e.ends.1]);
            prop_assert_eq!(below.slab, e.level - 1);
            prop_assert_eq!(above.slab, e.level);
            for m in &e.members {
                prop_assert!(below.members.contains(m) && above.members.contains(m));
                prop_assert_eq!(lab[*m], e.level);
            }
        }
        for i in lo - 1..=hi {
            let mut covered: Vec<usize> =
                q.vertices.iter().filter(|v| v.slab == i).flat_map(|v| v.members.clone()).collect();
            covered.sort_unstable();
            let expected: Vec<usize> = (0..lab.len()).filter(|&v| lab[v] == i || lab[v] == i + 1).collect();
            prop_assert_eq!(covered, expected);
            let level_total: usize = q.edges.iter().filter(|e| e.level == i).map(|e| e.members.len()).sum();
            prop_assert_eq!(level_total, lab.iter().filter(|&&l| l == i).count());
        }
        for (v, &l) in lab.iter().enumerate() {
            let e = q.theta_level(v).unwrap();
            prop_assert!(q.edges[e].members.contains(&v));
            let containing = q.vertices.iter().filter(|x| x.members.contains(&v)).count();
            prop_assert_eq!(containing, 2);
            prop_assert!(q.theta_vertex(l - 1, v).is_some() && q.theta_vertex(l, v).is_some());
        }
        prop_assert_eq!(q.betti1() + q.vertex_count(), q.edge_count() + 1);
    }

    #[test]
    fn level_ranks_never_exceed_their_slabs((k, f) in labeled_strategy()) {
        let ctx = H1Context::new(&k, FieldSpec::Rationals);
        let q = quotient_graph(&k, &f).unwrap();
        for e in &q.edges {
            let r = ctx.image_rank_of_vertex_set(&e.members);
            prop_assert!(r <= ctx.image_rank_of_vertex_set(&q.vertices[e.ends.0].members));
            prop_assert!(r <= ctx.image_rank_of_vertex_set(&q.vertices[e.ends.1].members));
        }
    }

    #[test]
    fn search_results_are_sound(k in complex_strategy(true), seed in any::<u64>()) {
        let r = exhaustive_min(&k, FieldSpec::Rationals, None).unwrap();
        prop_assert!(r.exhaustive);
        prop_assert!(validate_labeling(&k, &r.certificate).unwrap().is_empty());
        prop_assert_eq!(hcwr_value(&k, &r.certificate, FieldSpec::Rationals).unwrap().max_rank, r.best_value);
        prop_assert!(r.best_value <= betti1(&k, FieldSpec::Rationals));
        // a different vertex order must not change a proven minimum
        let n = k.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut rng = groupwidth::search::Lcg::new(seed);
        for i in (1..n).rev() {
            perm.swap(i, rng.below(i + 1));
        }
        let again = exhaustive_min(&k.relabel(&perm).unwrap(), FieldSpec::Rationals, None).unwrap();
        prop_assert_eq!(again.best_value, r.best_value);
    }
}
