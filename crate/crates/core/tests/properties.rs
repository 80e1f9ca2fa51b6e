use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use semwidth_core::covers::{
    dual, fractional_cover, integral_cover, is_reduced, pushforward_cover, reduce, transversality, vc_dimension,
};
use semwidth_core::decomp::{exact_width, WidthKind};
use semwidth_core::hom::{core, hom_equivalent, is_contained, is_isomorphic, Mapping};
use semwidth_core::model::hypergraph_of;
use semwidth_core::reductions::redh_reduce;
use semwidth_core::solver::{solve_bruteforce, solve_decomposed};
use semwidth_core::{int, Hypergraph, Limits, Signature, Structure};

fn build(edges: &[BTreeSet<usize>]) -> Hypergraph {
    let mut h = Hypergraph::new();
    for (i, e) in edges.iter().enumerate() {
        let vs: BTreeSet<String> = e.iter().map(|v| format!("v{v}")).collect();
        for v in &vs {
            h.add_vertex(v);
        }
        h.add_edge(&format!("e{i}"), vs).unwrap();
    }
    h
}

fn hypergraph(n: usize, m: usize, rank: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=n).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::btree_set(0..n, 1..=n.min(rank)), 1..=m).prop_map(|e| build(&e))
    })
}

fn structure(n: usize, m: usize) -> impl Strategy<Value = Structure> {
    (1..=n).prop_flat_map(move |n| {
        prop::collection::vec((0..3usize, 0..n, 0..n), 1..=m).prop_map(|facts| {
            let sig = Signature::new().with("E", 2).unwrap().with("U", 1).unwrap();
            let mut s = Structure::new(sig);
            for (kind, a, b) in facts {
                match kind {
                    0 => s.add_fact("U", vec![format!("x{a}")]).unwrap(),
                    _ => s.add_fact("E", vec![format!("x{a}"), format!("x{b}")]).unwrap(),
                };
            }
            s
        })
    })
}

/// A graph (rank ≤ 2) is a forest iff union-find never joins two vertices
/// already connected.
fn is_forest(h: &Hypergraph) -> bool {
    let mut parent: BTreeMap<&str, &str> = h.vertices().iter().map(|v| (v.as_str(), v.as_str())).collect();
    fn find<'a>(p: &BTreeMap<&'a str, &'a str>, mut x: &'a str) -> &'a str {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    let pairs: BTreeSet<&BTreeSet<String>> = h.edges().map(|(_, e)| e).filter(|e| e.len() == 2).collect();
    for e in pairs {
        let mut it = e.iter();
        let (a, b) = (it.next().unwrap().as_str(), it.next().unwrap().as_str());
        let (ra, rb) = (find(&parent, a), find(&parent, b));
        if ra == rb {
            return false;
        }
        parent.insert(ra, rb);
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn cover_numbers_are_ordered(h in hypergraph(7, 7, 4)) {
        let all = h.vertices().clone();
        let rho = integral_cover(&h, &all).unwrap().size;
        let rho_star = fractional_cover(&h, &all).unwrap().total;
        prop_assert!(rho_star <= int(rho as i64));
        prop_assert!(rho_star >= int(1));
    }

    #[test]
    fn duality_swaps_covers_and_transversals(h in hypergraph(7, 7, 4)) {
        let r = reduce(&h);
        prop_assert!(is_reduced(&r));
        let d = dual(&r).unwrap();
        let all = r.vertices().clone();
        let t = transversality(&d).unwrap();
        prop_assert_eq!(integral_cover(&r, &all).unwrap().size, t.tau);
        prop_assert_eq!(fractional_cover(&r, &all).unwrap().total, t.tau_star);
        let vc = vc_dimension(&r).unwrap().dimension;
        prop_assert!(vc_dimension(&d).unwrap().dimension < 1 << (vc + 1));
    }

    #[test]
    fn graphs_have_ghw_one_iff_forest(h in hypergraph(7, 7, 2)) {
        let ghw = exact_width(&h, WidthKind::Ghw, &Limits::default()).unwrap().value;
        prop_assert_eq!(ghw == int(1), is_forest(&h));
    }

    #[test]
    fn pushforward_keeps_weight_and_covers_image(h in hypergraph(6, 6, 3), fold in prop::collection::vec(0..3usize, 6)) {
        // Fold vertex vi onto w<fold[i]>; the image edges form the target.
        let f: Mapping = h.vertices().iter().map(|v| {
            let i: usize = v[1..].parse().unwrap();
            (v.clone(), format!("w{}", fold[i]))
        }).collect();
        let images: BTreeSet<BTreeSet<String>> = h.edges()
            .map(|(_, e)| e.iter().map(|v| f.get(v).unwrap().to_string()).collect())
            .collect();
        let mut target = Hypergraph::new();
        for (i, e) in images.into_iter().enumerate() {
            for v in &e {
                target.add_vertex(v);
            }
            target.add_edge(&format!("f{i}"), e).unwrap();
        }
        let cover = fractional_cover(&h, h.vertices()).unwrap();
        let pushed = pushforward_cover(&h, &target, &f, &cover).unwrap();
        let sum = pushed.weights.values().fold(int(0), |acc, w| acc + w);
        prop_assert_eq!(&sum, &cover.total);
        prop_assert_eq!(&pushed.total, &cover.total);
        prop_assert!(pushed.covers(&target, target.vertices()));
    }

    #[test]
    fn cores_are_idempotent_and_equivalent(a in structure(5, 6)) {
        let c = core(&a);
        prop_assert!(hom_equivalent(&a, &c.core).unwrap());
        prop_assert!(is_isomorphic(&core(&c.core).core, &c.core).unwrap());
        let all = hypergraph_of(&c.core);
        let full = hypergraph_of(&a);
        let limits = Limits::default();
        for k in [WidthKind::Ghw, WidthKind::Fhw] {
            prop_assert!(exact_width(&all, k, &limits).unwrap().value <= exact_width(&full, k, &limits).unwrap().value);
        }
    }

    #[test]
    fn mutual_containment_is_equivalence(a in structure(4, 5), b in structure(4, 5)) {
        let both = is_contained(&a, &b).unwrap() && is_contained(&b, &a).unwrap();
        prop_assert_eq!(both, hom_equivalent(&a, &b).unwrap());
        prop_assert_eq!(both, is_isomorphic(&core(&a).core, &core(&b).core).unwrap());
    }

    #[test]
    fn decomposed_solving_matches_brute_force(a in structure(5, 6), b in structure(3, 6)) {
        let (brute, _) = solve_bruteforce(&a, &b).unwrap();
        let limits = Limits::default();
        prop_assert_eq!(solve_decomposed(&a, &b, true, &limits).unwrap().satisfiable, brute);
        prop_assert_eq!(solve_decomposed(&a, &b, false, &limits).unwrap().satisfiable, brute);
    }

    #[test]
    fn redh_preserves_answers(c in structure(3, 4), d in structure(2, 4)) {
        let (sat, _) = solve_bruteforce(&c, &d).unwrap();
        let inst = redh_reduce(&c, &d, &c, None).unwrap();
        prop_assert_eq!(solve_bruteforce(&inst.left, &inst.right).unwrap().0, sat);
    }
}
