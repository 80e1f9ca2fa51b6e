use std::collections::BTreeSet;

use proptest::prelude::*;
use semwidth::format::{
    parse_cover, parse_hypergraph, parse_mapping, parse_structure, parse_td, parse_ucq, write_covered,
    write_fractional_cover, write_hypergraph, write_mapping, write_structure, write_td, write_ucq, FormatError,
};
use semwidth::gen::{random_hypergraph, random_structure, HypergraphParams, StructureParams};
use semwidth_core::covers::fractional_cover;
use semwidth_core::decomp::{exact_width, ghd_covers, WidthKind};
use semwidth_core::hom::core;
use semwidth_core::model::hypergraph_of;
use semwidth_core::ucq::Ucq;
use semwidth_core::Limits;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn structures_round_trip(seed in any::<u64>()) {
        let s = random_structure(seed, &StructureParams::default()).unwrap();
        let text = write_structure(&s);
        prop_assert_eq!(parse_structure(&text).unwrap(), s);
    }

    #[test]
    fn hypergraphs_round_trip(seed in any::<u64>(), n in 1..8usize, m in 1..8usize) {
        let h = random_hypergraph(seed, &HypergraphParams { vertices: n, edges: m, max_edge_size: 3 }).unwrap();
        prop_assert_eq!(parse_hypergraph(&write_hypergraph(&h)).unwrap(), h);
    }

    #[test]
    fn decompositions_round_trip(seed in any::<u64>()) {
        let s = random_structure(seed, &StructureParams { max_domain: 5, ..StructureParams::default() }).unwrap();
        let h = hypergraph_of(&s);
        let w = exact_width(&h, WidthKind::Ghw, &Limits::default()).unwrap();
        let d = ghd_covers(&h, &w.witness).unwrap();
        let text = write_covered(&d, "ghw", &w.value.to_string());
        let back = parse_td(&text).unwrap();
        prop_assert_eq!(back.covered().unwrap(), d.clone());
        prop_assert_eq!(back.metric.as_str(), "ghw");
        let plain = parse_td(&write_td(&d.base, None, "tw", "0")).unwrap();
        prop_assert_eq!(plain.decomposition, d.base);
        prop_assert!(plain.covers.is_none());
    }

    #[test]
    fn covers_and_mappings_round_trip(seed in any::<u64>()) {
        let s = random_structure(seed, &StructureParams::default()).unwrap();
        let h = hypergraph_of(&s);
        let c = fractional_cover(&h, h.vertices()).unwrap();
        prop_assert_eq!(parse_cover(&write_fractional_cover(&c)).unwrap(), c);
        let r = core(&s).retraction;
        prop_assert_eq!(parse_mapping(&write_mapping(&r)).unwrap(), r);
    }

    #[test]
    fn unions_round_trip(a in any::<u64>(), b in any::<u64>()) {
        let p = StructureParams { max_relations: 1, max_arity: 2, ..StructureParams::default() };
        let (x, y) = (random_structure(a, &p).unwrap(), random_structure(b, &p).unwrap());
        if x.signature() == y.signature() {
            let u = Ucq::new(vec![x, y]).unwrap();
            prop_assert_eq!(parse_ucq(&write_ucq(&u)).unwrap(), u);
        }
    }
}

#[test]
fn mapping_lines_are_sorted_by_source() {
    let m = parse_mapping("b -> x\na -> y\n").unwrap();
    assert_eq!(write_mapping(&m), "a -> y\nb -> x\n");
    assert!(matches!(parse_mapping("a -> x\na -> y\n"), Err(FormatError::Syntax { line: 2, .. })));
}

#[test]
fn hypergraph_rejects_duplicate_names() {
    let err = parse_hypergraph("E(a,b).\nE(b,c).\n").unwrap_err();
    assert!(matches!(err, FormatError::Syntax { line: 2, .. }));
}

#[test]
fn td_errors_carry_lines() {
    for (text, line) in [
        ("s td 2 tw 1\nb 1 a\nt 1 3\n", 3),
        ("b 1 a\n", 1),
        ("s td 1 tw 0\nx 1\n", 2),
    ] {
        match parse_td(text) {
            Err(FormatError::Syntax { line: l, .. }) => assert_eq!(l, line, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
    assert!(parse_td("s td 2 tw 1\nb 1 a\nb 2 b\n").is_err());
}

#[test]
fn comments_and_whitespace_are_ignored() {
    let s = parse_structure("# header\n\n   E ( a ,b ) .\n  # indented comment\n").unwrap();
    assert_eq!(s.fact_count(), 1);
    let h = parse_hypergraph("e1(x, y).\n").unwrap();
    assert_eq!(h.edge("e1").unwrap(), &BTreeSet::from(["x".to_string(), "y".to_string()]));
}
