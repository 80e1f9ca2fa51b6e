//! Seeded property suites over random pools plus fixed worked examples.
//!
//! Item `i` of a run with seed `s` is generated from seed `s + i`, so a
//! failing item reproduces with `--seed <item seed> --count 1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::ToPrimitive;
use rand::seq::IndexedRandom;
use rand::Rng;
use semwidth_core::covers::{dual, fractional_cover, gap_report, integral_cover, reduce, transversality, vc_dimension};
use semwidth_core::decomp::{
    check_ghd, exact_width, ghd_covers, hypertree_width, scv_list, subw_bounds, validate_td, width_of, BagMeasure,
    CoveredDecomposition, TreeDecomposition, WidthKind,
};
use semwidth_core::hom::{core, find_homomorphism, hom_equivalent, is_contained, is_homomorphism, is_isomorphic};
use semwidth_core::model::{hypergraph_of, k2};
use semwidth_core::reductions::{extract_solution, redh_reduce};
use semwidth_core::semantic::{scv_repair, semantic_hw, width, StructureWidth};
use semwidth_core::solver::{solve_bruteforce, solve_decomposed};
use semwidth_core::ucq::{make_nonredundant, solve_ucq, ucq_equivalent, ucq_semantic_subw_bounds, Ucq};
use semwidth_core::{int, Hypergraph, Limits, Rational, Signature, Structure};

use crate::format::{write_covered, write_hypergraph, write_structure, write_ucq};
use crate::gen::{self, random_hypergraph_with, random_structure_over, HypergraphParams, Rng64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Hierarchy,
    CoreMinimality,
    Duality,
    ScvRepair,
    Redh,
    Ucq,
    SolverAgreement,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Hierarchy,
        Suite::CoreMinimality,
        Suite::Duality,
        Suite::ScvRepair,
        Suite::Redh,
        Suite::Ucq,
        Suite::SolverAgreement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hierarchy => "hierarchy",
            Suite::CoreMinimality => "core-minimality",
            Suite::Duality => "duality",
            Suite::ScvRepair => "scv-repair",
            Suite::Redh => "redh",
            Suite::Ucq => "ucq",
            Suite::SolverAgreement => "solver-agreement",
        }
    }
}

/// A failing item with its serialized input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    /// Item seed, or the name of a fixed example.
    pub item: String,
    pub message: String,
    pub input: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    /// Pool items checked.
    pub checked: usize,
    /// Fixed examples checked.
    pub fixed: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed_fixed = self.failures.iter().filter(|x| !x.item.starts_with("seed ")).count();
        let failed_pool = self.failures.len() - failed_fixed;
        writeln!(
            f,
            "{}: {}/{} pass, fixed examples {}/{} pass",
            self.suite.name(),
            self.checked - failed_pool,
            self.checked,
            self.fixed - failed_fixed,
            self.fixed
        )?;
        for fail in &self.failures {
            writeln!(f, "FAIL {}: {}", fail.item, fail.message)?;
            for line in fail.input.lines() {
                writeln!(f, "  {line}")?;
            }
        }
        Ok(())
    }
}

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lift<T>(r: semwidth_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// An item: serialized input plus the property outcome.
struct Item {
    input: String,
    outcome: Outcome,
}

/// Runs `suite` on `count` pool items and the fixed examples.
pub fn run(suite: Suite, seed: u64, count: usize, limits: &Limits) -> Report {
    let mut failures = Vec::new();
    let mut record = |name: String, item: Item| {
        if let Err(message) = item.outcome {
            failures.push(Failure {
                item: name,
                message,
                input: item.input,
            });
        }
    };
    let fixed = fixed_items(suite, limits);
    let fixed_count = fixed.len();
    for (name, item) in fixed {
        record(format!("example {name}"), item);
    }
    for i in 0..count {
        let s = seed.wrapping_add(i as u64);
        record(format!("seed {s}"), pool_item(suite, s, limits));
    }
    Report {
        suite,
        checked: count,
        fixed: fixed_count,
        failures,
    }
}

fn pool_item(suite: Suite, seed: u64, limits: &Limits) -> Item {
    let mut rng = gen::rng(seed);
    match suite {
        Suite::Hierarchy => {
            let h = pool_hypergraph(&mut rng, 8);
            Item {
                input: write_hypergraph(&h),
                outcome: hierarchy(&h, limits),
            }
        }
        Suite::CoreMinimality => {
            let a = pool_structure(&mut rng, 5);
            Item {
                input: write_structure(&a),
                outcome: core_minimality(&a, limits),
            }
        }
        Suite::Duality => {
            let h = reduce(&pool_hypergraph(&mut rng, 7));
            Item {
                input: write_hypergraph(&h),
                outcome: duality(&h, limits),
            }
        }
        Suite::ScvRepair => match injected_ghd(&mut rng, limits) {
            Ok((a, d)) => Item {
                input: format!("{}{}", write_structure(&a), write_covered(&d, "ghw", &d.width().to_string())),
                outcome: scv_repair_item(&a, &d),
            },
            Err(message) => Item {
                input: String::new(),
                outcome: Err(message),
            },
        },
        Suite::Redh => {
            let (c, d) = pool_redh(&mut rng);
            Item {
                input: format!("{}---\n{}", write_structure(&c), write_structure(&d)),
                outcome: redh_both_shapes(&c, &d),
            }
        }
        Suite::Ucq => {
            let (u, b, extra) = pool_ucq(&mut rng);
            Item {
                input: format!("{}===\n{}", write_ucq(&u), write_structure(&b)),
                outcome: ucq_item(&u, &b, &extra, limits),
            }
        }
        Suite::SolverAgreement => {
            let (a, b) = pool_pair(&mut rng);
            Item {
                input: format!("{}---\n{}", write_structure(&a), write_structure(&b)),
                outcome: solver_agreement(&a, &b, limits),
            }
        }
    }
}

fn structure(facts: &[(&str, &[&str])]) -> Structure {
    Structure::from_facts(facts.iter().map(|(r, t)| (*r, t.iter().copied()))).expect("valid facts")
}

fn triangle() -> Hypergraph {
    Hypergraph::from_edges([("E", ["a", "b"]), ("F", ["b", "c"]), ("G", ["a", "c"])]).expect("valid")
}

/// Graphs used as data: bidirected `K2`, the directed 3-cycle and a loop.
pub fn fixed_graphs() -> Vec<(&'static str, Structure)> {
    vec![
        ("K2", k2()),
        ("C3", structure(&[("E", &["0", "1"]), ("E", &["1", "2"]), ("E", &["2", "0"])])),
        ("loop", structure(&[("E", &["0", "0"])])),
    ]
}

fn fixed_items(suite: Suite, limits: &Limits) -> Vec<(String, Item)> {
    match suite {
        Suite::Hierarchy => vec![("triangle".into(), {
            let h = triangle();
            let exact = || -> Outcome {
                hierarchy(&h, limits)?;
                let w = |k| lift(exact_width(&h, k, limits)).map(|w| w.value);
                ensure!(w(WidthKind::Tw)? == int(2), "tw(triangle) ≠ 2");
                ensure!(w(WidthKind::Ghw)? == int(2), "ghw(triangle) ≠ 2");
                ensure!(w(WidthKind::Fhw)? == semwidth_core::ratio(3, 2), "fhw(triangle) ≠ 3/2");
                ensure!(lift(hypertree_width(&h, limits))?.0 == 2, "hw(triangle) ≠ 2");
                Ok(())
            };
            Item {
                input: write_hypergraph(&h),
                outcome: exact(),
            }
        })],
        Suite::CoreMinimality => (2..=3)
            .map(|n| {
                let a = gen::grid(n, &k2()).expect("small grid").left;
                let outcome = core_minimality(&a, limits).and_then(|()| {
                    let c = core(&a).core;
                    ensure!(lift(is_isomorphic(&c, &k2()))?, "grid core is not K2");
                    Ok(())
                });
                (
                    format!("grid {n}"),
                    Item {
                        input: write_structure(&a),
                        outcome,
                    },
                )
            })
            .collect(),
        Suite::Duality => vec![(
            "triangle".into(),
            Item {
                input: write_hypergraph(&triangle()),
                outcome: duality(&triangle(), limits),
            },
        )],
        Suite::ScvRepair => {
            let a = structure(&[("E", &["a", "b"]), ("E", &["b", "c"])]);
            let set = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect::<BTreeSet<String>>();
            let bags = vec![set(&["a"]), set(&["a", "b"]), set(&["b", "c"])];
            let (base, _) = TreeDecomposition::new(bags, &[(0, 1), (1, 2)]).expect("tree");
            let d = CoveredDecomposition::new(base, vec![set(&["a_b"]), set(&["a_b"]), set(&["b_c"])]).expect("covers");
            vec![(
                "path".into(),
                Item {
                    input: format!("{}{}", write_structure(&a), write_covered(&d, "ghw", "1")),
                    outcome: scv_repair_item(&a, &d),
                },
            )]
        }
        Suite::Redh => {
            let d = k2();
            let c = gen::grid(2, &d).expect("small grid").left;
            vec![(
                "grid 2 / K2".into(),
                Item {
                    input: format!("{}---\n{}", write_structure(&c), write_structure(&d)),
                    outcome: redh_item(&c, &d, &c),
                },
            )]
        }
        Suite::Ucq => {
            let edge = structure(&[("E", &["a", "b"])]);
            let path = structure(&[("E", &["a", "b"]), ("E", &["b", "c"])]);
            let u = Ucq::new(vec![edge.clone(), path]).expect("same signature");
            let b = k2();
            vec![(
                "edge | path".into(),
                Item {
                    input: format!("{}===\n{}", write_ucq(&u), write_structure(&b)),
                    outcome: ucq_item(&u, &b, &edge, limits),
                },
            )]
        }
        Suite::SolverAgreement => {
            let mut out = Vec::new();
            for n in 1..=3 {
                for (g, data) in fixed_graphs() {
                    let inst = gen::grid(n, &data).expect("small grid");
                    out.push((
                        format!("grid {n} / {g}"),
                        Item {
                            input: format!("{}---\n{}", write_structure(&inst.left), write_structure(&inst.right)),
                            outcome: solver_agreement(&inst.left, &inst.right, limits),
                        },
                    ));
                }
            }
            out
        }
    }
}

/// A random hypergraph with 2..=`max_vertices` vertices and no isolated
/// vertex.
pub fn pool_hypergraph(rng: &mut Rng64, max_vertices: usize) -> Hypergraph {
    let p = HypergraphParams {
        vertices: rng.random_range(2..=max_vertices),
        edges: rng.random_range(1..=max_vertices),
        max_edge_size: rng.random_range(2..=4),
    };
    random_hypergraph_with(rng, &p)
}

/// A random structure with 2..=`max_domain` elements, each in some fact.
pub fn pool_structure(rng: &mut Rng64, max_domain: usize) -> Structure {
    let sig = gen::random_signature(rng, 3, 3);
    let n = rng.random_range(2..=max_domain);
    let extra = rng.random_range(0..=5);
    random_structure_over(rng, &sig, n, extra, true)
}

fn hierarchy(h: &Hypergraph, limits: &Limits) -> Outcome {
    let tw = lift(exact_width(h, WidthKind::Tw, limits))?;
    let ghw = lift(exact_width(h, WidthKind::Ghw, limits))?;
    let fhw = lift(exact_width(h, WidthKind::Fhw, limits))?;
    for (name, w, m) in [
        ("tw", &tw, BagMeasure::Cardinality),
        ("ghw", &ghw, BagMeasure::IntegralCover),
        ("fhw", &fhw, BagMeasure::FractionalCover),
    ] {
        ensure!(validate_td(h, &w.witness).is_valid(), "{name} witness is not a tree decomposition");
        ensure!(lift(width_of(h, &w.witness, m))? == w.value, "{name} witness width differs");
    }
    let (hw, hd) = lift(hypertree_width(h, limits))?;
    lift(check_ghd(h, &hd))?;
    ensure!(lift(scv_list(h, &hd))?.is_empty(), "hw witness violates the special condition");
    ensure!(hd.width() == hw, "hw witness width {} ≠ {hw}", hd.width());
    let hw = int(hw as i64);
    let subw = lift(subw_bounds(h, limits))?;
    ensure!(fhw.value <= ghw.value, "fhw {} > ghw {}", fhw.value, ghw.value);
    ensure!(ghw.value <= hw, "ghw {} > hw {hw}", ghw.value);
    ensure!(hw <= tw.value.clone() + int(1), "hw {hw} > tw+1 = {}", tw.value.clone() + int(1));
    ensure!(subw.lower <= fhw.value, "subw lower {} > fhw {}", subw.lower, fhw.value);
    ensure!(subw.upper == fhw.value, "subw upper {} ≠ fhw {}", subw.upper, fhw.value);
    let rho_star = lift(fractional_cover(h, h.vertices()))?.total;
    let rho = int(lift(integral_cover(h, h.vertices()))?.size as i64);
    ensure!(fhw.value <= rho_star, "fhw {} > ρ* {rho_star}", fhw.value);
    ensure!(ghw.value <= rho, "ghw {} > ρ {rho}", ghw.value);
    ensure!(rho_star <= rho, "ρ* {rho_star} > ρ {rho}");
    Ok(())
}

fn core_minimality(a: &Structure, limits: &Limits) -> Outcome {
    let c = core(a);
    ensure!(is_homomorphism(a, a, &c.retraction), "retraction is not an endomorphism");
    ensure!(c.retraction.image() == *c.core.domain(), "retraction image is not the core");
    ensure!(
        c.core.domain().iter().all(|x| c.retraction.get(x) == Some(x.as_str())),
        "retraction moves a core element"
    );
    ensure!(lift(hom_equivalent(a, &c.core))?, "core not equivalent to the structure");
    ensure!(core(&c.core).core.domain().len() == c.core.domain().len(), "core of the core is smaller");
    for kind in [StructureWidth::RhoStar, StructureWidth::Fhw, StructureWidth::Ghw] {
        let of_core = lift(width(&c.core, kind, limits))?;
        let of_a = lift(width(a, kind, limits))?;
        ensure!(of_core.upper() <= of_a.upper(), "{} of core {of_core} > {of_a}", kind.name());
    }
    let shw = lift(semantic_hw(a, limits))?;
    let ghw_core = lift(exact_width(&hypergraph_of(&c.core), WidthKind::Ghw, limits))?.value;
    ensure!(int(shw.value as i64) == ghw_core, "semantic hw {} ≠ ghw(core) {ghw_core}", shw.value);
    let h = hypergraph_of(&shw.structure);
    lift(check_ghd(&h, &shw.decomposition))?;
    ensure!(lift(scv_list(&h, &shw.decomposition))?.is_empty(), "semantic hw witness has violations");
    ensure!(shw.decomposition.width() == shw.value, "semantic hw witness has the wrong width");
    ensure!(lift(hom_equivalent(&shw.structure, a))?, "repaired structure not equivalent");
    Ok(())
}

fn duality(h: &Hypergraph, limits: &Limits) -> Outcome {
    let d = lift(dual(h))?;
    let t = lift(transversality(&d))?;
    let rho = lift(integral_cover(h, h.vertices()))?.size;
    let rho_star = lift(fractional_cover(h, h.vertices()))?.total;
    ensure!(rho == t.tau, "ρ {rho} ≠ τ(dual) {}", t.tau);
    ensure!(rho_star == t.tau_star, "ρ* {rho_star} ≠ τ*(dual) {}", t.tau_star);
    let vc = lift(vc_dimension(h))?.dimension;
    let vc_dual = lift(vc_dimension(&d))?.dimension;
    ensure!(vc_dual < 1 << (vc + 1), "vc(dual) {vc_dual} ≥ 2^(vc+1) with vc {vc}");
    let gaps = lift(gap_report(h))?;
    let bound = ding_bound(vc, &gaps.rho_star);
    let gap = gaps.cigap.to_f64().unwrap_or(f64::INFINITY);
    ensure!(gap <= bound * (1.0 + 1e-9), "cigap {} above bound {bound:.4}", gaps.cigap);
    let ghw = lift(exact_width(h, WidthKind::Ghw, limits))?.value;
    let hw = int(lift(hypertree_width(h, limits))?.0 as i64);
    ensure!(hw <= int(3) * ghw.clone() + int(1), "hw {hw} > 3·ghw+1 with ghw {ghw}");
    Ok(())
}

/// `max(1, 2^(vc+2) · log₂(11 ρ*))`, evaluated in floating point.
pub fn ding_bound(vc: usize, rho_star: &Rational) -> f64 {
    let r = rho_star.to_f64().unwrap_or(0.0);
    let scaled = 2f64.powi(vc as i32 + 2) * (11.0 * r).log2();
    scaled.max(1.0)
}

/// A random structure with a GHD of its hypergraph in which extra cover
/// edges leak below their node, so the special condition fails.
pub fn injected_ghd(rng: &mut Rng64, limits: &Limits) -> Result<(Structure, CoveredDecomposition), String> {
    for _ in 0..100 {
        let a = pool_structure(rng, 5);
        let h = hypergraph_of(&a);
        let td = lift(exact_width(&h, WidthKind::Tw, limits))?.witness;
        if td.len() < 2 {
            continue;
        }
        let mut d = lift(ghd_covers(&h, &td))?;
        let below = td.subtree_unions();
        let mut candidates = Vec::new();
        for u in 0..td.len() {
            for (name, e) in h.edges() {
                let leaks = e.iter().any(|v| below[u].contains(v) && !td.bag(u).contains(v));
                if leaks && !d.covers[u].contains(name) {
                    candidates.push((u, name.to_string()));
                }
            }
        }
        if candidates.is_empty() {
            continue;
        }
        let k = rng.random_range(1..=candidates.len().min(3));
        for (u, name) in candidates.choose_multiple(rng, k) {
            d.covers[*u].insert(name.clone());
        }
        return Ok((a, d));
    }
    Err("no injectable decomposition in 100 draws".into())
}

fn scv_repair_item(a: &Structure, d: &CoveredDecomposition) -> Outcome {
    let h = hypergraph_of(a);
    let before = lift(scv_list(&h, d))?.len();
    ensure!(before > 0, "input has no violation");
    let r = lift(scv_repair(a, d))?;
    ensure!(r.scv_counts.first() == Some(&before), "first count {:?} ≠ {before}", r.scv_counts.first());
    ensure!(r.scv_counts.last() == Some(&0), "repair ended with violations");
    ensure!(
        r.scv_counts.windows(2).all(|w| w[1] < w[0]),
        "violation counts not strictly decreasing: {:?}",
        r.scv_counts
    );
    let h2 = hypergraph_of(&r.structure);
    lift(check_ghd(&h2, &r.decomposition))?;
    ensure!(lift(scv_list(&h2, &r.decomposition))?.is_empty(), "repaired decomposition has violations");
    ensure!(r.decomposition.width() == d.width(), "width {} ≠ {}", r.decomposition.width(), d.width());
    let none = BTreeSet::new();
    ensure!(lift(find_homomorphism(a, &r.structure, &none))?.is_some(), "no hom into the repaired structure");
    ensure!(lift(find_homomorphism(&r.structure, a, &none))?.is_some(), "no hom back from the repaired structure");
    Ok(())
}

/// Random `c` over `{E/2}` with at most 3 elements and 4 facts, and random
/// `d` with at most 2 elements.
fn pool_redh(rng: &mut Rng64) -> (Structure, Structure) {
    let sig = Signature::new().with("E", 2).expect("fresh");
    let n = rng.random_range(1..=3);
    let m = rng.random_range(0..=4);
    let elements: Vec<String> = (0..n).map(gen::element_name).collect();
    let mut c = Structure::new(sig.clone());
    for x in &elements {
        c.add_element(x);
    }
    for _ in 0..m {
        let t = vec![elements.choose(rng).expect("nonempty").clone(), elements.choose(rng).expect("nonempty").clone()];
        c.add_fact("E", t).expect("valid");
    }
    let nd = rng.random_range(1..=2);
    let extra = rng.random_range(0..=4);
    let d = random_structure_over(rng, &sig, nd, extra, false);
    (c, d)
}

/// A structure over `{E/2}` with the same hypergraph as `c` and one fact per
/// edge.
pub fn canonical_shape(c: &Structure) -> Structure {
    let mut a = Structure::new(c.signature().clone());
    for x in c.domain() {
        a.add_element(x);
    }
    for (_, e) in hypergraph_of(c).edges() {
        let vs: Vec<String> = e.iter().cloned().collect();
        let t = if vs.len() == 1 { vec![vs[0].clone(), vs[0].clone()] } else { vs };
        a.add_fact("E", t).expect("binary edge");
    }
    a
}

fn redh_both_shapes(c: &Structure, d: &Structure) -> Outcome {
    redh_item(c, d, c)?;
    redh_item(c, d, &canonical_shape(c))
}

/// Compares `(c, d)` with its reduction along `a` by brute force.
pub fn redh_item(c: &Structure, d: &Structure, a: &Structure) -> Outcome {
    let (sat, _) = lift(solve_bruteforce(c, d))?;
    let inst = lift(redh_reduce(c, d, a, None))?;
    let (sat2, g) = lift(solve_bruteforce(&inst.left, &inst.right))?;
    ensure!(sat == sat2, "original {sat}, reduced {sat2}");
    if let Some(g) = g {
        let h = lift(extract_solution(c, d, a, None, &g))?;
        ensure!(is_homomorphism(c, d, &h), "extracted map is not a homomorphism");
    }
    Ok(())
}

/// A random union over a shared signature, a data structure, and a disjunct
/// contained in one of the union's disjuncts.
fn pool_ucq(rng: &mut Rng64) -> (Ucq, Structure, Structure) {
    let sig = gen::random_signature(rng, 2, 2);
    let k = rng.random_range(1..=3);
    let disjuncts: Vec<Structure> = (0..k)
        .map(|_| {
            let n = rng.random_range(1..=4);
            let extra = rng.random_range(0..=3);
            random_structure_over(rng, &sig, n, extra, true)
        })
        .collect();
    let nb = rng.random_range(1..=3);
    let extra = rng.random_range(0..=5);
    let b = random_structure_over(rng, &sig, nb, extra, false);
    let base = disjuncts.choose(rng).expect("nonempty").clone();
    let mut elements: Vec<String> = base.domain().iter().cloned().collect();
    elements.push("z".into());
    let rels: Vec<(String, usize)> = sig.iter().map(|(r, k)| (r.to_string(), k)).collect();
    let mut contained = base;
    for _ in 0..rng.random_range(1..=2) {
        let (r, k) = rels.choose(rng).expect("nonempty");
        let t = (0..*k).map(|_| elements.choose(rng).expect("nonempty").clone()).collect();
        contained.add_fact(r, t).expect("valid");
    }
    (Ucq::new(disjuncts).expect("shared signature"), b, contained)
}

fn ucq_item(u: &Ucq, b: &Structure, contained: &Structure, limits: &Limits) -> Outcome {
    let nr = lift(make_nonredundant(u))?;
    let ds = nr.disjuncts();
    for i in 0..ds.len() {
        for j in 0..ds.len() {
            ensure!(i == j || !lift(is_contained(&ds[i], &ds[j]))?, "nr keeps disjunct {i} contained in {j}");
        }
    }
    ensure!(lift(ucq_equivalent(&nr, u))?, "nr(u) not equivalent to u");
    let mut brute = false;
    for d in u.disjuncts() {
        brute |= lift(solve_bruteforce(d, b))?.0;
    }
    let sat = lift(solve_ucq(u, b, limits))?;
    ensure!(sat == brute, "solve_ucq {sat}, brute force {brute}");
    let mut more = u.disjuncts().to_vec();
    more.push(contained.clone());
    let v = lift(Ucq::new(more))?;
    ensure!(lift(ucq_equivalent(u, &v))?, "adding a contained disjunct changed the union");
    let b1 = lift(ucq_semantic_subw_bounds(u, limits))?;
    let b2 = lift(ucq_semantic_subw_bounds(&v, limits))?;
    ensure!(b1 == b2, "bounds {b1} changed to {b2}");
    Ok(())
}

fn pool_pair(rng: &mut Rng64) -> (Structure, Structure) {
    let a = pool_structure(rng, 5);
    let nb = rng.random_range(1..=3);
    let extra = rng.random_range(0..=8);
    let b = random_structure_over(rng, a.signature(), nb, extra, false);
    (a, b)
}

/// Decomposition-guided solving with and without the core against brute
/// force.
pub fn solver_agreement(a: &Structure, b: &Structure, limits: &Limits) -> Outcome {
    let (brute, witness) = lift(solve_bruteforce(a, b))?;
    if let Some(w) = &witness {
        ensure!(is_homomorphism(a, b, w), "brute-force witness is not a homomorphism");
    }
    ensure!(brute == witness.is_some(), "answer and witness disagree");
    for use_core in [true, false] {
        let run = lift(solve_decomposed(a, b, use_core, limits))?;
        ensure!(run.satisfiable == brute, "decomposed (core: {use_core}) {}, brute force {brute}", run.satisfiable);
    }
    Ok(())
}

/// Per-suite pass counts, keyed by suite.
pub fn run_all(seed: u64, count: usize, limits: &Limits) -> BTreeMap<Suite, Report> {
    Suite::ALL.iter().map(|&s| (s, run(s, seed, count, limits))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_a_small_pool() {
        let limits = Limits::default();
        for suite in Suite::ALL {
            let r = run(suite, 1, 5, &limits);
            assert!(r.passed(), "{r}");
            assert_eq!(r.checked, 5);
            assert!(r.fixed >= 1);
        }
    }

    #[test]
    fn canonical_shape_keeps_hypergraph() {
        let c = structure(&[("E", &["a", "b"]), ("E", &["b", "a"]), ("E", &["c", "c"])]);
        let a = canonical_shape(&c);
        assert_eq!(hypergraph_of(&a), hypergraph_of(&c));
        assert_eq!(a.fact_count(), 2);
    }
}
