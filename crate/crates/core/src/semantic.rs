//! Semantic widths through the core, and repair of special condition
//! violations into a hypertree decomposition of an equivalent structure.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::covers::fractional_cover;
use crate::decomp::{
    check_ghd, exact_width, ghd_covers, scv_list, subw_bounds, CoveredDecomposition, TreeDecomposition, WidthKind,
};
use crate::hom::{core, Core};
use crate::model::{hypergraph_of, Structure, Tuple};
use crate::{Error, Limits, Rational, Result};

/// Widths available on structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureWidth {
    RhoStar,
    Tw,
    Ghw,
    Fhw,
    SubwBounds,
}

impl StructureWidth {
    pub fn name(self) -> &'static str {
        match self {
            StructureWidth::RhoStar => "rho-star",
            StructureWidth::Tw => "tw",
            StructureWidth::Ghw => "ghw",
            StructureWidth::Fhw => "fhw",
            StructureWidth::SubwBounds => "subw-bounds",
        }
    }
}

/// A width value; submodular width is only known up to an interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WidthValue {
    Point(Rational),
    Interval { lower: Rational, upper: Rational },
}

impl WidthValue {
    /// Upper end (the value itself for points).
    pub fn upper(&self) -> &Rational {
        match self {
            WidthValue::Point(v) => v,
            WidthValue::Interval { upper, .. } => upper,
        }
    }

    pub fn lower(&self) -> &Rational {
        match self {
            WidthValue::Point(v) => v,
            WidthValue::Interval { lower, .. } => lower,
        }
    }
}

impl fmt::Display for WidthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WidthValue::Point(v) => write!(f, "{v}"),
            WidthValue::Interval { lower, upper } if lower == upper => write!(f, "{lower}"),
            WidthValue::Interval { lower, upper } => write!(f, "[{lower}, {upper}]"),
        }
    }
}

/// The width of the hypergraph of `a` itself.
pub fn width(a: &Structure, kind: StructureWidth, limits: &Limits) -> Result<WidthValue> {
    let h = hypergraph_of(a);
    Ok(match kind {
        StructureWidth::RhoStar => WidthValue::Point(fractional_cover(&h, h.vertices())?.total),
        StructureWidth::Tw => WidthValue::Point(exact_width(&h, WidthKind::Tw, limits)?.value),
        StructureWidth::Ghw => WidthValue::Point(exact_width(&h, WidthKind::Ghw, limits)?.value),
        StructureWidth::Fhw => WidthValue::Point(exact_width(&h, WidthKind::Fhw, limits)?.value),
        StructureWidth::SubwBounds => {
            let b = subw_bounds(&h, limits)?;
            WidthValue::Interval {
                lower: b.lower,
                upper: b.upper,
            }
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemanticWidth {
    pub value: WidthValue,
    pub core: Core,
}

/// Width of the core, which is the least width over all homomorphically
/// equivalent structures for every width computed here.
pub fn semantic_width(a: &Structure, kind: StructureWidth, limits: &Limits) -> Result<SemanticWidth> {
    let c = core(a);
    let value = width(&c.core, kind, limits)?;
    Ok(SemanticWidth { value, core: c })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Repair {
    pub structure: Structure,
    pub decomposition: CoveredDecomposition,
    /// Number of violations before each step, ending with 0.
    pub scv_counts: Vec<usize>,
}

impl Repair {
    pub fn steps(&self) -> usize {
        self.scv_counts.len() - 1
    }
}

fn element_set(t: &Tuple) -> BTreeSet<String> {
    t.iter().cloned().collect()
}

fn fresh_name(s: &Structure, counter: &mut usize) -> String {
    loop {
        *counter += 1;
        let name = format!("_scv{counter}");
        if !s.domain().contains(&name) {
            return name;
        }
    }
}

/// Turns a GHD of `hypergraph_of(a)` into an HD of the same width for an
/// equivalent structure.
///
/// Each step takes the first violation `(u, e*)`, copies the least fact that
/// realizes `e*` with every vertex of `e*` outside `B_u` replaced by a fresh
/// constant, swaps `e*` for the copy in `λ_u` and adds the fresh constants to
/// `B_u`. Mapping the fresh constants back is a homomorphism onto `a`.
pub fn scv_repair(a: &Structure, d: &CoveredDecomposition) -> Result<Repair> {
    let h = hypergraph_of(a);
    check_ghd(&h, d)?;
    let mut structure = a.clone();
    let mut base: TreeDecomposition = d.base.clone();
    let mut covers: Vec<Vec<BTreeSet<String>>> = d
        .covers
        .iter()
        .map(|c| c.iter().map(|e| h.edge(e).expect("checked").clone()).collect())
        .collect();
    let mut counter = 0;
    let mut scv_counts = Vec::new();
    loop {
        let h = hypergraph_of(&structure);
        let named = covers
            .iter()
            .map(|c| {
                c.iter()
                    .map(|set| String::from(h.edge_with_vertices(set).expect("cover edge exists")))
                    .collect()
            })
            .collect();
        let current = CoveredDecomposition::new(base.clone(), named)?;
        let scvs = scv_list(&h, &current)?;
        if let Some(&last) = scv_counts.last() {
            debug_assert!(scvs.len() < last, "violations must strictly decrease");
        }
        scv_counts.push(scvs.len());
        let Some(first) = scvs.into_iter().next() else {
            return Ok(Repair {
                structure,
                decomposition: current,
                scv_counts,
            });
        };
        let node = first.node;
        let edge = h.edge(&first.edge).expect("listed edge").clone();
        let (relation, tuple) = structure
            .iter_facts()
            .find(|(_, t)| element_set(t) == edge)
            .map(|(r, t)| (String::from(r), t.clone()))
            .expect("every edge is realized by a fact");
        let outside: Vec<String> = edge.difference(base.bag(node)).cloned().collect();
        let mut fresh = Vec::with_capacity(outside.len());
        for _ in &outside {
            fresh.push(fresh_name(&structure, &mut counter));
        }
        let copy: Tuple = tuple
            .iter()
            .map(|x| match outside.iter().position(|v| v == x) {
                Some(i) => fresh[i].clone(),
                None => x.clone(),
            })
            .collect();
        let new_edge = element_set(&copy);
        structure.add_fact(&relation, copy)?;
        let slot = covers[node]
            .iter()
            .position(|c| *c == edge)
            .ok_or_else(|| Error::InvalidGhd(format!("edge missing from cover of node {node}")))?;
        covers[node][slot] = new_edge;
        base.bags_mut()[node].extend(fresh);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemanticHw {
    /// `ghw` of the core, equal to the semantic hypertree width.
    pub value: usize,
    pub core: Core,
    /// Repaired structure, homomorphically equivalent to the input.
    pub structure: Structure,
    /// Hypertree decomposition of the repaired structure of width `value`.
    pub decomposition: CoveredDecomposition,
}

/// Semantic hypertree width with an explicit equivalent structure and a
/// hypertree decomposition witnessing it.
pub fn semantic_hw(a: &Structure, limits: &Limits) -> Result<SemanticHw> {
    let c = core(a);
    let h = hypergraph_of(&c.core);
    let best = exact_width(&h, WidthKind::Ghw, limits)?;
    let ghd = ghd_covers(&h, &best.witness)?;
    let value = ghd.width();
    debug_assert_eq!(Rational::from_integer(value.into()), best.value);
    let repair = scv_repair(&c.core, &ghd)?;
    Ok(SemanticHw {
        value,
        core: c,
        structure: repair.structure,
        decomposition: repair.decomposition,
    })
}
