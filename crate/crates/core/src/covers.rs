//! Integral and fractional edge covers, transversals, duality, integrality
//! gaps, VC dimension and exoticness witnesses.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::hom::Mapping;
use crate::lp::min_cover;
use crate::model::{bits, Hypergraph, Indexed, Mask};
use crate::{Error, Rational, Result};

/// Nonnegative rational weight per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalCover {
    pub weights: BTreeMap<String, Rational>,
    pub total: Rational,
}

impl FractionalCover {
    /// Incident weight at `v`.
    pub fn load(&self, h: &Hypergraph, v: &str) -> Rational {
        self.weights
            .iter()
            .filter(|(e, _)| h.edge(e).is_some_and(|vs| vs.contains(v)))
            .fold(Rational::zero(), |acc, (_, w)| acc + w)
    }

    /// Whether every vertex of `x` receives weight at least one.
    pub fn covers(&self, h: &Hypergraph, x: &BTreeSet<String>) -> bool {
        x.iter().all(|v| self.load(h, v) >= Rational::one())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralCover {
    pub size: usize,
    pub edges: BTreeSet<String>,
}

/// Minimum number of `sets` whose union contains `universe`, as set indices in
/// ascending order; `None` if some element lies in no set.
pub(crate) fn min_set_cover(universe: Mask, sets: &[Mask]) -> Option<Vec<usize>> {
    if universe == 0 {
        return Some(Vec::new());
    }
    let union = sets.iter().fold(0, |acc, s| acc | s);
    if universe & !union != 0 {
        return None;
    }
    let mut best = greedy_cover(universe, sets);
    let mut chosen = Vec::new();
    branch(universe, sets, &mut chosen, &mut best);
    best.sort_unstable();
    Some(best)
}

fn greedy_cover(universe: Mask, sets: &[Mask]) -> Vec<usize> {
    let mut left = universe;
    let mut out = Vec::new();
    while left != 0 {
        let (i, _) = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (i, (s & left).count_ones()))
            .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        out.push(i);
        left &= !sets[i];
    }
    out
}

fn branch(left: Mask, sets: &[Mask], chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
    if left == 0 {
        if chosen.len() < best.len() {
            *best = chosen.clone();
        }
        return;
    }
    let widest = sets.iter().map(|s| (s & left).count_ones()).max().unwrap_or(0);
    let need = left.count_ones().div_ceil(widest) as usize;
    if chosen.len() + need >= best.len() {
        return;
    }
    // Branch on the element with the fewest candidate sets.
    let pivot = bits(left)
        .min_by_key(|&v| sets.iter().filter(|s| *s & (1 << v) != 0).count())
        .expect("left is nonempty");
    let mut candidates: Vec<usize> = (0..sets.len()).filter(|&i| sets[i] & (1 << pivot) != 0).collect();
    candidates.sort_by_key(|&i| (core::cmp::Reverse((sets[i] & left).count_ones()), i));
    for i in candidates {
        chosen.push(i);
        branch(left & !sets[i], sets, chosen, best);
        chosen.pop();
    }
}

/// Optimal fractional cover of the vertices in `x` by the sets, one weight per
/// set. Every element of `x` must lie in some set.
pub(crate) fn min_fractional_cover(x: Mask, sets: &[Mask]) -> (Rational, Vec<Rational>) {
    let rows: Vec<Vec<usize>> = bits(x)
        .map(|v| (0..sets.len()).filter(|&j| sets[j] & (1 << v) != 0).collect())
        .collect();
    let sol = min_cover(&rows, sets.len());
    (sol.value, sol.weights)
}

fn first_uncovered(ix: &Indexed, x: Mask) -> Option<String> {
    bits(x & !ix.covered()).next().map(|v| ix.vertices[v].clone())
}

/// `ρ_H(x)` with a minimum set of edges.
pub fn integral_cover(h: &Hypergraph, x: &BTreeSet<String>) -> Result<IntegralCover> {
    let ix = h.indexed()?;
    let xm = ix.mask_of(x)?;
    if let Some(v) = first_uncovered(&ix, xm) {
        return Err(Error::UncoverableVertex(v));
    }
    let chosen = min_set_cover(xm, &ix.edges).expect("coverable");
    Ok(IntegralCover {
        size: chosen.len(),
        edges: chosen.into_iter().map(|i| ix.edge_names[i].clone()).collect(),
    })
}

/// `ρ*_H(x)` with an optimal weighting of all edges.
pub fn fractional_cover(h: &Hypergraph, x: &BTreeSet<String>) -> Result<FractionalCover> {
    let ix = h.indexed()?;
    let xm = ix.mask_of(x)?;
    if let Some(v) = first_uncovered(&ix, xm) {
        return Err(Error::UncoverableVertex(v));
    }
    let (total, weights) = min_fractional_cover(xm, &ix.edges);
    Ok(FractionalCover {
        weights: ix.edge_names.iter().cloned().zip(weights).collect(),
        total,
    })
}

/// Pushes a fractional cover of `g` along a hypergraph homomorphism `f: g → h`:
/// every edge of `h` receives the summed weight of its preimage edges.
pub fn pushforward_cover(
    g: &Hypergraph,
    h: &Hypergraph,
    f: &Mapping,
    x: &FractionalCover,
) -> Result<FractionalCover> {
    for v in g.vertices() {
        match f.get(v) {
            None => return Err(Error::InvalidMapping(format!("vertex `{v}` is unmapped"))),
            Some(w) if !h.vertices().contains(w) => {
                return Err(Error::InvalidMapping(format!("`{v}` maps to unknown vertex `{w}`")))
            }
            Some(_) => {}
        }
    }
    if let Some(e) = x.weights.keys().find(|e| g.edge(e).is_none()) {
        return Err(Error::InvalidMapping(format!("cover weights unknown edge `{e}`")));
    }
    let mut weights: BTreeMap<String, Rational> =
        h.edges().map(|(n, _)| (n.to_string(), Rational::zero())).collect();
    for (name, e) in g.edges() {
        let image: BTreeSet<String> = e.iter().map(|v| f.get(v).expect("total").to_string()).collect();
        let target = h
            .edge_with_vertices(&image)
            .ok_or_else(|| Error::NotAHomomorphism(name.to_string()))?;
        if let Some(w) = x.weights.get(name) {
            *weights.get_mut(target).expect("edge of h") += w;
        }
    }
    Ok(FractionalCover {
        weights,
        total: x.total.clone(),
    })
}

/// The first violated reducedness condition, if any.
pub fn reduction_violation(h: &Hypergraph) -> Option<String> {
    if let Some(v) = h.isolated_vertices().first() {
        return Some(format!("isolated vertex `{v}`"));
    }
    let mut types: BTreeMap<&BTreeSet<String>, &str> = BTreeMap::new();
    for (name, e) in h.edges() {
        if let Some(other) = types.insert(e, name) {
            return Some(format!("edges `{other}` and `{name}` have the same vertex-type"));
        }
    }
    let mut incidence: BTreeMap<BTreeSet<&str>, &str> = BTreeMap::new();
    for v in h.vertices() {
        let inc: BTreeSet<&str> = h.edges().filter(|(_, e)| e.contains(v)).map(|(n, _)| n).collect();
        if let Some(other) = incidence.insert(inc, v) {
            return Some(format!("vertices `{other}` and `{v}` have the same edge-type"));
        }
    }
    None
}

pub fn is_reduced(h: &Hypergraph) -> bool {
    reduction_violation(h).is_none()
}

/// Drops isolated vertices and duplicate edges, and merges vertices with the
/// same incident edges into the lexicographically least of them.
pub fn reduce(h: &Hypergraph) -> Hypergraph {
    let mut seen = BTreeSet::new();
    let edges: Vec<(&str, &BTreeSet<String>)> = h.edges().filter(|(_, e)| seen.insert(*e)).collect();
    let mut kept_vertices = BTreeSet::new();
    let mut incidence_seen = BTreeSet::new();
    for v in h.vertices() {
        let inc: BTreeSet<&str> = edges.iter().filter(|(_, e)| e.contains(v)).map(|(n, _)| *n).collect();
        if !inc.is_empty() && incidence_seen.insert(inc) {
            kept_vertices.insert(v.clone());
        }
    }
    let mut out = Hypergraph::new();
    for v in &kept_vertices {
        out.add_vertex(v);
    }
    for (name, e) in edges {
        let restricted: BTreeSet<String> = e.intersection(&kept_vertices).cloned().collect();
        out.add_edge(name, restricted).expect("nonempty edge over kept vertices");
    }
    out
}

/// The dual hypergraph: vertices are the edge names, and every vertex `v`
/// yields an edge named `v` holding the names of its incident edges.
pub fn dual(h: &Hypergraph) -> Result<Hypergraph> {
    if let Some(why) = reduction_violation(h) {
        return Err(Error::NotReduced(why));
    }
    let mut out = Hypergraph::new();
    for (name, _) in h.edges() {
        out.add_vertex(name);
    }
    for v in h.vertices() {
        let inc: BTreeSet<String> = h
            .edges()
            .filter(|(_, e)| e.contains(v))
            .map(|(n, _)| n.to_string())
            .collect();
        out.add_edge(v, inc)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversality {
    pub tau: usize,
    pub tau_star: Rational,
    /// A minimum transversal.
    pub hitting_set: BTreeSet<String>,
    /// An optimal fractional transversal.
    pub weights: BTreeMap<String, Rational>,
}

/// `τ` and `τ*`. Edges are nonempty by construction of [`Hypergraph`].
pub fn transversality(h: &Hypergraph) -> Result<Transversality> {
    let ix = h.indexed()?;
    let m = ix.edges.len();
    if m > crate::model::MAX_INDEXED {
        return Err(Error::SizeLimit {
            kind: "edge bitset",
            vertices: m,
            limit: crate::model::MAX_INDEXED,
        });
    }
    // Vertex v hits the edges containing it.
    let hits: Vec<Mask> = (0..ix.n())
        .map(|v| {
            ix.edges
                .iter()
                .enumerate()
                .filter(|(_, e)| **e & (1 << v) != 0)
                .fold(0, |acc, (j, _)| acc | (1 << j))
        })
        .collect();
    let all_edges = crate::model::full_mask(m);
    let chosen = min_set_cover(all_edges, &hits).expect("nonempty edges are hittable");
    let (tau_star, weights) = min_fractional_cover(all_edges, &hits);
    Ok(Transversality {
        tau: chosen.len(),
        tau_star,
        hitting_set: chosen.into_iter().map(|v| ix.vertices[v].clone()).collect(),
        weights: ix.vertices.iter().cloned().zip(weights).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub rho: usize,
    pub rho_star: Rational,
    pub tau: usize,
    pub tau_star: Rational,
    /// `ρ / ρ*`.
    pub cigap: Rational,
    /// `τ / τ*` of the dual hypergraph.
    pub tigap_of_dual: Rational,
}

fn gap(integral: usize, fractional: &Rational) -> Rational {
    if fractional.is_zero() {
        Rational::one()
    } else {
        Rational::from_integer(integral.into()) / fractional
    }
}

/// Cover and transversal numbers of a reduced hypergraph with both gaps.
///
/// Panics if `cigap(h) ≠ tigap(dual(h))`, which duality rules out.
pub fn gap_report(h: &Hypergraph) -> Result<GapReport> {
    let d = dual(h)?;
    let rho = integral_cover(h, h.vertices())?.size;
    let rho_star = fractional_cover(h, h.vertices())?.total;
    let t = transversality(h)?;
    let td = transversality(&d)?;
    let cigap = gap(rho, &rho_star);
    let tigap_of_dual = gap(td.tau, &td.tau_star);
    assert_eq!(cigap, tigap_of_dual, "cover gap differs from transversal gap of the dual");
    Ok(GapReport {
        rho,
        rho_star,
        tau: t.tau,
        tau_star: t.tau_star,
        cigap,
        tigap_of_dual,
    })
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `false`.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn distinct_traces(edges: &[Mask], x: Mask) -> BTreeSet<Mask> {
    edges.iter().map(|e| e & x).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcDimension {
    pub dimension: usize,
    /// The first shattered set of maximum size in lexicographic order.
    pub shattered: BTreeSet<String>,
}

/// Exact VC dimension. The empty set counts as shattered, so the result is at
/// least 0 even without edges.
pub fn vc_dimension(h: &Hypergraph) -> Result<VcDimension> {
    let ix = h.indexed()?;
    let mut best = VcDimension {
        dimension: 0,
        shattered: BTreeSet::new(),
    };
    // Subsets of shattered sets are shattered, so sizes are tried upwards and
    // the search stops at the first size with no shattered set.
    for k in 1..=ix.n() {
        if (1usize << k.min(63)) > ix.edges.len() {
            break;
        }
        let mut found = None;
        for_each_subset(ix.n(), k, |sub| {
            let x: Mask = sub.iter().fold(0, |acc, &v| acc | (1 << v));
            if distinct_traces(&ix.edges, x).len() == 1 << k {
                found = Some(x);
                false
            } else {
                true
            }
        });
        match found {
            Some(x) => {
                best = VcDimension {
                    dimension: k,
                    shattered: ix.names_of(x),
                }
            }
            None => break,
        }
    }
    Ok(best)
}

/// A set `U` of `n` vertices whose induced subhypergraph has at least
/// `2^n − 1` distinct edges.
pub fn exotic_witness(h: &Hypergraph, n: usize) -> Result<Option<BTreeSet<String>>> {
    let ix = h.indexed()?;
    if n >= 64 {
        return Ok(None);
    }
    let needed = (1usize << n) - 1;
    let mut found = None;
    for_each_subset(ix.n(), n, |sub| {
        let u: Mask = sub.iter().fold(0, |acc, &v| acc | (1 << v));
        let mut traces = distinct_traces(&ix.edges, u);
        traces.remove(&0);
        if traces.len() >= needed {
            found = Some(u);
            false
        } else {
            true
        }
    });
    Ok(found.map(|u| ix.names_of(u)))
}
