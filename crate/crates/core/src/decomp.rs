//! Tree decompositions, (generalized) hypertree decompositions and exact
//! width computation at desk scale.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::covers::{for_each_subset, min_fractional_cover, min_set_cover};
use crate::model::{bits, Hypergraph, Indexed, Mask};
use crate::{int, Error, Limits, Rational, Result};

/// A rooted tree of bags. Node 0 is the root and nodes are numbered in
/// preorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<BTreeSet<String>>,
    parent: Vec<Option<usize>>,
}

impl TreeDecomposition {
    /// Builds a decomposition from bags and `(parent, child)` tree edges over
    /// node indices. Nodes are renumbered in preorder (children visited by
    /// their input index); the returned permutation maps input indices to new
    /// ones.
    pub fn new(bags: Vec<BTreeSet<String>>, tree: &[(usize, usize)]) -> Result<(Self, Vec<usize>)> {
        let n = bags.len();
        if n == 0 {
            return Err(Error::InvalidDecomposition("no nodes".into()));
        }
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        for &(p, c) in tree {
            if p >= n || c >= n || p == c {
                return Err(Error::InvalidDecomposition(format!("bad tree edge {p} -> {c}")));
            }
            if parent[c].replace(p).is_some() {
                return Err(Error::InvalidDecomposition(format!("node {c} has two parents")));
            }
            children[p].push(c);
        }
        let roots: Vec<usize> = (0..n).filter(|&i| parent[i].is_none()).collect();
        if roots.len() != 1 {
            return Err(Error::InvalidDecomposition(format!("expected one root, found {}", roots.len())));
        }
        for c in &mut children {
            c.sort_unstable();
        }
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![roots[0]];
        while let Some(u) = stack.pop() {
            order.push(u);
            stack.extend(children[u].iter().rev());
        }
        if order.len() != n {
            return Err(Error::InvalidDecomposition("tree edges contain a cycle".into()));
        }
        let mut new_index = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let td = TreeDecomposition {
            bags: order.iter().map(|&u| bags[u].clone()).collect(),
            parent: order.iter().map(|&u| parent[u].map(|p| new_index[p])).collect(),
        };
        Ok((td, new_index))
    }

    /// A single node holding `bag`.
    pub fn single(bag: BTreeSet<String>) -> Self {
        TreeDecomposition {
            bags: vec![bag],
            parent: vec![None],
        }
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn bag(&self, u: usize) -> &BTreeSet<String> {
        &self.bags[u]
    }

    pub fn bags(&self) -> &[BTreeSet<String>] {
        &self.bags
    }

    pub fn parent(&self, u: usize) -> Option<usize> {
        self.parent[u]
    }

    pub fn children(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&c| self.parent[c] == Some(u))
    }

    /// `(parent, child)` pairs in child order.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        (0..self.len()).filter_map(|c| self.parent[c].map(|p| (p, c))).collect()
    }

    /// Union of the bags in the subtree below each node.
    pub fn subtree_unions(&self) -> Vec<BTreeSet<String>> {
        let mut out = self.bags.clone();
        // Preorder numbering puts every child after its parent.
        for c in (0..self.len()).rev() {
            if let Some(p) = self.parent[c] {
                let below = out[c].clone();
                out[p].extend(below);
            }
        }
        out
    }

    pub(crate) fn bags_mut(&mut self) -> &mut [BTreeSet<String>] {
        &mut self.bags
    }
}

/// A tree decomposition with an edge cover `λ_u` per node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveredDecomposition {
    pub base: TreeDecomposition,
    pub covers: Vec<BTreeSet<String>>,
}

impl CoveredDecomposition {
    pub fn new(base: TreeDecomposition, covers: Vec<BTreeSet<String>>) -> Result<Self> {
        if covers.len() != base.len() {
            return Err(Error::InvalidDecomposition(format!(
                "{} covers for {} nodes",
                covers.len(),
                base.len()
            )));
        }
        Ok(CoveredDecomposition { base, covers })
    }

    /// `max_u |λ_u|`.
    pub fn width(&self) -> usize {
        self.covers.iter().map(BTreeSet::len).max().unwrap_or(0)
    }
}

/// Problems found by [`validate_td`]. Empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub unknown_vertices: Vec<String>,
    pub uncovered_edges: Vec<String>,
    pub disconnected_vertices: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.unknown_vertices.is_empty() && self.uncovered_edges.is_empty() && self.disconnected_vertices.is_empty()
    }
}

pub fn validate_td(h: &Hypergraph, td: &TreeDecomposition) -> ValidationReport {
    let mut report = ValidationReport::default();
    let mut seen = BTreeSet::new();
    for bag in td.bags() {
        for v in bag {
            if !h.vertices().contains(v) && seen.insert(v.clone()) {
                report.unknown_vertices.push(v.clone());
            }
        }
    }
    for (name, e) in h.edges() {
        if !td.bags().iter().any(|b| e.is_subset(b)) {
            report.uncovered_edges.push(name.to_string());
        }
    }
    let mut occurring: BTreeSet<&String> = BTreeSet::new();
    for bag in td.bags() {
        occurring.extend(bag.iter());
    }
    for v in occurring {
        // Occurrences are connected iff exactly one occurring node has a
        // parent that does not hold v.
        let tops = (0..td.len())
            .filter(|&u| td.bag(u).contains(v) && td.parent(u).is_none_or(|p| !td.bag(p).contains(v)))
            .count();
        if tops > 1 {
            report.disconnected_vertices.push(v.clone());
        }
    }
    report
}

/// A special condition violation: `edge ∈ λ_node` has vertices below `node`
/// that are missing from its bag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScvRecord {
    pub node: usize,
    pub edge: String,
    pub leaked: BTreeSet<String>,
}

/// Checks the tree decomposition conditions and `B_u ⊆ ⋃λ_u`.
pub fn check_ghd(h: &Hypergraph, d: &CoveredDecomposition) -> Result<()> {
    let report = validate_td(h, &d.base);
    if !report.is_valid() {
        return Err(Error::InvalidGhd(format!("{report:?}")));
    }
    for (u, cover) in d.covers.iter().enumerate() {
        let mut union = BTreeSet::new();
        for e in cover {
            let vs = h
                .edge(e)
                .ok_or_else(|| Error::InvalidGhd(format!("node {u} covers with unknown edge `{e}`")))?;
            union.extend(vs.iter().cloned());
        }
        if let Some(v) = d.base.bag(u).iter().find(|v| !union.contains(*v)) {
            return Err(Error::InvalidGhd(format!("vertex `{v}` of bag {u} is not covered by λ")));
        }
    }
    Ok(())
}

/// All special condition violations in preorder, edges by name. Empty iff the
/// GHD is a hypertree decomposition.
pub fn scv_list(h: &Hypergraph, d: &CoveredDecomposition) -> Result<Vec<ScvRecord>> {
    check_ghd(h, d)?;
    let below = d.base.subtree_unions();
    let mut out = Vec::new();
    for (u, cover) in d.covers.iter().enumerate() {
        for e in cover {
            let leaked: BTreeSet<String> = h
                .edge(e)
                .expect("checked")
                .intersection(&below[u])
                .filter(|v| !d.base.bag(u).contains(*v))
                .cloned()
                .collect();
            if !leaked.is_empty() {
                out.push(ScvRecord {
                    node: u,
                    edge: e.clone(),
                    leaked,
                });
            }
        }
    }
    Ok(out)
}

/// Width function evaluated on bags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BagMeasure {
    /// `|B| − 1`.
    Cardinality,
    /// `ρ_H(B)`.
    IntegralCover,
    /// `ρ*_H(B)`.
    FractionalCover,
}

fn measure_bag(ix: &Indexed, bag: Mask, kind: BagMeasure) -> Result<Rational> {
    if kind != BagMeasure::Cardinality {
        if let Some(v) = bits(bag & !ix.covered()).next() {
            return Err(Error::UncoverableVertex(ix.vertices[v].clone()));
        }
    }
    Ok(match kind {
        BagMeasure::Cardinality => int(bag.count_ones() as i64 - 1),
        BagMeasure::IntegralCover => {
            int(min_set_cover(bag, &ix.edges).expect("coverable").len() as i64)
        }
        BagMeasure::FractionalCover => min_fractional_cover(bag, &ix.edges).0,
    })
}

/// The f-width of a given decomposition: the maximum bag value.
pub fn width_of(h: &Hypergraph, td: &TreeDecomposition, kind: BagMeasure) -> Result<Rational> {
    let ix = h.indexed()?;
    let mut best: Option<Rational> = None;
    for bag in td.bags() {
        let value = measure_bag(&ix, ix.mask_of(bag)?, kind)?;
        if best.as_ref().is_none_or(|b| value > *b) {
            best = Some(value);
        }
    }
    Ok(best.unwrap_or_else(|| int(0)))
}

/// Widths minimized by [`exact_width`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WidthKind {
    Tw,
    Ghw,
    Fhw,
}

impl WidthKind {
    pub fn name(self) -> &'static str {
        match self {
            WidthKind::Tw => "tw",
            WidthKind::Ghw => "ghw",
            WidthKind::Fhw => "fhw",
        }
    }

    fn measure(self) -> BagMeasure {
        match self {
            WidthKind::Tw => BagMeasure::Cardinality,
            WidthKind::Ghw => BagMeasure::IntegralCover,
            WidthKind::Fhw => BagMeasure::FractionalCover,
        }
    }

    fn limit(self, limits: &Limits) -> usize {
        match self {
            WidthKind::Tw => limits.tw,
            WidthKind::Ghw => limits.ghw,
            WidthKind::Fhw => limits.fhw,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactWidth {
    pub value: Rational,
    pub witness: TreeDecomposition,
}

fn primal_adjacency(ix: &Indexed) -> Vec<Mask> {
    (0..ix.n())
        .map(|v| {
            ix.edges
                .iter()
                .filter(|e| *e & (1 << v) != 0)
                .fold(0, |acc, e| acc | e)
                & !(1 << v)
        })
        .collect()
}

/// Bag created when `v` is eliminated after the set `gone`: `v` plus every
/// vertex outside `gone` reachable from `v` through `gone`.
fn elimination_bag(adj: &[Mask], gone: Mask, v: usize) -> Mask {
    let mut seen: Mask = 1 << v;
    let mut out: Mask = 1 << v;
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        for w in bits(adj[u] & !seen) {
            seen |= 1 << w;
            if gone & (1 << w) != 0 {
                stack.push(w);
            } else {
                out |= 1 << w;
            }
        }
    }
    out
}

/// Minimum over elimination orders of the largest bag value, by dynamic
/// programming over the set of already eliminated vertices. Returns the value
/// and an optimal order (first eliminated first).
fn elimination_dp<F>(n: usize, adj: &[Mask], mut cost: F) -> Result<(Rational, Vec<usize>)>
where
    F: FnMut(Mask) -> Result<Rational>,
{
    let states = 1usize << n;
    let mut best: Vec<Option<Rational>> = vec![None; states];
    let mut choice = vec![0u8; states];
    let mut memo: BTreeMap<Mask, Rational> = BTreeMap::new();
    for s in 1..states {
        let set = s as Mask;
        let mut here: Option<(Rational, usize)> = None;
        for v in bits(set) {
            let rest = set & !(1 << v);
            let bag = elimination_bag(adj, rest, v);
            let value = match memo.get(&bag) {
                Some(x) => x.clone(),
                None => {
                    let x = cost(bag)?;
                    memo.insert(bag, x.clone());
                    x
                }
            };
            let total = match &best[rest as usize] {
                Some(prev) if *prev > value => prev.clone(),
                _ => value,
            };
            if here.as_ref().is_none_or(|(b, _)| total < *b) {
                here = Some((total, v));
            }
        }
        let (value, v) = here.expect("nonempty set");
        best[s] = Some(value);
        choice[s] = v as u8;
    }
    let mut order = Vec::with_capacity(n);
    let mut set = (states - 1) as Mask;
    while set != 0 {
        let v = choice[set as usize] as usize;
        order.push(v);
        set &= !(1 << v);
    }
    order.reverse();
    Ok((best[states - 1].clone().expect("computed"), order))
}

/// Tree decomposition induced by an elimination order, with bags contained in
/// their neighbour's bag contracted away.
fn decomposition_from_order(ix: &Indexed, adj: &[Mask], order: &[usize]) -> TreeDecomposition {
    let n = order.len();
    let mut position = vec![0; ix.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut gone: Mask = 0;
    let mut bags = Vec::with_capacity(n);
    for &v in order {
        bags.push(elimination_bag(adj, gone, v));
        gone |= 1 << v;
    }
    let mut parent: Vec<Option<usize>> = (0..n)
        .map(|i| {
            bits(bags[i] & !(1 << order[i]))
                .map(|w| position[w])
                .min()
        })
        .collect();
    for p in parent.iter_mut().take(n - 1) {
        if p.is_none() {
            *p = Some(n - 1);
        }
    }
    // Contract tree edges whose bags are nested; the merged node keeps the
    // larger bag.
    let mut alive = vec![true; n];
    while let Some(c) = (0..n).find(|&c| {
        alive[c]
            && parent[c].is_some_and(|p| {
                let (x, y) = (bags[c], bags[p]);
                x & !y == 0 || y & !x == 0
            })
    }) {
        let p = parent[c].expect("has parent");
        bags[p] |= bags[c];
        alive[c] = false;
        for q in parent.iter_mut() {
            if *q == Some(c) {
                *q = Some(p);
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&i| alive[i]).collect();
    let mut index = vec![usize::MAX; n];
    for (k, &i) in keep.iter().enumerate() {
        index[i] = k;
    }
    let named: Vec<BTreeSet<String>> = keep.iter().map(|&i| ix.names_of(bags[i])).collect();
    let tree: Vec<(usize, usize)> = keep
        .iter()
        .filter_map(|&i| parent[i].map(|p| (index[p], index[i])))
        .collect();
    TreeDecomposition::new(named, &tree).expect("elimination tree").0
}

fn check_limit(h: &Hypergraph, kind: &'static str, limit: usize) -> Result<()> {
    let n = h.vertices().len();
    if n > limit {
        return Err(Error::SizeLimit {
            kind,
            vertices: n,
            limit,
        });
    }
    Ok(())
}

/// Exact `tw`, `ghw` or `fhw` with an optimal decomposition.
///
/// The minimum of a monotone width function over all tree decompositions is
/// attained by the clique tree of a triangulation, so the search ranges over
/// elimination orders.
pub fn exact_width(h: &Hypergraph, kind: WidthKind, limits: &Limits) -> Result<ExactWidth> {
    check_limit(h, kind.name(), kind.limit(limits))?;
    let ix = h.indexed()?;
    if kind != WidthKind::Tw {
        if let Some(v) = h.isolated_vertices().first() {
            return Err(Error::UncoverableVertex(v.to_string()));
        }
    }
    if ix.n() == 0 {
        return Ok(ExactWidth {
            value: int(0),
            witness: TreeDecomposition::single(BTreeSet::new()),
        });
    }
    let adj = primal_adjacency(&ix);
    let measure = kind.measure();
    let (value, order) = elimination_dp(ix.n(), &adj, |bag| measure_bag(&ix, bag, measure))?;
    let witness = decomposition_from_order(&ix, &adj, &order);
    Ok(ExactWidth { value, witness })
}

/// Attaches a minimum integral edge cover to every bag.
pub fn ghd_covers(h: &Hypergraph, td: &TreeDecomposition) -> Result<CoveredDecomposition> {
    let ix = h.indexed()?;
    let mut covers = Vec::with_capacity(td.len());
    for bag in td.bags() {
        let m = ix.mask_of(bag)?;
        if let Some(v) = bits(m & !ix.covered()).next() {
            return Err(Error::UncoverableVertex(ix.vertices[v].clone()));
        }
        let chosen = min_set_cover(m, &ix.edges).expect("coverable");
        covers.push(chosen.into_iter().map(|i| ix.edge_names[i].clone()).collect());
    }
    CoveredDecomposition::new(td.clone(), covers)
}

/// Subtree of a hypertree decomposition under construction.
#[derive(Debug, Clone)]
struct HdNode {
    bag: Mask,
    cover: Vec<usize>,
    children: Vec<HdNode>,
}

struct HwSearch<'a> {
    ix: &'a Indexed,
    k: usize,
    /// Union of the edges containing each vertex.
    reach: Vec<Mask>,
    memo: BTreeMap<(Mask, Mask), Option<HdNode>>,
}

impl HwSearch<'_> {
    /// Components of `set` under edge adjacency.
    fn components(&self, set: Mask) -> Vec<Mask> {
        let mut left = set;
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp: Mask = 1 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.reach[v] & set & !comp;
                comp |= new;
                frontier |= new;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    fn edges_touching(&self, set: Mask) -> Mask {
        bits(set).fold(0, |acc, v| acc | self.reach[v])
    }

    /// Decomposes component `comp` hanging below a bag that shares `conn`
    /// with it.
    fn decompose(&mut self, comp: Mask, conn: Mask) -> Option<HdNode> {
        if let Some(done) = self.memo.get(&(comp, conn)) {
            return done.clone();
        }
        let result = self.search(comp, conn);
        self.memo.insert((comp, conn), result.clone());
        result
    }

    fn search(&mut self, comp: Mask, conn: Mask) -> Option<HdNode> {
        let scope = comp | conn;
        let candidates: Vec<usize> = (0..self.ix.edges.len())
            .filter(|&e| self.ix.edges[e] & scope != 0)
            .collect();
        for size in 1..=self.k.min(candidates.len()) {
            let mut found = None;
            let mut picks = Vec::new();
            for_each_subset(candidates.len(), size, |sub| {
                picks.push(sub.iter().map(|&i| candidates[i]).collect::<Vec<_>>());
                true
            });
            for cover in picks {
                let vars = cover.iter().fold(0, |acc, &e| acc | self.ix.edges[e]);
                if conn & !vars != 0 || vars & comp == 0 {
                    continue;
                }
                let bag = vars & scope;
                let mut children = Vec::new();
                let mut ok = true;
                for child in self.components(comp & !bag) {
                    let child_conn = self.edges_touching(child) & bag;
                    match self.decompose(child, child_conn) {
                        Some(node) => children.push(node),
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    found = Some(HdNode { bag, cover, children });
                    break;
                }
            }
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

fn flatten(ix: &Indexed, root: &HdNode) -> CoveredDecomposition {
    let mut bags = Vec::new();
    let mut covers = Vec::new();
    let mut tree = Vec::new();
    let mut stack: Vec<(&HdNode, Option<usize>)> = vec![(root, None)];
    while let Some((node, parent)) = stack.pop() {
        let id = bags.len();
        bags.push(ix.names_of(node.bag));
        covers.push(node.cover.iter().map(|&e| ix.edge_names[e].clone()).collect::<BTreeSet<_>>());
        if let Some(p) = parent {
            tree.push((p, id));
        }
        for child in node.children.iter().rev() {
            stack.push((child, Some(id)));
        }
    }
    let (base, index) = TreeDecomposition::new(bags, &tree).expect("search builds a tree");
    let mut ordered = vec![BTreeSet::new(); covers.len()];
    for (old, cover) in covers.into_iter().enumerate() {
        ordered[index[old]] = cover;
    }
    CoveredDecomposition::new(base, ordered).expect("one cover per node")
}

/// Decides `hw(h) ≤ k`, returning a hypertree decomposition of width at most
/// `k` if one exists.
///
/// Components of the vertices not yet placed are decomposed top-down; a node
/// covering component `C` below connector `Conn` picks at most `k` edges whose
/// union contains `Conn` and meets `C`, and takes as bag their union restricted
/// to `C ∪ Conn`. Results are memoized on `(C, Conn)`.
pub fn exact_hw(h: &Hypergraph, k: usize, limits: &Limits) -> Result<Option<CoveredDecomposition>> {
    check_limit(h, "hw", limits.hw)?;
    if k == 0 {
        return Err(Error::InvalidDecomposition("hw search needs k ≥ 1".into()));
    }
    let ix = h.indexed()?;
    if let Some(v) = h.isolated_vertices().first() {
        return Err(Error::UncoverableVertex(v.to_string()));
    }
    if ix.n() == 0 {
        let base = TreeDecomposition::single(BTreeSet::new());
        return Ok(Some(CoveredDecomposition::new(base, vec![BTreeSet::new()])?));
    }
    let reach = (0..ix.n())
        .map(|v| ix.edges.iter().filter(|e| *e & (1 << v) != 0).fold(0, |acc, e| acc | e))
        .collect();
    let mut search = HwSearch {
        ix: &ix,
        k,
        reach,
        memo: BTreeMap::new(),
    };
    Ok(search.decompose(ix.all(), 0).map(|root| flatten(&ix, &root)))
}

/// `hw(h)` with a witness, trying `k = 1, 2, ...`.
pub fn hypertree_width(h: &Hypergraph, limits: &Limits) -> Result<(usize, CoveredDecomposition)> {
    for k in 1..=h.edge_count().max(1) {
        if let Some(d) = exact_hw(h, k, limits)? {
            return Ok((d.width(), d));
        }
    }
    unreachable!("the decomposition using all edges at one node always exists")
}

/// Interval containing the submodular width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubwBounds {
    /// `(tw + 1) / rank`.
    pub lower: Rational,
    /// `fhw`.
    pub upper: Rational,
}

impl SubwBounds {
    /// The exact value when both ends meet.
    pub fn pinned(&self) -> Option<&Rational> {
        (self.lower == self.upper).then_some(&self.lower)
    }
}

/// `(tw+1)/rank ≤ subw ≤ fhw`. The lower end is the width of the modular
/// function `|X| / rank`, which is edge-dominated.
pub fn subw_bounds(h: &Hypergraph, limits: &Limits) -> Result<SubwBounds> {
    let upper = exact_width(h, WidthKind::Fhw, limits)?.value;
    let rank = h.rank();
    if rank == 0 {
        return Ok(SubwBounds {
            lower: int(0),
            upper,
        });
    }
    let tw = exact_width(h, WidthKind::Tw, limits)?.value;
    Ok(SubwBounds {
        lower: (tw + int(1)) / int(rank as i64),
        upper,
    })
}

/// Name of a vertex set for error messages.
pub(crate) fn show(set: &BTreeSet<String>) -> String {
    let parts: Vec<&str> = set.iter().map(String::as_str).collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    fn set(xs: &[&str]) -> BTreeSet<String> {
        xs.iter().map(|x| x.to_string()).collect()
    }

    fn triangle() -> Hypergraph {
        Hypergraph::from_edges([("a", ["1", "2"]), ("b", ["2", "3"]), ("c", ["1", "3"])]).unwrap()
    }

    fn path() -> Hypergraph {
        Hypergraph::from_edges([("ab", ["a", "b"]), ("bc", ["b", "c"])]).unwrap()
    }

    fn grid3() -> Hypergraph {
        let mut edges = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i < 2 {
                    edges.push((format!("v{i}{j}"), vec![format!("{i}{j}"), format!("{}{j}", i + 1)]));
                }
                if j < 2 {
                    edges.push((format!("h{i}{j}"), vec![format!("{i}{j}"), format!("{i}{}", j + 1)]));
                }
            }
        }
        Hypergraph::from_edges(edges.iter().map(|(n, e)| (n.as_str(), e.iter()))).unwrap()
    }

    #[test]
    fn trivial_decomposition_is_valid() {
        let t = triangle();
        let td = TreeDecomposition::single(t.vertices().clone());
        assert!(validate_td(&t, &td).is_valid());
    }

    #[test]
    fn path_decomposition() {
        let (td, _) = TreeDecomposition::new(vec![set(&["a", "b"]), set(&["b", "c"])], &[(0, 1)]).unwrap();
        assert!(validate_td(&path(), &td).is_valid());
        for kind in [BagMeasure::Cardinality, BagMeasure::IntegralCover, BagMeasure::FractionalCover] {
            assert_eq!(width_of(&path(), &td, kind).unwrap(), int(1));
        }
    }

    #[test]
    fn missing_vertex_uncovers_edge() {
        let (td, _) = TreeDecomposition::new(vec![set(&["a", "b"]), set(&["c"])], &[(0, 1)]).unwrap();
        let report = validate_td(&path(), &td);
        assert_eq!(report.uncovered_edges, vec!["bc".to_string()]);
        assert!(report.disconnected_vertices.is_empty());
    }

    #[test]
    fn disconnected_occurrences_reported() {
        let (td, _) =
            TreeDecomposition::new(vec![set(&["a", "b"]), set(&["c"]), set(&["a", "c"])], &[(0, 1), (1, 2)]).unwrap();
        let h = Hypergraph::from_edges([("ab", ["a", "b"]), ("ac", ["a", "c"])]).unwrap();
        assert_eq!(validate_td(&h, &td).disconnected_vertices, vec!["a".to_string()]);
    }

    #[test]
    fn widths_of_single_bags() {
        let t = triangle();
        let td = TreeDecomposition::single(t.vertices().clone());
        assert_eq!(width_of(&t, &td, BagMeasure::Cardinality).unwrap(), int(2));
        assert_eq!(width_of(&t, &td, BagMeasure::IntegralCover).unwrap(), int(2));
        assert_eq!(width_of(&t, &td, BagMeasure::FractionalCover).unwrap(), ratio(3, 2));
        let e = Hypergraph::from_edges([("e", ["a", "b", "c"])]).unwrap();
        let td = TreeDecomposition::single(e.vertices().clone());
        assert_eq!(width_of(&e, &td, BagMeasure::Cardinality).unwrap(), int(2));
        assert_eq!(width_of(&e, &td, BagMeasure::IntegralCover).unwrap(), int(1));
        assert_eq!(width_of(&e, &td, BagMeasure::FractionalCover).unwrap(), int(1));
    }

    #[test]
    fn scv_examples() {
        let h = Hypergraph::from_edges([("E", ["a", "b"]), ("F", ["b", "c"])]).unwrap();
        // E is only placed below the root, where b leaks out of the root bag.
        let bags = vec![set(&["a"]), set(&["a", "b"]), set(&["b", "c"])];
        let (base, _) = TreeDecomposition::new(bags, &[(0, 1), (1, 2)]).unwrap();
        let d = CoveredDecomposition::new(base, vec![set(&["E"]), set(&["E"]), set(&["F"])]).unwrap();
        let scvs = scv_list(&h, &d).unwrap();
        assert_eq!(
            scvs,
            vec![ScvRecord {
                node: 0,
                edge: "E".into(),
                leaked: set(&["b"])
            }]
        );
        let bags = vec![set(&["a", "b"]), set(&["a", "b"]), set(&["b", "c"])];
        let (base, _) = TreeDecomposition::new(bags, &[(0, 1), (1, 2)]).unwrap();
        let d = CoveredDecomposition::new(base, vec![set(&["E"]), set(&["E"]), set(&["F"])]).unwrap();
        assert!(scv_list(&h, &d).unwrap().is_empty());
        let single = CoveredDecomposition::new(TreeDecomposition::single(h.vertices().clone()), vec![set(&["E", "F"])])
            .unwrap();
        assert!(scv_list(&h, &single).unwrap().is_empty());
    }

    #[test]
    fn scv_needs_edge_coverage() {
        let h = Hypergraph::from_edges([("E", ["a", "b"]), ("F", ["b", "c"])]).unwrap();
        let (base, _) = TreeDecomposition::new(vec![set(&["a"]), set(&["b", "c"])], &[(0, 1)]).unwrap();
        let d = CoveredDecomposition::new(base, vec![set(&["E"]), set(&["F"])]).unwrap();
        assert!(matches!(scv_list(&h, &d), Err(Error::InvalidGhd(_))));
    }

    #[test]
    fn scv_rejects_uncovered_bag() {
        let h = Hypergraph::from_edges([("E", ["a", "b"]), ("F", ["b", "c"])]).unwrap();
        let d = CoveredDecomposition::new(TreeDecomposition::single(h.vertices().clone()), vec![set(&["E"])]).unwrap();
        assert!(matches!(scv_list(&h, &d), Err(Error::InvalidGhd(_))));
    }

    #[test]
    fn exact_triangle() {
        let t = triangle();
        let l = Limits::default();
        assert_eq!(exact_width(&t, WidthKind::Tw, &l).unwrap().value, int(2));
        assert_eq!(exact_width(&t, WidthKind::Ghw, &l).unwrap().value, int(2));
        assert_eq!(exact_width(&t, WidthKind::Fhw, &l).unwrap().value, ratio(3, 2));
        assert!(exact_hw(&t, 1, &l).unwrap().is_none());
        let d = exact_hw(&t, 2, &l).unwrap().unwrap();
        assert!(scv_list(&t, &d).unwrap().is_empty());
        assert_eq!(d.width(), 2);
    }

    #[test]
    fn exact_single_edge() {
        let e = Hypergraph::from_edges([("e", ["a", "b", "c"])]).unwrap();
        let l = Limits::default();
        assert_eq!(exact_width(&e, WidthKind::Tw, &l).unwrap().value, int(2));
        assert_eq!(exact_width(&e, WidthKind::Ghw, &l).unwrap().value, int(1));
        assert_eq!(exact_width(&e, WidthKind::Fhw, &l).unwrap().value, int(1));
        let d = exact_hw(&e, 1, &l).unwrap().unwrap();
        assert_eq!(d.base.len(), 1);
        let b = subw_bounds(&e, &l).unwrap();
        assert_eq!(b.pinned(), Some(&int(1)));
    }

    #[test]
    fn grid_treewidth_is_three() {
        let g = grid3();
        let l = Limits::default();
        let w = exact_width(&g, WidthKind::Tw, &l).unwrap();
        assert_eq!(w.value, int(3));
        assert!(validate_td(&g, &w.witness).is_valid());
        assert_eq!(width_of(&g, &w.witness, BagMeasure::Cardinality).unwrap(), int(3));
        let b = subw_bounds(&g, &l).unwrap();
        assert_eq!(b.lower, int(2));
        assert!(b.upper >= int(2));
    }

    #[test]
    fn triangle_subw_pinned() {
        let b = subw_bounds(&triangle(), &Limits::default()).unwrap();
        assert_eq!(b.pinned(), Some(&ratio(3, 2)));
    }

    #[test]
    fn size_limit() {
        let g = grid3();
        let tight = Limits {
            tw: 4,
            ..Limits::default()
        };
        assert!(matches!(exact_width(&g, WidthKind::Tw, &tight), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn ghd_covers_attach_minimum_covers() {
        let t = triangle();
        let d = ghd_covers(&t, &TreeDecomposition::single(t.vertices().clone())).unwrap();
        assert_eq!(d.width(), 2);
    }

    #[test]
    fn bad_trees_rejected() {
        assert!(TreeDecomposition::new(vec![set(&["a"]), set(&["b"])], &[]).is_err());
        assert!(TreeDecomposition::new(vec![set(&["a"]), set(&["b"])], &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn show_formats_sets() {
        assert_eq!(show(&set(&["b", "a"])), "{a,b}");
    }
}
