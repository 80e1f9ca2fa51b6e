//! Relational structures, hypergraphs and CSP instances.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::{Error, Result};

/// A tuple of element names.
pub type Tuple = Vec<String>;

/// Relation symbols with their arities, ordered by name.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    symbols: BTreeMap<String, usize>,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `name/arity`. Re-adding a symbol with the same arity is a no-op.
    pub fn insert(&mut self, name: &str, arity: usize) -> Result<()> {
        if arity == 0 {
            return Err(Error::InvalidStructure(format!(
                "relation `{name}` must have positive arity"
            )));
        }
        match self.symbols.get(name) {
            Some(&old) if old != arity => Err(Error::ArityMismatch {
                relation: name.to_string(),
                expected: old,
                found: arity,
            }),
            Some(_) => Ok(()),
            None => {
                self.symbols.insert(name.to_string(), arity);
                Ok(())
            }
        }
    }

    pub fn with(mut self, name: &str, arity: usize) -> Result<Self> {
        self.insert(name, arity)?;
        Ok(self)
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.symbols.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.symbols.contains_key(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.symbols.iter().map(|(n, &a)| (n.as_str(), a))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Union of two signatures; fails when a shared symbol has two arities.
    pub fn merge(&self, other: &Signature) -> Result<Signature> {
        let mut out = self.clone();
        for (name, arity) in other.iter() {
            out.insert(name, arity)?;
        }
        Ok(out)
    }
}

/// A finite relational structure.
///
/// Every symbol of the signature has an entry in `facts`, possibly empty, and
/// every element occurring in a fact belongs to the domain.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Structure {
    signature: Signature,
    domain: BTreeSet<String>,
    facts: BTreeMap<String, BTreeSet<Tuple>>,
}

impl Structure {
    /// Empty structure over `signature`.
    pub fn new(signature: Signature) -> Self {
        let facts = signature
            .iter()
            .map(|(n, _)| (n.to_string(), BTreeSet::new()))
            .collect();
        Structure {
            signature,
            domain: BTreeSet::new(),
            facts,
        }
    }

    /// Builds a structure from facts, inferring the signature and the domain.
    pub fn from_facts<'a, I, T>(facts: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, T)>,
        T: IntoIterator,
        T::Item: AsRef<str>,
    {
        let mut s = Structure::default();
        for (rel, tuple) in facts {
            let tuple: Tuple = tuple.into_iter().map(|e| e.as_ref().to_string()).collect();
            s.signature.insert(rel, tuple.len())?;
            s.facts.entry(rel.to_string()).or_default();
            s.add_fact(rel, tuple)?;
        }
        Ok(s)
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn domain(&self) -> &BTreeSet<String> {
        &self.domain
    }

    pub fn add_element(&mut self, element: &str) {
        if !self.domain.contains(element) {
            self.domain.insert(element.to_string());
        }
    }

    /// Adds a fact, extending the domain with its elements. Duplicates are
    /// absorbed.
    pub fn add_fact(&mut self, relation: &str, tuple: Tuple) -> Result<bool> {
        let arity = self
            .signature
            .arity(relation)
            .ok_or_else(|| Error::SignatureMismatch(format!("unknown relation `{relation}`")))?;
        if tuple.len() != arity {
            return Err(Error::ArityMismatch {
                relation: relation.to_string(),
                expected: arity,
                found: tuple.len(),
            });
        }
        for e in &tuple {
            self.add_element(e);
        }
        Ok(self
            .facts
            .get_mut(relation)
            .expect("every symbol has a fact set")
            .insert(tuple))
    }

    /// Facts of `relation`, empty when the symbol is unknown.
    pub fn facts(&self, relation: &str) -> impl Iterator<Item = &Tuple> {
        self.facts.get(relation).into_iter().flatten()
    }

    /// All facts as `(relation, tuple)`, ordered by relation then tuple.
    pub fn iter_facts(&self) -> impl Iterator<Item = (&str, &Tuple)> {
        self.facts
            .iter()
            .flat_map(|(r, ts)| ts.iter().map(move |t| (r.as_str(), t)))
    }

    pub fn fact_count(&self) -> usize {
        self.facts.values().map(BTreeSet::len).sum()
    }

    pub fn relation_len(&self, relation: &str) -> usize {
        self.facts.get(relation).map_or(0, BTreeSet::len)
    }

    /// The same facts over a larger signature.
    pub fn extend_signature(&self, signature: &Signature) -> Result<Structure> {
        let merged = self.signature.merge(signature)?;
        let mut out = Structure::new(merged);
        out.domain = self.domain.clone();
        for (rel, facts) in &self.facts {
            out.facts.insert(rel.clone(), facts.clone());
        }
        Ok(out)
    }

    /// Substructure induced by `elements` (intersected with the domain).
    pub fn induced(&self, elements: &BTreeSet<String>) -> Structure {
        let mut out = Structure::new(self.signature.clone());
        out.domain = self.domain.intersection(elements).cloned().collect();
        for (rel, facts) in &self.facts {
            let kept = facts
                .iter()
                .filter(|t| t.iter().all(|e| elements.contains(e)))
                .cloned()
                .collect();
            out.facts.insert(rel.clone(), kept);
        }
        out
    }

    /// Renames elements; unmapped elements keep their names.
    pub fn rename(&self, map: &BTreeMap<String, String>) -> Structure {
        let name = |e: &String| map.get(e).cloned().unwrap_or_else(|| e.clone());
        let mut out = Structure::new(self.signature.clone());
        out.domain = self.domain.iter().map(name).collect();
        for (rel, facts) in &self.facts {
            let renamed = facts.iter().map(|t| t.iter().map(name).collect()).collect();
            out.facts.insert(rel.clone(), renamed);
        }
        out
    }

    /// Elements that occur in no fact.
    pub fn isolated_elements(&self) -> BTreeSet<String> {
        let mut used = BTreeSet::new();
        for (_, t) in self.iter_facts() {
            used.extend(t.iter().cloned());
        }
        self.domain.difference(&used).cloned().collect()
    }

    pub fn same_signature(&self, other: &Structure) -> Result<()> {
        if self.signature == other.signature {
            Ok(())
        } else {
            Err(Error::SignatureMismatch(format!(
                "{} vs {}",
                describe(&self.signature),
                describe(&other.signature)
            )))
        }
    }
}

fn describe(sig: &Signature) -> String {
    let parts: Vec<String> = sig.iter().map(|(n, a)| format!("{n}/{a}")).collect();
    format!("{{{}}}", parts.join(","))
}

/// `|σ| + |A| + Σ_R |R|·ar(R)`.
pub fn structure_size(s: &Structure) -> usize {
    s.signature.len()
        + s.domain.len()
        + s
            .signature
            .iter()
            .map(|(r, a)| s.relation_len(r) * a)
            .sum::<usize>()
}

/// A hypergraph with named vertices and named, nonempty edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    vertices: BTreeSet<String>,
    edges: BTreeMap<String, BTreeSet<String>>,
}

impl Hypergraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a hypergraph from edges; vertices are those of the edges plus
    /// `isolated`.
    pub fn from_edges<'a, I, E>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, E)>,
        E: IntoIterator,
        E::Item: AsRef<str>,
    {
        let mut h = Hypergraph::new();
        for (name, vs) in edges {
            let vs: BTreeSet<String> = vs.into_iter().map(|v| v.as_ref().to_string()).collect();
            for v in &vs {
                h.add_vertex(v);
            }
            h.add_edge(name, vs)?;
        }
        Ok(h)
    }

    pub fn add_vertex(&mut self, v: &str) {
        if !self.vertices.contains(v) {
            self.vertices.insert(v.to_string());
        }
    }

    /// Adds an edge over existing vertices.
    pub fn add_edge(&mut self, name: &str, vertices: BTreeSet<String>) -> Result<()> {
        if vertices.is_empty() {
            return Err(Error::EmptyEdge(name.to_string()));
        }
        if self.edges.contains_key(name) {
            return Err(Error::InvalidHypergraph(format!("duplicate edge name `{name}`")));
        }
        if let Some(v) = vertices.iter().find(|v| !self.vertices.contains(*v)) {
            return Err(Error::UnknownVertex(v.clone()));
        }
        self.edges.insert(name.to_string(), vertices);
        Ok(())
    }

    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &BTreeSet<String>)> {
        self.edges.iter().map(|(n, e)| (n.as_str(), e))
    }

    pub fn edge(&self, name: &str) -> Option<&BTreeSet<String>> {
        self.edges.get(name)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Name of the first edge (by name) with exactly this vertex set.
    pub fn edge_with_vertices(&self, vertices: &BTreeSet<String>) -> Option<&str> {
        self.edges
            .iter()
            .find(|(_, e)| *e == vertices)
            .map(|(n, _)| n.as_str())
    }

    /// Maximum edge size, 0 without edges.
    pub fn rank(&self) -> usize {
        self.edges.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn is_isolated(&self, v: &str) -> bool {
        !self.edges.values().any(|e| e.contains(v))
    }

    pub fn isolated_vertices(&self) -> Vec<&str> {
        self.vertices
            .iter()
            .filter(|v| self.is_isolated(v))
            .map(String::as_str)
            .collect()
    }

    pub fn check_vertices<'a, I>(&self, vs: I) -> Result<()>
    where
        I: IntoIterator<Item = &'a String>,
    {
        for v in vs {
            if !self.vertices.contains(v) {
                return Err(Error::UnknownVertex(v.clone()));
            }
        }
        Ok(())
    }

    pub(crate) fn indexed(&self) -> Result<Indexed> {
        Indexed::new(self)
    }
}

/// Vertex sets as bit masks over the sorted vertex list.
pub(crate) type Mask = u128;

pub(crate) const MAX_INDEXED: usize = 128;

/// Dense view of a hypergraph: vertices and edges in name order.
#[derive(Debug, Clone)]
pub(crate) struct Indexed {
    pub vertices: Vec<String>,
    pub edge_names: Vec<String>,
    pub edges: Vec<Mask>,
}

impl Indexed {
    fn new(h: &Hypergraph) -> Result<Self> {
        if h.vertices.len() > MAX_INDEXED {
            return Err(Error::SizeLimit {
                kind: "vertex bitset",
                vertices: h.vertices.len(),
                limit: MAX_INDEXED,
            });
        }
        let vertices: Vec<String> = h.vertices.iter().cloned().collect();
        let mut edge_names = Vec::with_capacity(h.edges.len());
        let mut edges = Vec::with_capacity(h.edges.len());
        for (name, e) in &h.edges {
            edge_names.push(name.clone());
            let mut m: Mask = 0;
            for v in e {
                let i = vertices.binary_search(v).expect("edge vertex in vertex set");
                m |= 1 << i;
            }
            edges.push(m);
        }
        Ok(Indexed {
            vertices,
            edge_names,
            edges,
        })
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn all(&self) -> Mask {
        full_mask(self.vertices.len())
    }

    pub fn mask_of<'a, I>(&self, vs: I) -> Result<Mask>
    where
        I: IntoIterator<Item = &'a String>,
    {
        let mut m = 0;
        for v in vs {
            let i = self
                .vertices
                .binary_search(v)
                .map_err(|_| Error::UnknownVertex(v.clone()))?;
            m |= 1 << i;
        }
        Ok(m)
    }

    pub fn names_of(&self, m: Mask) -> BTreeSet<String> {
        bits(m).map(|i| self.vertices[i].clone()).collect()
    }

    pub fn covered(&self) -> Mask {
        self.edges.iter().fold(0, |acc, e| acc | e)
    }
}

pub(crate) fn full_mask(n: usize) -> Mask {
    if n >= 128 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Indices of set bits, ascending.
pub(crate) fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Generated name of an edge: its sorted vertices joined by `_`.
pub fn edge_name_for(vertices: &BTreeSet<String>) -> String {
    let parts: Vec<&str> = vertices.iter().map(String::as_str).collect();
    parts.join("_")
}

/// The hypergraph of a structure: one edge per distinct element set of a fact.
///
/// Edge names are generated by [`edge_name_for`]; when two element sets yield the
/// same name, the later one (in sorted order) receives a `_2`, `_3`, ... suffix.
pub fn hypergraph_of(s: &Structure) -> Hypergraph {
    let sets: BTreeSet<BTreeSet<String>> = s
        .iter_facts()
        .map(|(_, t)| t.iter().cloned().collect())
        .collect();
    let mut h = Hypergraph {
        vertices: s.domain.clone(),
        edges: BTreeMap::new(),
    };
    for set in sets {
        let base = edge_name_for(&set);
        let mut name = base.clone();
        let mut k = 2;
        while h.edges.contains_key(&name) {
            name = format!("{base}_{k}");
            k += 1;
        }
        h.edges.insert(name, set);
    }
    h
}

/// `H[U]`: vertices `u`, edges the nonempty traces `e ∩ u`, deduplicated.
/// A trace keeps the name of the first original edge producing it.
pub fn induced_subhypergraph(h: &Hypergraph, u: &BTreeSet<String>) -> Result<Hypergraph> {
    h.check_vertices(u)?;
    let mut out = Hypergraph {
        vertices: u.clone(),
        edges: BTreeMap::new(),
    };
    let mut seen = BTreeSet::new();
    for (name, e) in &h.edges {
        let trace: BTreeSet<String> = e.intersection(u).cloned().collect();
        if !trace.is_empty() && seen.insert(trace.clone()) {
            out.edges.insert(name.clone(), trace);
        }
    }
    Ok(out)
}

/// A CSP instance `(A, B)` over a shared signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub left: Structure,
    pub right: Structure,
}

impl Instance {
    pub fn new(left: Structure, right: Structure) -> Result<Self> {
        left.same_signature(&right)?;
        Ok(Instance { left, right })
    }
}

/// Name of grid element `x_{i,j}`.
pub fn grid_element(i: usize, j: usize) -> String {
    format!("x_{i}_{j}")
}

/// The bidirected `n × n` grid as scopes, paired with `g` as data.
///
/// For `n = 1` the left structure is a single element with no facts.
pub fn gen_grid_instance(n: usize, g: &Structure) -> Result<Instance> {
    let sig = Signature::new().with("E", 2)?;
    if n == 0 {
        return Err(Error::InvalidStructure("grid size must be at least 1".into()));
    }
    if *g.signature() != sig {
        return Err(Error::SignatureMismatch(format!(
            "grid data must have signature {{E/2}}, got {}",
            describe(g.signature())
        )));
    }
    let mut left = Structure::new(sig);
    for i in 1..=n {
        for j in 1..=n {
            left.add_element(&grid_element(i, j));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let here = grid_element(i, j);
            if i < n {
                let down = grid_element(i + 1, j);
                left.add_fact("E", alloc::vec![here.clone(), down.clone()])?;
                left.add_fact("E", alloc::vec![down, here.clone()])?;
            }
            if j < n {
                let right = grid_element(i, j + 1);
                left.add_fact("E", alloc::vec![here.clone(), right.clone()])?;
                left.add_fact("E", alloc::vec![right, here])?;
            }
        }
    }
    Instance::new(left, g.clone())
}

/// The bidirected single edge `{E(0,1), E(1,0)}`.
pub fn k2() -> Structure {
    Structure::from_facts([("E", ["0", "1"]), ("E", ["1", "0"])]).expect("valid facts")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(xs: &[&str]) -> BTreeSet<String> {
        xs.iter().map(|x| x.to_string()).collect()
    }

    fn triangle() -> Hypergraph {
        Hypergraph::from_edges([("a", ["1", "2"]), ("b", ["2", "3"]), ("c", ["1", "3"])]).unwrap()
    }

    #[test]
    fn permutations_collapse_to_one_edge() {
        let s = Structure::from_facts([("E", ["a", "b"]), ("E", ["b", "a"])]).unwrap();
        let h = hypergraph_of(&s);
        assert_eq!(h.vertices(), &set(&["a", "b"]));
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.edge("a_b"), Some(&set(&["a", "b"])));
    }

    #[test]
    fn repeated_element_collapses() {
        let s = Structure::from_facts([("R", ["a", "a"])]).unwrap();
        let h = hypergraph_of(&s);
        assert_eq!(h.edge("a"), Some(&set(&["a"])));
    }

    #[test]
    fn isolated_elements_stay_vertices() {
        let mut s = Structure::from_facts([("E", ["a", "b"])]).unwrap();
        s.add_element("z");
        let h = hypergraph_of(&s);
        assert!(h.vertices().contains("z"));
        assert_eq!(h.isolated_vertices(), vec!["z"]);
    }

    #[test]
    fn colliding_edge_names_get_suffix() {
        let s = Structure::from_facts([("E", ["a", "b"]), ("U", ["a_b", "a_b"])]).unwrap();
        let h = hypergraph_of(&s);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.edge("a_b"), Some(&set(&["a", "b"])));
        assert_eq!(h.edge("a_b_2"), Some(&set(&["a_b"])));
    }

    #[test]
    fn grid_two_has_four_unit_segments() {
        let inst = gen_grid_instance(2, &k2()).unwrap();
        assert_eq!(inst.left.domain().len(), 4);
        assert_eq!(inst.left.fact_count(), 8);
        let h = hypergraph_of(&inst.left);
        assert_eq!(h.edge_count(), 4);
        assert!(h.edges().all(|(_, e)| e.len() == 2));
        assert_eq!(structure_size(&inst.left), 21);
    }

    #[test]
    fn grid_sizes() {
        let one = gen_grid_instance(1, &k2()).unwrap();
        assert_eq!(one.left.domain().len(), 1);
        assert_eq!(one.left.fact_count(), 0);
        let three = gen_grid_instance(3, &k2()).unwrap();
        assert_eq!(three.left.domain().len(), 9);
        assert_eq!(three.left.fact_count(), 24);
        let mut last = 0;
        for n in 1..6 {
            let size = structure_size(&gen_grid_instance(n, &k2()).unwrap().left);
            assert!(size > last);
            last = size;
        }
    }

    #[test]
    fn grid_rejects_other_signatures() {
        let g = Structure::from_facts([("F", ["a", "b"])]).unwrap();
        assert!(matches!(gen_grid_instance(2, &g), Err(Error::SignatureMismatch(_))));
    }

    #[test]
    fn size_formula() {
        let s = Structure::from_facts([("E", ["a", "b"])]).unwrap();
        assert_eq!(structure_size(&s), 5);
        let empty = Structure::new(Signature::new().with("E", 2).unwrap());
        assert_eq!(structure_size(&empty), 1);
    }

    #[test]
    fn arity_mismatch_is_rejected() {
        let err = Structure::from_facts(vec![("E", vec!["a", "b"]), ("E", vec!["a", "b", "c"])]);
        assert!(matches!(err, Err(Error::ArityMismatch { ref relation, .. }) if relation == "E"));
    }

    #[test]
    fn induced_triangle() {
        let h = induced_subhypergraph(&triangle(), &set(&["1", "2"])).unwrap();
        let edges: BTreeSet<BTreeSet<String>> = h.edges().map(|(_, e)| e.clone()).collect();
        let expected: BTreeSet<BTreeSet<String>> =
            [set(&["1", "2"]), set(&["1"]), set(&["2"])].into_iter().collect();
        assert_eq!(edges, expected);
    }

    #[test]
    fn induced_on_everything_is_identity() {
        let t = triangle();
        assert_eq!(induced_subhypergraph(&t, t.vertices()).unwrap(), t);
    }

    #[test]
    fn induced_unknown_vertex() {
        let h = Hypergraph::from_edges([("e", ["a", "b", "c"])]).unwrap();
        assert_eq!(
            induced_subhypergraph(&h, &set(&["d"])),
            Err(Error::UnknownVertex("d".into()))
        );
    }

    #[test]
    fn empty_edge_rejected() {
        let mut h = Hypergraph::new();
        assert!(matches!(h.add_edge("e", BTreeSet::new()), Err(Error::EmptyEdge(_))));
    }
}
