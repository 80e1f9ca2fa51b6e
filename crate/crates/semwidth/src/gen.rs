//! Deterministic instance generators driven by an explicit 64-bit seed.

use std::collections::BTreeSet;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semwidth_core::model::gen_grid_instance;
use semwidth_core::{Hypergraph, Instance, Signature, Structure};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct RangeError(pub String);

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), RangeError> {
    if ok {
        Ok(())
    } else {
        Err(RangeError(msg()))
    }
}

/// Shape of random structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureParams {
    pub min_domain: usize,
    pub max_domain: usize,
    pub max_relations: usize,
    pub max_arity: usize,
    /// Facts drawn on top of one per relation, before every element is
    /// placed in some fact.
    pub extra_facts: usize,
}

impl Default for StructureParams {
    fn default() -> Self {
        StructureParams {
            min_domain: 2,
            max_domain: 6,
            max_relations: 3,
            max_arity: 3,
            extra_facts: 4,
        }
    }
}

impl StructureParams {
    pub fn validate(&self) -> Result<(), RangeError> {
        check(1 <= self.min_domain && self.min_domain <= self.max_domain && self.max_domain <= 26, || {
            format!("domain range {}..={} outside 1..=26", self.min_domain, self.max_domain)
        })?;
        check((1..=3).contains(&self.max_relations), || {
            format!("relations {} outside 1..=3", self.max_relations)
        })?;
        check((1..=3).contains(&self.max_arity), || format!("arity {} outside 1..=3", self.max_arity))?;
        check(self.extra_facts <= 64, || format!("extra facts {} above 64", self.extra_facts))
    }
}

const RELATIONS: [&str; 3] = ["R", "S", "T"];

pub fn element_name(i: usize) -> String {
    char::from(b'a' + i as u8).to_string()
}

fn random_tuple(rng: &mut Rng64, elements: &[String], arity: usize) -> Vec<String> {
    (0..arity).map(|_| elements.choose(rng).expect("nonempty").clone()).collect()
}

/// A random signature with 1..=`max_relations` relations of arity
/// 1..=`max_arity`.
pub fn random_signature(rng: &mut Rng64, max_relations: usize, max_arity: usize) -> Signature {
    let mut sig = Signature::new();
    for name in &RELATIONS[..rng.random_range(1..=max_relations)] {
        sig.insert(name, rng.random_range(1..=max_arity)).expect("fresh name");
    }
    sig
}

/// Random facts over `sig` on `n` elements: one fact per relation plus
/// `extra` more. With `cover_all`, every element is then placed in a fact.
pub fn random_structure_over(rng: &mut Rng64, sig: &Signature, n: usize, extra: usize, cover_all: bool) -> Structure {
    let elements: Vec<String> = (0..n).map(element_name).collect();
    let rels: Vec<(&str, usize)> = sig.iter().collect();
    let mut s = Structure::new(sig.clone());
    for &(r, k) in &rels {
        s.add_fact(r, random_tuple(rng, &elements, k)).expect("valid fact");
    }
    for _ in 0..extra {
        let &(r, k) = rels.choose(rng).expect("nonempty signature");
        s.add_fact(r, random_tuple(rng, &elements, k)).expect("valid fact");
    }
    if cover_all {
        for x in &elements {
            if !s.domain().contains(x) {
                let &(r, k) = rels.choose(rng).expect("nonempty signature");
                let mut t = random_tuple(rng, &elements, k);
                let slot = rng.random_range(0..k);
                t[slot] = x.clone();
                s.add_fact(r, t).expect("valid fact");
            }
        }
    } else {
        for x in &elements {
            s.add_element(x);
        }
    }
    s
}

/// A random structure in which every element occurs in some fact.
pub fn random_structure(seed: u64, p: &StructureParams) -> Result<Structure, RangeError> {
    p.validate()?;
    let mut rng = rng(seed);
    let sig = random_signature(&mut rng, p.max_relations, p.max_arity);
    let n = rng.random_range(p.min_domain..=p.max_domain);
    let extra = rng.random_range(0..=p.extra_facts);
    Ok(random_structure_over(&mut rng, &sig, n, extra, true))
}

/// Shape of random hypergraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypergraphParams {
    pub vertices: usize,
    pub edges: usize,
    pub max_edge_size: usize,
}

impl HypergraphParams {
    pub fn validate(&self) -> Result<(), RangeError> {
        check((1..=64).contains(&self.vertices), || {
            format!("vertices {} outside 1..=64", self.vertices)
        })?;
        check((1..=64).contains(&self.edges), || format!("edges {} outside 1..=64", self.edges))?;
        check(self.max_edge_size >= 1, || "edge size must be at least 1".into())
    }
}

/// A random hypergraph with vertices `v1..` and edges `e1..`. Vertices left
/// isolated are added to a random edge, so the result has none.
pub fn random_hypergraph(seed: u64, p: &HypergraphParams) -> Result<Hypergraph, RangeError> {
    p.validate()?;
    let mut rng = rng(seed);
    Ok(random_hypergraph_with(&mut rng, p))
}

pub fn random_hypergraph_with(rng: &mut Rng64, p: &HypergraphParams) -> Hypergraph {
    let vertices: Vec<String> = (1..=p.vertices).map(|i| format!("v{i}")).collect();
    let max = p.max_edge_size.min(p.vertices);
    let mut edges: Vec<BTreeSet<String>> = (0..p.edges)
        .map(|_| {
            let size = rng.random_range(1..=max);
            vertices.choose_multiple(rng, size).cloned().collect()
        })
        .collect();
    for v in &vertices {
        if !edges.iter().any(|e| e.contains(v)) {
            let i = rng.random_range(0..edges.len());
            edges[i].insert(v.clone());
        }
    }
    let mut h = Hypergraph::new();
    for v in &vertices {
        h.add_vertex(v);
    }
    for (i, e) in edges.into_iter().enumerate() {
        h.add_edge(&format!("e{}", i + 1), e).expect("nonempty edge");
    }
    h
}

/// The `n × n` grid instance against `g` (bidirected `K2` by default).
pub fn grid(n: usize, g: &Structure) -> Result<Instance, RangeError> {
    check((1..=12).contains(&n), || format!("grid size {n} outside 1..=12"))?;
    gen_grid_instance(n, g).map_err(|e| RangeError(e.to_string()))
}
