//! Homomorphism search, containment, equivalence, isomorphism and cores.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::model::Structure;
use crate::Result;

/// A total map from source elements to target elements.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mapping(BTreeMap<String, String>);

impl Mapping {
    pub fn new(map: BTreeMap<String, String>) -> Self {
        Mapping(map)
    }

    pub fn identity<'a, I: IntoIterator<Item = &'a String>>(elements: I) -> Self {
        Mapping(elements.into_iter().map(|e| (e.clone(), e.clone())).collect())
    }

    pub fn get(&self, x: &str) -> Option<&str> {
        self.0.get(x).map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.0.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_map(&self) -> &BTreeMap<String, String> {
        &self.0
    }

    pub fn into_map(self) -> BTreeMap<String, String> {
        self.0
    }

    pub fn image(&self) -> BTreeSet<String> {
        self.0.values().cloned().collect()
    }

    /// `other ∘ self`: first apply `self`, then `other`.
    pub fn then(&self, other: &Mapping) -> Mapping {
        Mapping(
            self.0
                .iter()
                .map(|(x, y)| (x.clone(), other.0.get(y).cloned().unwrap_or_else(|| y.clone())))
                .collect(),
        )
    }
}

impl FromIterator<(String, String)> for Mapping {
    fn from_iter<I: IntoIterator<Item = (String, String)>>(iter: I) -> Self {
        Mapping(iter.into_iter().collect())
    }
}

/// Checks that `map` is total on the domain of `a` and sends every fact of
/// `a` to a fact of `b`.
pub fn is_homomorphism(a: &Structure, b: &Structure, map: &Mapping) -> bool {
    if a.domain().iter().any(|x| map.get(x).map_or(true, |y| !b.domain().contains(y))) {
        return false;
    }
    let facts_b: BTreeSet<(&str, Vec<&str>)> = b
        .iter_facts()
        .map(|(r, t)| (r, t.iter().map(String::as_str).collect()))
        .collect();
    a.iter_facts().all(|(r, t)| {
        let image: Vec<&str> = t.iter().map(|x| map.get(x).unwrap_or("")).collect();
        facts_b.contains(&(r, image))
    })
}

/// Source and target compiled to dense indices.
struct Problem {
    src: Vec<String>,
    tgt: Vec<String>,
    /// Source facts: relation index and variable indices.
    facts: Vec<(usize, Vec<usize>)>,
    /// Target tuples per relation index.
    tuples: Vec<Vec<Vec<usize>>>,
    /// Facts incident to each variable.
    incident: Vec<Vec<usize>>,
}

impl Problem {
    fn new(a: &Structure, b: &Structure) -> Self {
        let src: Vec<String> = a.domain().iter().cloned().collect();
        let tgt: Vec<String> = b.domain().iter().cloned().collect();
        let idx = |names: &[String], x: &String| names.binary_search(x).expect("element in domain");
        let mut facts = Vec::new();
        let mut tuples = Vec::new();
        for (ri, (rel, _)) in a.signature().iter().enumerate() {
            for t in a.facts(rel) {
                facts.push((ri, t.iter().map(|x| idx(&src, x)).collect::<Vec<_>>()));
            }
            tuples.push(
                b.facts(rel)
                    .map(|t| t.iter().map(|x| idx(&tgt, x)).collect())
                    .collect::<Vec<Vec<usize>>>(),
            );
        }
        let mut incident = vec![Vec::new(); src.len()];
        for (fi, (_, vars)) in facts.iter().enumerate() {
            let distinct: BTreeSet<usize> = vars.iter().copied().collect();
            for v in distinct {
                incident[v].push(fi);
            }
        }
        Problem {
            src,
            tgt,
            facts,
            tuples,
            incident,
        }
    }

    /// Variables by descending number of incident facts, ties by name.
    fn order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.src.len()).collect();
        order.sort_by(|&x, &y| self.incident[y].len().cmp(&self.incident[x].len()).then(x.cmp(&y)));
        order
    }

    /// Generalized arc consistency over all facts. Returns false on a wipe-out.
    fn propagate(&self, doms: &mut [Vec<bool>]) -> bool {
        let mut changed = true;
        while changed {
            changed = false;
            for (rel, vars) in &self.facts {
                let mut support: Vec<Vec<bool>> = vars.iter().map(|_| vec![false; self.tgt.len()]).collect();
                let mut any = false;
                'tuples: for t in &self.tuples[*rel] {
                    for (p, &v) in vars.iter().enumerate() {
                        if !doms[v][t[p]] {
                            continue 'tuples;
                        }
                        for q in 0..p {
                            if vars[q] == v && t[q] != t[p] {
                                continue 'tuples;
                            }
                        }
                    }
                    any = true;
                    for (p, &val) in t.iter().enumerate() {
                        support[p][val] = true;
                    }
                }
                if !any {
                    return false;
                }
                for (p, &v) in vars.iter().enumerate() {
                    for val in 0..self.tgt.len() {
                        if doms[v][val] && !support[p][val] {
                            doms[v][val] = false;
                            changed = true;
                        }
                    }
                }
            }
        }
        true
    }

    fn search(&self, doms: Vec<Vec<bool>>, injective: bool) -> Option<Vec<usize>> {
        let mut doms = doms;
        if !self.propagate(&mut doms) {
            return None;
        }
        let order = self.order();
        self.extend(&order, 0, doms, injective)
    }

    fn extend(&self, order: &[usize], depth: usize, doms: Vec<Vec<bool>>, injective: bool) -> Option<Vec<usize>> {
        if depth == order.len() {
            return Some(
                doms.iter()
                    .map(|d| d.iter().position(|&b| b).expect("nonempty domain"))
                    .collect(),
            );
        }
        let var = order[depth];
        for val in 0..self.tgt.len() {
            if !doms[var][val] {
                continue;
            }
            let mut next = doms.clone();
            for (w, d) in next[var].iter_mut().enumerate() {
                *d = w == val;
            }
            if injective {
                for &other in &order[depth + 1..] {
                    next[other][val] = false;
                }
            }
            if next.iter().any(|d| !d.contains(&true)) || !self.propagate(&mut next) {
                continue;
            }
            if let Some(sol) = self.extend(order, depth + 1, next, injective) {
                return Some(sol);
            }
        }
        None
    }

    fn full_domains(&self) -> Vec<Vec<bool>> {
        vec![vec![true; self.tgt.len()]; self.src.len()]
    }

    fn mapping(&self, sol: &[usize]) -> Mapping {
        sol.iter()
            .enumerate()
            .map(|(x, &y)| (self.src[x].clone(), self.tgt[y].clone()))
            .collect()
    }
}

/// Searches a homomorphism `a → b` avoiding the `(source, target)` pairs in
/// `forbid`. The result is the least solution in the fixed variable order.
pub fn find_homomorphism(
    a: &Structure,
    b: &Structure,
    forbid: &BTreeSet<(String, String)>,
) -> Result<Option<Mapping>> {
    a.same_signature(b)?;
    let p = Problem::new(a, b);
    let mut doms = p.full_domains();
    for (x, y) in forbid {
        if let (Ok(i), Ok(j)) = (p.src.binary_search(x), p.tgt.binary_search(y)) {
            doms[i][j] = false;
        }
    }
    Ok(p.search(doms, false).map(|sol| p.mapping(&sol)))
}

pub fn has_homomorphism(a: &Structure, b: &Structure) -> Result<bool> {
    Ok(find_homomorphism(a, b, &BTreeSet::new())?.is_some())
}

/// `a` is contained in `a2` iff there is a homomorphism `a2 → a`.
pub fn is_contained(a: &Structure, a2: &Structure) -> Result<bool> {
    has_homomorphism(a2, a)
}

pub fn hom_equivalent(a: &Structure, a2: &Structure) -> Result<bool> {
    Ok(has_homomorphism(a, a2)? && has_homomorphism(a2, a)?)
}

/// Number of occurrences of an element at each (relation, position).
fn profile(s: &Structure, x: &str) -> BTreeMap<(String, usize), usize> {
    let mut out = BTreeMap::new();
    for (r, t) in s.iter_facts() {
        for (p, y) in t.iter().enumerate() {
            if y == x {
                *out.entry((String::from(r), p)).or_insert(0) += 1;
            }
        }
    }
    out
}

/// An isomorphism `a → a2`, if any.
pub fn find_isomorphism(a: &Structure, a2: &Structure) -> Result<Option<Mapping>> {
    a.same_signature(a2)?;
    if a.domain().len() != a2.domain().len()
        || a.signature().iter().any(|(r, _)| a.relation_len(r) != a2.relation_len(r))
    {
        return Ok(None);
    }
    let p = Problem::new(a, a2);
    let mut doms = p.full_domains();
    let target_profiles: Vec<_> = p.tgt.iter().map(|y| profile(a2, y)).collect();
    for (i, x) in p.src.iter().enumerate() {
        let px = profile(a, x);
        for (j, py) in target_profiles.iter().enumerate() {
            if px != *py {
                doms[i][j] = false;
            }
        }
    }
    // An injective homomorphism between structures with equal fact counts per
    // relation is a bijection on facts, so its inverse is a homomorphism too.
    Ok(p.search(doms, true).map(|sol| p.mapping(&sol)))
}

pub fn is_isomorphic(a: &Structure, a2: &Structure) -> Result<bool> {
    Ok(find_isomorphism(a, a2)?.is_some())
}

/// The core of a structure together with a retraction onto it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Core {
    /// Induced substructure of the input with no non-surjective endomorphism.
    pub core: Structure,
    /// Endomorphism of the input with image `core`, fixing every core element.
    pub retraction: Mapping,
}

/// Computes the core by repeatedly finding an endomorphism whose image misses
/// some element, restricting to that image, until none exists.
pub fn core(a: &Structure) -> Core {
    let mut current = a.clone();
    let mut retraction = Mapping::identity(a.domain());
    'shrink: loop {
        for x in current.domain().iter() {
            let forbid = current.domain().iter().map(|y| (y.clone(), x.clone())).collect();
            let endo = find_homomorphism(&current, &current, &forbid).expect("same signature");
            if let Some(endo) = endo {
                let image = endo.image();
                retraction = retraction.then(&endo);
                current = current.induced(&image);
                continue 'shrink;
            }
        }
        break;
    }
    // The retraction restricted to the core is an automorphism σ; compose with
    // σ⁻¹ so that core elements are fixed.
    let sigma: Mapping = current
        .domain()
        .iter()
        .map(|x| (x.clone(), retraction.get(x).expect("total").into()))
        .collect();
    let id = Mapping::identity(current.domain());
    let mut inverse = id.clone();
    let mut power = sigma.clone();
    while power != id {
        inverse = power.clone();
        power = power.then(&sigma);
    }
    Core {
        core: current,
        retraction: retraction.then(&inverse),
    }
}
