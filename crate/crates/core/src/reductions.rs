//! Star expansion and the reduction from hypergraph-level CSPs to
//! structure-level CSPs.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::decomp::show;
use crate::hom::Mapping;
use crate::model::{hypergraph_of, Instance, Structure, Tuple};
use crate::{Error, Result};

/// Name of the unary relation pinning `x`.
pub fn unary_name(x: &str) -> String {
    format!("U_{x}")
}

/// Name of the domain element `(x, δ)` of a reduced instance.
pub fn pair_name(x: &str, value: &str) -> String {
    format!("{x}@{value}")
}

/// `A*`: `A` plus a fresh unary relation `U_x = {x}` for every element.
pub fn star_expand(a: &Structure) -> Result<Structure> {
    let mut sig = a.signature().clone();
    for x in a.domain() {
        let name = unary_name(x);
        if sig.contains(&name) {
            return Err(Error::NameCollision(name));
        }
        sig.insert(&name, 1)?;
    }
    let mut out = a.extend_signature(&sig)?;
    for x in a.domain() {
        out.add_fact(&unary_name(x), vec![x.clone()])?;
    }
    Ok(out)
}

fn element_set(t: &Tuple) -> BTreeSet<String> {
    t.iter().cloned().collect()
}

/// `F_e`: assignments `e → dom(d)` satisfying every fact of `c` whose element
/// set is exactly `e`, in lexicographic order.
pub fn satisfying_assignments(c: &Structure, d: &Structure, e: &BTreeSet<String>) -> Result<Vec<Mapping>> {
    c.same_signature(d)?;
    let scopes: Vec<(&str, &Tuple)> = c.iter_facts().filter(|(_, t)| element_set(t) == *e).collect();
    if scopes.is_empty() {
        return Err(Error::NotAnEdge(show(e)));
    }
    let vars: Vec<&String> = e.iter().collect();
    let values: Vec<&String> = d.domain().iter().collect();
    let mut out = Vec::new();
    if values.is_empty() {
        return Ok(out);
    }
    let mut digits = vec![0usize; vars.len()];
    loop {
        let assign: BTreeMap<&str, &str> = vars
            .iter()
            .zip(&digits)
            .map(|(v, &i)| (v.as_str(), values[i].as_str()))
            .collect();
        let ok = scopes.iter().all(|(rel, t)| {
            let image: Tuple = t.iter().map(|x| assign[x.as_str()].to_string()).collect();
            d.facts(rel).any(|u| *u == image)
        });
        if ok {
            out.push(
                assign
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.to_string()))
                    .collect(),
            );
        }
        // Odometer with the last variable fastest.
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < values.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

fn check_identification(c: &Structure, a: &Structure, ident: &Mapping) -> Result<()> {
    let mismatch = |why: String| Err(Error::HypergraphMismatch(why));
    let mut image = BTreeSet::new();
    for x in a.domain() {
        match ident.get(x) {
            Some(y) if c.domain().contains(y) => {
                if !image.insert(y.to_string()) {
                    return mismatch(format!("`{y}` is identified twice"));
                }
            }
            Some(y) => return mismatch(format!("`{x}` identified with unknown `{y}`")),
            None => return mismatch(format!("`{x}` has no identification")),
        }
    }
    if image.len() != c.domain().len() {
        return mismatch("identification is not onto".into());
    }
    let ha = hypergraph_of(a);
    let hc = hypergraph_of(c);
    let mapped: BTreeSet<BTreeSet<String>> = ha
        .edges()
        .map(|(_, e)| e.iter().map(|x| ident.get(x).expect("total").to_string()).collect())
        .collect();
    let target: BTreeSet<BTreeSet<String>> = hc.edges().map(|(_, e)| e.clone()).collect();
    if mapped != target {
        return mismatch("edges do not correspond".into());
    }
    Ok(())
}

/// Reduces the instance `(c, d)` to `(a*, B)` where `a` has the same
/// hypergraph as `c` under `ident` (identity when `None`).
///
/// `B` has domain `A × D` (pairs named by [`pair_name`]), `U_x^B = {(x, δ)}`
/// and, for each fact `(a_1..a_k) ∈ R^a` with element set `e` and each
/// `f ∈ F_e`, the tuple `((a_1, f(a_1)), ..., (a_k, f(a_k)))` in `R^B`.
/// `(c, d)` has a solution iff the reduced instance has one.
pub fn redh_reduce(c: &Structure, d: &Structure, a: &Structure, ident: Option<&Mapping>) -> Result<Instance> {
    c.same_signature(d)?;
    let identity = Mapping::identity(a.domain());
    let ident = ident.unwrap_or(&identity);
    check_identification(c, a, ident)?;
    let left = star_expand(a)?;
    let mut right = Structure::new(left.signature().clone());
    for x in a.domain() {
        for delta in d.domain() {
            right.add_fact(&unary_name(x), vec![pair_name(x, delta)])?;
        }
    }
    let mut cache: BTreeMap<BTreeSet<String>, Vec<Mapping>> = BTreeMap::new();
    for (rel, t) in a.iter_facts() {
        let scope: BTreeSet<String> = t.iter().map(|x| ident.get(x).expect("total").to_string()).collect();
        if !cache.contains_key(&scope) {
            let f = satisfying_assignments(c, d, &scope)?;
            cache.insert(scope.clone(), f);
        }
        for f in &cache[&scope] {
            let tuple = t
                .iter()
                .map(|x| pair_name(x, f.get(ident.get(x).expect("total")).expect("assignment on scope")))
                .collect();
            right.add_fact(rel, tuple)?;
        }
    }
    Instance::new(left, right)
}

/// Reads a solution of `(c, d)` off a solution `g` of the reduced instance:
/// `g(x) = (x, δ)` gives `h(ident(x)) = δ`.
pub fn extract_solution(c: &Structure, d: &Structure, a: &Structure, ident: Option<&Mapping>, g: &Mapping) -> Result<Mapping> {
    let identity = Mapping::identity(a.domain());
    let ident = ident.unwrap_or(&identity);
    let mut out = BTreeMap::new();
    for x in a.domain() {
        let image = g
            .get(x)
            .ok_or_else(|| Error::InvalidMapping(format!("`{x}` is unmapped")))?;
        let delta = d
            .domain()
            .iter()
            .find(|delta| pair_name(x, delta) == image)
            .ok_or_else(|| Error::InvalidMapping(format!("`{x}` maps to `{image}`, not a pair of x")))?;
        let y = ident.get(x).ok_or_else(|| Error::InvalidMapping(format!("`{x}` not identified")))?;
        out.insert(y.to_string(), delta.clone());
    }
    if out.len() != c.domain().len() {
        return Err(Error::InvalidMapping("identification is not onto".into()));
    }
    Ok(Mapping::new(out))
}
