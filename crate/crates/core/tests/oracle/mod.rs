//! Brute-force reference implementations used to cross-check the library.
//! Everything here is exponential and meant for a handful of vertices.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use semwidth_core::decomp::CoveredDecomposition;
use semwidth_core::hom::Mapping;
use semwidth_core::{Hypergraph, Rational, Structure};

/// Minimum of `Σ x_j` subject to `Σ_{j ∈ row} x_j ≥ 1` for every row and
/// `x ≥ 0`, by enumerating every basic solution: each choice of `nvars`
/// tight constraints with a unique solution is a candidate vertex.
pub fn lp_min_by_vertices(rows: &[Vec<usize>], nvars: usize) -> Option<Rational> {
    if rows.iter().any(|r| r.is_empty()) {
        return None;
    }
    if rows.is_empty() {
        return Some(Rational::zero());
    }
    // Constraint i < rows.len() is a covering row; the rest are x_j ≥ 0.
    let total = rows.len() + nvars;
    let coeff = |i: usize| -> (Vec<Rational>, Rational) {
        let mut a = vec![Rational::zero(); nvars];
        if i < rows.len() {
            for &j in &rows[i] {
                a[j] = Rational::one();
            }
            (a, Rational::one())
        } else {
            a[i - rows.len()] = Rational::one();
            (a, Rational::zero())
        }
    };
    let mut best: Option<Rational> = None;
    let mut chosen = Vec::new();
    choose(total, nvars, 0, &mut chosen, &mut |set| {
        let system: Vec<_> = set.iter().map(|&i| coeff(i)).collect();
        if let Some(x) = solve_square(system) {
            let feasible = (0..total).all(|i| {
                let (a, b) = coeff(i);
                let lhs = a.iter().zip(&x).fold(Rational::zero(), |acc, (p, q)| acc + p * q);
                lhs >= b
            });
            if feasible {
                let value = x.iter().fold(Rational::zero(), |acc, v| acc + v);
                if best.as_ref().is_none_or(|b| value < *b) {
                    best = Some(value);
                }
            }
        }
    });
    best
}

fn choose(n: usize, k: usize, from: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if acc.len() == k {
        f(acc);
        return;
    }
    for i in from..n {
        if n - i < k - acc.len() {
            break;
        }
        acc.push(i);
        choose(n, k, i + 1, acc, f);
        acc.pop();
    }
}

/// Gaussian elimination; `None` when the system is singular.
fn solve_square(mut m: Vec<(Vec<Rational>, Rational)>) -> Option<Vec<Rational>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r].0[col].is_zero())?;
        m.swap(col, pivot);
        let (prow, pb) = m[col].clone();
        for r in 0..n {
            if r != col && !m[r].0[col].is_zero() {
                let factor = m[r].0[col].clone() / &prow[col];
                for c in 0..n {
                    let delta = &factor * &prow[c];
                    m[r].0[c] -= delta;
                }
                m[r].1 -= &factor * &pb;
            }
        }
    }
    Some((0..n).map(|i| m[i].1.clone() / &m[i].0[i]).collect())
}

fn edge_list(h: &Hypergraph) -> Vec<BTreeSet<String>> {
    h.edges().map(|(_, e)| e.clone()).collect()
}

/// `ρ*_H(X)` by vertex enumeration.
pub fn rho_star(h: &Hypergraph, x: &BTreeSet<String>) -> Option<Rational> {
    let edges = edge_list(h);
    let rows: Vec<Vec<usize>> = x
        .iter()
        .map(|v| (0..edges.len()).filter(|&j| edges[j].contains(v)).collect())
        .collect();
    lp_min_by_vertices(&rows, edges.len())
}

/// `τ*_H` by vertex enumeration.
pub fn tau_star(h: &Hypergraph) -> Option<Rational> {
    let vs: Vec<&String> = h.vertices().iter().collect();
    let rows: Vec<Vec<usize>> = h
        .edges()
        .map(|(_, e)| (0..vs.len()).filter(|&i| e.contains(vs[i])).collect())
        .collect();
    lp_min_by_vertices(&rows, vs.len())
}

/// `ρ_H(X)` by trying edge subsets in order of size.
pub fn rho(h: &Hypergraph, x: &BTreeSet<String>) -> Option<usize> {
    let edges = edge_list(h);
    (0..=edges.len()).find(|&k| {
        let mut found = false;
        choose(edges.len(), k, 0, &mut Vec::new(), &mut |set| {
            found |= x.iter().all(|v| set.iter().any(|&j| edges[j].contains(v)));
        });
        found
    })
}

/// `τ_H` by trying vertex subsets in order of size.
pub fn tau(h: &Hypergraph) -> usize {
    let vs: Vec<&String> = h.vertices().iter().collect();
    let edges = edge_list(h);
    (0..=vs.len())
        .find(|&k| {
            let mut found = false;
            choose(vs.len(), k, 0, &mut Vec::new(), &mut |set| {
                found |= edges.iter().all(|e| set.iter().any(|&i| e.contains(vs[i])));
            });
            found
        })
        .expect("all vertices hit every edge")
}

/// Every labelled tree on `k` nodes as edge lists, from Prüfer sequences.
pub fn labelled_trees(k: usize) -> Vec<Vec<(usize, usize)>> {
    if k == 1 {
        return vec![Vec::new()];
    }
    if k == 2 {
        return vec![vec![(0, 1)]];
    }
    let mut out = Vec::new();
    let count = k.pow(k as u32 - 2);
    for code in 0..count {
        let mut seq = Vec::with_capacity(k - 2);
        let mut c = code;
        for _ in 0..k - 2 {
            seq.push(c % k);
            c /= k;
        }
        let mut degree = vec![1; k];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::with_capacity(k - 1);
        for &s in &seq {
            let leaf = (0..k).find(|&i| degree[i] == 1).expect("a leaf exists");
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..k).filter(|&i| degree[i] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(edges);
    }
    out
}

/// Tree decomposition conditions for bags (as bitmasks over `n` vertices)
/// connected by an unrooted tree.
fn is_td(n: usize, edges: &[u32], bags: &[u32], tree: &[(usize, usize)]) -> bool {
    let all = (1u32 << n) - 1;
    if bags.iter().fold(0, |acc, b| acc | b) != all {
        return false;
    }
    if !edges.iter().all(|e| bags.iter().any(|b| e & !b == 0)) {
        return false;
    }
    for v in 0..n {
        let holds: Vec<usize> = (0..bags.len()).filter(|&i| bags[i] & (1 << v) != 0).collect();
        // The nodes holding v induce a connected subtree iff they span
        // exactly |holds| − 1 tree edges.
        let inner = tree
            .iter()
            .filter(|(a, b)| bags[*a] & (1 << v) != 0 && bags[*b] & (1 << v) != 0)
            .count();
        if inner + 1 != holds.len() {
            return false;
        }
    }
    true
}

/// Minimum over all tree decompositions of `max f(bag)`, searching every
/// antichain of at most `n` bags with every labelled tree over them.
///
/// Merging nested adjacent bags never increases a monotone width, and a
/// decomposition without nested bags has at most `n` nodes, so this search
/// is exhaustive for monotone `f`.
pub fn td_width_by_enumeration(h: &Hypergraph, f: &dyn Fn(&BTreeSet<String>) -> Rational) -> Rational {
    let vs: Vec<String> = h.vertices().iter().cloned().collect();
    let n = vs.len();
    assert!(n <= 5, "oracle limited to 5 vertices");
    let mask_of = |s: &BTreeSet<String>| s.iter().fold(0u32, |acc, v| acc | 1 << vs.iter().position(|w| w == v).unwrap());
    let set_of = |m: u32| (0..n).filter(|i| m & (1 << i) != 0).map(|i| vs[i].clone()).collect::<BTreeSet<_>>();
    let edges: Vec<u32> = h.edges().map(|(_, e)| mask_of(e)).collect();
    let all = (1u32 << n) - 1;
    let mut best = f(&set_of(all));
    let candidates: Vec<(u32, Rational)> = (1..=all).map(|m| (m, f(&set_of(m)))).collect();
    let trees: Vec<Vec<Vec<(usize, usize)>>> = (0..=n).map(|k| if k == 0 { Vec::new() } else { labelled_trees(k) }).collect();
    for k in 2..=n {
        let mut chosen = Vec::new();
        choose(candidates.len(), k, 0, &mut chosen, &mut |set| {
            let width = set.iter().map(|&i| candidates[i].1.clone()).max().expect("nonempty");
            if width >= best {
                return;
            }
            let bags: Vec<u32> = set.iter().map(|&i| candidates[i].0).collect();
            let antichain = bags
                .iter()
                .enumerate()
                .all(|(i, a)| bags.iter().enumerate().all(|(j, b)| i == j || a & !b != 0));
            if antichain && trees[k].iter().any(|t| is_td(n, &edges, &bags, t)) {
                best = width;
            }
        });
    }
    best
}

pub fn tw(h: &Hypergraph) -> Rational {
    td_width_by_enumeration(h, &|b| Rational::from_integer((b.len() as i64 - 1).into()))
}

pub fn ghw(h: &Hypergraph) -> Rational {
    td_width_by_enumeration(h, &|b| Rational::from_integer((rho(h, b).expect("coverable") as i64).into()))
}

pub fn fhw(h: &Hypergraph) -> Rational {
    td_width_by_enumeration(h, &|b| rho_star(h, b).expect("coverable"))
}

/// Every map from `dom(a)` to `dom(b)` that preserves all facts.
pub fn all_homomorphisms(a: &Structure, b: &Structure) -> Vec<Mapping> {
    let src: Vec<&String> = a.domain().iter().collect();
    let tgt: Vec<&String> = b.domain().iter().collect();
    let mut out = Vec::new();
    if tgt.is_empty() {
        if src.is_empty() {
            out.push(Mapping::new(BTreeMap::new()));
        }
        return out;
    }
    let total = tgt.len().pow(src.len() as u32);
    for code in 0..total {
        let mut c = code;
        let mut map = BTreeMap::new();
        for x in &src {
            map.insert((*x).clone(), tgt[c % tgt.len()].clone());
            c /= tgt.len();
        }
        let ok = a.iter_facts().all(|(r, t)| {
            let image: Vec<String> = t.iter().map(|x| map[x].clone()).collect();
            b.facts(r).any(|u| *u == image)
        });
        if ok {
            out.push(Mapping::new(map));
        }
    }
    out
}

/// Size of the smallest image of an endomorphism, which is the core size.
pub fn core_size(a: &Structure) -> usize {
    all_homomorphisms(a, a)
        .iter()
        .map(|h| h.image().len())
        .min()
        .unwrap_or(0)
}

/// Whether a bijective homomorphism with homomorphic inverse exists.
pub fn isomorphic(a: &Structure, b: &Structure) -> bool {
    a.domain().len() == b.domain().len()
        && all_homomorphisms(a, b).iter().any(|h| {
            h.image().len() == a.domain().len() && {
                let inv: BTreeMap<String, String> = h.iter().map(|(x, y)| (y.to_string(), x.to_string())).collect();
                b.iter_facts().all(|(r, t)| {
                    let pre: Vec<String> = t.iter().map(|y| inv[y].clone()).collect();
                    a.facts(r).any(|u| *u == pre)
                })
            }
        })
}

/// All problems with `d` as a hypertree decomposition of `h`.
pub fn hd_problems(h: &Hypergraph, d: &CoveredDecomposition) -> Vec<String> {
    let mut problems = Vec::new();
    let n = d.base.len();
    let bags = d.base.bags();
    for (name, e) in h.edges() {
        if !bags.iter().any(|b| e.is_subset(b)) {
            problems.push(format!("edge {name} in no bag"));
        }
    }
    for v in h.vertices() {
        if !bags.iter().any(|b| b.contains(v)) {
            problems.push(format!("vertex {v} in no bag"));
        }
    }
    let adjacent: Vec<(usize, usize)> = (0..n).filter_map(|c| d.base.parent(c).map(|p| (p, c))).collect();
    let mut seen = BTreeSet::new();
    for b in bags {
        for v in b {
            if !seen.insert(v.clone()) {
                continue;
            }
            let holds = bags.iter().filter(|b| b.contains(v)).count();
            let inner = adjacent.iter().filter(|(p, c)| bags[*p].contains(v) && bags[*c].contains(v)).count();
            if inner + 1 != holds {
                problems.push(format!("vertex {v} disconnected"));
            }
        }
    }
    let descendants = |u: usize| -> Vec<usize> {
        (0..n)
            .filter(|&w| {
                let mut x = Some(w);
                while let Some(y) = x {
                    if y == u {
                        return true;
                    }
                    x = d.base.parent(y);
                }
                false
            })
            .collect()
    };
    for u in 0..n {
        let mut union = BTreeSet::new();
        for e in &d.covers[u] {
            match h.edge(e) {
                Some(vs) => union.extend(vs.iter().cloned()),
                None => problems.push(format!("node {u} covers with unknown edge {e}")),
            }
        }
        if !bags[u].is_subset(&union) {
            problems.push(format!("bag {u} not covered"));
        }
        let below: BTreeSet<String> = descendants(u).into_iter().flat_map(|w| bags[w].iter().cloned()).collect();
        for e in &d.covers[u] {
            if let Some(vs) = h.edge(e) {
                if vs.iter().any(|v| below.contains(v) && !bags[u].contains(v)) {
                    problems.push(format!("special condition fails at node {u} for {e}"));
                }
            }
        }
    }
    problems
}

/// Floating point value of a rational, for approximate bounds only.
pub fn approx(x: &Rational) -> f64 {
    let num: f64 = x.numer().to_string().parse().expect("integer");
    let den: f64 = x.denom().to_string().parse().expect("integer");
    num / den
}

/// Largest `|X|` whose traces `e ∩ X` take all `2^|X|` values.
pub fn vc_dimension(h: &Hypergraph) -> usize {
    let vs: Vec<&String> = h.vertices().iter().collect();
    let edges = edge_list(h);
    let mut best = 0;
    for mask in 0u32..(1 << vs.len()) {
        let x: BTreeSet<&String> = (0..vs.len()).filter(|i| mask & (1 << i) != 0).map(|i| vs[i]).collect();
        let traces: BTreeSet<Vec<&String>> = edges
            .iter()
            .map(|e| x.iter().copied().filter(|v| e.contains(*v)).collect())
            .collect();
        if traces.len() == 1 << x.len() {
            best = best.max(x.len());
        }
    }
    best
}
