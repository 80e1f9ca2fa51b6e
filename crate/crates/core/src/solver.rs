//! Decision procedures: a plain backtracking oracle and decomposition-guided
//! semijoin evaluation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::decomp::{exact_width, ghd_covers, WidthKind};
use crate::hom::{core, Mapping};
use crate::model::{hypergraph_of, Structure};
use crate::{Limits, Result};

/// Exhaustive backtracking over all maps `A → B`, elements and values in name
/// order, each fact checked once all of its elements are assigned.
pub fn solve_bruteforce(a: &Structure, b: &Structure) -> Result<(bool, Option<Mapping>)> {
    a.same_signature(b)?;
    let src: Vec<&str> = a.domain().iter().map(|s| s.as_str()).collect();
    let tgt: Vec<&str> = b.domain().iter().map(|s| s.as_str()).collect();
    let pos = |x: &str| src.binary_search(&x).expect("element in domain");
    // Facts grouped by the position of their last element.
    let mut due: Vec<Vec<(&str, Vec<usize>)>> = vec![Vec::new(); src.len()];
    for (rel, t) in a.iter_facts() {
        let vars: Vec<usize> = t.iter().map(|x| pos(x)).collect();
        let last = *vars.iter().max().expect("positive arity");
        due[last].push((rel, vars));
    }
    let allowed: BTreeSet<(&str, Vec<&str>)> = b
        .iter_facts()
        .map(|(r, t)| (r, t.iter().map(|x| x.as_str()).collect()))
        .collect();
    let mut assignment = vec![0usize; src.len()];
    fn go(
        depth: usize,
        assignment: &mut [usize],
        tgt: &[&str],
        due: &[Vec<(&str, Vec<usize>)>],
        allowed: &BTreeSet<(&str, Vec<&str>)>,
    ) -> bool {
        if depth == assignment.len() {
            return true;
        }
        for v in 0..tgt.len() {
            assignment[depth] = v;
            let ok = due[depth].iter().all(|(rel, vars)| {
                let image: Vec<&str> = vars.iter().map(|&x| tgt[assignment[x]]).collect();
                allowed.contains(&(*rel, image))
            });
            if ok && go(depth + 1, assignment, tgt, due, allowed) {
                return true;
            }
        }
        false
    }
    if go(0, &mut assignment, &tgt, &due, &allowed) {
        let m = src
            .iter()
            .zip(&assignment)
            .map(|(x, &v)| ((*x).into(), tgt[v].into()))
            .collect();
        Ok((true, Some(m)))
    } else {
        Ok((false, None))
    }
}

/// Rows over a sorted list of variables.
#[derive(Debug, Clone)]
struct Table {
    vars: Vec<usize>,
    rows: BTreeSet<Vec<usize>>,
}

impl Table {
    fn join(&self, other: &Table) -> Table {
        let mut vars: Vec<usize> = self.vars.iter().chain(&other.vars).copied().collect();
        vars.sort_unstable();
        vars.dedup();
        let mut rows = BTreeSet::new();
        for r in &self.rows {
            'other: for s in &other.rows {
                let mut row = Vec::with_capacity(vars.len());
                for &v in &vars {
                    let left = self.vars.iter().position(|&x| x == v).map(|i| r[i]);
                    let right = other.vars.iter().position(|&x| x == v).map(|i| s[i]);
                    match (left, right) {
                        (Some(x), Some(y)) if x != y => continue 'other,
                        (Some(x), _) | (None, Some(x)) => row.push(x),
                        (None, None) => unreachable!(),
                    }
                }
                rows.insert(row);
            }
        }
        Table { vars, rows }
    }

    fn project(&self, vars: &[usize]) -> Table {
        let idx: Vec<usize> = vars
            .iter()
            .map(|v| self.vars.iter().position(|x| x == v).expect("projection onto own vars"))
            .collect();
        Table {
            vars: vars.to_vec(),
            rows: self.rows.iter().map(|r| idx.iter().map(|&i| r[i]).collect()).collect(),
        }
    }

    /// Keeps the rows that agree with some row of `other` on shared variables.
    fn semijoin(&mut self, other: &Table) -> bool {
        let shared: Vec<(usize, usize)> = self
            .vars
            .iter()
            .enumerate()
            .filter_map(|(i, v)| other.vars.iter().position(|x| x == v).map(|j| (i, j)))
            .collect();
        let keys: BTreeSet<Vec<usize>> = other
            .rows
            .iter()
            .map(|s| shared.iter().map(|&(_, j)| s[j]).collect())
            .collect();
        let before = self.rows.len();
        self.rows
            .retain(|r| keys.contains(&shared.iter().map(|&(i, _)| r[i]).collect::<Vec<_>>()));
        self.rows.len() != before
    }
}

/// Statistics of a decomposition-guided run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecomposedRun {
    pub satisfiable: bool,
    /// Integral cover width of the decomposition used.
    pub width: usize,
    /// Materialized bag relation sizes, in node order.
    pub rows_materialized: Vec<usize>,
    /// Bag relation sizes after the semijoin pass.
    pub rows_after_semijoin: Vec<usize>,
}

impl DecomposedRun {
    pub fn max_bag_rows(&self) -> usize {
        self.rows_materialized.iter().copied().max().unwrap_or(0)
    }
}

/// Solves `(A, B)` along a minimum integral-cover-width tree decomposition of
/// the hypergraph of `A` (or of its core when `use_core`).
///
/// Each bag relation joins the fact relations of its cover edges, projects
/// onto the bag and filters by every fact inside the bag. A bottom-up
/// semijoin pass then decides the instance at the root.
pub fn solve_decomposed(a: &Structure, b: &Structure, use_core: bool, limits: &Limits) -> Result<DecomposedRun> {
    a.same_signature(b)?;
    let scopes = if use_core { core(a).core } else { a.clone() };
    let empty_run = |satisfiable| DecomposedRun {
        satisfiable,
        width: 0,
        rows_materialized: Vec::new(),
        rows_after_semijoin: Vec::new(),
    };
    if scopes.domain().is_empty() {
        return Ok(empty_run(true));
    }
    if b.domain().is_empty() {
        return Ok(empty_run(false));
    }
    // Elements in no fact can take any value.
    let isolated = scopes.isolated_elements();
    let scopes = scopes.induced(&scopes.domain().difference(&isolated).cloned().collect());
    if scopes.domain().is_empty() {
        return Ok(empty_run(true));
    }

    let h = hypergraph_of(&scopes);
    let best = exact_width(&h, WidthKind::Ghw, limits)?;
    let ghd = ghd_covers(&h, &best.witness)?;
    let vars: Vec<&String> = scopes.domain().iter().collect();
    let values: Vec<&String> = b.domain().iter().collect();
    let var = |x: &String| vars.binary_search(&x).expect("element");
    let value = |x: &String| values.binary_search(&x).expect("element");

    let allowed: BTreeMap<&str, BTreeSet<Vec<usize>>> = b
        .signature()
        .iter()
        .map(|(r, _)| (r, b.facts(r).map(|t| t.iter().map(value).collect()).collect()))
        .collect();
    let facts: Vec<(&str, Vec<usize>)> = scopes
        .iter_facts()
        .map(|(r, t)| (r, t.iter().map(var).collect()))
        .collect();

    // Assignments of one edge satisfying every fact with exactly that scope.
    let edge_table = |edge: &BTreeSet<usize>| -> Table {
        let evars: Vec<usize> = edge.iter().copied().collect();
        let mut table: Option<Table> = None;
        for (rel, t) in facts.iter().filter(|(_, t)| t.iter().copied().collect::<BTreeSet<_>>() == *edge) {
            let mut rows = BTreeSet::new();
            'tuples: for tuple in &allowed[rel] {
                let mut row = vec![usize::MAX; evars.len()];
                for (p, &x) in t.iter().enumerate() {
                    let slot = evars.binary_search(&x).expect("in scope");
                    if row[slot] != usize::MAX && row[slot] != tuple[p] {
                        continue 'tuples;
                    }
                    row[slot] = tuple[p];
                }
                rows.insert(row);
            }
            let fresh = Table {
                vars: evars.clone(),
                rows,
            };
            table = Some(match table {
                None => fresh,
                Some(prev) => Table {
                    vars: evars.clone(),
                    rows: prev.rows.intersection(&fresh.rows).cloned().collect(),
                },
            });
        }
        table.expect("every edge is realized by a fact")
    };

    let mut tables = Vec::with_capacity(ghd.base.len());
    for (u, cover) in ghd.covers.iter().enumerate() {
        let bag: Vec<usize> = ghd.base.bag(u).iter().map(var).collect();
        let mut joined: Option<Table> = None;
        for e in cover {
            let edge: BTreeSet<usize> = h.edge(e).expect("cover edge").iter().map(var).collect();
            let t = edge_table(&edge);
            joined = Some(match joined {
                None => t,
                Some(prev) => prev.join(&t),
            });
        }
        let mut table = match joined {
            Some(j) => j.project(&bag),
            None => Table {
                vars: bag.clone(),
                rows: [Vec::new()].into_iter().collect(),
            },
        };
        let bag_set: BTreeSet<usize> = bag.iter().copied().collect();
        for (rel, t) in facts.iter().filter(|(_, t)| t.iter().all(|x| bag_set.contains(x))) {
            let pos: Vec<usize> = t.iter().map(|x| bag.binary_search(x).expect("in bag")).collect();
            table
                .rows
                .retain(|row| allowed[rel].contains(&pos.iter().map(|&i| row[i]).collect::<Vec<_>>()));
        }
        tables.push(table);
    }
    let rows_materialized: Vec<usize> = tables.iter().map(|t| t.rows.len()).collect();

    // Children come after their parent in preorder, so walking backwards
    // finishes every subtree before its parent.
    for c in (1..tables.len()).rev() {
        let p = ghd.base.parent(c).expect("non-root");
        let child = tables[c].clone();
        tables[p].semijoin(&child);
    }
    let satisfiable = !tables[0].rows.is_empty();
    Ok(DecomposedRun {
        satisfiable,
        width: ghd.width(),
        rows_materialized,
        rows_after_semijoin: tables.iter().map(|t| t.rows.len()).collect(),
    })
}
