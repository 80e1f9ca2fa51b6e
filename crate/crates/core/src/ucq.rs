//! Boolean unions of conjunctive queries.

use alloc::vec::Vec;

use crate::decomp::subw_bounds;
use crate::hom::{core, hom_equivalent, is_contained};
use crate::model::{hypergraph_of, Structure};
use crate::semantic::WidthValue;
use crate::solver::solve_decomposed;
use crate::{Error, Limits, Result};

/// A nonempty list of disjuncts over one signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ucq {
    disjuncts: Vec<Structure>,
}

impl Ucq {
    pub fn new(disjuncts: Vec<Structure>) -> Result<Self> {
        let first = disjuncts.first().ok_or(Error::EmptyUcq)?;
        for d in &disjuncts[1..] {
            first.same_signature(d)?;
        }
        Ok(Ucq { disjuncts })
    }

    pub fn disjuncts(&self) -> &[Structure] {
        &self.disjuncts
    }

    pub fn len(&self) -> usize {
        self.disjuncts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disjuncts.is_empty()
    }

    pub fn signature(&self) -> &crate::Signature {
        self.disjuncts[0].signature()
    }
}

/// `nr(u)`: repeatedly deletes the first disjunct (by index) contained in
/// another remaining one. Of two equivalent disjuncts the earlier survives.
pub fn make_nonredundant(u: &Ucq) -> Result<Ucq> {
    let mut left: Vec<Structure> = u.disjuncts.clone();
    'restart: loop {
        for i in 0..left.len() {
            for j in 0..left.len() {
                if i == j || !is_contained(&left[i], &left[j])? {
                    continue;
                }
                if j < i || !is_contained(&left[j], &left[i])? {
                    left.remove(i);
                    continue 'restart;
                }
            }
        }
        return Ucq::new(left);
    }
}

/// Equivalence of UCQs: the non-redundant forms pair up one-to-one into
/// homomorphically equivalent disjuncts.
pub fn ucq_equivalent(u: &Ucq, u2: &Ucq) -> Result<bool> {
    u.disjuncts[0].same_signature(&u2.disjuncts[0])?;
    let a = make_nonredundant(u)?;
    let b = make_nonredundant(u2)?;
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut used = alloc::vec![false; b.len()];
    for x in &a.disjuncts {
        let mut partners = Vec::new();
        for (j, y) in b.disjuncts.iter().enumerate() {
            if hom_equivalent(x, y)? {
                partners.push(j);
            }
        }
        // In a non-redundant union a disjunct has at most one equivalent partner.
        match partners.as_slice() {
            [j] if !used[*j] => used[*j] = true,
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Interval for the semantic submodular width of `u`: the maximum of the
/// per-disjunct bounds over the cores of `nr(u)`.
pub fn ucq_semantic_subw_bounds(u: &Ucq, limits: &Limits) -> Result<WidthValue> {
    let nr = make_nonredundant(u)?;
    let mut lower = crate::int(0);
    let mut upper = crate::int(0);
    for d in nr.disjuncts() {
        let b = subw_bounds(&hypergraph_of(&core(d).core), limits)?;
        lower = lower.max(b.lower);
        upper = upper.max(b.upper);
    }
    Ok(WidthValue::Interval { lower, upper })
}

/// `B` satisfies `u` iff some disjunct of `nr(u)` maps into `B`; each
/// disjunct is decided on its core along a decomposition.
pub fn solve_ucq(u: &Ucq, b: &Structure, limits: &Limits) -> Result<bool> {
    u.disjuncts[0].same_signature(b)?;
    for d in make_nonredundant(u)?.disjuncts() {
        if solve_decomposed(d, b, true, limits)?.satisfiable {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{gen_grid_instance, k2};
    use crate::{int, ratio};
    use alloc::vec;

    fn s(facts: &[(&str, &[&str])]) -> Structure {
        Structure::from_facts(facts.iter().map(|(r, t)| (*r, t.iter().copied()))).unwrap()
    }

    fn edge() -> Structure {
        s(&[("E", &["a", "b"])])
    }

    fn path() -> Structure {
        s(&[("E", &["a", "b"]), ("E", &["b", "c"])])
    }

    #[test]
    fn nr_drops_contained_disjuncts() {
        let u = Ucq::new(vec![edge(), path()]).unwrap();
        assert_eq!(make_nonredundant(&u).unwrap().disjuncts(), &[edge()]);
        let single = Ucq::new(vec![edge()]).unwrap();
        assert_eq!(make_nonredundant(&single).unwrap(), single);
    }

    #[test]
    fn nr_keeps_first_of_isomorphic_copies() {
        let copy = s(&[("E", &["u", "v"])]);
        let u = Ucq::new(vec![edge(), copy]).unwrap();
        assert_eq!(make_nonredundant(&u).unwrap().disjuncts(), &[edge()]);
    }

    #[test]
    fn equivalence_examples() {
        let u = Ucq::new(vec![edge(), path()]).unwrap();
        let v = Ucq::new(vec![edge()]).unwrap();
        assert!(ucq_equivalent(&u, &v).unwrap());
        let bi = Ucq::new(vec![s(&[("E", &["a", "b"]), ("E", &["b", "a"])])]).unwrap();
        assert!(!ucq_equivalent(&v, &bi).unwrap());
        assert!(ucq_equivalent(&u, &u).unwrap());
    }

    #[test]
    fn subw_bounds_examples() {
        let l = Limits::default();
        let grid = Ucq::new(vec![gen_grid_instance(3, &k2()).unwrap().left]).unwrap();
        let one = WidthValue::Interval {
            lower: int(1),
            upper: int(1),
        };
        assert_eq!(ucq_semantic_subw_bounds(&grid, &l).unwrap(), one);
        let single = Ucq::new(vec![edge()]).unwrap();
        assert_eq!(ucq_semantic_subw_bounds(&single, &l).unwrap(), one);
        // A triangle of binary facts and a disjoint-signature single edge survive nr together.
        let tri = s(&[("E", &["1", "2"]), ("E", &["2", "3"]), ("E", &["1", "3"])]);
        let f = s(&[("F", &["a", "b"])]);
        let sig = tri.signature().merge(f.signature()).unwrap();
        let u = Ucq::new(vec![tri.extend_signature(&sig).unwrap(), f.extend_signature(&sig).unwrap()]).unwrap();
        assert_eq!(make_nonredundant(&u).unwrap().len(), 2);
        let three_halves = WidthValue::Interval {
            lower: ratio(3, 2),
            upper: ratio(3, 2),
        };
        assert_eq!(ucq_semantic_subw_bounds(&u, &l).unwrap(), three_halves);
    }

    #[test]
    fn solve_examples() {
        let l = Limits::default();
        let grid = Ucq::new(vec![gen_grid_instance(3, &k2()).unwrap().left]).unwrap();
        assert!(solve_ucq(&grid, &k2(), &l).unwrap());
        let mut empty = Structure::new(k2().signature().clone());
        empty.add_element("0");
        assert!(!solve_ucq(&grid, &empty, &l).unwrap());
    }

    #[test]
    fn empty_union_rejected() {
        assert_eq!(Ucq::new(Vec::new()), Err(Error::EmptyUcq));
    }
}
