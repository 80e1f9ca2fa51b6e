//! Text formats for structures, hypergraphs, mappings, covers, tree
//! decompositions and unions of conjunctive queries.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use semwidth_core::covers::{FractionalCover, IntegralCover};
use semwidth_core::decomp::{CoveredDecomposition, TreeDecomposition};
use semwidth_core::hom::Mapping;
use semwidth_core::ucq::Ucq;
use semwidth_core::{Hypergraph, Rational, Signature, Structure};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Model(#[from] semwidth_core::Error),
}

pub type Result<T> = std::result::Result<T, FormatError>;

fn syntax<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(FormatError::Syntax {
        line,
        message: message.into(),
    })
}

/// One `Rel(c1,...,ck).` line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact {
    pub line: usize,
    pub relation: String,
    pub args: Vec<String>,
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '@'
}

fn check_name(line: usize, name: &str, what: &str) -> Result<()> {
    if name.is_empty() {
        return syntax(line, format!("missing {what}"));
    }
    if let Some(c) = name.chars().find(|c| !is_name_char(*c)) {
        return syntax(line, format!("unexpected character `{c}` in {what} `{name}`"));
    }
    Ok(())
}

/// Lines that carry content: neither blank nor `#` comments.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fact(line: usize, text: &str) -> Result<Fact> {
    let Some(body) = text.strip_suffix('.') else {
        return syntax(line, "fact must end with `.`");
    };
    let Some((relation, rest)) = body.split_once('(') else {
        return syntax(line, "expected `(` after the relation name");
    };
    let Some(inner) = rest.trim_end().strip_suffix(')') else {
        return syntax(line, "expected `)` before `.`");
    };
    let relation = relation.trim();
    check_name(line, relation, "relation name")?;
    let mut args = Vec::new();
    for arg in inner.split(',') {
        let arg = arg.trim();
        check_name(line, arg, "element")?;
        args.push(arg.to_string());
    }
    Ok(Fact {
        line,
        relation: relation.to_string(),
        args,
    })
}

/// Parses fact lines, skipping blank lines and `#` comments.
pub fn parse_facts(text: &str) -> Result<Vec<Fact>> {
    content_lines(text).map(|(n, l)| parse_fact(n, l)).collect()
}

fn structure_from_facts(facts: &[Fact]) -> Result<Structure> {
    let mut sig = Signature::new();
    for f in facts {
        if let Err(e) = sig.insert(&f.relation, f.args.len()) {
            return syntax(f.line, e.to_string());
        }
    }
    let mut s = Structure::new(sig);
    for f in facts {
        s.add_fact(&f.relation, f.args.clone())?;
    }
    Ok(s)
}

/// Reads a `.str` file. The signature is the set of relations used.
pub fn parse_structure(text: &str) -> Result<Structure> {
    structure_from_facts(&parse_facts(text)?)
}

/// Writes one fact per line, relations and tuples in ascending order.
/// Elements that occur in no fact cannot be expressed and are dropped.
pub fn write_structure(s: &Structure) -> String {
    let mut out = String::new();
    for (rel, t) in s.iter_facts() {
        writeln!(out, "{rel}({}).", t.join(",")).expect("write to string");
    }
    out
}

/// Reads a `.hg` file: each line names one edge and lists its vertices.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut h = Hypergraph::new();
    for f in parse_facts(text)? {
        if h.edge(&f.relation).is_some() {
            return syntax(f.line, format!("duplicate edge name `{}`", f.relation));
        }
        for v in &f.args {
            h.add_vertex(v);
        }
        h.add_edge(&f.relation, f.args.into_iter().collect())?;
    }
    Ok(h)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    for (name, e) in h.edges() {
        let vs: Vec<&str> = e.iter().map(String::as_str).collect();
        writeln!(out, "{name}({}).", vs.join(",")).expect("write to string");
    }
    out
}

/// Lines `x -> y`, sorted by source.
pub fn write_mapping(m: &Mapping) -> String {
    let mut out = String::new();
    for (x, y) in m.iter() {
        writeln!(out, "{x} -> {y}").expect("write to string");
    }
    out
}

pub fn parse_mapping(text: &str) -> Result<Mapping> {
    let mut map = BTreeMap::new();
    for (n, l) in content_lines(text) {
        let Some((x, y)) = l.split_once("->") else {
            return syntax(n, "expected `x -> y`");
        };
        let (x, y) = (x.trim(), y.trim());
        check_name(n, x, "source")?;
        check_name(n, y, "target")?;
        if map.insert(x.to_string(), y.to_string()).is_some() {
            return syntax(n, format!("`{x}` is mapped twice"));
        }
    }
    Ok(Mapping::new(map))
}

/// Lines `edge weight` followed by `total value`, all exact rationals.
pub fn write_fractional_cover(c: &FractionalCover) -> String {
    let mut out = String::new();
    for (e, w) in &c.weights {
        writeln!(out, "{e} {w}").expect("write to string");
    }
    writeln!(out, "total {}", c.total).expect("write to string");
    out
}

pub fn write_integral_cover(c: &IntegralCover) -> String {
    let mut out = String::new();
    for e in &c.edges {
        writeln!(out, "{e} 1").expect("write to string");
    }
    writeln!(out, "total {}", c.size).expect("write to string");
    out
}

fn parse_rational(line: usize, text: &str) -> Result<Rational> {
    match text.parse::<Rational>() {
        Ok(r) => Ok(r),
        Err(_) => syntax(line, format!("`{text}` is not a rational number")),
    }
}

pub fn parse_cover(text: &str) -> Result<FractionalCover> {
    let mut weights = BTreeMap::new();
    let mut total = None;
    for (n, l) in content_lines(text) {
        if total.is_some() {
            return syntax(n, "content after `total`");
        }
        let mut parts = l.split_whitespace();
        let (Some(name), Some(value), None) = (parts.next(), parts.next(), parts.next()) else {
            return syntax(n, "expected `edge p/q`");
        };
        let value = parse_rational(n, value)?;
        if name == "total" {
            total = Some(value);
        } else {
            check_name(n, name, "edge name")?;
            if weights.insert(name.to_string(), value).is_some() {
                return syntax(n, format!("edge `{name}` listed twice"));
            }
        }
    }
    match total {
        Some(total) => Ok(FractionalCover { weights, total }),
        None => syntax(text.lines().count(), "missing `total` line"),
    }
}

/// A parsed `.td` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdFile {
    pub metric: String,
    pub value: String,
    pub decomposition: TreeDecomposition,
    pub covers: Option<Vec<BTreeSet<String>>>,
}

impl TdFile {
    pub fn covered(&self) -> Option<CoveredDecomposition> {
        let covers = self.covers.clone()?;
        CoveredDecomposition::new(self.decomposition.clone(), covers).ok()
    }
}

/// Writes a decomposition with 1-based node ids in node order.
pub fn write_td(td: &TreeDecomposition, covers: Option<&[BTreeSet<String>]>, metric: &str, value: &str) -> String {
    let mut out = String::new();
    writeln!(out, "s td {} {metric} {value}", td.len()).expect("write to string");
    let join = |s: &BTreeSet<String>| s.iter().map(String::as_str).collect::<Vec<_>>().join(" ");
    let line = |prefix: &str, id: usize, body: String| {
        if body.is_empty() {
            format!("{prefix} {id}\n")
        } else {
            format!("{prefix} {id} {body}\n")
        }
    };
    for (u, bag) in td.bags().iter().enumerate() {
        out.push_str(&line("b", u + 1, join(bag)));
    }
    if let Some(covers) = covers {
        for (u, c) in covers.iter().enumerate() {
            out.push_str(&line("c", u + 1, join(c)));
        }
    }
    for (p, c) in td.tree_edges() {
        writeln!(out, "t {} {}", p + 1, c + 1).expect("write to string");
    }
    out
}

pub fn write_covered(d: &CoveredDecomposition, metric: &str, value: &str) -> String {
    write_td(&d.base, Some(&d.covers), metric, value)
}

fn parse_id(line: usize, text: Option<&str>, n: usize) -> Result<usize> {
    let Some(text) = text else {
        return syntax(line, "missing node id");
    };
    match text.parse::<usize>() {
        Ok(id) if (1..=n).contains(&id) => Ok(id - 1),
        _ => syntax(line, format!("node id `{text}` outside 1..={n}")),
    }
}

pub fn parse_td(text: &str) -> Result<TdFile> {
    let mut lines = content_lines(text);
    let Some((hn, header)) = lines.next() else {
        return syntax(1, "missing `s td` header");
    };
    let parts: Vec<&str> = header.split_whitespace().collect();
    let ["s", "td", count, metric, value] = parts.as_slice() else {
        return syntax(hn, "expected `s td <num-nodes> <metric> <value>`");
    };
    let Ok(n) = count.parse::<usize>() else {
        return syntax(hn, format!("`{count}` is not a node count"));
    };
    if n == 0 {
        return syntax(hn, "a decomposition needs at least one node");
    }
    let mut bags: Vec<Option<BTreeSet<String>>> = vec![None; n];
    let mut covers: Vec<Option<BTreeSet<String>>> = vec![None; n];
    let mut tree = Vec::new();
    for (ln, l) in lines {
        let mut parts = l.split_whitespace();
        match parts.next() {
            Some(kind @ ("b" | "c")) => {
                let id = parse_id(ln, parts.next(), n)?;
                let mut set = BTreeSet::new();
                for name in parts {
                    check_name(ln, name, "name")?;
                    set.insert(name.to_string());
                }
                let slot = if kind == "b" { &mut bags[id] } else { &mut covers[id] };
                if slot.replace(set).is_some() {
                    return syntax(ln, format!("node {} has two `{kind}` lines", id + 1));
                }
            }
            Some("t") => {
                let p = parse_id(ln, parts.next(), n)?;
                let c = parse_id(ln, parts.next(), n)?;
                if parts.next().is_some() {
                    return syntax(ln, "expected `t <parent> <child>`");
                }
                tree.push((p, c));
            }
            _ => return syntax(ln, "expected a `b`, `c` or `t` line"),
        }
    }
    let last = text.lines().count();
    let mut bag_list = Vec::with_capacity(n);
    for (u, b) in bags.into_iter().enumerate() {
        match b {
            Some(b) => bag_list.push(b),
            None => return syntax(last, format!("node {} has no bag", u + 1)),
        }
    }
    let (decomposition, perm) = TreeDecomposition::new(bag_list, &tree)?;
    let covers = if covers.iter().all(Option::is_none) {
        None
    } else {
        let mut out = vec![BTreeSet::new(); n];
        for (u, c) in covers.into_iter().enumerate() {
            match c {
                Some(c) => out[perm[u]] = c,
                None => return syntax(last, format!("node {} has no cover", u + 1)),
            }
        }
        Some(out)
    };
    Ok(TdFile {
        metric: metric.to_string(),
        value: value.to_string(),
        decomposition,
        covers,
    })
}

/// Reads a `.ucq` file: `.str` blocks separated by `---` lines. The disjuncts
/// share the union of the signatures of all blocks.
pub fn parse_ucq(text: &str) -> Result<Ucq> {
    let mut blocks: Vec<Vec<Fact>> = vec![Vec::new()];
    for (n, l) in content_lines(text) {
        if l == "---" {
            blocks.push(Vec::new());
        } else {
            blocks.last_mut().expect("nonempty").push(parse_fact(n, l)?);
        }
    }
    let all: Vec<Fact> = blocks.iter().flatten().cloned().collect();
    let sig = structure_from_facts(&all)?.signature().clone();
    let mut disjuncts = Vec::with_capacity(blocks.len());
    for block in &blocks {
        disjuncts.push(structure_from_facts(block)?.extend_signature(&sig)?);
    }
    Ok(Ucq::new(disjuncts)?)
}

pub fn write_ucq(u: &Ucq) -> String {
    let blocks: Vec<String> = u.disjuncts().iter().map(write_structure).collect();
    blocks.join("---\n")
}
