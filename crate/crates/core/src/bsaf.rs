//! Bipolar set-based argumentation frameworks.
//!
//! A BSAF is a finite set of arguments together with collective attacks and
//! collective supports. Every edge has a (possibly empty) tail set and a
//! single head argument. This module owns the data model, the line-based
//! file format, and the primitive predicates all semantics are built from.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::argset::{all_subsets, ArgSet, MAX_UNIVERSE};
use crate::error::Error;

/// A collective attack or support: a tail set and a single head.
///
/// Empty tails are legal. An empty-tail attack defeats its head in every
/// context; an empty-tail support puts its head into every closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub tail: ArgSet,
    pub head: usize,
}

impl Edge {
    pub fn new(tail: ArgSet, head: usize) -> Self {
        Edge { tail, head }
    }
}

/// Canonical edge order: tail in canonical set order, then head.
fn edge_cmp(a: &Edge, b: &Edge) -> std::cmp::Ordering {
    a.tail.canonical_cmp(b.tail).then(a.head.cmp(&b.head))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bsaf {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    attacks: Vec<Edge>,
    supports: Vec<Edge>,
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Bsaf {
    pub fn new(
        names: Vec<String>,
        mut attacks: Vec<Edge>,
        mut supports: Vec<Edge>,
    ) -> Result<Self, Error> {
        if names.len() > MAX_UNIVERSE {
            return Err(Error::invalid(format!(
                "framework has {} arguments; at most {MAX_UNIVERSE} are supported",
                names.len()
            )));
        }
        let mut index = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(Error::invalid(format!("bad argument name `{n}`")));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::invalid(format!("duplicate argument `{n}`")));
            }
        }
        let universe = ArgSet::full(names.len());
        for e in attacks.iter().chain(supports.iter()) {
            if e.head >= names.len() || !e.tail.is_subset_of(universe) {
                return Err(Error::invalid("edge mentions an argument outside the universe"));
            }
        }
        attacks.sort_by(edge_cmp);
        attacks.dedup();
        supports.sort_by(edge_cmp);
        supports.dedup();
        Ok(Bsaf {
            names,
            index,
            attacks,
            supports,
        })
    }

    pub fn empty() -> Self {
        Bsaf {
            names: Vec::new(),
            index: BTreeMap::new(),
            attacks: Vec::new(),
            supports: Vec::new(),
        }
    }

    pub fn arg_count(&self) -> usize {
        self.names.len()
    }

    pub fn arg_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn arg_names(&self) -> &[String] {
        &self.names
    }

    pub fn arg_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn universe(&self) -> ArgSet {
        ArgSet::full(self.names.len())
    }

    pub fn attacks(&self) -> &[Edge] {
        &self.attacks
    }

    pub fn supports(&self) -> &[Edge] {
        &self.supports
    }

    pub fn is_setaf(&self) -> bool {
        self.supports.is_empty()
    }

    /// Member names of a set, sorted by index.
    pub fn set_names(&self, e: ArgSet) -> Vec<String> {
        e.iter().map(|i| self.names[i].clone()).collect()
    }

    /// Translate a set of this framework into `target`'s universe by name.
    /// Returns `None` if some member does not exist in `target`.
    pub fn project_into(&self, target: &Bsaf, e: ArgSet) -> Option<ArgSet> {
        let mut out = ArgSet::EMPTY;
        for i in e.iter() {
            out = out.insert(target.arg_index(&self.names[i])?);
        }
        Some(out)
    }

    // ------------------------------------------------------------------
    // Primitive predicates
    // ------------------------------------------------------------------

    /// Arguments attacked by `e`: heads of attacks whose tail lies in `e`.
    pub fn attacked_by(&self, e: ArgSet) -> ArgSet {
        let mut out = ArgSet::EMPTY;
        for a in &self.attacks {
            if a.tail.is_subset_of(e) {
                out = out.insert(a.head);
            }
        }
        out
    }

    /// The range of `e`: the set itself plus everything it attacks.
    pub fn range(&self, e: ArgSet) -> ArgSet {
        e.union(self.attacked_by(e))
    }

    /// Least fixpoint of the support operator above `e`.
    pub fn closure(&self, e: ArgSet) -> ArgSet {
        let mut cur = e;
        loop {
            let mut next = cur;
            for s in &self.supports {
                if s.tail.is_subset_of(cur) {
                    next = next.insert(s.head);
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_closed(&self, e: ArgSet) -> bool {
        self.closure(e) == e
    }

    /// Does `e` attack the set `t`? True iff some attack tail lies in `e`
    /// and its head belongs to `t`.
    pub fn attacks_set(&self, e: ArgSet, t: ArgSet) -> bool {
        self.attacks
            .iter()
            .any(|a| t.contains(a.head) && a.tail.is_subset_of(e))
    }

    /// Conflict-freeness does not inspect the closure of `e`.
    pub fn is_conflict_free(&self, e: ArgSet) -> bool {
        !self.attacks_set(e, e)
    }

    /// All closed subsets, in ascending cardinality then lexicographic
    /// index order.
    pub fn closed_sets(&self) -> impl Iterator<Item = ArgSet> + '_ {
        all_subsets(self.arg_count())
            .into_iter()
            .filter(|&e| self.is_closed(e))
    }

    /// `e` defends `a` iff every closed attacker of `a` is attacked by `e`.
    pub fn defends(&self, e: ArgSet, a: usize) -> bool {
        self.closed_sets()
            .all(|c| !self.attacks_set(c, ArgSet::singleton(a)) || self.attacks_set(e, c))
    }

    /// The characteristic function: all arguments defended by `e`.
    pub fn gamma(&self, e: ArgSet) -> ArgSet {
        let closed: Vec<ArgSet> = self.closed_sets().collect();
        self.gamma_with(&closed, e)
    }

    /// `gamma` against a precomputed closed-set list (enumeration hot paths).
    pub(crate) fn gamma_with(&self, closed: &[ArgSet], e: ArgSet) -> ArgSet {
        let mut out = self.universe();
        for &c in closed {
            if self.attacks_set(e, c) {
                continue;
            }
            // c is a closed set not attacked by e: every argument it
            // attacks is undefended.
            out = out.minus(self.attacked_by(c));
        }
        out
    }

    // ------------------------------------------------------------------
    // Text format
    // ------------------------------------------------------------------

    /// Parse the line-based BSAF format: `arg <name>`,
    /// `att <name>{,<name>} -> <name>` and `sup ... -> <name>`, with an
    /// empty tail written `att -> <name>`. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut names: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut attacks = Vec::new();
        let mut supports = Vec::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (kw, rest) = match content.split_once(char::is_whitespace) {
                Some((kw, rest)) => (kw, rest.trim()),
                None => (content, ""),
            };
            match kw {
                "arg" => {
                    if !valid_name(rest) {
                        return Err(Error::parse(line, format!("bad argument name `{rest}`")));
                    }
                    if index.contains_key(rest) {
                        return Err(Error::parse(line, format!("duplicate argument `{rest}`")));
                    }
                    index.insert(rest.to_string(), names.len());
                    names.push(rest.to_string());
                }
                "att" | "sup" => {
                    let (tail_part, head_part) = rest
                        .split_once("->")
                        .ok_or_else(|| Error::parse(line, "expected `->`"))?;
                    let head_name = head_part.trim();
                    let head = *index.get(head_name).ok_or_else(|| {
                        Error::parse(line, format!("undeclared argument `{head_name}`"))
                    })?;
                    let mut tail = ArgSet::EMPTY;
                    let tail_part = tail_part.trim();
                    if !tail_part.is_empty() {
                        for t in tail_part.split(',') {
                            let t = t.trim();
                            let i = *index.get(t).ok_or_else(|| {
                                Error::parse(line, format!("undeclared argument `{t}`"))
                            })?;
                            tail = tail.insert(i);
                        }
                    }
                    let edge = Edge::new(tail, head);
                    if kw == "att" {
                        attacks.push(edge);
                    } else {
                        supports.push(edge);
                    }
                }
                other => {
                    return Err(Error::parse(line, format!("unknown directive `{other}`")));
                }
            }
        }
        Bsaf::new(names, attacks, supports)
    }

    /// Canonical text rendering; parses back to an equal framework.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for n in &self.names {
            let _ = writeln!(out, "arg {n}");
        }
        for e in &self.attacks {
            let _ = writeln!(out, "att {}", self.edge_text(e));
        }
        for e in &self.supports {
            let _ = writeln!(out, "sup {}", self.edge_text(e));
        }
        out
    }

    fn edge_text(&self, e: &Edge) -> String {
        let tail = e
            .tail
            .iter()
            .map(|i| self.names[i].as_str())
            .collect::<Vec<_>>()
            .join(",");
        if tail.is_empty() {
            format!("-> {}", self.names[e.head])
        } else {
            format!("{} -> {}", tail, self.names[e.head])
        }
    }

    /// Canonical identity of a framework, used as a memoization key.
    pub fn canonical_key(&self) -> String {
        self.to_text()
    }
}
