//! Assumption-based argumentation frameworks.
//!
//! An ABA framework consists of a finite atom language, inference rules, a
//! set of assumptions, and a total contrary map on the assumptions. The
//! framework is evaluated through tree-derivability: a pair `(S, p)` is
//! derivable when some derivation tree has root `p` and leaf set exactly
//! `S`. Assumptions act as leaves wherever they occur in a rule body; only
//! the root of a tree may expand an assumption with a rule. A body atom may
//! be realized by several children with distinct sub-derivations, so tails
//! mix: the tail contributed by a derivable body atom is any union of its
//! own tails.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::argset::ArgSet;
use crate::bsaf::{valid_name, Bsaf, Edge};
use crate::error::Error;

/// An inference rule. The body is a set of atoms; the empty body is legal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rule {
    pub head: usize,
    pub body: BTreeSet<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abaf {
    atoms: Vec<String>,
    atom_index: BTreeMap<String, usize>,
    rules: Vec<Rule>,
    /// Atom indices of the assumptions, in declaration order. Assumption
    /// rank (the position in this list) is the argument index used by
    /// [`ArgSet`] and by the instantiated BSAF.
    assumptions: Vec<usize>,
    rank: BTreeMap<usize, usize>,
    /// Contrary atom per assumption atom.
    contrary: BTreeMap<usize, usize>,
}

/// All derivable tails, per atom. Entry `(S, p)` means `S` is exactly the
/// leaf set of some derivation tree with root `p`. For every assumption `a`
/// the trivial one-node tree contributes `({a}, a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailTable {
    tails: Vec<Vec<ArgSet>>,
}

impl TailTable {
    /// Tails of `atom`, in canonical set order.
    pub fn tails(&self, atom: usize) -> &[ArgSet] {
        &self.tails[atom]
    }

    /// Is `p` derivable from some subset of `s`?
    pub fn derives(&self, s: ArgSet, p: usize) -> bool {
        self.tails[p].iter().any(|t| t.is_subset_of(s))
    }
}

impl Abaf {
    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn atom_name(&self, atom: usize) -> &str {
        &self.atoms[atom]
    }

    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.atom_index.get(name).copied()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Atom indices of the assumptions, in declaration order.
    pub fn assumptions(&self) -> &[usize] {
        &self.assumptions
    }

    pub fn assumption_count(&self) -> usize {
        self.assumptions.len()
    }

    pub fn is_assumption(&self, atom: usize) -> bool {
        self.rank.contains_key(&atom)
    }

    /// Argument index of an assumption atom.
    pub fn assumption_rank(&self, atom: usize) -> Option<usize> {
        self.rank.get(&atom).copied()
    }

    pub fn contrary(&self, assumption_atom: usize) -> Option<usize> {
        self.contrary.get(&assumption_atom).copied()
    }

    /// No rule head is an assumption.
    pub fn is_flat(&self) -> bool {
        self.rules.iter().all(|r| !self.is_assumption(r.head))
    }

    // ------------------------------------------------------------------
    // Parsing and rendering
    // ------------------------------------------------------------------

    /// Parse the line-based ABA format: `asm <name>`, `ctr <asm> <atom>`,
    /// `rule <head> <- [<atom>{, <atom>}]`. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut atoms: Vec<String> = Vec::new();
        let mut atom_index: BTreeMap<String, usize> = BTreeMap::new();
        let mut intern = |name: &str, line: usize| -> Result<usize, Error> {
            if !valid_name(name) {
                return Err(Error::parse(line, format!("bad atom name `{name}`")));
            }
            if let Some(&i) = atom_index.get(name) {
                return Ok(i);
            }
            let i = atoms.len();
            atoms.push(name.to_string());
            atom_index.insert(name.to_string(), i);
            Ok(i)
        };

        let mut assumptions: Vec<usize> = Vec::new();
        let mut contrary: BTreeMap<usize, usize> = BTreeMap::new();
        let mut contrary_lines: BTreeMap<usize, usize> = BTreeMap::new();
        let mut rules: Vec<Rule> = Vec::new();

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
                "asm" => {
                    let a = intern(rest, line)?;
                    if !assumptions.contains(&a) {
                        assumptions.push(a);
                    }
                }
                "ctr" => {
                    let mut parts = rest.split_whitespace();
                    let (asm_name, ctr_name) = match (parts.next(), parts.next(), parts.next()) {
                        (Some(a), Some(c), None) => (a, c),
                        _ => return Err(Error::parse(line, "expected `ctr <asm> <atom>`")),
                    };
                    let a = intern(asm_name, line)?;
                    let c = intern(ctr_name, line)?;
                    if contrary.insert(a, c).is_some() {
                        return Err(Error::parse(
                            line,
                            format!("duplicate contrary declaration for `{asm_name}`"),
                        ));
                    }
                    contrary_lines.insert(a, line);
                }
                "rule" => {
                    let (head_part, body_part) = rest
                        .split_once("<-")
                        .ok_or_else(|| Error::parse(line, "expected `<-`"))?;
                    let head = intern(head_part.trim(), line)?;
                    let mut body = BTreeSet::new();
                    let body_part = body_part.trim();
                    if !body_part.is_empty() {
                        for b in body_part.split(',') {
                            body.insert(intern(b.trim(), line)?);
                        }
                    }
                    let rule = Rule { head, body };
                    if !rules.contains(&rule) {
                        rules.push(rule);
                    }
                }
                other => {
                    return Err(Error::parse(line, format!("unknown directive `{other}`")));
                }
            }
        }

        if assumptions.len() > crate::argset::MAX_UNIVERSE {
            return Err(Error::invalid(format!(
                "framework has {} assumptions; at most {} are supported",
                assumptions.len(),
                crate::argset::MAX_UNIVERSE
            )));
        }
        for a in &assumptions {
            if !contrary.contains_key(a) {
                return Err(Error::invalid(format!(
                    "assumption without contrary: `{}`",
                    atoms[*a]
                )));
            }
        }
        for (a, line) in &contrary_lines {
            if !assumptions.contains(a) {
                return Err(Error::parse(
                    *line,
                    format!("undeclared assumption `{}` in ctr line", atoms[*a]),
                ));
            }
        }

        let rank = assumptions
            .iter()
            .enumerate()
            .map(|(r, &a)| (a, r))
            .collect();
        Ok(Abaf {
            atoms,
            atom_index,
            rules,
            assumptions,
            rank,
            contrary,
        })
    }

    /// Render in the parseable format; parses back to an equal framework.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for &a in &self.assumptions {
            let _ = writeln!(out, "asm {}", self.atoms[a]);
        }
        for &a in &self.assumptions {
            let _ = writeln!(out, "ctr {} {}", self.atoms[a], self.atoms[self.contrary[&a]]);
        }
        for r in &self.rules {
            let body = r
                .body
                .iter()
                .map(|&b| self.atoms[b].as_str())
                .collect::<Vec<_>>()
                .join(", ");
            if body.is_empty() {
                let _ = writeln!(out, "rule {} <-", self.atoms[r.head]);
            } else {
                let _ = writeln!(out, "rule {} <- {}", self.atoms[r.head], body);
            }
        }
        out
    }

    // ------------------------------------------------------------------
    // Derivability
    // ------------------------------------------------------------------

    /// Compute all derivable tails as a least fixpoint.
    ///
    /// Rule-derived tails are combined per body atom: an assumption occurs
    /// as a leaf and contributes exactly itself, any other body atom
    /// contributes a union of one or more of its own rule-derived tails
    /// (several children of a node may share a label but carry different
    /// sub-derivations).
    pub fn derivable_tails(&self) -> TailTable {
        let n = self.atoms.len();
        // Rule-derived tails per atom (excluding the trivial one-node trees).
        let mut derived: Vec<BTreeSet<ArgSet>> = vec![BTreeSet::new(); n];
        loop {
            let mut changed = false;
            for rule in &self.rules {
                let mut options: Vec<Vec<ArgSet>> = Vec::with_capacity(rule.body.len());
                let mut blocked = false;
                for &q in &rule.body {
                    let opts = if let Some(r) = self.assumption_rank(q) {
                        vec![ArgSet::singleton(r)]
                    } else {
                        union_closure(&derived[q])
                    };
                    if opts.is_empty() {
                        blocked = true;
                        break;
                    }
                    options.push(opts);
                }
                if blocked {
                    continue;
                }
                let mut combos = vec![ArgSet::EMPTY];
                for opts in &options {
                    let mut next = BTreeSet::new();
                    for &c in &combos {
                        for &o in opts {
                            next.insert(c.union(o));
                        }
                    }
                    combos = next.into_iter().collect();
                }
                for c in combos {
                    changed |= derived[rule.head].insert(c);
                }
            }
            if !changed {
                break;
            }
        }

        let mut tails: Vec<Vec<ArgSet>> = Vec::with_capacity(n);
        for atom in 0..n {
            let mut ts: BTreeSet<ArgSet> = derived[atom].clone();
            if let Some(r) = self.assumption_rank(atom) {
                ts.insert(ArgSet::singleton(r));
            }
            let mut ts: Vec<ArgSet> = ts.into_iter().collect();
            ts.sort_by(|a, b| a.canonical_cmp(*b));
            tails.push(ts);
        }
        TailTable { tails }
    }

    /// All assumptions derivable from any subset of `s`, iterated to a
    /// fixpoint. Inflationary, monotone, idempotent.
    pub fn closure(&self, table: &TailTable, s: ArgSet) -> ArgSet {
        let mut cur = s;
        loop {
            let mut next = cur;
            for (rank, &atom) in self.assumptions.iter().enumerate() {
                if !next.contains(rank) && table.derives(cur, atom) {
                    next = next.insert(rank);
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Instantiate as a BSAF over the assumptions.
    ///
    /// Attacks are the derivations of contraries; supports are the
    /// derivations of assumptions, excluding the trivial one-node
    /// self-derivation.
    pub fn instantiate(&self) -> Bsaf {
        let table = self.derivable_tails();
        let names: Vec<String> = self
            .assumptions
            .iter()
            .map(|&a| self.atoms[a].clone())
            .collect();
        let mut attacks = Vec::new();
        let mut supports = Vec::new();
        for (rank, &atom) in self.assumptions.iter().enumerate() {
            for &t in table.tails(self.contrary[&atom]) {
                attacks.push(Edge::new(t, rank));
            }
            for &t in table.tails(atom) {
                if t != ArgSet::singleton(rank) {
                    supports.push(Edge::new(t, rank));
                }
            }
        }
        Bsaf::new(names, attacks, supports).expect("instantiation stays within the assumption universe")
    }
}

/// All unions of nonempty subfamilies of `sets`.
fn union_closure(sets: &BTreeSet<ArgSet>) -> Vec<ArgSet> {
    let mut closed: BTreeSet<ArgSet> = sets.clone();
    let mut work: Vec<ArgSet> = sets.iter().copied().collect();
    while let Some(s) = work.pop() {
        let unions: Vec<ArgSet> = closed
            .iter()
            .map(|&t| t.union(s))
            .filter(|u| !closed.contains(u))
            .collect();
        for u in unions {
            closed.insert(u);
            work.push(u);
        }
    }
    closed.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The five-rule, five-assumption framework behind the running BSAF
    /// example.
    pub(crate) fn running_example_abaf() -> Abaf {
        Abaf::parse(
            "asm a\nasm b\nasm c\nasm d\nasm e\n\
             ctr a ca\nctr b cb\nctr c cc\nctr d cd\nctr e ce\n\
             rule cc <- d\n\
             rule ce <- e\n\
             rule e <- a, b\n\
             rule cd <- c\n\
             rule ce <- b, c\n",
        )
        .unwrap()
    }

    fn asm_set(d: &Abaf, names: &[&str]) -> ArgSet {
        ArgSet::from_indices(
            names
                .iter()
                .map(|n| d.assumption_rank(d.atom_index(n).unwrap()).unwrap()),
        )
    }

    fn tails_of(d: &Abaf, table: &TailTable, atom: &str) -> Vec<ArgSet> {
        table.tails(d.atom_index(atom).unwrap()).to_vec()
    }

    #[test]
    fn parse_minimal() {
        let d = Abaf::parse("asm a\nctr a p\nrule p <- ").unwrap();
        assert_eq!(d.assumption_count(), 1);
        let a = d.atom_index("a").unwrap();
        let p = d.atom_index("p").unwrap();
        assert_eq!(d.contrary(a), Some(p));
        assert_eq!(d.rules().len(), 1);
        assert!(d.rules()[0].body.is_empty());
    }

    #[test]
    fn parse_running_example() {
        let d = running_example_abaf();
        assert_eq!(d.assumption_count(), 5);
        assert_eq!(d.rules().len(), 5);
        assert!(!d.is_flat());
    }

    #[test]
    fn parse_errors() {
        let missing = Abaf::parse("rule p <- q\nasm q\nctr q p\nasm r\n");
        assert!(matches!(missing, Err(Error::Invalid(msg)) if msg.contains("without contrary")));
        let undeclared = Abaf::parse("asm a\nctr a p\nctr b p\n");
        assert!(
            matches!(undeclared, Err(Error::Parse { msg, .. }) if msg.contains("undeclared assumption"))
        );
        let duplicate = Abaf::parse("asm a\nctr a p\nctr a q\n");
        assert!(
            matches!(duplicate, Err(Error::Parse { msg, .. }) if msg.contains("duplicate contrary"))
        );
        let syntax = Abaf::parse("asm a\nctr a p\nrule p q\n");
        assert!(matches!(syntax, Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn roundtrip() {
        let d = running_example_abaf();
        assert_eq!(Abaf::parse(&d.to_text()).unwrap(), d);
    }

    #[test]
    fn tails_of_running_example() {
        let d = running_example_abaf();
        let table = d.derivable_tails();
        assert_eq!(tails_of(&d, &table, "cc"), vec![asm_set(&d, &["d"])]);
        assert_eq!(
            tails_of(&d, &table, "ce"),
            vec![asm_set(&d, &["e"]), asm_set(&d, &["b", "c"])]
        );
        assert_eq!(
            tails_of(&d, &table, "e"),
            vec![asm_set(&d, &["e"]), asm_set(&d, &["a", "b"])]
        );
    }

    #[test]
    fn tails_with_no_rules() {
        let d = Abaf::parse("asm a\nctr a p\nasm b\nctr b q\n").unwrap();
        let table = d.derivable_tails();
        assert_eq!(tails_of(&d, &table, "a"), vec![asm_set(&d, &["a"])]);
        assert_eq!(tails_of(&d, &table, "p"), Vec::<ArgSet>::new());
    }

    #[test]
    fn tails_mix_derivations_of_shared_body_atoms() {
        // Distinct derivations of the same body atom may appear side by
        // side in one tree, so q also picks up the union tail {a,b}.
        let d = Abaf::parse(
            "asm a\nasm b\nctr a ca\nctr b cb\n\
             rule p <- a\nrule p <- b\nrule q <- p, p\n",
        )
        .unwrap();
        let table = d.derivable_tails();
        let expect = vec![
            asm_set(&d, &["a"]),
            asm_set(&d, &["b"]),
            asm_set(&d, &["a", "b"]),
        ];
        assert_eq!(tails_of(&d, &table, "q"), expect);
        // Same result whether the body lists p once or twice.
        let d2 = Abaf::parse(
            "asm a\nasm b\nctr a ca\nctr b cb\n\
             rule p <- a\nrule p <- b\nrule q <- p\n",
        )
        .unwrap();
        let t2 = d2.derivable_tails();
        assert_eq!(tails_of(&d2, &t2, "q"), expect);
        // Cross-check against explicit tree enumeration.
        assert_eq!(
            oracle::leaf_sets(&d, d.atom_index("q").unwrap(), 3),
            expect.into_iter().collect::<BTreeSet<_>>()
        );
    }

    #[test]
    fn closure_on_running_example() {
        let d = running_example_abaf();
        let table = d.derivable_tails();
        assert_eq!(
            d.closure(&table, asm_set(&d, &["a", "b"])),
            asm_set(&d, &["a", "b", "e"])
        );
        assert_eq!(d.closure(&table, ArgSet::EMPTY), ArgSet::EMPTY);
    }

    #[test]
    fn closure_with_empty_body_rule() {
        let d = Abaf::parse("asm a\nctr a p\nrule a <-\n").unwrap();
        let table = d.derivable_tails();
        assert_eq!(d.closure(&table, ArgSet::EMPTY), asm_set(&d, &["a"]));
    }

    #[test]
    fn closure_iterates_through_derived_assumptions() {
        // b is derivable from a, c only from b; the closure of {a} must
        // reach c through the intermediate assumption.
        let d = Abaf::parse(
            "asm a\nasm b\nasm c\nctr a ca\nctr b cb\nctr c cc\n\
             rule b <- a\nrule c <- b\n",
        )
        .unwrap();
        let table = d.derivable_tails();
        assert_eq!(
            d.closure(&table, asm_set(&d, &["a"])),
            asm_set(&d, &["a", "b", "c"])
        );
    }

    #[test]
    fn closure_properties() {
        let d = running_example_abaf();
        let table = d.derivable_tails();
        let subs = crate::argset::all_subsets(d.assumption_count());
        for &s in &subs {
            let c = d.closure(&table, s);
            assert!(s.is_subset_of(c));
            assert_eq!(d.closure(&table, c), c);
            for &s2 in &subs {
                if s.is_subset_of(s2) {
                    assert!(c.is_subset_of(d.closure(&table, s2)));
                }
            }
        }
    }

    #[test]
    fn instantiate_running_example() {
        let d = running_example_abaf();
        let f = d.instantiate();
        assert_eq!(f.arg_names(), ["a", "b", "c", "d", "e"]);
        let edge = |tail: &[&str], head: &str| {
            Edge::new(
                ArgSet::from_indices(tail.iter().map(|n| f.arg_index(n).unwrap())),
                f.arg_index(head).unwrap(),
            )
        };
        let mut attacks = vec![
            edge(&["d"], "c"),
            edge(&["c"], "d"),
            edge(&["b", "c"], "e"),
            edge(&["e"], "e"),
        ];
        attacks.sort_by(|a, b| a.tail.canonical_cmp(b.tail).then(a.head.cmp(&b.head)));
        assert_eq!(f.attacks(), attacks);
        assert_eq!(f.supports(), [edge(&["a", "b"], "e")]);
    }

    #[test]
    fn instantiate_flat_is_setaf() {
        let d = Abaf::parse(
            "asm a\nasm b\nctr a ca\nctr b cb\nrule ca <- b\nrule cb <- a, b\n",
        )
        .unwrap();
        assert!(d.is_flat());
        let f = d.instantiate();
        assert!(f.is_setaf());
        assert_eq!(f.attacks().len(), 2);
    }

    #[test]
    fn instantiate_with_empty_body_support() {
        let d = Abaf::parse("asm a\nasm b\nctr a ca\nctr b cb\nrule ca <- b\nrule a <-\n").unwrap();
        let f = d.instantiate();
        let a = f.arg_index("a").unwrap();
        let b = f.arg_index("b").unwrap();
        assert!(f.attacks().contains(&Edge::new(ArgSet::singleton(b), a)));
        assert!(f.supports().contains(&Edge::new(ArgSet::EMPTY, a)));
    }

    #[test]
    fn derivability_matches_tree_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xABA);
        for _ in 0..400 {
            let n_atoms = rng.gen_range(1..=4);
            let n_rules = rng.gen_range(0..=4);
            let n_asm = rng.gen_range(1..=n_atoms);
            let mut text = String::new();
            for a in 0..n_asm {
                text.push_str(&format!("asm x{a}\n"));
                let c = rng.gen_range(0..n_atoms);
                text.push_str(&format!("ctr x{a} x{c}\n"));
            }
            for _ in 0..n_rules {
                let head = rng.gen_range(0..n_atoms);
                let body_size = rng.gen_range(0..=2.min(n_atoms));
                let body: Vec<String> = (0..body_size)
                    .map(|_| format!("x{}", rng.gen_range(0..n_atoms)))
                    .collect();
                text.push_str(&format!("rule x{head} <- {}\n", body.join(", ")));
            }
            let d = Abaf::parse(&text).unwrap();
            let table = d.derivable_tails();
            let depth = d.rules().len() * d.atom_count();
            for atom in 0..d.atom_count() {
                let oracle_tails = oracle::leaf_sets(&d, atom, depth);
                for s in crate::argset::all_subsets(d.assumption_count()) {
                    let fast = table.derives(s, atom);
                    let slow = oracle_tails.iter().any(|t| t.is_subset_of(s));
                    assert_eq!(fast, slow, "atom {atom} from {s:?} in\n{text}");
                }
                // The fixpoint table is exactly the enumerated leaf sets.
                assert_eq!(
                    table.tails(atom).iter().copied().collect::<BTreeSet<_>>(),
                    oracle_tails,
                    "tails of atom {atom} in\n{text}"
                );
            }
        }
    }

    /// Brute-force enumeration of derivation trees, independent of the
    /// fixpoint construction.
    pub(crate) mod oracle {
        use super::*;

        /// Leaf sets of all derivation trees with root `atom`, exploring
        /// rule expansions up to `depth` nested applications.
        pub fn leaf_sets(d: &Abaf, atom: usize, depth: usize) -> BTreeSet<ArgSet> {
            let mut out = expand(d, atom, depth);
            if let Some(r) = d.assumption_rank(atom) {
                out.insert(ArgSet::singleton(r));
            }
            out
        }

        /// Leaf sets of trees whose root is expanded by a rule.
        fn expand(d: &Abaf, atom: usize, depth: usize) -> BTreeSet<ArgSet> {
            let mut out = BTreeSet::new();
            if depth == 0 {
                return out;
            }
            for rule in d.rules().iter().filter(|r| r.head == atom) {
                let mut partial: BTreeSet<ArgSet> = [ArgSet::EMPTY].into();
                let mut dead = false;
                for &q in &rule.body {
                    // Each child labeled q is either the leaf q (when q is
                    // an assumption) or an expanded subtree; a node may
                    // carry several children with label q.
                    let choices: BTreeSet<ArgSet> = if let Some(r) = d.assumption_rank(q) {
                        [ArgSet::singleton(r)].into()
                    } else {
                        let subs = expand(d, q, depth - 1);
                        let mut unions: BTreeSet<ArgSet> = BTreeSet::new();
                        let subs: Vec<ArgSet> = subs.into_iter().collect();
                        for pick in 1u32..(1u32 << subs.len().min(16)) {
                            let mut u = ArgSet::EMPTY;
                            for (i, t) in subs.iter().enumerate() {
                                if pick & (1 << i) != 0 {
                                    u = u.union(*t);
                                }
                            }
                            unions.insert(u);
                        }
                        unions
                    };
                    if choices.is_empty() {
                        dead = true;
                        break;
                    }
                    let mut next = BTreeSet::new();
                    for &p in &partial {
                        for &c in &choices {
                            next.insert(p.union(c));
                        }
                    }
                    partial = next;
                }
                if !dead {
                    out.extend(partial);
                }
            }
            out
        }
    }
}
