//! Framework reducts.
//!
//! The reduct of a framework with respect to a set `E` removes everything
//! that committing to `E` settles: the closure of `E` is accepted, whatever
//! that closure attacks is defeated, and both are projected away. Supports
//! of defeated arguments leave constraint attacks behind so that the
//! remaining members of the supporting tail can never be accepted jointly.
//!
//! Three variants are provided: the standard reduct, an alternative reduct
//! that ignores closure and adds no constraint attacks, and a gamma variant
//! that uses the gamma-closure in place of the closure. The SETAF reduct is
//! the degenerate support-free case, kept as a named operation.

use std::collections::BTreeSet;

use crate::argset::ArgSet;
use crate::bsaf::{Bsaf, Edge};
use crate::error::Error;
use crate::semantics::classical::gamma_closure;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductVariant {
    Standard,
    Alternative,
    Gamma,
}

impl ReductVariant {
    pub fn apply(self, f: &Bsaf, e: ArgSet) -> Bsaf {
        match self {
            ReductVariant::Standard => reduct(f, e),
            ReductVariant::Alternative => alt_reduct(f, e),
            ReductVariant::Gamma => gamma_reduct(f, e),
        }
    }
}

/// Core construction shared by the standard and gamma reducts: `accepted`
/// is the (gamma-)closure of the chosen set.
fn reduct_wrt(f: &Bsaf, accepted: ArgSet) -> Bsaf {
    let defeated = f.attacked_by(accepted);
    let removed = accepted.union(defeated);
    let kept = f.universe().minus(removed);

    let mut attacks: BTreeSet<(ArgSet, usize)> = BTreeSet::new();
    // Constraint attacks: a support of a defeated head turns into joint
    // self-attacks among the surviving members of its tail.
    for s in f.supports() {
        if defeated.contains(s.head) && !s.tail.intersects(defeated) {
            let trimmed = s.tail.minus(accepted);
            for t in trimmed.iter() {
                attacks.insert((trimmed, t));
            }
        }
    }
    for a in f.attacks() {
        if kept.contains(a.head) && !a.tail.intersects(defeated) {
            attacks.insert((a.tail.minus(accepted), a.head));
        }
    }
    let mut supports: BTreeSet<(ArgSet, usize)> = BTreeSet::new();
    for s in f.supports() {
        if kept.contains(s.head) && !s.tail.intersects(defeated) {
            supports.insert((s.tail.minus(accepted), s.head));
        }
    }
    project(f, kept, attacks, supports)
}

/// The reduct of `f` with respect to `e`, via the closure of `e`.
pub fn reduct(f: &Bsaf, e: ArgSet) -> Bsaf {
    reduct_wrt(f, f.closure(e))
}

/// The gamma reduct: identical construction over the gamma-closure.
pub fn gamma_reduct(f: &Bsaf, e: ArgSet) -> Bsaf {
    reduct_wrt(f, gamma_closure(f, e))
}

/// The alternative reduct: `e` itself replaces the closure and no
/// constraint attacks are generated.
pub fn alt_reduct(f: &Bsaf, e: ArgSet) -> Bsaf {
    let defeated = f.attacked_by(e);
    let removed = e.union(defeated);
    let kept = f.universe().minus(removed);
    let mut attacks: BTreeSet<(ArgSet, usize)> = BTreeSet::new();
    for a in f.attacks() {
        if kept.contains(a.head) && !a.tail.intersects(defeated) {
            attacks.insert((a.tail.minus(e), a.head));
        }
    }
    let mut supports: BTreeSet<(ArgSet, usize)> = BTreeSet::new();
    for s in f.supports() {
        if kept.contains(s.head) && !s.tail.intersects(defeated) {
            supports.insert((s.tail.minus(e), s.head));
        }
    }
    project(f, kept, attacks, supports)
}

/// The SETAF reduct; rejects frameworks with supports.
pub fn setaf_reduct(f: &Bsaf, e: ArgSet) -> Result<Bsaf, Error> {
    if !f.is_setaf() {
        return Err(Error::NotSetaf);
    }
    let removed = f.range(e);
    let kept = f.universe().minus(removed);
    let mut attacks: BTreeSet<(ArgSet, usize)> = BTreeSet::new();
    for a in f.attacks() {
        if kept.contains(a.head)
            && !a.tail.intersects(f.attacked_by(e))
            && !a.tail.is_subset_of(e)
        {
            attacks.insert((a.tail.minus(e), a.head));
        }
    }
    Ok(project(f, kept, attacks, BTreeSet::new()))
}

/// Rebuild a framework over the kept arguments, reindexing densely while
/// preserving the original argument order.
fn project(
    f: &Bsaf,
    kept: ArgSet,
    attacks: BTreeSet<(ArgSet, usize)>,
    supports: BTreeSet<(ArgSet, usize)>,
) -> Bsaf {
    let mut new_index = vec![usize::MAX; f.arg_count()];
    let mut names = Vec::new();
    for (new, old) in kept.iter().enumerate() {
        new_index[old] = new;
        names.push(f.arg_name(old).to_string());
    }
    let remap = |(tail, head): (ArgSet, usize)| {
        debug_assert!(tail.is_subset_of(kept));
        Edge::new(
            ArgSet::from_indices(tail.iter().map(|i| new_index[i])),
            new_index[head],
        )
    };
    let attacks: Vec<Edge> = attacks.into_iter().map(remap).collect();
    let supports: Vec<Edge> = supports.into_iter().map(remap).collect();
    Bsaf::new(names, attacks, supports).expect("projection stays within the kept universe")
}

/// Extensional framework equality: same argument names, same attack edges,
/// same support edges, with tails compared by name.
pub fn frameworks_equal(f1: &Bsaf, f2: &Bsaf) -> bool {
    let names1: BTreeSet<&String> = f1.arg_names().iter().collect();
    let names2: BTreeSet<&String> = f2.arg_names().iter().collect();
    if names1 != names2 {
        return false;
    }
    let edge_set = |f: &Bsaf, edges: &[Edge]| -> BTreeSet<(Vec<String>, String)> {
        edges
            .iter()
            .map(|e| {
                let mut tail: Vec<String> = e.tail.iter().map(|i| f.arg_name(i).to_string()).collect();
                tail.sort();
                (tail, f.arg_name(e.head).to_string())
            })
            .collect()
    };
    edge_set(f1, f1.attacks()) == edge_set(f2, f2.attacks())
        && edge_set(f1, f1.supports()) == edge_set(f2, f2.supports())
}
