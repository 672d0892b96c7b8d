//! Extension semantics on BSAFs.
//!
//! Four families are implemented: the classical admissible family, its
//! gamma variants, the strong family, and the weak family. Enumeration is
//! exhaustive over the subset lattice; output is canonically sorted so
//! identical inputs give byte-identical results.

pub mod classical;
pub mod strong;
pub mod weak;

use crate::argset::ArgSet;
use crate::bsaf::Bsaf;

/// Every semantics the toolkit can enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    Cf,
    Adm,
    Com,
    Grd,
    Pref,
    AdmG,
    ComG,
    GrdG,
    PrefG,
    AdmS,
    ComS,
    PrefS,
    AdmSG,
    ComSG,
    GrdSG,
    PrefSG,
    AdmW,
    ComW,
    GrdW,
    PrefW,
}

impl Semantics {
    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "cf" => Semantics::Cf,
            "adm" => Semantics::Adm,
            "com" => Semantics::Com,
            "grd" => Semantics::Grd,
            "pref" => Semantics::Pref,
            "adm-g" => Semantics::AdmG,
            "com-g" => Semantics::ComG,
            "grd-g" => Semantics::GrdG,
            "pref-g" => Semantics::PrefG,
            "adm-s" => Semantics::AdmS,
            "com-s" => Semantics::ComS,
            "pref-s" => Semantics::PrefS,
            "adm-sg" => Semantics::AdmSG,
            "com-sg" => Semantics::ComSG,
            "grd-sg" => Semantics::GrdSG,
            "pref-sg" => Semantics::PrefSG,
            "adm-w" => Semantics::AdmW,
            "com-w" => Semantics::ComW,
            "grd-w" => Semantics::GrdW,
            "pref-w" => Semantics::PrefW,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Semantics::Cf => "cf",
            Semantics::Adm => "adm",
            Semantics::Com => "com",
            Semantics::Grd => "grd",
            Semantics::Pref => "pref",
            Semantics::AdmG => "adm-g",
            Semantics::ComG => "com-g",
            Semantics::GrdG => "grd-g",
            Semantics::PrefG => "pref-g",
            Semantics::AdmS => "adm-s",
            Semantics::ComS => "com-s",
            Semantics::PrefS => "pref-s",
            Semantics::AdmSG => "adm-sg",
            Semantics::ComSG => "com-sg",
            Semantics::GrdSG => "grd-sg",
            Semantics::PrefSG => "pref-sg",
            Semantics::AdmW => "adm-w",
            Semantics::ComW => "com-w",
            Semantics::GrdW => "grd-w",
            Semantics::PrefW => "pref-w",
        }
    }
}

/// A duplicate-free, canonically sorted family of extensions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExtensionSet(Vec<ArgSet>);

impl ExtensionSet {
    pub fn from_vec(mut sets: Vec<ArgSet>) -> Self {
        sets.sort_by(|a, b| a.canonical_cmp(*b));
        sets.dedup();
        ExtensionSet(sets)
    }

    pub fn as_slice(&self) -> &[ArgSet] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = ArgSet> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: ArgSet) -> bool {
        self.0.contains(&e)
    }

    /// The subset-maximal members.
    pub fn maximal(&self) -> ExtensionSet {
        ExtensionSet::from_vec(maximal_sets(&self.0))
    }

    /// The subset-minimal members.
    pub fn minimal(&self) -> ExtensionSet {
        ExtensionSet::from_vec(minimal_sets(&self.0))
    }

    /// Member names per extension, for rendering.
    pub fn named(&self, f: &Bsaf) -> Vec<Vec<String>> {
        self.0.iter().map(|&e| f.set_names(e)).collect()
    }
}

impl FromIterator<ArgSet> for ExtensionSet {
    fn from_iter<T: IntoIterator<Item = ArgSet>>(iter: T) -> Self {
        ExtensionSet::from_vec(iter.into_iter().collect())
    }
}

pub(crate) fn maximal_sets(sets: &[ArgSet]) -> Vec<ArgSet> {
    sets.iter()
        .copied()
        .filter(|&e| !sets.iter().any(|&o| e != o && e.is_subset_of(o)))
        .collect()
}

pub(crate) fn minimal_sets(sets: &[ArgSet]) -> Vec<ArgSet> {
    sets.iter()
        .copied()
        .filter(|&e| !sets.iter().any(|&o| e != o && o.is_subset_of(e)))
        .collect()
}

/// Enumerate `sem` on `f`. Weak semantics build a fresh solver; reuse a
/// [`weak::WeakSolver`] directly when evaluating many related frameworks.
pub fn extensions(f: &Bsaf, sem: Semantics) -> ExtensionSet {
    match sem {
        Semantics::Cf => classical::conflict_free_sets(f),
        Semantics::Adm => classical::admissible_sets(f),
        Semantics::Com => classical::complete_sets(f),
        Semantics::Grd => classical::grounded_sets(f),
        Semantics::Pref => classical::preferred_sets(f),
        Semantics::AdmG => classical::gamma_admissible_sets(f),
        Semantics::ComG => classical::gamma_complete_sets(f),
        Semantics::GrdG => classical::gamma_grounded_sets(f),
        Semantics::PrefG => classical::gamma_preferred_sets(f),
        Semantics::AdmS => strong::strongly_admissible_sets(f),
        Semantics::ComS => strong::strongly_complete_sets(f),
        Semantics::PrefS => strong::strongly_preferred_sets(f),
        Semantics::AdmSG => strong::strong_gamma_admissible_sets(f),
        Semantics::ComSG => strong::strong_gamma_complete_sets(f),
        Semantics::GrdSG => strong::strong_gamma_grounded_sets(f),
        Semantics::PrefSG => strong::strong_gamma_preferred_sets(f),
        Semantics::AdmW => weak::WeakSolver::new().weakly_admissible_sets(f),
        Semantics::ComW => weak::WeakSolver::new().weakly_complete_sets(f),
        Semantics::GrdW => weak::WeakSolver::new().weakly_grounded_sets(f),
        Semantics::PrefW => weak::WeakSolver::new().weakly_preferred_sets(f),
    }
}
