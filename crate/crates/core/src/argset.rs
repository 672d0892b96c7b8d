//! Sets of arguments over an indexed finite universe.
//!
//! An [`ArgSet`] is a bitmask over the owning framework's argument indices.
//! Equality is extensional. The universe is capped at 64 arguments, which is
//! far beyond what exhaustive subset enumeration can handle anyway.

use std::cmp::Ordering;
use std::fmt;

/// Hard limit on the number of arguments a framework may have.
pub const MAX_UNIVERSE: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ArgSet(u64);

impl ArgSet {
    pub const EMPTY: ArgSet = ArgSet(0);

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_UNIVERSE);
        ArgSet(1u64 << i)
    }

    /// The full universe `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_UNIVERSE);
        if n == MAX_UNIVERSE {
            ArgSet(u64::MAX)
        } else {
            ArgSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut s = ArgSet::EMPTY;
        for i in indices {
            s = s.insert(i);
        }
        s
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Self {
        ArgSet(bits)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1u64 << i) != 0
    }

    #[must_use]
    pub fn insert(self, i: usize) -> Self {
        ArgSet(self.0 | (1u64 << i))
    }

    #[must_use]
    pub fn remove(self, i: usize) -> Self {
        ArgSet(self.0 & !(1u64 << i))
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        ArgSet(self.0 | other.0)
    }

    #[must_use]
    pub fn inter(self, other: Self) -> Self {
        ArgSet(self.0 & other.0)
    }

    #[must_use]
    pub fn minus(self, other: Self) -> Self {
        ArgSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Iterate member indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, including the empty set and `self` itself
    /// (carry-rippler enumeration).
    pub fn subsets(self) -> impl Iterator<Item = ArgSet> {
        let set = self.0;
        let mut sub = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = sub;
            sub = sub.wrapping_sub(set) & set;
            done = sub == 0;
            Some(ArgSet(cur))
        })
    }

    /// Canonical set order: ascending cardinality, then lexicographic on the
    /// ascending index sequence.
    pub fn canonical_cmp(self, other: Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {
                let diff = self.0 ^ other.0;
                if diff == 0 {
                    return Ordering::Equal;
                }
                // For equal cardinality, the set containing the smallest
                // differing index comes first.
                let low = diff & diff.wrapping_neg();
                if self.0 & low != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            ord => ord,
        }
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Every subset of a universe of `n` arguments in canonical order.
pub fn all_subsets(n: usize) -> Vec<ArgSet> {
    assert!(n <= 24, "subset enumeration over {n} arguments is infeasible");
    let mut subs: Vec<ArgSet> = (0u64..(1u64 << n)).map(ArgSet).collect();
    subs.sort_by(|a, b| a.canonical_cmp(*b));
    subs
}
