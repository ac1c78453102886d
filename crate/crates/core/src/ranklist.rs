//! Ordered r-tuples of component sizes driving the row-polynomial recursion.

use std::fmt;

use crate::error::{Error, Result};

/// A rank-list entry: a nonnegative size or the sentinel `∞`.
///
/// `Infinite` orders above every finite value and never takes part in
/// arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    Finite(u32),
    Infinite,
}

impl Entry {
    pub fn finite(self) -> Option<u32> {
        match self {
            Entry::Finite(v) => Some(v),
            Entry::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Entry::Infinite)
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Finite(v) => write!(f, "{v}"),
            Entry::Infinite => f.write_str("∞"),
        }
    }
}

impl From<u32> for Entry {
    fn from(v: u32) -> Self {
        Entry::Finite(v)
    }
}

/// Sorted list of `r` entries (ascending, `∞` last).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankList(Vec<Entry>);

impl RankList {
    /// Builds a list from arbitrary entries, sorting them.
    pub fn new(mut entries: Vec<Entry>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ZeroRank);
        }
        entries.sort_unstable();
        Ok(RankList(entries))
    }

    /// `{0, 0, ..., 0}`, the root of the largest-component recursion.
    pub fn zeros(rank: usize) -> Result<Self> {
        RankList::new(vec![Entry::Finite(0); rank])
    }

    /// `{∞, ∞, ..., ∞}`, the root of the smallest-component recursion.
    pub fn infinities(rank: usize) -> Result<Self> {
        RankList::new(vec![Entry::Infinite; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Entry] {
        &self.0
    }

    pub fn first(&self) -> Entry {
        self.0[0]
    }

    pub fn last(&self) -> Entry {
        self.0[self.0.len() - 1]
    }

    pub fn all_finite(&self) -> bool {
        self.0.iter().all(|e| !e.is_infinite())
    }

    /// `ℓ^j`: append `j`, sort, drop the first (smallest) element.
    pub fn promote(&self, j: u32) -> RankList {
        let mut v = self.0.clone();
        let pos = v.partition_point(|&e| e <= Entry::Finite(j));
        v.insert(pos, Entry::Finite(j));
        v.remove(0);
        RankList(v)
    }

    /// `ℓ_j`: append `j`, sort, drop the last (largest) element.
    pub fn demote(&self, j: u32) -> RankList {
        let mut v = self.0.clone();
        let pos = v.partition_point(|&e| e <= Entry::Finite(j));
        v.insert(pos, Entry::Finite(j));
        v.pop();
        RankList(v)
    }

    /// Replace the entry at `index` keeping the list sorted; used only for
    /// memo-key canonicalisation where the new value preserves the order.
    pub(crate) fn with_entry(&self, index: usize, value: Entry) -> RankList {
        let mut v = self.0.clone();
        v[index] = value;
        debug_assert!(v.windows(2).all(|w| w[0] <= w[1]));
        RankList(v)
    }
}

impl fmt::Display for RankList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl std::str::FromStr for RankList {
    type Err = String;

    /// Parses `0,0`, `{1,inf}` or `{2,∞}`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut entries = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            let entry = match part {
                "inf" | "infinity" | "∞" | "oo" => Entry::Infinite,
                _ => Entry::Finite(
                    part.parse()
                        .map_err(|_| format!("invalid rank-list entry `{part}`"))?,
                ),
            };
            entries.push(entry);
        }
        RankList::new(entries).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn list(s: &str) -> RankList {
        s.parse().unwrap()
    }

    #[test]
    fn promote_examples() {
        assert_eq!(list("{0,0}").promote(1), list("{0,1}"));
        assert_eq!(list("{1,2}").promote(3), list("{2,3}"));
        assert_eq!(list("{5,5}").promote(1), list("{5,5}"));
    }

    #[test]
    fn demote_examples() {
        assert_eq!(list("{inf,inf}").demote(1), list("{1,inf}"));
        assert_eq!(list("{1,2}").demote(3), list("{1,2}"));
        assert_eq!(list("{1,inf}").demote(2), list("{1,2}"));
    }

    #[test]
    fn infinity_sorts_last() {
        let l = RankList::new(vec![Entry::Infinite, Entry::Finite(7)]).unwrap();
        assert_eq!(l.to_string(), "{7,∞}");
        assert!(RankList::new(vec![]).is_err());
    }

    fn arb_entry() -> impl Strategy<Value = Entry> {
        prop_oneof![
            (0u32..50).prop_map(Entry::Finite),
            Just(Entry::Infinite)
        ]
    }

    proptest! {
        #[test]
        fn length_and_sortedness_preserved(
            entries in prop::collection::vec(arb_entry(), 1..6),
            j in 1u32..60,
        ) {
            let l = RankList::new(entries).unwrap();
            for next in [l.promote(j), l.demote(j)] {
                prop_assert_eq!(next.rank(), l.rank());
                prop_assert!(next.entries().windows(2).all(|w| w[0] <= w[1]));
            }
        }

        #[test]
        fn promote_matches_naive_definition(
            entries in prop::collection::vec(arb_entry(), 1..6),
            j in 1u32..60,
        ) {
            let l = RankList::new(entries.clone()).unwrap();
            let mut all = entries.clone();
            all.push(Entry::Finite(j));
            all.sort();
            let up = all[1..].to_vec();
            let down = all[..all.len() - 1].to_vec();
            let (p, d) = (l.promote(j), l.demote(j));
            prop_assert_eq!(p.entries(), &up[..]);
            prop_assert_eq!(d.entries(), &down[..]);
        }
    }
}
