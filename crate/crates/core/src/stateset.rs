use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitOr};
use std::sync::Arc;

use crate::{Error, Result};

/// Upper bound on the number of states of any universe.
pub const MAX_STATES: usize = 64;

/// Upper bound for set functions stored as dense `2^n` tables.
pub const MAX_DENSE_STATES: usize = 20;

/// A subset of a universe, encoded as a characteristic bitmask over the
/// universe's state order. Bit `i` is set iff the `i`-th state is a member.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet(u64);

impl StateSet {
    pub const EMPTY: StateSet = StateSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        StateSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Index into a dense table.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            StateSet(u64::MAX)
        } else {
            StateSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        StateSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(StateSet::EMPTY, |acc, i| acc.with(i))
    }

    pub fn with(self, i: usize) -> Self {
        StateSet(self.0 | (1u64 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: StateSet) -> Self {
        StateSet(self.0 | other.0)
    }

    pub fn intersection(self, other: StateSet) -> Self {
        StateSet(self.0 & other.0)
    }

    pub fn difference(self, other: StateSet) -> Self {
        StateSet(self.0 & !other.0)
    }

    /// Complement relative to a universe of `n` states.
    pub fn complement(self, n: usize) -> Self {
        StateSet::full(n).difference(self)
    }

    pub fn is_subset(self, other: StateSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: StateSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Member indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    /// Every subset of `self`, the empty set included.
    pub fn subsets(self) -> impl Iterator<Item = StateSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == full {
                None
            } else {
                Some((current.wrapping_sub(full)) & full)
            };
            Some(StateSet(current))
        })
    }
}

impl BitAnd for StateSet {
    type Output = StateSet;
    fn bitand(self, rhs: StateSet) -> StateSet {
        self.intersection(rhs)
    }
}

impl BitOr for StateSet {
    type Output = StateSet;
    fn bitor(self, rhs: StateSet) -> StateSet {
        self.union(rhs)
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An ordered, nonempty sequence of distinct state identifiers.
#[derive(Clone)]
pub struct Universe {
    states: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(states: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let states: Vec<String> = states.into_iter().map(Into::into).collect();
        if states.is_empty() {
            return Err(Error::InvalidUniverse("state set is empty".into()));
        }
        if states.len() > MAX_STATES {
            return Err(Error::TooManyStates {
                got: states.len(),
                limit: MAX_STATES,
            });
        }
        let mut index = HashMap::with_capacity(states.len());
        for (i, s) in states.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::InvalidUniverse("empty state id".into()));
            }
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::InvalidUniverse(format!("duplicate state `{s}`")));
            }
        }
        Ok(Arc::new(Universe { states, index }))
    }

    /// States named `s1, .., sn`.
    pub fn numbered(n: usize) -> Result<Arc<Self>> {
        Universe::new((1..=n).map(|i| format!("s{i}")))
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn full(&self) -> StateSet {
        StateSet::full(self.len())
    }

    pub fn complement(&self, set: StateSet) -> StateSet {
        set.complement(self.len())
    }

    pub fn contains_set(&self, set: StateSet) -> bool {
        set.is_subset(self.full())
    }

    pub fn set_of<I, S>(&self, ids: I) -> Result<StateSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        ids.into_iter().try_fold(StateSet::EMPTY, |acc, id| {
            let id = id.as_ref();
            self.position(id)
                .map(|i| acc.with(i))
                .ok_or_else(|| Error::UnknownState(id.to_string()))
        })
    }

    /// Member ids of `set`, in universe order.
    pub fn ids(&self, set: StateSet) -> Vec<&str> {
        set.iter()
            .filter_map(|i| self.states.get(i).map(String::as_str))
            .collect()
    }

    /// Number of entries of a dense table over this universe, or an error if
    /// the universe is too large for dense storage.
    pub fn dense_len(&self) -> Result<usize> {
        if self.len() > MAX_DENSE_STATES {
            return Err(Error::TooManyStates {
                got: self.len(),
                limit: MAX_DENSE_STATES,
            });
        }
        Ok(1usize << self.len())
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.states == other.states
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Universe").field(&self.states).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_all() {
        let set = StateSet::from_indices([0, 2, 5]);
        let subs: Vec<_> = set.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset(set)));
        assert_eq!(subs[0], StateSet::EMPTY);
        assert_eq!(*subs.last().unwrap(), set);
    }

    #[test]
    fn complement_and_iter() {
        let set = StateSet::from_indices([1]);
        assert_eq!(set.complement(3), StateSet::from_indices([0, 2]));
        assert_eq!(StateSet::full(3).iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(StateSet::full(64).len(), 64);
    }

    #[test]
    fn universe_validation() {
        assert!(matches!(
            Universe::new(Vec::<String>::new()),
            Err(Error::InvalidUniverse(_))
        ));
        assert!(matches!(
            Universe::new(["a", "a"]),
            Err(Error::InvalidUniverse(_))
        ));
        let u = Universe::new(["a", "b", "c"]).unwrap();
        assert_eq!(
            u.set_of(["c", "a"]).unwrap(),
            StateSet::from_indices([0, 2])
        );
        assert_eq!(u.set_of(["z"]), Err(Error::UnknownState("z".into())));
        assert_eq!(u.ids(StateSet::from_indices([2, 1])), vec!["b", "c"]);
    }

    #[test]
    fn dense_cap() {
        assert_eq!(Universe::numbered(3).unwrap().dense_len(), Ok(8));
        assert!(matches!(
            Universe::numbered(21).unwrap().dense_len(),
            Err(Error::TooManyStates { got: 21, limit: 20 })
        ));
    }
}
