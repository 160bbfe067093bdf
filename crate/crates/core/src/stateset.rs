use std::fmt;

/// Largest automaton the subset-based constructions accept.
pub const MAX_SET_STATES: usize = 64;

/// A set of automaton states packed into a single machine word.
///
/// Only automata with at most [`MAX_SET_STATES`] states can be tracked this
/// way; that covers every construction in this crate, whose state spaces are
/// exponential long before that limit matters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StateSet(u64);

impl StateSet {
    pub const fn empty() -> Self {
        StateSet(0)
    }

    pub fn singleton(q: usize) -> Self {
        debug_assert!(q < MAX_SET_STATES);
        StateSet(1 << q)
    }

    /// All states `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_SET_STATES);
        if n == MAX_SET_STATES {
            StateSet(u64::MAX)
        } else {
            StateSet((1u64 << n) - 1)
        }
    }

    pub const fn from_bits(bits: u64) -> Self {
        StateSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, q: usize) {
        debug_assert!(q < MAX_SET_STATES);
        self.0 |= 1 << q;
    }

    pub fn remove(&mut self, q: usize) {
        self.0 &= !(1 << q);
    }

    pub fn contains(self, q: usize) -> bool {
        q < MAX_SET_STATES && self.0 & (1 << q) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        StateSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        StateSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        StateSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// States in ascending order.
    pub fn iter(self) -> StateSetIter {
        StateSetIter(self.0)
    }
}

impl FromIterator<usize> for StateSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = StateSet::empty();
        for q in iter {
            s.insert(q);
        }
        s
    }
}

impl IntoIterator for StateSet {
    type Item = usize;
    type IntoIter = StateSetIter;

    fn into_iter(self) -> StateSetIter {
        self.iter()
    }
}

pub struct StateSetIter(u64);

impl Iterator for StateSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let q = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(q)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for StateSetIter {}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, q) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a: StateSet = [0, 2, 5].into_iter().collect();
        let b: StateSet = [2, 3].into_iter().collect();
        assert_eq!(a.len(), 3);
        assert!(a.contains(5) && !a.contains(1));
        assert_eq!(a.union(b).iter().collect::<Vec<_>>(), vec![0, 2, 3, 5]);
        assert_eq!(a.intersection(b), StateSet::singleton(2));
        assert_eq!(a.difference(b).to_string(), "{0,5}");
        assert!(StateSet::singleton(2).is_subset(b));
        assert_eq!(StateSet::full(64).len(), 64);
        assert_eq!(StateSet::empty().to_string(), "{}");
    }
}
