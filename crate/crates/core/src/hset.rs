//! Subsets of a finite carrier.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Index of an element in a finite carrier.
pub type Elem = usize;

/// Largest carrier an [`HSet`] can address.
pub const MAX_CARRIER: usize = 128;

/// A subset of a carrier of at most [`MAX_CARRIER`] elements.
///
/// Stored as a bitmask, so iteration is always in ascending index order and
/// duplicates cannot occur.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HSet(u128);

impl HSet {
    pub const EMPTY: HSet = HSet(0);

    pub fn singleton(x: Elem) -> Self {
        assert!(x < MAX_CARRIER, "element {x} beyond HSet capacity");
        HSet(1u128 << x)
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_CARRIER);
        if n == MAX_CARRIER {
            HSet(u128::MAX)
        } else {
            HSet((1u128 << n) - 1)
        }
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn from_bits(bits: u128) -> Self {
        HSet(bits)
    }

    pub fn contains(self, x: Elem) -> bool {
        x < MAX_CARRIER && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: Elem) {
        *self = self.with(x);
    }

    pub fn remove(&mut self, x: Elem) {
        if x < MAX_CARRIER {
            self.0 &= !(1u128 << x);
        }
    }

    #[must_use]
    pub fn with(self, x: Elem) -> Self {
        self.union(HSet::singleton(x))
    }

    #[must_use]
    pub fn without(self, x: Elem) -> Self {
        let mut s = self;
        s.remove(x);
        s
    }

    pub fn union(self, other: HSet) -> Self {
        HSet(self.0 | other.0)
    }

    pub fn intersection(self, other: HSet) -> Self {
        HSet(self.0 & other.0)
    }

    pub fn difference(self, other: HSet) -> Self {
        HSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: HSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: HSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<Elem> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest index present plus one; zero for the empty set.
    pub fn span(self) -> usize {
        MAX_CARRIER - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<Elem> {
        self.iter().collect()
    }

    /// Image of the set under `f`.
    pub fn map(self, mut f: impl FnMut(Elem) -> Elem) -> HSet {
        self.iter().map(&mut f).collect()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for HSet {
    type Item = Elem;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<Elem> for HSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        iter.into_iter().fold(HSet::EMPTY, HSet::with)
    }
}

impl<const N: usize> From<[Elem; N]> for HSet {
    fn from(xs: [Elem; N]) -> Self {
        xs.into_iter().collect()
    }
}

impl fmt::Debug for HSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for HSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for HSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let xs = Vec::<Elem>::deserialize(d)?;
        if let Some(&bad) = xs.iter().find(|&&x| x >= MAX_CARRIER) {
            return Err(serde::de::Error::custom(format!(
                "element {bad} exceeds carrier capacity {MAX_CARRIER}"
            )));
        }
        Ok(xs.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn iterates_in_ascending_order() {
        let s: HSet = [5, 1, 127, 0].into();
        assert_eq!(s.to_vec(), vec![0, 1, 5, 127]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.span(), 128);
    }

    #[test]
    fn full_set_edges() {
        assert!(HSet::full(0).is_empty());
        assert_eq!(HSet::full(128).len(), 128);
        assert_eq!(HSet::full(3).to_vec(), vec![0, 1, 2]);
    }

    proptest! {
        #[test]
        fn bitmask_matches_btreeset(xs in proptest::collection::vec(0usize..128, 0..20),
                                    ys in proptest::collection::vec(0usize..128, 0..20)) {
            use std::collections::BTreeSet;
            let a: HSet = xs.iter().copied().collect();
            let b: HSet = ys.iter().copied().collect();
            let sa: BTreeSet<_> = xs.into_iter().collect();
            let sb: BTreeSet<_> = ys.into_iter().collect();
            prop_assert_eq!(a.union(b).to_vec(), sa.union(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.intersection(b).to_vec(), sa.intersection(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.is_subset(b), sa.is_subset(&sb));
            let json = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<HSet>(&json).unwrap(), a);
        }
    }
}
