//! Finite subsets of a ground set, encoded as 64-bit masks.
//!
//! Bit `i` records membership of element `i`. Numeric order of the mask is
//! the canonical order used for every enumeration and for "least
//! representative" choices.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{BitAnd, BitOr, BitXor, Sub};

use serde::de::{Error as _, SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Number of distinct elements a [`FinSet`] can hold.
pub const CAPACITY: u32 = 64;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FinSet(u64);

impl FinSet {
    pub const EMPTY: FinSet = FinSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        FinSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(x: u32) -> Self {
        assert!(x < CAPACITY, "element {x} out of range");
        FinSet(1 << x)
    }

    /// `{lo, lo+1, .., hi-1}`.
    pub fn range(lo: u32, hi: u32) -> Self {
        assert!(hi <= CAPACITY, "range end {hi} out of range");
        if lo >= hi {
            return FinSet::EMPTY;
        }
        let upper = if hi == 64 { u64::MAX } else { (1u64 << hi) - 1 };
        let lower = (1u64 << lo) - 1;
        FinSet(upper & !lower)
    }

    /// The initial segment `[0, n]` (inclusive), the interval radius used on the naturals.
    pub fn interval_to(n: u32) -> Self {
        FinSet::range(0, n + 1)
    }

    pub fn from_elements<I: IntoIterator<Item = u32>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(FinSet::EMPTY, |acc, x| acc.with(x))
    }

    pub fn contains(self, x: u32) -> bool {
        x < CAPACITY && self.0 & (1 << x) != 0
    }

    #[must_use]
    pub fn with(self, x: u32) -> Self {
        self | FinSet::singleton(x)
    }

    #[must_use]
    pub fn without(self, x: u32) -> Self {
        if x >= CAPACITY {
            return self;
        }
        FinSet(self.0 & !(1 << x))
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: FinSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: FinSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(self, other: FinSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: FinSet) -> Self {
        self | other
    }

    pub fn intersection(self, other: FinSet) -> Self {
        self & other
    }

    pub fn difference(self, other: FinSet) -> Self {
        self - other
    }

    pub fn symmetric_difference(self, other: FinSet) -> Self {
        self ^ other
    }

    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros())
    }

    /// Elements in ascending order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All subsets of `self` in ascending numeric order, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            current: 0,
            mask: self.0,
            done: false,
        }
    }

    /// Image of the set under an element map.
    pub fn map<F: FnMut(u32) -> u32>(self, mut f: F) -> Self {
        self.iter().fold(FinSet::EMPTY, |acc, x| acc.with(f(x)))
    }
}

impl BitOr for FinSet {
    type Output = FinSet;
    fn bitor(self, rhs: FinSet) -> FinSet {
        FinSet(self.0 | rhs.0)
    }
}

impl BitAnd for FinSet {
    type Output = FinSet;
    fn bitand(self, rhs: FinSet) -> FinSet {
        FinSet(self.0 & rhs.0)
    }
}

impl BitXor for FinSet {
    type Output = FinSet;
    fn bitxor(self, rhs: FinSet) -> FinSet {
        FinSet(self.0 ^ rhs.0)
    }
}

impl Sub for FinSet {
    type Output = FinSet;
    fn sub(self, rhs: FinSet) -> FinSet {
        FinSet(self.0 & !rhs.0)
    }
}

impl FromIterator<u32> for FinSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        FinSet::from_elements(iter)
    }
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Subset enumeration by the carry-ripple trick: `next = (cur - mask) & mask`.
pub struct Subsets {
    current: u64,
    mask: u64,
    done: bool,
}

impl Iterator for Subsets {
    type Item = FinSet;

    fn next(&mut self) -> Option<FinSet> {
        if self.done {
            return None;
        }
        let out = self.current;
        self.current = self.current.wrapping_sub(self.mask) & self.mask;
        self.done = self.current == 0;
        Some(FinSet(out))
    }
}

impl Serialize for FinSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for FinSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct SortedList;

        impl<'de> Visitor<'de> for SortedList {
            type Value = FinSet;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a strictly ascending list of elements below 64")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<FinSet, A::Error> {
                let mut set = FinSet::EMPTY;
                let mut last: Option<u32> = None;
                while let Some(x) = seq.next_element::<u32>()? {
                    if x >= CAPACITY {
                        return Err(A::Error::custom(format_args!(
                            "element {x} exceeds the supported range 0..{CAPACITY}"
                        )));
                    }
                    if last.is_some_and(|prev| prev >= x) {
                        return Err(A::Error::custom(
                            "element lists must be strictly ascending without duplicates",
                        ));
                    }
                    last = Some(x);
                    set = set.with(x);
                }
                Ok(set)
            }
        }

        deserializer.deserialize_seq(SortedList)
    }
}
