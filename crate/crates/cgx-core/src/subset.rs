//! Subsets of a ground set as 64-bit masks. Bit `i` is ground element `i`.

/// A subset of a ground set with at most 64 elements.
///
/// Ordering is by mask value, which is the tie-break order used everywhere a
/// deterministic "smallest" subset witness is reported.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full subset on `n` elements. `n` must be at most 64.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= 64);
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Subset {
        let mut bits = 0u64;
        for i in iter {
            bits |= 1u64 << i;
        }
        Subset(bits)
    }

    pub fn from_bits(bits: u64) -> Subset {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[must_use]
    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1u64 << i)
    }

    #[must_use]
    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersect(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Element indices in ascending order.
    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    /// Smallest element index, if any.
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest element index, if any.
    pub fn max_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl core::fmt::Debug for Subset {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s = Subset::from_indices([0, 2, 5]);
        assert!(s.contains(0) && s.contains(2) && s.contains(5));
        assert!(!s.contains(1));
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().collect::<std::vec::Vec<_>>(), [0, 2, 5]);
        assert_eq!(s.min_element(), Some(0));
        assert_eq!(s.max_element(), Some(5));
        assert!(Subset::EMPTY.is_subset_of(s));
        assert!(s.is_subset_of(Subset::full(6)));
        assert!(!Subset::full(6).is_subset_of(s));
        assert_eq!(s.without(2), Subset::from_indices([0, 5]));
        assert_eq!(s.with(1).len(), 4);
    }

    #[test]
    fn full_widths() {
        assert_eq!(Subset::full(0), Subset::EMPTY);
        assert_eq!(Subset::full(1).bits(), 1);
        assert_eq!(Subset::full(64).bits(), u64::MAX);
    }
}
