//! Nonempty subsets of a finite carrier, stored as bit masks.
//!
//! Multioperations are valued in `P*(A) = P(A) \ {∅}`, so the empty set is
//! rejected everywhere a [`Subset`] is constructed. Carriers are capped at
//! [`MAX_CARRIER`] elements, which keeps every subset in one machine word.

use serde::Serialize;
use std::fmt;

/// Carrier size cap. Every built-in structure is far below this.
pub const MAX_CARRIER: usize = 64;

/// Index of a carrier element (canonical integers `0..n`).
pub type Elem = usize;

/// A nonempty subset of a carrier of size `n`, bit-indexed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Subset {
    bits: u64,
    n: u8,
}

impl Subset {
    /// Singleton `{e}`.
    pub fn singleton(n: usize, e: Elem) -> Subset {
        assert!(n <= MAX_CARRIER && e < n, "element {e} out of carrier 0..{n}");
        Subset { bits: 1 << e, n: n as u8 }
    }

    /// Builds a subset from listed elements. Fails on an empty list.
    pub fn from_elems(n: usize, elems: &[Elem]) -> Option<Subset> {
        if elems.is_empty() {
            return None;
        }
        let mut bits = 0u64;
        for &e in elems {
            assert!(e < n, "element {e} out of carrier 0..{n}");
            bits |= 1 << e;
        }
        Some(Subset { bits, n: n as u8 })
    }

    /// The whole carrier.
    pub fn full(n: usize) -> Subset {
        assert!(n > 0 && n <= MAX_CARRIER);
        Subset { bits: u64::MAX >> (64 - n), n: n as u8 }
    }

    /// Builds from a raw mask; `None` when the mask is empty.
    pub fn from_bits(n: usize, bits: u64) -> Option<Subset> {
        assert!(n <= MAX_CARRIER);
        let masked = bits & (u64::MAX >> (64 - n));
        if masked == 0 {
            None
        } else {
            Some(Subset { bits: masked, n: n as u8 })
        }
    }

    pub fn carrier_size(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, e: Elem) -> bool {
        e < self.n as usize && self.bits & (1 << e) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_singleton(&self) -> bool {
        self.len() == 1
    }

    /// The unique element of a singleton.
    pub fn the_element(&self) -> Option<Elem> {
        if self.is_singleton() {
            Some(self.bits.trailing_zeros() as usize)
        } else {
            None
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.bits & !other.bits == 0
    }

    pub fn intersects(&self, other: &Subset) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.bits & other.bits != 0
    }

    /// Union; always nonempty because both sides are.
    pub fn union(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset { bits: self.bits | other.bits, n: self.n }
    }

    /// Elements in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        let n = self.n as usize;
        let bits = self.bits;
        (0..n).filter(move |e| bits & (1 << e) != 0)
    }

    /// Ascending element list, for reports and serialization.
    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_subset_is_rejected() {
        assert!(Subset::from_elems(4, &[]).is_none());
        assert!(Subset::from_bits(4, 0).is_none());
    }

    #[test]
    fn singleton_and_membership() {
        let s = Subset::singleton(3, 2);
        assert!(s.contains(2));
        assert!(!s.contains(0));
        assert_eq!(s.the_element(), Some(2));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn union_and_order() {
        let a = Subset::singleton(5, 4);
        let b = Subset::singleton(5, 1);
        let u = a.union(&b);
        assert_eq!(u.to_vec(), vec![1, 4]);
        assert!(a.is_subset_of(&u));
        assert!(u.intersects(&b));
    }

    #[test]
    fn full_carrier() {
        assert_eq!(Subset::full(3).to_vec(), vec![0, 1, 2]);
    }
}
