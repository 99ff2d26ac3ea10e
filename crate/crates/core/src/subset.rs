use fixedbitset::FixedBitSet;

use crate::algebra::Element;
use crate::error::{Error, Result};

/// A subset of the carrier, stored as a membership mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: FixedBitSet,
}

impl Subset {
    pub fn empty(size: usize) -> Self {
        Subset {
            bits: FixedBitSet::with_capacity(size),
        }
    }

    pub fn full(size: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(size);
        bits.insert_range(..);
        Subset { bits }
    }

    pub fn from_elements<I: IntoIterator<Item = Element>>(
        size: usize,
        elements: I,
    ) -> Result<Self> {
        let mut s = Subset::empty(size);
        for e in elements {
            if e >= size {
                return Err(Error::ElementOutOfRange { index: e, size });
            }
            s.bits.insert(e);
        }
        Ok(s)
    }

    /// Builds the subset whose members are the set bits of `mask`.
    ///
    /// Only meaningful for carriers of at most 64 elements; higher bits are ignored.
    pub fn from_mask(size: usize, mask: u64) -> Self {
        let mut s = Subset::empty(size);
        for e in 0..size.min(64) {
            if mask >> e & 1 == 1 {
                s.bits.insert(e);
            }
        }
        s
    }

    pub fn from_predicate(size: usize, mut pred: impl FnMut(Element) -> bool) -> Self {
        let mut s = Subset::empty(size);
        for e in 0..size {
            if pred(e) {
                s.bits.insert(e);
            }
        }
        s
    }

    /// Inverse of [`Subset::from_mask`].
    pub fn mask(&self) -> u64 {
        self.bits
            .ones()
            .filter(|&e| e < 64)
            .fold(0u64, |acc, e| acc | 1 << e)
    }

    /// Size of the carrier this subset lives in.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn contains(&self, e: Element) -> bool {
        self.bits.contains(e)
    }

    pub fn insert(&mut self, e: Element) {
        self.bits.insert(e);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.bits.ones()
    }

    pub fn complement(&self) -> Subset {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Subset { bits }
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset {
            bits: &self.bits & &other.bits,
        }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset {
            bits: &self.bits | &other.bits,
        }
    }

    pub fn first(&self) -> Option<Element> {
        self.bits.ones().next()
    }

    /// Every subset of a carrier of `size` elements, ordered by mask.
    pub fn all(size: usize) -> impl Iterator<Item = Subset> {
        assert!(
            size < 64,
            "subset sweep limited to carriers below 64 elements"
        );
        (0..1u64 << size).map(move |mask| Subset::from_mask(size, mask))
    }
}

impl std::fmt::Debug for Subset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
