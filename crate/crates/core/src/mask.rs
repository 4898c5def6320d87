//! Subsets of a ground set `{0, .., n-1}` packed into a machine word.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 20;

/// A subset of the ground set; element `i` is present iff bit `i` is set.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// The full ground set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        SubsetMask(((1u64 << n) - 1) as u32)
    }

    #[inline]
    pub fn singleton(e: usize) -> Self {
        SubsetMask(1 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements.into_iter().fold(Self::EMPTY, |m, e| m.with(e))
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn with(self, e: usize) -> Self {
        SubsetMask(self.0 | 1 << e)
    }

    #[inline]
    pub fn without(self, e: usize) -> Self {
        SubsetMask(self.0 & !(1 << e))
    }

    #[inline]
    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset_of(self, other: SubsetMask) -> bool {
        self != other && self.is_subset_of(other)
    }

    #[inline]
    pub fn is_disjoint(self, other: SubsetMask) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement relative to `{0, .., n-1}`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0 & Self::full(n).0)
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }
}

/// Iterator over the elements of a mask, smallest first.
#[derive(Clone)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

/// Iterator over all submasks of a universe in increasing numeric order.
#[derive(Clone)]
pub struct Subsets {
    universe: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.next?;
        self.next = if cur == self.universe {
            None
        } else {
            // next submask in increasing order
            Some((cur | !self.universe).wrapping_add(1) & self.universe)
        };
        Some(SubsetMask(cur))
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitOrAssign for SubsetMask {
    fn bitor_assign(&mut self, rhs: SubsetMask) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & rhs.0)
    }
}

impl BitAndAssign for SubsetMask {
    fn bitand_assign(&mut self, rhs: SubsetMask) {
        self.0 &= rhs.0;
    }
}

impl BitXor for SubsetMask {
    type Output = SubsetMask;
    fn bitxor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 ^ rhs.0)
    }
}

impl Sub for SubsetMask {
    type Output = SubsetMask;
    fn sub(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !rhs.0)
    }
}

impl SubAssign for SubsetMask {
    fn sub_assign(&mut self, rhs: SubsetMask) {
        self.0 &= !rhs.0;
    }
}

impl FromIterator<usize> for SubsetMask {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        SubsetMask::from_elements(iter)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for SubsetMask {
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

/// All `k`-subsets of `{0, .., n-1}` in lexicographic order of their sorted index tuples.
pub fn k_subsets_lex(n: usize, k: usize) -> Vec<SubsetMask> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut tuple: Vec<usize> = (0..k).collect();
    loop {
        out.push(tuple.iter().copied().collect());
        let Some(i) = (0..k).rev().find(|&i| tuple[i] < n - k + i) else {
            return out;
        };
        tuple[i] += 1;
        for j in i + 1..k {
            tuple[j] = tuple[j - 1] + 1;
        }
    }
}

/// All `k`-subsets of `{0, .., n-1}` in reverse-lexicographic (colex) order.
pub fn k_subsets_revlex(n: usize, k: usize) -> Vec<SubsetMask> {
    // colex order coincides with increasing numeric mask order for fixed cardinality
    let mut out: Vec<SubsetMask> = k_subsets_lex(n, k);
    out.sort();
    out
}
