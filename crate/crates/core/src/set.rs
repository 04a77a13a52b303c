//! Fixed-width vertex sets.
//!
//! Every graph in this crate has at most [`MAX_VERTICES`] vertices, so a
//! vertex subset fits in one `u128` and all set algebra is a handful of
//! word operations.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Sub, SubAssign};

pub const MAX_VERTICES: usize = 128;

/// A set of vertex ids in `0..128`, iterated in ascending order.
///
/// The `Ord` impl is the lexicographic order of the sorted id sequences, so
/// `{0, 5} < {1}` and a proper prefix sorts first.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n >= MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest element.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest element.
    #[inline]
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Elements strictly below `v`.
    #[inline]
    pub fn below(self, v: usize) -> Self {
        if v >= MAX_VERTICES {
            self
        } else {
            VertexSet(self.0 & ((1u128 << v) - 1))
        }
    }

    /// Elements strictly above `v`.
    #[inline]
    pub fn above(self, v: usize) -> Self {
        if v + 1 >= MAX_VERTICES {
            VertexSet(0)
        } else {
            VertexSet(self.0 & !((1u128 << (v + 1)) - 1))
        }
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All ids must be below [`MAX_VERTICES`].
    pub fn from_slice(vs: &[usize]) -> Self {
        vs.iter().copied().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let v = diff.trailing_zeros() as usize;
        // Both sequences agree on every element below v; the one holding v
        // continues with v, the other with something larger or nothing.
        let (has, lacks) = if self.contains(v) {
            (Ordering::Less, Ordering::Greater)
        } else {
            (Ordering::Greater, Ordering::Less)
        };
        let other_side = if self.contains(v) { *other } else { *self };
        if other_side.above(v).is_empty() {
            lacks
        } else {
            has
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

macro_rules! bitop {
    ($tr:ident, $f:ident, $op:tt, $atr:ident, $af:ident) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
        impl $atr for VertexSet {
            #[inline]
            fn $af(&mut self, rhs: VertexSet) {
                self.0 = self.0 $op rhs.0;
            }
        }
    };
}

bitop!(BitOr, bitor, |, BitOrAssign, bitor_assign);
bitop!(BitAnd, bitand, &, BitAndAssign, bitand_assign);

impl BitXor for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitxor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ rhs.0)
    }
}

/// Set difference.
impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

/// Calls `f` on every subset of `pool` of exactly `k` elements, in
/// lexicographic order, until it returns `true`. Returns whether it stopped
/// early.
pub fn for_each_subset_of_size(
    pool: VertexSet,
    k: usize,
    f: &mut dyn FnMut(VertexSet) -> bool,
) -> bool {
    fn rec(
        elems: &[usize],
        start: usize,
        k: usize,
        acc: VertexSet,
        f: &mut dyn FnMut(VertexSet) -> bool,
    ) -> bool {
        if k == 0 {
            return f(acc);
        }
        if elems.len() - start < k {
            return false;
        }
        for i in start..=elems.len() - k {
            if rec(elems, i + 1, k - 1, acc.with(elems[i]), f) {
                return true;
            }
        }
        false
    }
    let elems = pool.to_vec();
    if k > elems.len() {
        return false;
    }
    rec(&elems, 0, k, VertexSet::EMPTY, f)
}

/// Calls `f` on every subset of `pool` with at most `max` elements, by
/// increasing size, until it returns `true`.
pub fn for_each_subset_up_to(
    pool: VertexSet,
    max: usize,
    f: &mut dyn FnMut(VertexSet) -> bool,
) -> bool {
    (0..=max.min(pool.len())).any(|k| for_each_subset_of_size(pool, k, f))
}
