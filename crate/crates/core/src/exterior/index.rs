use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 16;

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(Error::DimOutOfRange(dim))
    }
}

/// A strictly increasing subset of `{1, …, d}` naming a basis blade.
///
/// Stored as a bitmask (bit `i-1` set for index `i`). Ordered grade-major,
/// then lexicographically on the increasing index list.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultiIndex(u32);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);

    /// From a strictly increasing list of 1-based indices.
    pub fn new(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        let mut last = 0usize;
        for &i in indices {
            if !(1..=MAX_DIM).contains(&i) {
                return Err(Error::IndexOutOfRange { index: i, dim: MAX_DIM });
            }
            if i <= last {
                return Err(Error::NotIncreasing(indices.to_vec()));
            }
            last = i;
            bits |= 1 << (i - 1);
        }
        Ok(MultiIndex(bits))
    }

    /// Sorts an arbitrary index sequence. Returns `None` when an index
    /// repeats, otherwise the sorted index and whether the sorting
    /// permutation is odd.
    pub fn from_sequence(indices: &[usize]) -> Result<Option<(Self, bool)>> {
        let mut bits = 0u32;
        let mut odd = false;
        for (k, &i) in indices.iter().enumerate() {
            if !(1..=MAX_DIM).contains(&i) {
                return Err(Error::IndexOutOfRange { index: i, dim: MAX_DIM });
            }
            if bits & (1 << (i - 1)) != 0 {
                return Ok(None);
            }
            bits |= 1 << (i - 1);
            // inversions contributed by earlier, larger indices
            let larger = indices[..k].iter().filter(|&&j| j > i).count();
            odd ^= larger % 2 == 1;
        }
        Ok(Some((MultiIndex(bits), odd)))
    }

    /// `{1, …, d}`.
    pub fn full(dim: usize) -> Self {
        MultiIndex(((1u64 << dim) - 1) as u32)
    }

    pub fn from_bits(bits: u32) -> Self {
        MultiIndex(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=32).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    /// Largest index, 0 for the empty set.
    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// 1-based indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.grade());
        let mut b = self.0;
        while b != 0 {
            let t = b.trailing_zeros() as usize;
            out.push(t + 1);
            b &= b - 1;
        }
        out
    }

    /// Complement in `{1, …, d}`.
    pub fn complement(self, dim: usize) -> Self {
        MultiIndex(Self::full(dim).0 & !self.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        MultiIndex(self.0 | other.0)
    }

    /// Sign of `e_self ∧ e_other`: `None` when they overlap, otherwise
    /// whether the merge permutation is odd.
    pub fn wedge_sign(self, other: Self) -> Option<bool> {
        if !self.is_disjoint(other) {
            return None;
        }
        // count pairs (a in self, b in other) with a > b
        let mut count = 0u32;
        let mut b = other.0;
        while b != 0 {
            let t = b.trailing_zeros();
            count += (self.0 >> t).count_ones();
            b &= b - 1;
        }
        Some(count % 2 == 1)
    }

    /// Every subset of `{1, …, dim}` with the given grade, in canonical order.
    pub fn all_of_grade(dim: usize, grade: usize) -> Vec<MultiIndex> {
        let mut out: Vec<MultiIndex> = (0u32..(1u32 << dim))
            .filter(|b| b.count_ones() as usize == grade)
            .map(MultiIndex)
            .collect();
        out.sort();
        out
    }

    /// Every subset of `{1, …, dim}`, in canonical order.
    pub fn all(dim: usize) -> Vec<MultiIndex> {
        let mut out: Vec<MultiIndex> = (0u32..(1u32 << dim)).map(MultiIndex).collect();
        out.sort();
        out
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.indices().cmp(&other.indices()))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_grade_major_then_lexicographic() {
        let all = MultiIndex::all(3);
        let printed: Vec<String> = all.iter().map(|m| m.to_string()).collect();
        assert_eq!(
            printed,
            ["{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"]
        );
    }

    #[test]
    fn wedge_signs() {
        let e = |v: &[usize]| MultiIndex::new(v).unwrap();
        assert_eq!(e(&[1]).wedge_sign(e(&[2])), Some(false));
        assert_eq!(e(&[2]).wedge_sign(e(&[1])), Some(true));
        assert_eq!(e(&[1, 3]).wedge_sign(e(&[2, 4])), Some(true));
        assert_eq!(e(&[2, 3]).wedge_sign(e(&[1])), Some(false));
        assert_eq!(e(&[1]).wedge_sign(e(&[1, 2])), None);
    }

    #[test]
    fn sequences_sort_with_sign() {
        let (m, odd) = MultiIndex::from_sequence(&[2, 1]).unwrap().unwrap();
        assert_eq!(m, MultiIndex::new(&[1, 2]).unwrap());
        assert!(odd);
        let (_, odd) = MultiIndex::from_sequence(&[3, 1, 2]).unwrap().unwrap();
        assert!(!odd);
        assert!(MultiIndex::from_sequence(&[1, 3, 1]).unwrap().is_none());
    }

    #[test]
    fn rejects_bad_lists() {
        assert!(MultiIndex::new(&[2, 1]).is_err());
        assert!(MultiIndex::new(&[1, 1]).is_err());
        assert!(MultiIndex::new(&[0]).is_err());
        assert!(MultiIndex::new(&[17]).is_err());
    }

    #[test]
    fn complement_and_full() {
        let m = MultiIndex::new(&[1, 3]).unwrap();
        assert_eq!(m.complement(4).indices(), vec![2, 4]);
        assert_eq!(MultiIndex::full(16).grade(), 16);
    }
}
