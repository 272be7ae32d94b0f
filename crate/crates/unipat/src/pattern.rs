//! Dense bitsets of positive-root indices.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A set of positive-root indices over a universe of fixed size.
///
/// Roots are stored as bits; systems with at most 128 positive roots
/// (every exceptional type) never allocate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    universe: usize,
    words: SmallVec<[u64; 2]>,
}

impl Pattern {
    pub fn empty(universe: usize) -> Self {
        let n = universe.div_ceil(64);
        Pattern {
            universe,
            words: SmallVec::from_elem(0, n),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut p = Self::empty(universe);
        for i in 0..universe {
            p.insert(i);
        }
        p
    }

    pub fn singleton(universe: usize, i: usize) -> Self {
        let mut p = Self::empty(universe);
        p.insert(i);
        p
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, it: I) -> Self {
        let mut p = Self::empty(universe);
        for i in it {
            p.insert(i);
        }
        p
    }

    /// Size of the ambient index set (the number of positive roots).
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Inserts `i`, returning true when it was not present before.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.universe, "root index {i} out of range");
        let w = &mut self.words[i / 64];
        let bit = 1u64 << (i % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, i: usize) -> bool {
        if i >= self.universe {
            return false;
        }
        let w = &mut self.words[i / 64];
        let bit = 1u64 << (i % 64);
        let had = *w & bit != 0;
        *w &= !bit;
        had
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn zip_with(&self, other: &Pattern, f: impl Fn(u64, u64) -> u64) -> Pattern {
        debug_assert_eq!(self.universe, other.universe);
        Pattern {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Pattern) -> Pattern {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Pattern) -> Pattern {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Pattern) -> Pattern {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Pattern {
        Pattern::full(self.universe).difference(self)
    }

    pub fn union_with(&mut self, other: &Pattern) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Pattern) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Pattern) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &Pattern) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Pattern) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(&a, &b)| a & b == 0)
    }

    /// Compares the sorted member lists lexicographically.
    pub fn lex_cmp(&self, other: &Pattern) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// Member indices shifted to the 1-based labels used in tables.
    pub fn labels(&self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a Pattern {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
