//! Fixed-universe vertex sets backed by 64-bit words.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A subset of `0..universe`.
///
/// Ordering is numeric: the set is read as the integer `sum 2^v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(universe: usize) -> usize {
    universe.div_ceil(64)
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; word_count(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = VertexSet {
            universe,
            words: vec![!0; word_count(universe)],
        };
        s.trim();
        s
    }

    /// Builds a set from ids; panics on an id outside the universe.
    pub fn from_slice(universe: usize, ids: &[usize]) -> Self {
        let mut s = Self::new(universe);
        for &v in ids {
            s.insert(v);
        }
        s
    }

    /// Like [`from_slice`](Self::from_slice) but reports the first bad id.
    pub fn try_from_slice(universe: usize, ids: &[usize]) -> Result<Self, usize> {
        let mut s = Self::new(universe);
        for &v in ids {
            if v >= universe {
                return Err(v);
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn from_u128(universe: usize, bits: u128) -> Self {
        assert!(universe <= 128);
        let mut s = Self::new(universe);
        if !s.words.is_empty() {
            s.words[0] = bits as u64;
        }
        if s.words.len() > 1 {
            s.words[1] = (bits >> 64) as u64;
        }
        s.trim();
        s
    }

    pub fn to_u128(&self) -> u128 {
        assert!(self.universe <= 128);
        let lo = self.words.first().copied().unwrap_or(0) as u128;
        let hi = self.words.get(1).copied().unwrap_or(0) as u128;
        lo | (hi << 64)
    }

    fn trim(&mut self) {
        let rem = self.universe % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Returns true if `v` was not already present.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let w = &mut self.words[v / 64];
        let bit = 1u64 << (v % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let w = &mut self.words[v / 64];
        let bit = 1u64 << (v % 64);
        let had = *w & bit != 0;
        *w &= !bit;
        had
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.universe)
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> Self {
        Self::full(self.universe).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe.cmp(&other.universe).then_with(|| {
            for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
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

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + tz);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
