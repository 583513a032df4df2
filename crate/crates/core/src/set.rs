//! Compact sets of argument indices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

const WORD: usize = 64;

/// A set of argument indices backed by a bit mask.
///
/// The representation is canonical (no trailing zero words), so derived
/// equality and hashing are extensional. Ordering compares the sorted
/// member lists lexicographically.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ArgumentSet {
    words: Vec<u64>,
}

impl ArgumentSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n / WORD];
        if !n.is_multiple_of(WORD) {
            words.push((1u64 << (n % WORD)) - 1);
        }
        Self { words }
    }

    pub fn singleton(a: usize) -> Self {
        let mut s = Self::new();
        s.insert(a);
        s
    }

    pub fn insert(&mut self, a: usize) -> bool {
        let (w, b) = (a / WORD, a % WORD);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, a: usize) -> bool {
        let (w, b) = (a / WORD, a % WORD);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.trim();
        present
    }

    pub fn contains(&self, a: usize) -> bool {
        let (w, b) = (a / WORD, a % WORD);
        self.words.get(w).is_some_and(|x| x & (1 << b) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Largest member plus one, or zero for the empty set.
    pub fn bound(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(w) => (self.words.len() - 1) * WORD + (WORD - w.leading_zeros() as usize),
        }
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.words.truncate(other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        self.trim();
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out.trim();
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len()
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * WORD + bit);
            }
            self.word += 1;
            self.current = *self.words.get(self.word)?;
        }
    }
}

impl<'a> IntoIterator for &'a ArgumentSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl FromIterator<usize> for ArgumentSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl Extend<usize> for ArgumentSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for a in iter {
            self.insert(a);
        }
    }
}

impl Ord for ArgumentSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ArgumentSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ArgumentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ArgumentSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ArgumentSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Vec::<usize>::deserialize(deserializer)?
            .into_iter()
            .collect())
    }
}
