//! Vertex sets as growable bitsets.
//!
//! A [`VertexSet`] stores vertex ids as bits in 64-bit words. Sets over at
//! most 64 vertices stay inline (no heap allocation); larger universes spill
//! into a heap vector. The stored word vector never has trailing zero words,
//! so equality and hashing can work directly on the words.

use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

const BITS: usize = 64;

/// A set of vertex ids (`usize`), stored as a bitset.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 1]>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet { words: SmallVec::new() }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = SmallVec::new();
        if n > 0 {
            let nw = n.div_ceil(BITS);
            words.resize(nw, !0u64);
            let spare = nw * BITS - n;
            if spare > 0 {
                words[nw - 1] >>= spare;
            }
        }
        VertexSet { words }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: usize) {
        let w = v / BITS;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (v % BITS);
    }

    pub fn remove(&mut self, v: usize) {
        let w = v / BITS;
        if w < self.words.len() {
            self.words[w] &= !(1u64 << (v % BITS));
            self.trim();
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        let w = v / BITS;
        w < self.words.len() && self.words[w] & (1u64 << (v % BITS)) != 0
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn min_elem(&self) -> Option<usize> {
        self.words
            .iter()
            .position(|&w| w != 0)
            .map(|i| i * BITS + self.words[i].trailing_zeros() as usize)
    }

    pub fn max_elem(&self) -> Option<usize> {
        self.words
            .iter()
            .rposition(|&w| w != 0)
            .map(|i| i * BITS + (BITS - 1 - self.words[i].leading_zeros() as usize))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (i, w) in short.words.iter().enumerate() {
            words[i] |= w;
        }
        VertexSet { words }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let n = self.words.len().min(other.words.len());
        let mut words: SmallVec<[u64; 1]> =
            (0..n).map(|i| self.words[i] & other.words[i]).collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        VertexSet { words }
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut words = self.words.clone();
        for (i, w) in words.iter_mut().enumerate() {
            if i < other.words.len() {
                *w &= !other.words[i];
            }
        }
        let mut s = VertexSet { words };
        s.trim();
        s
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (i, w) in other.words.iter().enumerate() {
            self.words[i] |= w;
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let n = self.words.len().min(other.words.len());
        (0..n).all(|i| self.words[i] & other.words[i] == 0)
    }

    /// Ascending iterator over the elements.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * BITS + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.into_iter().collect()
    }
}

/// Canonical order: smaller sets first, ties by the ascending element
/// sequence. Every enumeration in this crate emits sets in this order.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
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
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// All subsets of `base` with at most `max_size` elements, in canonical
/// order (by size, then lexicographically by element sequence).
pub fn subsets_up_to(base: &VertexSet, max_size: usize) -> Vec<VertexSet> {
    let elems = base.to_vec();
    let mut out = vec![VertexSet::new()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 1..=max_size.min(elems.len()) {
        let mut next: Vec<Vec<usize>> = Vec::new();
        for prefix in &layer {
            let start = prefix.last().map_or(0, |&l| {
                elems.iter().position(|&e| e == l).unwrap() + 1
            });
            for &e in &elems[start..] {
                let mut ext = prefix.clone();
                ext.push(e);
                next.push(ext);
            }
        }
        out.extend(next.iter().map(|s| s.iter().copied().collect()));
        layer = next;
    }
    out
}
