//! Bitset of edge indices.

use std::fmt;

/// A set of edge indices of one graph, stored as a growable bitset.
///
/// Indices refer to positions in [`SignedGraph::edges`](crate::SignedGraph::edges).
/// Iteration is always in increasing index order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, 1, .., m-1}`.
    pub fn full(m: usize) -> Self {
        let mut s = Self::new();
        for i in 0..m {
            s.insert(i);
        }
        s
    }

    /// Decode the low `m` bits of a mask.
    pub fn from_mask(mask: u64, m: usize) -> Self {
        debug_assert!(m <= 64);
        let keep = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let mut s = Self::new();
        if mask & keep != 0 {
            s.words.push(mask & keep);
        }
        s
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, i % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    pub fn remove(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, i % 64);
        if w >= self.words.len() {
            return false;
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        self.trim();
        had
    }

    pub fn contains(&self, i: usize) -> bool {
        let (w, b) = (i / 64, i % 64);
        w < self.words.len() && self.words[w] >> b & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut words = vec![0; self.words.len().max(other.words.len())];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.word(i) | other.word(i);
        }
        Self::trimmed(words)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let words = (0..self.words.len().min(other.words.len()))
            .map(|i| self.word(i) & other.word(i))
            .collect();
        Self::trimmed(words)
    }

    pub fn difference(&self, other: &Self) -> Self {
        let words = (0..self.words.len())
            .map(|i| self.word(i) & !other.word(i))
            .collect();
        Self::trimmed(words)
    }

    /// Set sum (symmetric difference).
    pub fn symmetric_difference(&self, other: &Self) -> Self {
        let mut words = vec![0; self.words.len().max(other.words.len())];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.word(i) ^ other.word(i);
        }
        Self::trimmed(words)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        (0..self.words.len()).all(|i| self.word(i) & !other.word(i) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        (0..self.words.len().min(other.words.len())).all(|i| self.word(i) & other.word(i) == 0)
    }

    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }

    fn trimmed(words: Vec<u64>) -> Self {
        let mut s = Self { words };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl Extend<usize> for EdgeSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for i in iter {
            self.insert(i);
        }
    }
}

/// Lexicographic order on the increasing index sequences.
impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
