use std::cmp::Ordering;

use smallvec::SmallVec;

const WORD: usize = u64::BITS as usize;

/// A set of atoms, stored as a bit-vector indexed by atom position in an
/// [`Alphabet`](super::Alphabet).
///
/// Trailing zero words are trimmed, so two interpretations are equal exactly
/// when they have the same members regardless of the alphabet width they were
/// built for. Ordering is binary counting: the interpretation is read as an
/// unsigned integer whose bit `i` is atom `i`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Interpretation {
    words: SmallVec<[u64; 1]>,
}

impl Interpretation {
    pub fn empty() -> Self {
        Self::default()
    }

    /// All atoms with index below `len`.
    pub fn full(len: usize) -> Self {
        let mut words: SmallVec<[u64; 1]> = SmallVec::new();
        let mut left = len;
        while left >= WORD {
            words.push(u64::MAX);
            left -= WORD;
        }
        if left > 0 {
            words.push((1u64 << left) - 1);
        }
        Self { words }
    }

    /// Interpretation whose members are the set bits of `bits`.
    pub fn from_bits(bits: u64) -> Self {
        let mut out = Self::empty();
        if bits != 0 {
            out.words.push(bits);
        }
        out
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut out = Self::empty();
        for i in indices {
            out.insert(i);
        }
        out
    }

    pub fn insert(&mut self, index: usize) {
        let (w, b) = (index / WORD, index % WORD);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn remove(&mut self, index: usize) {
        let (w, b) = (index / WORD, index % WORD);
        if let Some(word) = self.words.get_mut(w) {
            *word &= !(1 << b);
        }
        self.trim();
    }

    pub fn contains(&self, index: usize) -> bool {
        let (w, b) = (index / WORD, index % WORD);
        self.words.get(w).is_some_and(|word| word >> b & 1 == 1)
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w |= s;
        }
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = Self {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        };
        out.trim();
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut words = self.words.clone();
        for (w, o) in words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        let mut out = Self { words };
        out.trim();
        out
    }

    /// Complement relative to the first `len` atoms.
    pub fn complement(&self, len: usize) -> Self {
        Self::full(len).difference(self)
    }

    /// Index of the highest member plus one; zero for the empty set.
    pub fn width(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(top) => (self.words.len() - 1) * WORD + (WORD - top.leading_zeros() as usize),
        }
    }

    /// Member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * WORD + b)
            })
        })
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl Ord for Interpretation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for Interpretation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Interpretation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = Interpretation::from_indices([0, 2, 70]);
        let b = Interpretation::from_indices([2, 3]);
        assert_eq!(a.intersection(&b), Interpretation::from_indices([2]));
        assert_eq!(a.union(&b), Interpretation::from_indices([0, 2, 3, 70]));
        assert_eq!(a.difference(&b), Interpretation::from_indices([0, 70]));
        assert!(Interpretation::from_indices([2]).is_subset(&a));
        assert!(!b.is_subset(&a));
        assert_eq!(a.width(), 71);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2, 70]);
    }

    #[test]
    fn equality_ignores_width() {
        let mut a = Interpretation::from_indices([100]);
        a.remove(100);
        assert_eq!(a, Interpretation::empty());
        assert_eq!(Interpretation::full(3).complement(3), Interpretation::empty());
        assert_eq!(Interpretation::full(64).len(), 64);
        assert_eq!(Interpretation::full(65).len(), 65);
    }

    #[test]
    fn binary_counting_order() {
        let mut all: Vec<_> = (0..16u64).rev().map(Interpretation::from_bits).collect();
        all.sort();
        assert_eq!(all, (0..16u64).map(Interpretation::from_bits).collect::<Vec<_>>());
        assert!(Interpretation::from_indices([64]) > Interpretation::from_indices([0, 1, 63]));
    }
}
