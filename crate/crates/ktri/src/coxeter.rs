//! Permutations of `{1..m}` and words in the adjacent transpositions
//! `s_1, ..., s_{m-1}`.
//!
//! Convention used throughout the crate: products are applied left to
//! right, and multiplying by `s_i` on the right swaps the entries at
//! positions `i` and `i+1` of the one-line form. All indices (values,
//! positions, generator indices) are 1-based.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A permutation of `{1..m}` in one-line notation: `oneline[i-1]` is the
/// image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    oneline: Vec<usize>,
}

impl Permutation {
    pub fn from_oneline(oneline: Vec<usize>) -> Result<Self, Error> {
        let m = oneline.len();
        if m == 0 {
            return Err(Error::InvalidPermutation("empty one-line form".into()));
        }
        let mut seen = vec![false; m];
        for &v in &oneline {
            if v < 1 || v > m {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} out of range 1..={m}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { oneline })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            oneline: (1..=m).collect(),
        }
    }

    /// `[m, m-1, ..., 1]`, the longest element.
    pub fn reversal(m: usize) -> Self {
        Permutation {
            oneline: (1..=m).rev().collect(),
        }
    }

    /// `[1, ..., fixed, m, m-1, ..., fixed+1]`: fixes the first `fixed`
    /// values and reverses the rest.
    pub fn inner_reversal(m: usize, fixed: usize) -> Self {
        assert!(fixed <= m);
        let mut oneline: Vec<usize> = (1..=fixed).collect();
        oneline.extend((fixed + 1..=m).rev());
        Permutation { oneline }
    }

    pub fn size(&self) -> usize {
        self.oneline.len()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.oneline[i - 1]
    }

    pub fn oneline(&self) -> &[usize] {
        &self.oneline
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Coxeter length: the number of inversions, which equals the length
    /// of any minimal word for the permutation.
    pub fn length(&self) -> usize {
        let n = self.oneline.len();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.oneline[i] > self.oneline[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Self {
        let mut oneline = vec![0; self.oneline.len()];
        for (i, &v) in self.oneline.iter().enumerate() {
            oneline[v - 1] = i + 1;
        }
        Permutation { oneline }
    }

    /// True when the values at positions `i`, `i+1` ascend, i.e. when
    /// right-multiplying by `s_i` increases the length by one.
    pub fn ascent_at(&self, i: usize) -> bool {
        self.oneline[i - 1] < self.oneline[i]
    }

    /// Right product with `s_i`: swaps positions `i` and `i+1` of the
    /// one-line form. Changes the length by exactly one.
    pub fn right_multiplied(&self, i: usize) -> Self {
        let mut oneline = self.oneline.clone();
        oneline.swap(i - 1, i);
        Permutation { oneline }
    }

    /// Longest element of the standard parabolic subgroup of `S_m`
    /// generated by `{s_i : i in generators}`: each maximal run
    /// `{a, a+1, ..., b}` of generator indices reverses the block of
    /// positions `a..=b+1`.
    pub fn longest_parabolic(
        m: usize,
        generators: impl IntoIterator<Item = usize>,
    ) -> Result<Self, Error> {
        let mut gens: Vec<usize> = generators.into_iter().collect();
        gens.sort_unstable();
        gens.dedup();
        if let Some(&g) = gens.iter().find(|&&g| g < 1 || g >= m) {
            return Err(Error::GeneratorOutOfRange {
                index: g,
                max: m.saturating_sub(1),
            });
        }
        let mut oneline: Vec<usize> = (1..=m).collect();
        let mut i = 0;
        while i < gens.len() {
            let start = gens[i];
            let mut end = start;
            while i + 1 < gens.len() && gens[i + 1] == end + 1 {
                i += 1;
                end = gens[i];
            }
            oneline[start - 1..=end].reverse();
            i += 1;
        }
        Ok(Permutation { oneline })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.oneline.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let oneline = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad one-line entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::from_oneline(oneline)
    }
}

/// One letter of a word: the generator index together with a stable
/// position id. Letters at distinct positions are distinct vertices of a
/// subword complex even when their indices coincide.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Letter {
    pub position: usize,
    pub index: usize,
}

/// A word in the generators `s_1, ..., s_{m-1}` of `S_m`, with stable,
/// strictly increasing letter positions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    m: usize,
    letters: Vec<Letter>,
}

impl Word {
    /// Word from generator indices; positions are `1..=len`.
    pub fn new(m: usize, indices: Vec<usize>) -> Result<Self, Error> {
        let letters = indices
            .into_iter()
            .enumerate()
            .map(|(i, index)| Letter {
                position: i + 1,
                index,
            })
            .collect();
        Word::with_letters(m, letters)
    }

    /// Word with explicit `(position, index)` letters; positions must be
    /// strictly increasing.
    pub fn with_positions(m: usize, letters: Vec<(usize, usize)>) -> Result<Self, Error> {
        let letters = letters
            .into_iter()
            .map(|(position, index)| Letter { position, index })
            .collect();
        Word::with_letters(m, letters)
    }

    fn with_letters(m: usize, letters: Vec<Letter>) -> Result<Self, Error> {
        for l in &letters {
            if l.index < 1 || l.index >= m {
                return Err(Error::GeneratorOutOfRange {
                    index: l.index,
                    max: m.saturating_sub(1),
                });
            }
        }
        if letters.windows(2).any(|w| w[0].position >= w[1].position) {
            return Err(Error::Parse(
                "letter positions must be strictly increasing".into(),
            ));
        }
        Ok(Word { m, letters })
    }

    pub fn parse(m: usize, s: &str) -> Result<Self, Error> {
        if s.trim().is_empty() {
            return Word::new(m, Vec::new());
        }
        let indices = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad generator index {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Word::new(m, indices)
    }

    pub fn group_size(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters.iter().map(|l| l.index)
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters.iter().map(|l| l.position)
    }

    /// The sub-word of the letters whose positions lie in `positions`,
    /// keeping the original position ids.
    pub fn subword_at(&self, positions: &std::collections::BTreeSet<usize>) -> Word {
        Word {
            m: self.m,
            letters: self
                .letters
                .iter()
                .copied()
                .filter(|l| positions.contains(&l.position))
                .collect(),
        }
    }

    /// Product of the letters applied left to right; the empty word gives
    /// the identity.
    pub fn product(&self) -> Permutation {
        let mut p = Permutation::identity(self.m);
        for l in &self.letters {
            p.oneline.swap(l.index - 1, l.index);
        }
        p
    }

    /// A word is reduced when its product has length equal to the number
    /// of letters.
    pub fn is_reduced(&self) -> bool {
        self.product().length() == self.len()
    }

    /// Demazure product: fold the letters left to right, multiplying by a
    /// letter only when that increases the length and dropping it
    /// otherwise. Right-multiplying by `s_i` always changes the length by
    /// exactly one, so the two cases are exhaustive.
    pub fn demazure_product(&self) -> Permutation {
        let mut p = Permutation::identity(self.m);
        for l in &self.letters {
            if p.ascent_at(l.index) {
                p.oneline.swap(l.index - 1, l.index);
            }
        }
        p
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.index.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}
