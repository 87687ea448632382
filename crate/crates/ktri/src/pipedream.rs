//! Pipe dreams on staircase diagrams, the word/box labelling of the
//! staircase, the bijection with k-triangulations, and Schubert
//! polynomials.
//!
//! A pipe dream of size `m` fills each box `(r,c)` with `r+c <= m` with a
//! crossing or a turning tile; the anti-diagonal `r+c = m+1` consists of
//! implicit terminal turning tiles. Pipes enter at the top of columns
//! `1..m` travelling down, exit at the left of rows `1..m` travelling
//! left; a crossing tile lets both pipes pass straight through, a turning
//! tile sends a downward pipe left and a leftward pipe down.
//!
//! Box `(r,c)` of the size-m staircase carries the generator `s_{r+c-1}`,
//! and the boxes are read row by row from top to bottom and from right to
//! left. Box `(r,c)` of the size-n staircase stands for the chord
//! `{c, n+1-r}` of the n-gon.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::coxeter::{Permutation, Word};
use crate::error::Error;
use crate::polygon::{relevant_diagonals, validate_parameters, Diagonal, Triangulation};
use crate::subword::SubwordComplex;

/// Default cap on the group size for reduced-pipe-dream enumeration.
pub const DEFAULT_DREAM_LIMIT: usize = 12;

/// The boxes `(r,c)`, `r+c <= m`, in reading order: rows top to bottom,
/// right to left within a row.
pub fn staircase_boxes(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..m).flat_map(move |r| (1..=m - r).rev().map(move |c| (r, c)))
}

/// 1-based reading-order position of box `(r,c)` in the size-m staircase.
pub fn box_position(r: usize, c: usize, m: usize) -> Result<usize, Error> {
    if r == 0 || c == 0 || r + c > m {
        return Err(Error::BoxOutOfRange {
            row: r,
            col: c,
            size: m,
        });
    }
    let before_rows: usize = (1..r).map(|i| m - i).sum();
    Ok(before_rows + (m - r - c + 1))
}

/// Inverse of [`box_position`].
pub fn position_box(pos: usize, m: usize) -> Result<(usize, usize), Error> {
    let mut rest = pos.checked_sub(1).ok_or(Error::BoxOutOfRange {
        row: 0,
        col: 0,
        size: m,
    })?;
    for r in 1..m {
        let row_len = m - r;
        if rest < row_len {
            return Ok((r, m - r - rest));
        }
        rest -= row_len;
    }
    Err(Error::BoxOutOfRange {
        row: 0,
        col: pos,
        size: m,
    })
}

/// The word filling the full size-m staircase in reading order; box
/// `(r,c)` carries `s_{r+c-1}`. It is a reduced word for `[m,...,1]`.
pub fn staircase_word(m: usize) -> Word {
    let indices: Vec<usize> = staircase_boxes(m).map(|(r, c)| r + c - 1).collect();
    Word::new(m, indices).expect("staircase letters are in range")
}

/// The staircase word of size `n-k` with all letters `s_i`, `i <= k`,
/// deleted. Positions keep their reading-order ids, so each remaining
/// letter still names its staircase box, and the boxes are exactly the
/// relevant diagonals of the n-gon.
pub fn relevant_word(n: usize, k: usize) -> Result<Word, Error> {
    validate_parameters(n, k)?;
    let m = n - k;
    let letters: Vec<(usize, usize)> = staircase_boxes(m)
        .enumerate()
        .filter(|(_, (r, c))| r + c - 1 > k)
        .map(|(i, (r, c))| (i + 1, r + c - 1))
        .collect();
    Word::with_positions(m, letters)
}

/// The permutation of `S_{n-k}` fixing `1..k` and reversing the rest;
/// its reduced pipe dreams correspond to the k-triangulations of the
/// n-gon.
pub fn target_permutation(n: usize, k: usize) -> Result<Permutation, Error> {
    validate_parameters(n, k)?;
    Ok(Permutation::inner_reversal(n - k, k))
}

/// Staircase box of a relevant diagonal: `{a,b}` sits at `(n+1-b, a)` and
/// carries the generator `s_{a+n-b}`.
pub fn diagonal_box(d: &Diagonal, n: usize, k: usize) -> Result<(usize, usize), Error> {
    validate_parameters(n, k)?;
    if !d.is_relevant(n, k) {
        return Err(Error::IrrelevantDiagonal { diagonal: *d, n, k });
    }
    Ok(diagonal_box_unchecked(d, n))
}

pub(crate) fn diagonal_box_unchecked(d: &Diagonal, n: usize) -> (usize, usize) {
    let (a, b) = d.endpoints();
    (n + 1 - b, a)
}

/// The chord of the n-gon represented by box `(r,c)` of the size-n
/// staircase.
pub fn box_diagonal(r: usize, c: usize, n: usize) -> Result<Diagonal, Error> {
    if r == 0 || c == 0 || r + c > n {
        return Err(Error::BoxOutOfRange {
            row: r,
            col: c,
            size: n,
        });
    }
    Diagonal::new(c, n + 1 - r)
}

/// Tile of a pipe dream box.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Tile {
    Cross,
    Elbow,
}

/// The route of one pipe: the row where it leaves the left edge and the
/// boxes where it turns.
#[derive(Clone, Debug)]
pub struct PipeTrace {
    pub start_column: usize,
    pub exit_row: usize,
    /// Boxes the pipe passes through, in order.
    pub path: Vec<(usize, usize)>,
    /// The subset of the path where the pipe turns (elbow or terminal
    /// boxes).
    pub turns: Vec<(usize, usize)>,
}

/// A pipe dream of size `m`, stored as its set of crossing boxes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PipeDream {
    m: usize,
    crosses: BTreeSet<(usize, usize)>,
}

impl PipeDream {
    pub fn new(m: usize, crosses: BTreeSet<(usize, usize)>) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::Parse("pipe dream size must be at least 1".into()));
        }
        for &(r, c) in &crosses {
            if r == 0 || c == 0 || r + c > m {
                return Err(Error::BoxOutOfRange {
                    row: r,
                    col: c,
                    size: m,
                });
            }
        }
        Ok(PipeDream { m, crosses })
    }

    pub fn all_elbows(m: usize) -> Self {
        PipeDream {
            m,
            crosses: BTreeSet::new(),
        }
    }

    pub fn all_crosses(m: usize) -> Self {
        PipeDream {
            m,
            crosses: staircase_boxes(m).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn crosses(&self) -> &BTreeSet<(usize, usize)> {
        &self.crosses
    }

    pub fn cross_count(&self) -> usize {
        self.crosses.len()
    }

    /// Tile at `(r,c)`: `None` outside the staircase and its terminal
    /// anti-diagonal, which is always an elbow.
    pub fn tile(&self, r: usize, c: usize) -> Option<Tile> {
        if r == 0 || c == 0 || r + c > self.m + 1 {
            return None;
        }
        if r + c == self.m + 1 {
            return Some(Tile::Elbow);
        }
        if self.crosses.contains(&(r, c)) {
            Some(Tile::Cross)
        } else {
            Some(Tile::Elbow)
        }
    }

    /// Follows the pipe entering at the top of `start_column` until it
    /// leaves through the left edge.
    pub fn trace(&self, start_column: usize) -> PipeTrace {
        assert!(
            (1..=self.m).contains(&start_column),
            "column {start_column} out of range 1..={}",
            self.m
        );
        let mut r = 1;
        let mut c = start_column;
        let mut heading_down = true;
        let mut path = Vec::new();
        let mut turns = Vec::new();
        loop {
            if c == 0 {
                return PipeTrace {
                    start_column,
                    exit_row: r,
                    path,
                    turns,
                };
            }
            path.push((r, c));
            match self.tile(r, c).expect("trace stays inside the staircase") {
                Tile::Cross => {
                    if heading_down {
                        r += 1;
                    } else {
                        c -= 1;
                    }
                }
                Tile::Elbow => {
                    turns.push((r, c));
                    if heading_down {
                        heading_down = false;
                        c -= 1;
                    } else {
                        heading_down = true;
                        r += 1;
                    }
                }
            }
        }
    }

    /// The permutation of the dream, read down the left edge: entry `r`
    /// of the one-line form is the starting column of the pipe leaving at
    /// row `r`. For a reduced dream this equals the product of the
    /// dream's word.
    pub fn permutation(&self) -> Permutation {
        let mut oneline = vec![0; self.m];
        for col in 1..=self.m {
            let exit = self.trace(col).exit_row;
            oneline[exit - 1] = col;
        }
        Permutation::from_oneline(oneline).expect("pipes exit each row exactly once")
    }

    /// A dream is reduced when no two pipes cross more than once.
    pub fn is_reduced(&self) -> bool {
        let mut pipes_through: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for col in 1..=self.m {
            for b in self.trace(col).path {
                if self.crosses.contains(&b) {
                    pipes_through.entry(b).or_default().push(col);
                }
            }
        }
        let mut pair_counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for pipes in pipes_through.values() {
            debug_assert_eq!(pipes.len(), 2, "a crossing box carries exactly two pipes");
            let pair = (pipes[0].min(pipes[1]), pipes[0].max(pipes[1]));
            *pair_counts.entry(pair).or_insert(0) += 1;
        }
        pair_counts.values().all(|&c| c <= 1)
    }

    /// The sub-word of the staircase word at the crossing boxes, read in
    /// staircase order. For a reduced dream its product is the dream's
    /// permutation.
    pub fn word(&self) -> Word {
        let letters: Vec<(usize, usize)> = staircase_boxes(self.m)
            .enumerate()
            .filter(|(_, b)| self.crosses.contains(b))
            .map(|(i, (r, c))| (i + 1, r + c - 1))
            .collect();
        Word::with_positions(self.m, letters).expect("cross letters are in range")
    }

    /// Text form: one row per line-segment separated by `/`, `+` for a
    /// crossing, `J` for a turn, with the terminal elbow of each row
    /// included, e.g. `"JJJ+JJ/JJ++J/+JJJ/+JJ/+J/J"`.
    pub fn to_text(&self) -> String {
        let mut rows = Vec::new();
        for r in 1..=self.m {
            let mut row = String::new();
            for c in 1..=self.m - r {
                row.push(if self.crosses.contains(&(r, c)) {
                    '+'
                } else {
                    'J'
                });
            }
            row.push('J');
            rows.push(row);
        }
        rows.join("/")
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let rows: Vec<&str> = text.split('/').collect();
        let m = rows.len();
        if m == 0 {
            return Err(Error::Parse("empty pipe dream".into()));
        }
        let mut crosses = BTreeSet::new();
        for (i, row) in rows.iter().enumerate() {
            let r = i + 1;
            let expected = m + 1 - r;
            if row.chars().count() != expected {
                return Err(Error::Parse(format!(
                    "row {r} must have {expected} tiles, got {:?}",
                    row
                )));
            }
            for (j, ch) in row.chars().enumerate() {
                let c = j + 1;
                match ch {
                    '+' if r + c <= m => {
                        crosses.insert((r, c));
                    }
                    'J' => {}
                    '+' => {
                        return Err(Error::Parse(format!(
                            "terminal box ({r},{c}) must be a turn"
                        )))
                    }
                    other => {
                        return Err(Error::Parse(format!("unexpected tile {other:?}")));
                    }
                }
            }
        }
        PipeDream::new(m, crosses)
    }
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PipeDream(m={}, {})", self.m, self.to_text())
    }
}

impl Serialize for PipeDream {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PipeDream", 2)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("crosses", &self.crosses)?;
        st.end()
    }
}

/// The pipe dream of a k-triangulation: size `n-k`, with crossing tiles
/// exactly on the relevant diagonals *not* in the triangulation. The
/// result is reduced, its permutation is `target_permutation(n,k)`, and
/// it has `binom(n-2k, 2)` crossings.
pub fn dream_from_triangulation(t: &Triangulation) -> PipeDream {
    let (n, k) = (t.n(), t.k());
    let crosses: BTreeSet<(usize, usize)> = relevant_diagonals(n, k)
        .expect("triangulation parameters are valid")
        .into_iter()
        .filter(|d| !t.contains(d))
        .map(|d| diagonal_box_unchecked(&d, n))
        .collect();
    PipeDream::new(n - k, crosses).expect("relevant boxes lie in the size n-k staircase")
}

/// Inverse of [`dream_from_triangulation`]: reads the elbow boxes on
/// relevant diagonals back off as the triangulation.
pub fn triangulation_from_dream(
    dream: &PipeDream,
    n: usize,
    k: usize,
) -> Result<Triangulation, Error> {
    validate_parameters(n, k)?;
    if dream.size() != n - k {
        return Err(Error::Parse(format!(
            "expected a dream of size {}, got {}",
            n - k,
            dream.size()
        )));
    }
    let mut diagonals = BTreeSet::new();
    for (r, c) in staircase_boxes(dream.size()) {
        if r + c - 1 > k && !dream.crosses().contains(&(r, c)) {
            diagonals.insert(box_diagonal(r, c, n)?);
        }
    }
    Triangulation::new(n, k, diagonals)
}

/// All reduced pipe dreams for `p`, enumerated as the facets of the
/// subword complex of the full staircase word: the crossing boxes of a
/// reduced dream are exactly the complement of a facet.
pub fn reduced_dreams(p: &Permutation) -> Result<Vec<PipeDream>, Error> {
    reduced_dreams_bounded(p, DEFAULT_DREAM_LIMIT)
}

/// As [`reduced_dreams`] with an explicit cap on the group size.
pub fn reduced_dreams_bounded(p: &Permutation, max_m: usize) -> Result<Vec<PipeDream>, Error> {
    let m = p.size();
    if m > max_m {
        return Err(Error::GuardExceeded(format!(
            "pipe dream enumeration requested for S_{m}, guard allows m<={max_m}"
        )));
    }
    let word = staircase_word(m);
    let all_positions: BTreeSet<usize> = (1..=word.len()).collect();
    let complex = SubwordComplex::new(word, p.clone())?;
    let mut dreams = Vec::new();
    for facet in complex.facets() {
        let crosses: BTreeSet<(usize, usize)> = all_positions
            .difference(&facet)
            .map(|&pos| position_box(pos, m).expect("facet positions are staircase positions"))
            .collect();
        dreams.push(PipeDream { m, crosses });
    }
    dreams.sort();
    Ok(dreams)
}

/// A multivariate polynomial with exact integer coefficients, keyed by
/// exponent vectors `(e1, e2, ...)` for the variables `x1, x2, ...`.
/// Trailing zero exponents are trimmed; zero coefficients are not stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchubertPolynomial {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SchubertPolynomial {
    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Value at `x1 = x2 = ... = 1`: the sum of the coefficients, i.e.
    /// the number of reduced pipe dreams.
    pub fn evaluate_ones(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for coeff in self.terms.values() {
            acc += coeff;
        }
        acc
    }

    fn add_monomial(&mut self, exponents: Vec<u32>) {
        let mut e = exponents;
        while e.last() == Some(&0) {
            e.pop();
        }
        *self.terms.entry(e).or_insert_with(BigInt::zero) += BigInt::one();
    }
}

impl fmt::Display for SchubertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (exps, coeff) in &self.terms {
            let mut factors = Vec::new();
            if !coeff.is_one() || exps.is_empty() {
                factors.push(coeff.to_string());
            }
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, e)),
                }
            }
            parts.push(factors.join("*"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// The Schubert polynomial of `p`: the sum over all reduced pipe dreams
/// of the monomial with one factor `x_r` per crossing in row `r`.
pub fn schubert_polynomial(p: &Permutation) -> Result<SchubertPolynomial, Error> {
    schubert_polynomial_bounded(p, DEFAULT_DREAM_LIMIT)
}

/// As [`schubert_polynomial`] with an explicit cap on the group size.
pub fn schubert_polynomial_bounded(
    p: &Permutation,
    max_m: usize,
) -> Result<SchubertPolynomial, Error> {
    let mut poly = SchubertPolynomial::default();
    for dream in reduced_dreams_bounded(p, max_m)? {
        let mut exps = vec![0u32; dream.size().saturating_sub(1)];
        for &(r, _) in dream.crosses() {
            exps[r - 1] += 1;
        }
        poly.add_monomial(exps);
    }
    Ok(poly)
}
