//! Diagonals of a convex n-gon, crossing logic, exhaustive enumeration of
//! k-triangulations, star decompositions, and staircase fillings.
//!
//! Vertices of the n-gon are labelled `1..n` clockwise. A chord `{a,b}`
//! is *relevant* for parameters `(n,k)` when `k < b-a < n-k`; only
//! relevant chords can take part in a set of k+1 mutually crossing
//! diagonals.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::pipedream;

/// Default cap on `n` for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 12;

/// Checks `k >= 1` and `2k+1 <= n`.
pub fn validate_parameters(n: usize, k: usize) -> Result<(), Error> {
    if k == 0 || 2 * k + 1 > n {
        return Err(Error::InvalidParameters { n, k });
    }
    Ok(())
}

/// An unordered pair of distinct polygon vertices, stored with `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    a: usize,
    b: usize,
}

impl Diagonal {
    pub fn new(x: usize, y: usize) -> Result<Self, Error> {
        if x == y || x == 0 || y == 0 {
            return Err(Error::DegenerateChord { a: x, b: y });
        }
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        Ok(Diagonal { a, b })
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// Strict interleaving of endpoints around the circle. Chords sharing
    /// an endpoint never cross.
    pub fn crosses(&self, other: &Diagonal) -> bool {
        let (a1, b1) = (self.a, self.b);
        let (a2, b2) = (other.a, other.b);
        (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1)
    }

    pub fn is_relevant(&self, n: usize, k: usize) -> bool {
        self.b <= n && k < self.b - self.a && self.b - self.a < n - k
    }

    /// Boundary edges for the star decomposition: `b-a` equal to `k` or
    /// `n-k`.
    pub fn is_boundary(&self, n: usize, k: usize) -> bool {
        self.b <= n && (self.b - self.a == k || self.b - self.a == n - k)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

impl fmt::Debug for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

impl Serialize for Diagonal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.a, self.b).serialize(serializer)
    }
}

/// All relevant diagonals `{a,b}` with `k < b-a < n-k`, in lexicographic
/// order.
pub fn relevant_diagonals(n: usize, k: usize) -> Result<BTreeSet<Diagonal>, Error> {
    validate_parameters(n, k)?;
    let mut out = BTreeSet::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if k < b - a && b - a < n - k {
                out.insert(Diagonal { a, b });
            }
        }
    }
    Ok(out)
}

/// True when some `count`-subset of `diagonals` is mutually crossing.
pub fn contains_mutual_crossing(diagonals: &[Diagonal], count: usize) -> bool {
    find_mutual_crossing(diagonals, count).is_some()
}

/// A witness set of `count` mutually crossing diagonals, if one exists.
pub fn find_mutual_crossing(diagonals: &[Diagonal], count: usize) -> Option<Vec<Diagonal>> {
    fn extend(pool: &[Diagonal], need: usize, chosen: &mut Vec<Diagonal>) -> bool {
        if need == 0 {
            return true;
        }
        if pool.len() < need {
            return false;
        }
        for (i, d) in pool.iter().enumerate() {
            let rest: Vec<Diagonal> = pool[i + 1..]
                .iter()
                .copied()
                .filter(|e| e.crosses(d))
                .collect();
            chosen.push(*d);
            if extend(&rest, need - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    if extend(diagonals, count, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// A k-triangulation: a maximal set of relevant diagonals with no k+1
/// mutually crossing members. Maximality is equivalent to having exactly
/// `k(n-2k-1)` diagonals, which is what the constructor checks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Triangulation {
    n: usize,
    k: usize,
    diagonals: BTreeSet<Diagonal>,
}

impl Triangulation {
    pub fn new(n: usize, k: usize, diagonals: BTreeSet<Diagonal>) -> Result<Self, Error> {
        validate_parameters(n, k)?;
        for d in &diagonals {
            if !d.is_relevant(n, k) {
                return Err(Error::IrrelevantDiagonal { diagonal: *d, n, k });
            }
        }
        let list: Vec<Diagonal> = diagonals.iter().copied().collect();
        if let Some(witness) = find_mutual_crossing(&list, k + 1) {
            return Err(Error::CrossingPresent { witness });
        }
        let expected = Self::expected_size(n, k);
        if diagonals.len() != expected {
            return Err(Error::WrongDiagonalCount {
                expected,
                got: diagonals.len(),
            });
        }
        Ok(Triangulation { n, k, diagonals })
    }

    /// Every k-triangulation of the n-gon has exactly `k(n-2k-1)`
    /// diagonals.
    pub fn expected_size(n: usize, k: usize) -> usize {
        k * (n - 2 * k - 1)
    }

    /// Parses the text form `"2-5,2-6,3-8"`; the empty string is the
    /// empty set of diagonals.
    pub fn parse(n: usize, k: usize, text: &str) -> Result<Self, Error> {
        let mut diagonals = BTreeSet::new();
        let trimmed = text.trim();
        if !trimmed.is_empty() {
            for part in trimmed.split(',') {
                let (x, y) = part
                    .trim()
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("expected a-b, got {part:?}")))?;
                let a = x
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad vertex {x:?}: {e}")))?;
                let b = y
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad vertex {y:?}: {e}")))?;
                if a > n || b > n {
                    return Err(Error::InvalidChord { a, b, n });
                }
                let d = Diagonal::new(a, b).map_err(|_| Error::InvalidChord { a, b, n })?;
                if !diagonals.insert(d) {
                    return Err(Error::Parse(format!("diagonal {d} repeated")));
                }
            }
        }
        Triangulation::new(n, k, diagonals)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn diagonals(&self) -> &BTreeSet<Diagonal> {
        &self.diagonals
    }

    pub fn contains(&self, d: &Diagonal) -> bool {
        self.diagonals.contains(d)
    }

    pub(crate) fn from_parts_unchecked(n: usize, k: usize, diagonals: BTreeSet<Diagonal>) -> Self {
        Triangulation { n, k, diagonals }
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.diagonals.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Triangulation(n={}, k={}, {})", self.n, self.k, self)
    }
}

impl Serialize for Triangulation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Triangulation", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("diagonals", &self.diagonals)?;
        st.end()
    }
}

/// All k-triangulations of the n-gon, by depth-first search over the
/// relevant diagonals in lexicographic order. A diagonal is added only if
/// it completes no set of k+1 mutually crossing diagonals, and sets are
/// emitted once they reach `k(n-2k-1)` diagonals: crossing-free sets of
/// that size are automatically maximal, so no explicit maximality test is
/// needed.
pub fn enumerate_triangulations(n: usize, k: usize) -> Result<Vec<Triangulation>, Error> {
    enumerate_triangulations_bounded(n, k, DEFAULT_ENUMERATION_LIMIT)
}

/// As [`enumerate_triangulations`] with an explicit cap on `n`.
pub fn enumerate_triangulations_bounded(
    n: usize,
    k: usize,
    max_n: usize,
) -> Result<Vec<Triangulation>, Error> {
    validate_parameters(n, k)?;
    if n > max_n {
        return Err(Error::GuardExceeded(format!(
            "enumeration requested for n={n}, guard allows n<={max_n}"
        )));
    }
    let gamma: Vec<Diagonal> = relevant_diagonals(n, k)?.into_iter().collect();
    let target = Triangulation::expected_size(n, k);
    let mut out = Vec::new();
    let mut chosen: Vec<Diagonal> = Vec::new();

    fn dfs(
        gamma: &[Diagonal],
        i: usize,
        k: usize,
        target: usize,
        chosen: &mut Vec<Diagonal>,
        out: &mut Vec<BTreeSet<Diagonal>>,
    ) {
        if chosen.len() == target {
            out.push(chosen.iter().copied().collect());
            return;
        }
        if i == gamma.len() || chosen.len() + (gamma.len() - i) < target {
            return;
        }
        let d = gamma[i];
        // adding d is legal unless k of the already-chosen diagonals
        // cross d and each other
        let crossers: Vec<Diagonal> = chosen.iter().copied().filter(|e| e.crosses(&d)).collect();
        if !contains_mutual_crossing(&crossers, k) {
            chosen.push(d);
            dfs(gamma, i + 1, k, target, chosen, out);
            chosen.pop();
        }
        dfs(gamma, i + 1, k, target, chosen, out);
    }

    let mut sets = Vec::new();
    dfs(&gamma, 0, k, target, &mut chosen, &mut sets);
    sets.sort();
    for s in sets {
        out.push(Triangulation::from_parts_unchecked(n, k, s));
    }
    Ok(out)
}

/// A star polygon on `2k+1` polygon vertices: consecutive in clockwise
/// order, with edges joining vertices at cyclic index distance `k`
/// (equivalently `k+1` the other way round).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct KStar {
    k: usize,
    vertices: Vec<usize>, // ascending
}

impl KStar {
    pub(crate) fn from_vertices(k: usize, mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        debug_assert_eq!(vertices.len(), 2 * k + 1);
        KStar { k, vertices }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The vertices in increasing (= clockwise) order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// The 2k+1 edges of the star.
    pub fn edges(&self) -> BTreeSet<Diagonal> {
        let s = 2 * self.k + 1;
        (0..s)
            .map(|i| {
                Diagonal::new(self.vertices[i], self.vertices[(i + self.k) % s])
                    .expect("star vertices are distinct")
            })
            .collect()
    }
}

impl fmt::Display for KStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The stars of a k-triangulation together with how often each edge is
/// used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarDecomposition {
    stars: Vec<KStar>,
}

impl StarDecomposition {
    pub fn stars(&self) -> &[KStar] {
        &self.stars
    }

    /// For each chord used by some star, in how many stars it appears.
    /// Triangulation diagonals appear twice, boundary edges once.
    pub fn incidence(&self) -> BTreeMap<Diagonal, usize> {
        let mut counts = BTreeMap::new();
        for star in &self.stars {
            for e in star.edges() {
                *counts.entry(e).or_insert(0) += 1;
            }
        }
        counts
    }
}

/// Extracts the `n-2k` stars of a triangulation by tracing the inner
/// pipes of the full-size pipe picture: the crossing tiles sit on the
/// relevant diagonals *not* in the triangulation, and the boxes where an
/// inner pipe turns are exactly the edges of one star.
pub fn k_stars(t: &Triangulation) -> StarDecomposition {
    let (n, k) = (t.n(), t.k());
    let crosses: BTreeSet<(usize, usize)> = relevant_diagonals(n, k)
        .expect("triangulation parameters are valid")
        .into_iter()
        .filter(|d| !t.contains(d))
        .map(|d| pipedream::diagonal_box_unchecked(&d, n))
        .collect();
    let picture =
        pipedream::PipeDream::new(n, crosses).expect("relevant boxes lie in the staircase");

    let mut stars = Vec::new();
    for col in k + 1..=n - k {
        let trace = picture.trace(col);
        debug_assert_eq!(trace.exit_row, n + 1 - col);
        let mut vertices = BTreeSet::new();
        for &(r, c) in &trace.turns {
            debug_assert!(r + c <= n, "inner pipes only turn at chord boxes");
            let d = pipedream::box_diagonal(r, c, n).expect("turn box is a chord");
            let (a, b) = d.endpoints();
            vertices.insert(a);
            vertices.insert(b);
        }
        debug_assert_eq!(trace.turns.len(), 2 * k + 1);
        stars.push(KStar::from_vertices(k, vertices.into_iter().collect()));
    }
    stars.sort();
    StarDecomposition { stars }
}

/// Mark of one staircase box.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mark {
    /// The box's chord is not a relevant diagonal.
    Circle,
    /// The box's chord is a diagonal of the triangulation.
    Plus,
    /// Relevant but unused.
    Blank,
}

/// The marking of the size-n staircase encoding a triangulation: box
/// `(r,c)` stands for the chord `{c, n+1-r}` and exists for `r+c <= n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StaircaseFilling {
    n: usize,
    k: usize,
    pluses: BTreeSet<(usize, usize)>,
}

impl StaircaseFilling {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (1..n).flat_map(move |r| (1..=n - r).map(move |c| (r, c)))
    }

    pub fn mark(&self, r: usize, c: usize) -> Option<Mark> {
        if r == 0 || c == 0 || r + c > self.n {
            return None;
        }
        if self.pluses.contains(&(r, c)) {
            return Some(Mark::Plus);
        }
        let d = pipedream::box_diagonal(r, c, self.n).ok()?;
        if d.is_relevant(self.n, self.k) {
            Some(Mark::Blank)
        } else {
            Some(Mark::Circle)
        }
    }

    pub fn plus_boxes(&self) -> &BTreeSet<(usize, usize)> {
        &self.pluses
    }

    pub fn count(&self, mark: Mark) -> usize {
        self.boxes()
            .filter(|&(r, c)| self.mark(r, c) == Some(mark))
            .count()
    }
}

impl fmt::Display for StaircaseFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..self.n {
            for c in 1..=self.n - r {
                let ch = match self.mark(r, c) {
                    Some(Mark::Circle) => 'o',
                    Some(Mark::Plus) => '+',
                    _ => '.',
                };
                write!(f, "{ch}")?;
            }
            if r + 1 < self.n {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// The `(+, o, blank)` filling of the staircase for a triangulation.
pub fn staircase_filling(t: &Triangulation) -> StaircaseFilling {
    let pluses = t
        .diagonals()
        .iter()
        .map(|d| pipedream::diagonal_box_unchecked(d, t.n()))
        .collect();
    StaircaseFilling {
        n: t.n(),
        k: t.k(),
        pluses,
    }
}
