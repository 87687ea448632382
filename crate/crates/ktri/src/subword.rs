//! Subword complexes and the generic simplicial-complex operations they
//! need: facet enumeration, link, deletion, Euler characteristic, vertex
//! decomposition, and the sphere/ball classification.
//!
//! The subword complex of a word `Q` and a target permutation lives on
//! the letter positions of `Q`; a position set is a facet exactly when
//! the letters *outside* it, read in order, form a reduced word for the
//! target.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::coxeter::{Permutation, Word};
use crate::error::Error;

/// Vertices of a complex are opaque ids; for subword complexes they are
/// letter positions.
pub type VertexId = usize;

type Face = BTreeSet<VertexId>;

/// Default cap on the number of faces visited by the Euler characteristic
/// computation.
pub const DEFAULT_FACE_LIMIT: usize = 1 << 22;

/// A finite simplicial complex given by its ground vertex set and its
/// facets. The facets form an antichain. The void complex (no faces at
/// all) is represented by an empty facet set and is distinct from the
/// complex `{∅}` whose only face is empty.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: BTreeSet<VertexId>,
    facets: BTreeSet<Face>,
}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn void(vertices: BTreeSet<VertexId>) -> Self {
        SimplicialComplex {
            vertices,
            facets: BTreeSet::new(),
        }
    }

    /// Builds from an explicit facet list; fails if a facet contains
    /// another or mentions a vertex outside the ground set.
    pub fn from_facets(
        vertices: BTreeSet<VertexId>,
        facets: BTreeSet<Face>,
    ) -> Result<Self, Error> {
        for f in &facets {
            if !f.is_subset(&vertices) {
                return Err(Error::InvalidComplex(
                    "facet mentions a vertex outside the ground set".into(),
                ));
            }
        }
        let list: Vec<&Face> = facets.iter().collect();
        for (i, f) in list.iter().enumerate() {
            for (j, g) in list.iter().enumerate() {
                if i != j && f.is_subset(g) {
                    return Err(Error::InvalidComplex(format!(
                        "facet {f:?} is contained in facet {g:?}"
                    )));
                }
            }
        }
        Ok(SimplicialComplex { vertices, facets })
    }

    /// Builds from arbitrary faces, keeping only the maximal ones.
    pub fn from_faces(vertices: BTreeSet<VertexId>, faces: impl IntoIterator<Item = Face>) -> Self {
        let candidates: Vec<Face> = {
            let set: BTreeSet<Face> = faces.into_iter().collect();
            set.into_iter().collect()
        };
        let mut facets = BTreeSet::new();
        for (i, f) in candidates.iter().enumerate() {
            let dominated = candidates
                .iter()
                .enumerate()
                .any(|(j, g)| i != j && f.is_subset(g) && f != g);
            if !dominated {
                facets.insert(f.clone());
            }
        }
        SimplicialComplex { vertices, facets }
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn facets(&self) -> &BTreeSet<Face> {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True when the only face is the empty one.
    pub fn is_empty_face_only(&self) -> bool {
        self.facets.len() == 1 && self.facets.iter().next().unwrap().is_empty()
    }

    /// Vertices that appear in at least one facet.
    pub fn support(&self) -> BTreeSet<VertexId> {
        self.facets.iter().flatten().copied().collect()
    }

    pub fn has_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// All facets have the same size. Vacuously true for the void
    /// complex.
    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|f| f.len());
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    /// Largest facet size minus one; `None` for the void complex, `-1`
    /// for `{∅}`.
    pub fn dimension(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }

    /// `link(Δ,F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`, on the remaining
    /// vertices. `F` must be a face.
    pub fn link(&self, face: &Face) -> Result<Self, Error> {
        if !self.has_face(face) {
            return Err(Error::FaceNotInComplex);
        }
        let vertices: BTreeSet<VertexId> = self.vertices.difference(face).copied().collect();
        let facets: BTreeSet<Face> = self
            .facets
            .iter()
            .filter(|f| face.is_subset(f))
            .map(|f| f.difference(face).copied().collect())
            .collect();
        Ok(SimplicialComplex { vertices, facets })
    }

    /// `del(Δ,F) = {G : G ∩ F = ∅}`, re-maximalised, on the remaining
    /// vertices.
    pub fn deletion(&self, face: &Face) -> Self {
        let vertices: BTreeSet<VertexId> = self.vertices.difference(face).copied().collect();
        SimplicialComplex::from_faces(
            vertices,
            self.facets
                .iter()
                .map(|f| f.difference(face).copied().collect()),
        )
    }

    /// Sum of `(-1)^dim` over the nonempty faces: `1 + (-1)^d` for a
    /// triangulated d-sphere, `1` for a d-ball, `0` for `{∅}` and for the
    /// void complex.
    pub fn euler_characteristic(&self) -> Result<i64, Error> {
        self.euler_characteristic_bounded(DEFAULT_FACE_LIMIT)
    }

    /// As [`euler_characteristic`](Self::euler_characteristic) with an
    /// explicit cap on the number of faces visited.
    pub fn euler_characteristic_bounded(&self, max_faces: usize) -> Result<i64, Error> {
        let mut seen: HashSet<Face> = HashSet::new();
        let mut stack: Vec<Face> = Vec::new();
        for f in &self.facets {
            if !f.is_empty() && seen.insert(f.clone()) {
                stack.push(f.clone());
            }
        }
        let mut chi: i64 = 0;
        while let Some(face) = stack.pop() {
            if seen.len() > max_faces {
                return Err(Error::GuardExceeded(format!(
                    "face enumeration exceeded {max_faces} faces"
                )));
            }
            chi += if face.len() % 2 == 1 { 1 } else { -1 };
            for &v in &face {
                let mut sub = face.clone();
                sub.remove(&v);
                if !sub.is_empty() && seen.insert(sub.clone()) {
                    stack.push(sub);
                }
            }
        }
        Ok(chi)
    }

    /// Vertex decomposition, preferring the smallest vertex as pivot at
    /// every level and falling back to the other vertices when it fails.
    pub fn vertex_decomposition(&self) -> Result<DecompositionTree, DecompositionFailure> {
        self.decompose(false)
    }

    /// Vertex decomposition that only ever pivots on the smallest vertex
    /// present in the facets.
    pub fn vertex_decomposition_min_pivot(
        &self,
    ) -> Result<DecompositionTree, DecompositionFailure> {
        self.decompose(true)
    }

    fn decompose(&self, min_only: bool) -> Result<DecompositionTree, DecompositionFailure> {
        if self.is_void() {
            return Err(DecompositionFailure::Void);
        }
        if !self.is_pure() {
            return Err(DecompositionFailure::NotPure);
        }
        if self.is_empty_face_only() {
            return Ok(DecompositionTree::Leaf);
        }
        let mut candidates: Vec<VertexId> = self.support().into_iter().collect();
        if min_only {
            candidates.truncate(1);
        }
        for v in candidates {
            let pivot: Face = [v].into_iter().collect();
            let del = self.deletion(&pivot);
            let link = self.link(&pivot).expect("pivot vertex is a face");
            if let (Ok(d), Ok(l)) = (del.decompose(min_only), link.decompose(min_only)) {
                return Ok(DecompositionTree::Node {
                    pivot: v,
                    deletion: Box::new(d),
                    link: Box::new(l),
                });
            }
        }
        Err(DecompositionFailure::NoViablePivot)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(facets={:?})", self.facets)
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SimplicialComplex", 2)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("facets", &self.facets)?;
        st.end()
    }
}

/// Why a vertex decomposition does not exist.
#[derive(Clone, Copy, PartialEq, Eq, Debug, thiserror::Error)]
pub enum DecompositionFailure {
    #[error("the void complex is not vertex-decomposable")]
    Void,
    #[error("the complex is not pure")]
    NotPure,
    #[error("no vertex has decomposable deletion and link")]
    NoViablePivot,
}

/// Certificate of vertex decomposability: the pivot chosen at each step.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DecompositionTree {
    /// The complex `{∅}`.
    Leaf,
    Node {
        pivot: VertexId,
        deletion: Box<DecompositionTree>,
        link: Box<DecompositionTree>,
    },
}

impl DecompositionTree {
    pub fn depth(&self) -> usize {
        match self {
            DecompositionTree::Leaf => 0,
            DecompositionTree::Node { deletion, link, .. } => {
                1 + deletion.depth().max(link.depth())
            }
        }
    }

    /// Checks the certificate against a complex: recomputes deletion and
    /// link along the tree and verifies the base cases.
    pub fn certifies(&self, complex: &SimplicialComplex) -> bool {
        match self {
            DecompositionTree::Leaf => complex.is_empty_face_only(),
            DecompositionTree::Node {
                pivot,
                deletion,
                link,
            } => {
                if !complex.is_pure() {
                    return false;
                }
                let face: Face = [*pivot].into_iter().collect();
                if !complex.has_face(&face) {
                    return false;
                }
                deletion.certifies(&complex.deletion(&face))
                    && link.certifies(&complex.link(&face).expect("pivot is a face"))
            }
        }
    }
}

/// Sphere-or-ball classification of a nonvoid subword complex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Topology {
    Sphere,
    Ball,
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Topology::Sphere => write!(f, "sphere"),
            Topology::Ball => write!(f, "ball"),
        }
    }
}

/// The subword complex of a word and a target permutation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubwordComplex {
    word: Word,
    target: Permutation,
}

impl SubwordComplex {
    pub fn new(word: Word, target: Permutation) -> Result<Self, Error> {
        if word.group_size() != target.size() {
            return Err(Error::InvalidComplex(format!(
                "word lives in S_{} but target in S_{}",
                word.group_size(),
                target.size()
            )));
        }
        Ok(SubwordComplex { word, target })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn target(&self) -> &Permutation {
        &self.target
    }

    /// All facets: position sets whose complement letters form a reduced
    /// word for the target. Empty when the word contains no reduced word
    /// for the target (the void complex). Every facet has exactly
    /// `len(word) - length(target)` positions.
    ///
    /// Depth-first search over the letters in order, deciding for each
    /// whether it joins the complement (which must stay a reduced prefix,
    /// so every chosen letter must increase the length) or the facet;
    /// branches that cannot reach the target length any more are pruned.
    pub fn facets(&self) -> BTreeSet<Face> {
        let mut out = BTreeSet::new();
        self.search(&mut |facet| {
            out.insert(facet);
            true
        });
        out
    }

    /// True when the word contains no reduced word for the target.
    pub fn is_void(&self) -> bool {
        let mut found = false;
        self.search(&mut |_| {
            found = true;
            false // stop at the first facet
        });
        !found
    }

    /// The complex on the ground set of all letter positions.
    pub fn complex(&self) -> SimplicialComplex {
        SimplicialComplex {
            vertices: self.word.positions().collect(),
            facets: self.facets(),
        }
    }

    /// Sphere when the Demazure product of the whole word equals the
    /// target, ball otherwise. The void complex is rejected.
    pub fn classify(&self) -> Result<Topology, Error> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        if self.word.demazure_product() == self.target {
            Ok(Topology::Sphere)
        } else {
            Ok(Topology::Ball)
        }
    }

    fn search(&self, emit: &mut impl FnMut(Face) -> bool) {
        let letters = self.word.letters();
        let target_len = self.target.length();
        if target_len > letters.len() {
            return;
        }
        let mut current = Permutation::identity(self.word.group_size());
        let mut face: Vec<VertexId> = Vec::new();
        search_rec(
            letters,
            0,
            &self.target,
            target_len,
            0,
            &mut current,
            &mut face,
            emit,
        );
    }
}

#[allow(clippy::too_many_arguments)]
fn search_rec(
    letters: &[crate::coxeter::Letter],
    i: usize,
    target: &Permutation,
    target_len: usize,
    complement_len: usize,
    current: &mut Permutation,
    face: &mut Vec<VertexId>,
    emit: &mut impl FnMut(Face) -> bool,
) -> bool {
    let needed = target_len - complement_len;
    let remaining = letters.len() - i;
    if needed > remaining {
        return true;
    }
    if needed == 0 {
        // complement already has full length; the rest of the letters
        // must all join the face
        if current == target {
            let mut facet: Face = face.iter().copied().collect();
            facet.extend(letters[i..].iter().map(|l| l.position));
            return emit(facet);
        }
        return true;
    }
    let letter = letters[i];
    if current.ascent_at(letter.index) {
        *current = current.right_multiplied(letter.index);
        let keep_going = search_rec(
            letters,
            i + 1,
            target,
            target_len,
            complement_len + 1,
            current,
            face,
            emit,
        );
        *current = current.right_multiplied(letter.index);
        if !keep_going {
            return false;
        }
    }
    face.push(letter.position);
    let keep_going = search_rec(
        letters,
        i + 1,
        target,
        target_len,
        complement_len,
        current,
        face,
        emit,
    );
    face.pop();
    keep_going
}
