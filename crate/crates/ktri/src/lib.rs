//! Exact combinatorics of k-triangulations of a convex n-gon.
//!
//! A k-triangulation is a maximal set of diagonals with no k+1 of them
//! mutually crossing. This crate realises the simplicial complex of such
//! sets as a subword complex over the symmetric group, maps its facets to
//! reduced pipe dreams, and cross-checks four independent ways of
//! counting them: exhaustive enumeration, subword-complex facets,
//! Schubert polynomial evaluation, and a Hankel determinant of Catalan
//! numbers (equivalently a product formula).
//!
//! The pieces:
//!
//! * [`coxeter`] — permutations, words in adjacent transpositions,
//!   Coxeter length, reduced words, Demazure products;
//! * [`subword`] — subword complexes, link/deletion, Euler
//!   characteristic, vertex decomposition, sphere/ball classification;
//! * [`polygon`] — diagonals, crossings, enumeration of
//!   k-triangulations, star decompositions, staircase fillings;
//! * [`pipedream`] — pipe dreams, the triangulation bijection, Schubert
//!   polynomials;
//! * [`counting`] — Catalan numbers, the determinant and product
//!   formulas.

pub mod counting;
pub mod coxeter;
pub mod error;
pub mod pipedream;
pub mod polygon;
pub mod subword;

pub use error::Error;

pub use coxeter::{Letter, Permutation, Word};
pub use pipedream::{
    dream_from_triangulation, reduced_dreams, relevant_word, schubert_polynomial, staircase_word,
    target_permutation, triangulation_from_dream, PipeDream, SchubertPolynomial,
};
pub use polygon::{
    enumerate_triangulations, k_stars, relevant_diagonals, staircase_filling, Diagonal, KStar,
    StaircaseFilling, StarDecomposition, Triangulation,
};
pub use subword::{
    DecompositionFailure, DecompositionTree, SimplicialComplex, SubwordComplex, Topology,
};
