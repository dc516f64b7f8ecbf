//! Exact-arithmetic combinatorial Hopf algebras of type B.
//!
//! The ground layer is the calculus of signed sets: finite sets with a
//! fixed-point-free involution, their section maps and signed permutations,
//! set compositions with restriction, concatenation, shuffle and
//! quasishuffle. On top of it sit concrete connected graded bialgebras with
//! explicit bases: DQSym on bicompositions, QSym on integer compositions,
//! the three-letter face algebra, signed linear orders with either
//! concatenation/deshuffle or shuffle/deconcatenation, and the bivariate
//! binomial algebra of section classes. A verification harness checks the
//! bialgebra axioms exhaustively in small degree, and antipodes come both
//! from the connected-graded recursion and from the alternating-sum formula.

pub mod bialgebra;
pub mod bicomp;
pub mod error;
pub mod hset;
pub mod instances;
pub mod lincomb;
pub mod perm;
pub mod registry;
pub mod setcomp;
pub mod verify;

pub use bialgebra::{
    antipode, antipode_takeuchi, coproduct_lin, graded_dimension, product_lin, GradedBialgebra,
};
pub use bicomp::{
    canonical_rep, enumerate_bicompositions, from_bicomposition, to_bicomposition, Bicomposition,
    Bipart,
};
pub use error::{Error, Result};
pub use hset::{
    canonical_map, enumerate_hset_compositions, enumerate_sections, stable_decompositions,
    HBijection, HSet, HSetComposition, SectionMap, Sign,
};
pub use lincomb::{tensor, Coeff, LinComb, TensorElement};
pub use perm::{enumerate_signed_permutations, SignedPermutation};
pub use setcomp::{
    enumerate_signed_set_compositions, quasishuffle, shuffle, SetComposition, SignedSetComposition,
};
pub use verify::{verify, Axiom, VerifyReport};
