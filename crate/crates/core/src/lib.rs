//! Exact-arithmetic models of six graded algebras of K-theoretic combinatorics:
//! the multi-fundamental quasisymmetric functions and their dual, the two
//! multi-Malvenuto-Reutenauer algebras of m- and M-permutations, and the
//! multi-Schur world of stable Grothendieck polynomials and their duals.
//!
//! Everything is integer-exact. Infinite objects (products in the m-world,
//! power-series bases) are handled through explicit truncation caps that the
//! caller chooses and that results carry with them. Every nontrivial identity
//! has at least two independent computation routes, and the `verify` module
//! aggregates brute-force checks of all of them at desk scale.

pub mod error;
pub mod hopf;
pub mod lincomb;
pub mod operators;
pub mod ppartitions;
pub mod series;
pub mod shapes;
pub mod tableaux;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
