//! Operad-matrix categories and weighted limits for objects of monoids.
//!
//! The crate builds, over the skeleton of finite sets:
//!
//! * the symmetric operads ⊥ → BTr → Lo → ⊤ and their 2-colored analogues,
//! * the labelled-function categories 𝔽_A and span categories [A B],
//! * 2-categories of 2-spans from 2×2 operad arrays,
//! * the Lawvere 2-theory of monoidal categories with its weight, and the
//!   variant weights for comonoids, commutative monoids, bimonoids and
//!   monoid actions,
//! * finite (monoidal) categories with an evaluator for theory cells, and
//! * weighted-limit and brute-force enumerations of (co/bi)monoid and
//!   action objects, checked against each other.

pub mod error;
pub mod fcat;
pub mod fincat;
pub mod finset;
pub mod limits;
pub mod operad;
pub mod oracles;
pub mod span;
pub mod theory;
pub mod twospan;
pub mod variants;
pub mod words;

pub use error::{Error, Result};
