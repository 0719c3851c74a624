//! Construction and exact verification of dual 3-nets embedded in finite
//! projective planes PG(2,q).
//!
//! A dual 3-net of order n is a triple of pairwise disjoint n-point sets
//! {A, B, C} such that every line meeting two of the sets meets each of the
//! three in exactly one point. This crate builds every classical family of
//! such nets (Pasch, the order-3 parametric family, coset nets on cubic
//! curves, conic-plus-line nets, the subplane projection family), checks the
//! defining axioms by exact linear algebra over GF(p^k), and runs executable
//! validators for the structure theorems that govern them (conic containment
//! when one component is collinear, the converse via involutory
//! perspectivities, the complete order-4 taxonomy, and the realizable
//! point-count scan for non-singular cubics).
//!
//! Everything is deterministic: field element enumeration, subfield
//! embeddings, pivoting, search order and serialization are all pinned, so
//! two runs of the same command produce byte-identical output.
//!
//! See the `examples/` directory for one runnable walk-through per
//! capability, and the `threenets` binary for the batch CLI.

pub mod cli;
pub mod curve_groups;
pub mod curves;
pub mod field;
pub mod geometry;
pub mod io;
pub mod linalg;
pub mod nets;
pub mod redei;
pub mod rng;
pub mod search;
pub mod theorems;

pub use field::{FieldElement, FieldSpec};
