//! Multipath cohomology of finite directed (multi)graphs.
//!
//! A multipath of a digraph is a spanning subgraph whose connected components
//! are single vertices or coherently oriented simple paths. Ordering all
//! multipaths by inclusion gives the path poset, and signing its covering
//! relations yields a cochain complex whose cohomology — multipath cohomology —
//! is a combinatorial invariant of the digraph.
//!
//! The crate provides:
//!
//! * [`digraph`] — digraphs, named graph families, reversal, disjoint union and
//!   gluing (pushouts along regular morphisms);
//! * [`poset`] — enumeration of the path poset with levels and covering
//!   relations, poset axioms checks, Hasse/DOT export;
//! * [`sign`] — sign assignments on path posets and their verification;
//! * [`cohomology`] — the field-coefficient cochain complex and exact Betti
//!   numbers over the rationals or a prime field;
//! * [`algebra`] — coefficients in a finite-rank unital algebra, Laurent
//!   polynomials, graded Euler characteristics and their recursions;
//! * [`simplicial`] — the multipath simplicial complex, reduced simplicial
//!   cohomology, and the degree-shift cross-check against [`cohomology`];
//! * [`structure`] — vertex decompositions, cone-edge detection, acyclicity
//!   certificates, Mayer–Vietoris bookkeeping, suspension, wedge families;
//! * [`linear`] — oriented linear graphs, orientation words, reductions, and
//!   closed-form cohomology.
//!
//! All arithmetic is exact; nothing in this crate touches floating point.

pub mod algebra;
pub mod cohomology;
pub mod digraph;
pub mod error;
pub mod linalg;
pub mod linear;
pub mod poset;
pub mod random;
pub mod sign;
pub mod simplicial;
pub mod structure;

pub use digraph::{Digraph, EdgeSet, GluingMap, GraphFamily, GraphMode};
pub use error::Error;
pub use poset::PathPoset;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
