//! Shifted standard Young tableaux and their diagonal vectors.
//!
//! The gap vectors of the standard tableaux of a shifted shape `D_λ` are
//! exactly the lattice points of the generalized permutohedron
//! `P_λ = Σ_{i≤j<n} Δ_{[i,j]} + Σ λ_i Δ_{[i,n]}`, and their counts are the
//! coefficients of an explicit polynomial. This crate enumerates all of these
//! objects exactly and checks the relations between them.

pub mod error;
pub mod poly;
pub mod polytope;
pub mod shapes;
pub mod tableaux;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{RationalPolynomial, Ssyt};
pub use polytope::{p_lambda, GenPermutohedron, LatticePoint, SimplexTerm};
pub use shapes::{Cell, Partition, ShiftedDiagram};
pub use tableaux::{
    count_by_gaps, enumerate_tableaux, DiagonalVector, GapTable, GapVector, ShiftedTableau,
};
pub use trees::{enumerate_trees, enumerate_vertices, LabeledBinaryTree, Subdivision, VertexPoint};
