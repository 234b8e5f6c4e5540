//! Exact equivariant symplectic linear algebra on the first homology of
//! finite Galois covers of surfaces.
//!
//! The crate builds covering surfaces combinatorially from monodromy
//! data, extracts the symplectic structure and deck-group action on
//! (co)homology in exact rational arithmetic, and constructively finds
//! and certifies group-invariant Lagrangian subspaces. All certificates
//! are re-verified from scratch; nothing numerical is ever trusted.

pub mod corpus;
pub mod cover;
pub mod group;
pub mod input;
pub mod linalg;
pub mod pipeline;
pub mod rep;
pub mod report;
pub mod search;
pub mod symplectic;

pub use group::{FiniteGroup, GroupWord};
pub use linalg::{Rat, RationalMatrix, Subspace};
pub use rep::RationalRep;
pub use search::{SearchConfig, SearchOutcome};
pub use symplectic::{LagrangianCertificate, SymplecticGModule};
