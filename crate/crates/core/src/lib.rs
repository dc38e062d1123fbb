//! Flag simplicial complexes: construction, classification, face numbers,
//! edge-count upper bounds, and exhaustive isomorph-free enumeration of small
//! flag 3-dimensional complexes.
//!
//! Complexes live on at most 64 vertices, with faces stored as bitsets. The
//! runnable programs in `examples/` walk through each capability; the
//! `flagtop` binary exposes the same operations on facet files.

pub mod bounds;
pub mod cli;
pub mod complex;
pub mod constructions;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod validators;
pub mod verify;

pub use complex::{FVector, Face, Graph, SimplicialComplex, Subcomplex};
pub use error::{Error, Result};
