//! Combinatorial engine for football patterns and their dual ribbon graphs.
//!
//! The [`ribbon`] module holds the signed rotation-system representation with face
//! tracing, duality, medial and truncation operators, validation and isomorphism. On top
//! of it sit the pattern [`catalog`], cut-and-paste [`surgery`], covering maps in
//! [`covers`], permutation encodings in [`monodromy`], and the feasibility analysis in
//! [`classify`]. Graphs are read and written in the RGF text format ([`rgf`]).

pub mod catalog;
pub mod classify;
pub mod covers;
pub mod error;
pub mod monodromy;
pub mod perm;
pub mod rgf;
pub mod ribbon;
pub mod surgery;

pub use error::{Error, Result};
pub use ribbon::{Color, Dart, PatternType, RibbonGraph, Role};
