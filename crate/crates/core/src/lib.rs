//! Connected width rank of finite simplicial complexes.
//!
//! A *morse labeling* assigns an integer to every vertex so that each simplex
//! spans at most two consecutive values. Its slabs `f⁻¹[i, i+1]` are the full
//! subcomplexes on labels `{i, i+1}`; the homological connected width rank of a
//! labeling is the largest rank of `H1(C) → H1(K)` over slab components `C`.
//! This crate builds complexes and labelings, evaluates that rank together with
//! the quotient graph of slabs and levels, and searches for labelings that
//! minimize it.

pub mod complex;
pub mod error;
pub mod generators;
pub mod homology;
pub mod morse;
pub mod scx;
pub mod search;
pub mod verify;

pub use complex::{Simplex, SimplicialComplex, Subcomplex};
pub use error::{Error, Result};
pub use homology::{betti1, image_rank_h1, BoundaryPair, FieldSpec, H1Context};
pub use morse::{hcwr_value, quotient_graph, validate_labeling, MorseLabeling, QuotientGraph, WidthReport};
pub use search::{anneal_min, certified_bounds, exhaustive_min, AnnealParams, SearchResult};
