//! Alternating dimaps: orientably embedded Eulerian digraphs whose edges
//! alternate in and out around every vertex, together with their three
//! reduction operations, triality, and the family of Tutte-like invariants
//! defined on them.

pub mod algebra;
pub mod census;
pub mod dimap;
pub mod error;
pub mod formats;
pub mod invariants;
pub mod minors;
pub mod perm;
pub mod reduce;
pub mod structure;
pub mod triality;

pub use dimap::{AlternatingDimap, EdgeId, VertexId};
pub use error::{Error, Result};

#[doc = include_str!("../../../book/src/dimaps.md")]
mod book_dimaps {}
#[doc = include_str!("../../../book/src/reductions.md")]
mod book_reductions {}
#[doc = include_str!("../../../book/src/invariants.md")]
mod book_invariants {}
#[doc = include_str!("../../../book/src/minors.md")]
mod book_minors {}
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
