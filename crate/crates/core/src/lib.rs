//! Combinatorial and algebraic bookkeeping for handle decompositions of
//! smooth 4-manifolds: the width multiset and its moves, algebraic Kirby
//! diagrams with exact integer homology, homology-level trisection
//! diagrams, and bridge-trisection data for cyclic branched covers.

pub mod bridge;
pub mod cli;
pub mod decomp;
pub mod error;
pub mod kirby;
pub mod trisect;
pub mod widthset;

pub use error::{Error, Result};
pub use widthset::WidthMultiset;
