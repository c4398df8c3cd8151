//! Exact arithmetic and left-ideal calculus for the local model algebras
//! `A = M_f(B)` of a terminal order over `R = k[[u,v]]`, with the deformation
//! constructions that move a rank-one module off the two-sided locus.
//!
//! Everything is computed over a cyclotomic field `Q(ζ)` inside the
//! truncation `A / 𝔪^N A`. Ideals carry a saturation degree certifying that
//! the truncated computation agrees with the untruncated one.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cyclotomic;
pub mod deformations;
pub mod error;
pub mod linalg;
pub mod notation;
pub mod orders;
pub mod pool;
pub mod power_series;
pub mod submodules;

pub use cyclotomic::{CycField, CycScalar, Rational};
pub use error::{Error, Result};
pub use linalg::{SparseVec, Subspace};
pub use power_series::{CommIdeal, SeriesRing, TruncSeries};
pub use orders::{Algebra, AlgebraElement, AlgebraKind, AlgebraSpec};
pub use submodules::{IdealChain, LeftIdeal, RowModule};
pub use deformations::{DeformationCertificate, DivisibilityReport};
