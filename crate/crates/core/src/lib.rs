//! Exact-arithmetic classification of finite-dimensional nilpotent Lie
//! algebras of class two with two-dimensional derived subalgebra.
//!
//! The crate provides:
//!
//! - exact linear algebra over Q and GF(p) ([`field`], [`matrix`], [`poly`]);
//! - structure-constant Lie algebras and their invariants ([`lie`]);
//! - constructors for the named families of the classification ([`catalog`]);
//! - the pencil-of-alternating-forms fingerprint that separates them
//!   ([`pencil`]);
//! - the classification decision procedure ([`classify`]);
//! - Schur-multiplier dimensions, both by closed formula and by a
//!   Chevalley–Eilenberg H² oracle ([`homology`]);
//! - an explicit model of the nonabelian exterior square and the exterior
//!   center ([`extsquare`]);
//! - the `nilclass2-v1` JSON file format ([`io`]).
//!
//! All values are immutable after construction and all operations are pure;
//! callers may parallelize freely over independent inputs.

pub mod catalog;
pub mod classify;
pub mod extsquare;
pub mod field;
pub mod homology;
pub mod io;
pub mod lie;
pub mod matrix;
pub mod pencil;
pub mod poly;
pub mod rng;

pub use catalog::{dimension, enumerate, make, FamilyParams, FamilyTag};
pub use classify::{classify, classify_stem, split_stem, validate_hypotheses, ClassificationResult};
pub use field::{FieldDescriptor, Scalar};
pub use lie::{AlgebraReport, StructureConstants};
pub use matrix::{random_invertible, Matrix, Subspace};
pub use pencil::{fingerprint, AlternatingPencil, Direction, Fingerprint};
