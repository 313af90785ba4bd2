//! Exact-arithmetic engine for the tensor category of oriented Kauffman
//! diagrams.
//!
//! Objects of the category are words over the two-letter alphabet `{x, x*}`;
//! morphisms are formal linear combinations of non-crossing oriented planar
//! diagrams between two boundary words, composed by gluing with closed loops
//! replaced by the loop parameters `d_L` (anticlockwise) and `d_R`
//! (clockwise). On top of the raw diagram calculus the crate provides
//!
//! * Jones-Wenzl idempotents and the projectors cutting out simple objects,
//! * the fusion ring of simple objects with a brute-force dimension oracle,
//! * *-structures, the C* normalization and exact Gram-matrix positivity
//!   tests,
//! * fiber functors given by a pair of invertible matrices subject to two
//!   trace conditions, their evaluation, gauge normalization and similarity
//!   classification, and
//! * emission of the Hopf algebra presentations associated to a fiber
//!   functor, including the universal-unitary relation sets.
//!
//! All arithmetic is exact by default: coefficients live in a pluggable
//! field, either rational functions in the loop parameter `d` (generic
//! mode), exact rationals at a fixed numeric `d`, or complex floats with a
//! small tolerance.

pub mod acceptance;
pub mod diagrams;
pub mod fiber;
pub mod fusion;
pub mod hopf;
pub mod json;
pub mod linalg;
pub mod morphisms;
pub mod scalars;
pub mod star;
pub mod words;

use thiserror::Error;

/// Errors shared across the whole engine.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Composition of morphisms or diagrams whose boundary words do not
    /// match.
    #[error("signature mismatch: expected boundary `{expected}`, found `{found}`")]
    SignatureMismatch { expected: String, found: String },
    /// Division by zero or inversion of a zero scalar.
    #[error("division by zero")]
    DivisionByZero,
    /// A quantum integer vanished where genericity was required.
    #[error("loop parameter is not generic: [{level}](d) = 0")]
    NotGeneric { level: u32 },
    /// Argument outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A matrix that must be invertible is singular.
    #[error("singular matrix")]
    SingularMatrix,
    /// Fiber-functor trace conditions failed; both sides are reported.
    #[error("trace condition violated: trace(tB A^-1) = {left}, trace(tA B^-1) = {right}, required {required}")]
    TraceCondition {
        left: String,
        right: String,
        required: String,
    },
    /// Eigenvalue-list constraint of the unitary construction failed.
    #[error("eigenvalue constraint violated: sum mu^2 = {sum_sq}, sum mu^-2 = {sum_inv_sq}, |d| = {expected}")]
    EigenvalueConstraint {
        sum_sq: String,
        sum_inv_sq: String,
        expected: String,
    },
    /// *-structure parameters failed their defining conditions.
    #[error("invalid *-structure parameters: {0}")]
    InvalidStarParams(String),
    /// Operation requires a one-parameter context with d_L = d_R.
    #[error("operation requires a one-parameter context (d_L = d_R)")]
    TwoParameterContext,
    /// Operation requires a real loop parameter.
    #[error("loop parameter must be real, got {0}")]
    NonRealParameter(String),
    /// Fiber data does not come from the unitary constructor.
    #[error("fiber data is not unitary: {0}")]
    NotUnitary(String),
    /// Parse or serialization failure on an external interface.
    #[error("parse error: {0}")]
    Parse(String),
}

pub use diagrams::{Arc, ArcCensus, BoundaryPoint, OrientedDiagram, Side};
pub use fiber::{DenseTensor, FiberData};
pub use fusion::FusionResult;
pub use hopf::RelationSet;
pub use linalg::Matrix;
pub use morphisms::Morphism;
pub use scalars::{Field, FieldContext, Rat};
pub use words::{Letter, Word};
