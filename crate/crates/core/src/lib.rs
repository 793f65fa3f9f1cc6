//! Exact symbolic engine for the q = −1 anticommutative plane.
//!
//! The crate builds algebras as twisted doubles A × A of a commutative base
//! (plane polynomials, or finite structure-constant algebras for the discrete
//! and quaternion presets), together with the differential calculi on the
//! plane double, metrics on one-forms, and the scalar/gauge field-theory
//! quantities derived from them. All arithmetic is exact over the Gaussian
//! rationals: every identity the crate checks is an equality of canonical
//! forms, never an approximation.
//!
//! All values are immutable and all operations are pure, so everything here
//! is safe to call concurrently.

pub mod calculus;
pub mod doubling;
pub mod error;
pub mod field_theory;
pub mod finite;
pub mod linalg;
pub mod metric;
pub mod poly;
pub mod scalar;

pub use calculus::{CalculusSpec, OneForm, RewriteTable, TwoForm, Variant};
pub use doubling::{
    plane_context, quaternion_context, z2_context, z2z2_context, BaseAlgebra, Doubled,
    DoublingContext, PlaneAlgebra, PlaneElement, StarSign,
};
pub use error::Error;
pub use field_theory::{Connection, FieldConfig, StarConvention};
pub use finite::FiniteAlgebra;
pub use metric::{metric_eval, metric_solve, MetricSolution, MetricSpec};
pub use poly::{Derivation, PolyElement};
pub use scalar::Scalar;
