//! Braid calculus for transversal links: closure invariants, Garside normal
//! forms and conjugacy keys, Markov move certificates, certificate search,
//! Legendrian index arithmetic and numerical curve checks.

pub mod braid;
pub mod contact;
pub mod garside;
pub mod geometry;
pub mod laurent;
pub mod moves;
pub mod scalar;
pub mod search;

pub use num_bigint::BigInt;

pub use braid::{BraidError, BraidWord};
pub use garside::{ConjKey, NormalForm};
pub use moves::{Mode, Move, MoveCertificate};
pub use search::{SearchBudget, SearchOutcome};

/// Alexander polynomials, with exact big-integer coefficients.
pub type AlexanderPolynomial = laurent::Laurent<BigInt>;

/// Double-precision sampled curves.
pub type Curve = geometry::SampledCurve<f64>;

/// Double-precision polylines.
pub type Polyline = geometry::Polyline<f64>;
