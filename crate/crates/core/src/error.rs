//! Error taxonomy shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The measure cannot support an orthonormal polynomial of the
    /// requested degree (its support has too few points, or all mass was
    /// annihilated by a weight).
    #[error("DegenerateMeasure: {0}")]
    DegenerateMeasure(String),

    /// An evaluation point that must lie strictly outside the convex hull
    /// of the support was inside or on it.
    #[error("ZInsideHull: point {z} is within {dist:.3e} of the convex hull")]
    ZInsideHull { z: String, dist: f64 },

    /// A weighted Cauchy denominator fell below a tenth of its analytic
    /// lower bound, signalling quadrature breakdown.
    #[error("NearZeroDenominator: |denominator| = {value:.3e} < bound/10 = {threshold:.3e}")]
    NearZeroDenominator { value: f64, threshold: f64 },

    /// A Verblunsky coefficient left the open unit disk.
    #[error("InvalidVerblunsky: |alpha_{index}| = {modulus} >= 1")]
    InvalidVerblunsky { index: usize, modulus: f64 },

    /// Degree index outside the constructed range of a basis.
    #[error("IndexOutOfRange: degree {index} exceeds basis maximum {max}")]
    IndexOutOfRange { index: usize, max: usize },

    /// An operation requiring a measure on the real line received nodes or
    /// atoms with nonnegligible imaginary part.
    #[error("NotRealMeasure: support point {index} has imaginary part {imag:.3e}")]
    NotRealMeasure { index: usize, imag: f64 },

    /// The Joukowski-type map was evaluated on (or too close to) the slit.
    #[error("OnSlit: point is within {dist:.3e} of [-2, 2]")]
    OnSlit { dist: f64 },

    /// An operation requiring a unit-circle measure received another kind.
    #[error("NotCircleMeasure: operation requires support on the unit circle")]
    NotCircleMeasure,

    /// No closed-form Faber polynomial of the requested degree exists for
    /// this support.
    #[error("InadmissibleDegree: degree {degree} not admissible ({admissible})")]
    InadmissibleDegree { degree: usize, admissible: String },

    /// Malformed measure data (constructor or deserialization).
    #[error("InvalidMeasure: {0}")]
    InvalidMeasure(String),
}
