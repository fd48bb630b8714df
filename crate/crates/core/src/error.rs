use thiserror::Error;

/// Errors raised by the geometric routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("element {re} + {im}τ is light-like and cannot be inverted")]
    LightLikeElement { re: f64, im: f64 },

    #[error("{function} is undefined at idempotent coordinate {value}")]
    DomainError { function: &'static str, value: f64 },

    #[error("boundary points are not in space-like position")]
    NotSpacelike,

    #[error("cross ratio degenerates in one of the factors")]
    InfiniteCrossRatio,

    #[error("isometry is not admissible (elliptic or trivial factor)")]
    NotAdmissible,

    #[error("isometry is not loxodromic")]
    NotLoxodromic,

    #[error("matrix factor has non-positive determinant {det}")]
    NonPositiveDeterminant { det: f64 },

    #[error("fixed-point configuration has the wrong cyclic orientation")]
    OrientationReversed,

    #[error("point is sent through the boundary at infinity")]
    BoundaryHit,

    #[error("endpoints have light-like displacement")]
    LightLikeDisplacement,

    #[error("segment {index} of the sampled curve is not space-like")]
    NonSpacelikeSegment { index: usize },

    #[error("invalid geodesic data: {0}")]
    InvalidGeodesic(&'static str),

    #[error("{0} + {1}τ lies outside the closed positive cone")]
    ConeViolation(f64, f64),

    #[error("B-lengths of glued curves differ: {0:?} vs {1:?}")]
    LengthMismatch((f64, f64), (f64, f64)),

    #[error("no gluing record for curve {0}")]
    MissingRecord(usize),

    #[error("curve {0} is degenerate in this structure")]
    DegenerateCurve(usize),

    #[error("H-inverse is undefined when (y, z) = (0, 0)")]
    AxisDegenerate,

    #[error("multicurve is not contained in the pants decomposition: {0}")]
    NotContained(String),

    #[error("invalid stratum point: {0}")]
    InvalidStratumPoint(String),

    #[error("pinch schedule is invalid: {0}")]
    ScheduleInvalid(String),

    #[error("invalid pants decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("peripheral {index}: delta² = {delta_sq} but |length|² = {norm}")]
    EConstraint { index: usize, delta_sq: f64, norm: f64 },

    #[error("coordinate vector does not match the decomposition: {0}")]
    ShapeMismatch(String),

    #[error("relation residual {0} exceeds the tolerance")]
    RelationResidual(f64),

    #[error("unknown generator {0}")]
    UnknownGenerator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
