use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Pauli index {0} out of range (expected 1, 2 or 3)")]
    PauliIndex(usize),

    #[error("axis is not a unit vector (|n| = {norm})")]
    NonUnitAxis { norm: f64 },

    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not unimodular (|det - 1| = {deviation:e})")]
    NotUnimodular { deviation: f64 },

    #[error("point ({t}, {x}, {y}, {z}) lies on the singular set")]
    SingularPoint { t: f64, x: f64, y: f64, z: f64 },

    #[error("mass must be positive, got {0}")]
    InvalidMass(f64),

    #[error("parameter `{name}` = {value} outside its admissible range")]
    OutOfRange { name: &'static str, value: f64 },

    #[error("{what} fails its wave-equation precondition (relative residual {residual:e})")]
    Precondition { what: String, residual: f64 },

    #[error("integral diverges: {0}")]
    Divergent(String),

    #[error("quadrature did not converge within {budget} subdivisions (error estimate {estimate:e})")]
    NonConvergence { budget: usize, estimate: f64 },

    #[error("sampling budget exhausted: {accepted} of {requested} points after {attempts} attempts")]
    SamplingBudget {
        requested: usize,
        accepted: usize,
        attempts: usize,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("empty point set")]
    EmptyPoints,

    #[error("reference field vanishes at every sample point")]
    ZeroReference,

    #[error("unknown identifier `{0}`")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
