use thiserror::Error;

use crate::constructions::ConstructionReport;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree {0} is not supported (1 <= n <= 24)")]
    UnsupportedDegree(u32),
    #[error("modulus {modulus:x} does not have degree {n}")]
    DegreeMismatch { n: u32, modulus: u32 },
    #[error("modulus {modulus:x} of degree {n} is not irreducible")]
    NonIrreducible { n: u32, modulus: u32 },
    #[error("{r} does not divide {n}")]
    NotADivisor { r: u32, n: u32 },
    #[error("linearized map is singular")]
    SingularMap,
    #[error("function is not bent: {0}")]
    NotBent(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: u32, got: u32 },
    #[error("parameters are not bent-admissible: {0}")]
    NotBentAdmissible(String),
    #[error("side condition failed: {condition}")]
    SideConditionFailed {
        condition: String,
        report: Box<ConstructionReport>,
    },
    #[error("certificate does not hold")]
    CertificateInvalid,
    #[error("zero denominator in closed-form dual coefficient")]
    ZeroDenominator,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
