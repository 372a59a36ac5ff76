use thiserror::Error;

use crate::lattice::Surface;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("model mismatch: {0} vs {1}")]
    ModelMismatch(Surface, Surface),
    #[error("operation not supported on {0}")]
    Unsupported(String),
    #[error("Cartier matching fails: L'.T = {r_degree} but L''.T = {p_degree}")]
    NotCartier { r_degree: i64, p_degree: i64 },
    #[error("generator {0} has no known restriction to the limit surface")]
    UnsupportedGenerator(String),
    #[error("exceptional e{index} has coefficient {coeff} and cannot be dropped")]
    NonzeroDropped { index: usize, coeff: i64 },
    #[error("wrong number of coefficients for {surface}: expected {expected}, got {got}")]
    CoefficientCount {
        surface: Surface,
        expected: usize,
        got: usize,
    },
    #[error("index {index} out of range for {what}")]
    IndexOutOfRange { what: &'static str, index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PositivityError {
    #[error("{0} is not an R-model class")]
    NotR(Surface),
    #[error("{0} is not a P-model class")]
    NotP(Surface),
    #[error("P({0}) has infinitely many (-1)-classes or no trusted list; only n <= 8 is supported")]
    TooManyPoints(usize),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuliError {
    #[error("tuple is 2-divisible; outside the non-2-divisible locus")]
    TwoDivisible,
    #[error("tuple has eps = 1; only eps = 0 components are classified")]
    EpsOne,
    #[error("invalid fundamental coefficients: {0}")]
    Invalid(String),
    #[error("no trichotomy case applies to {0}")]
    Unclassified(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DispatchError {
    #[error("outside the theorem: {0}")]
    OutOfTheorem(#[from] ModuliError),
    #[error("proved property violated for {tuple}: {what}")]
    ClaimViolated { tuple: String, what: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Positivity(#[from] PositivityError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LedgerError {
    #[error("C0^2 - m - k = {0} is odd")]
    OddC0(i64),
    #[error("D0^2 - m - l = {0} is odd")]
    OddD0(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeveriError {
    #[error("delta = {delta} outside 0 <= delta < g = {g}")]
    DeltaOutOfRange { g: i64, delta: i64 },
    #[error("tangency order m = {m} outside 1 <= m <= L.T = {lt}")]
    TangencyOutOfRange { m: i64, lt: i64 },
    #[error("fixed multiplicities sum to {sum}, need L.T = {lt} > sum")]
    FixedTooLarge { sum: i64, lt: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at byte {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

/// Errors that end a command with exit status 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
