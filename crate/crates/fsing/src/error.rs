//! Error type shared across the crate.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong, from bad input to violated internal
/// invariants. `exit_code` groups the variants the way the CLI reports them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Modulus failed the primality check or is out of range.
    NotPrime(u64),
    /// Duplicate or empty variable names in a ring declaration.
    BadVariables(String),
    /// Two values from different rings were combined.
    RingMismatch,
    /// Monomials with different variable counts were compared.
    LengthMismatch { left: usize, right: usize },
    /// An exponent computation left the 32-bit range.
    ExponentOverflow,
    /// An integer computation (nu, p^e) left the supported range.
    IntegerOverflow(&'static str),
    /// Syntax error while parsing an expression; column is 1-based.
    Parse { message: String, column: usize },
    /// Unknown identifier in an expression; column is 1-based.
    UnknownIdentifier { name: String, column: usize },
    /// Problem-file structure error (missing block, bad key, ...).
    ProblemFile { message: String, line: usize },
    /// Failed to read an input file.
    Io(String),
    /// An operation that needs a proper ideal was given the unit ideal.
    UnitIdeal(&'static str),
    /// An operation was given an empty input list.
    EmptyInput(&'static str),
    /// The matrix is not square where a square one is required.
    NotSquare { rows: usize, cols: usize },
    /// Matrix dimensions do not match the operation.
    DimensionMismatch(&'static str),
    /// delta does not equal dim R - dim R/I.
    DeltaMismatch { expected: usize, given: usize },
    /// A documented mathematical precondition does not hold.
    Precondition(&'static str),
    /// The multiplier does not satisfy u*I within the Frobenius power of I.
    InvalidFrobeniusPair,
    /// The quotient failed the Cohen-Macaulay certificate.
    NotCohenMacaulay {
        codim: usize,
        resolution_length: usize,
    },
    /// The module of Frobenius maps is not torsion-free, so the
    /// parameter-test-ideal pipeline cannot proceed.
    NotTorsionFree,
    /// No cyclic generator was found for the multiplier module.
    CyclicityFailure,
    /// The test-element search exhausted its draw budget.
    CandidateExhausted { draws: usize },
    /// A caller-supplied test element failed validation.
    InvalidTestElement(String),
    /// A chain iteration exceeded its cap; the chains provably stabilize,
    /// so this signals a bug rather than a slow input.
    IterationCap { what: &'static str, cap: u64 },
    /// An internal consistency check failed.
    Internal(&'static str),
}

impl Error {
    /// CLI exit code: 1 input, 2 mathematical precondition, 3 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotPrime(_)
            | Error::BadVariables(_)
            | Error::RingMismatch
            | Error::LengthMismatch { .. }
            | Error::ExponentOverflow
            | Error::IntegerOverflow(_)
            | Error::Parse { .. }
            | Error::UnknownIdentifier { .. }
            | Error::ProblemFile { .. }
            | Error::Io(_)
            | Error::UnitIdeal(_)
            | Error::EmptyInput(_)
            | Error::NotSquare { .. }
            | Error::DimensionMismatch(_) => 1,
            Error::DeltaMismatch { .. }
            | Error::Precondition(_)
            | Error::InvalidFrobeniusPair
            | Error::NotCohenMacaulay { .. }
            | Error::NotTorsionFree
            | Error::CyclicityFailure
            | Error::CandidateExhausted { .. }
            | Error::InvalidTestElement(_) => 2,
            Error::IterationCap { .. } | Error::Internal(_) => 3,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not a prime in [2, 2^31)"),
            Error::BadVariables(msg) => write!(f, "bad variable list: {msg}"),
            Error::RingMismatch => write!(f, "operands belong to different rings"),
            Error::LengthMismatch { left, right } => {
                write!(f, "monomial lengths differ: {left} vs {right}")
            }
            Error::ExponentOverflow => write!(f, "monomial exponent overflows 32 bits"),
            Error::IntegerOverflow(what) => write!(f, "integer overflow computing {what}"),
            Error::Parse { message, column } => {
                write!(f, "syntax error at column {column}: {message}")
            }
            Error::UnknownIdentifier { name, column } => {
                write!(f, "unknown identifier `{name}` at column {column}")
            }
            Error::ProblemFile { message, line } => {
                write!(f, "problem file, line {line}: {message}")
            }
            Error::Io(msg) => write!(f, "{msg}"),
            Error::UnitIdeal(op) => write!(f, "{op}: the ideal is the unit ideal"),
            Error::EmptyInput(op) => write!(f, "{op}: empty input"),
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            Error::DimensionMismatch(op) => write!(f, "{op}: matrix dimensions do not match"),
            Error::DeltaMismatch { expected, given } => {
                write!(f, "delta is {given}, but dim R - dim R/I = {expected}")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::InvalidFrobeniusPair => {
                write!(f, "u*I is not contained in the Frobenius power of I")
            }
            Error::NotCohenMacaulay {
                codim,
                resolution_length,
            } => write!(
                f,
                "not Cohen-Macaulay: resolution length {resolution_length} != codimension {codim}"
            ),
            Error::NotTorsionFree => write!(f, "not T-torsion-free"),
            Error::CyclicityFailure => write!(
                f,
                "no cyclic generator found (wrong canonical pre-image or non-CM input?)"
            ),
            Error::CandidateExhausted { draws } => write!(
                f,
                "no test-element candidate passed after {draws} draws; supply one explicitly"
            ),
            Error::InvalidTestElement(msg) => write!(f, "invalid test element: {msg}"),
            Error::IterationCap { what, cap } => {
                write!(f, "{what}: iteration cap {cap} exceeded (internal error)")
            }
            Error::Internal(msg) => write!(f, "internal consistency error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
