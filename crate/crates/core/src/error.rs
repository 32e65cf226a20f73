use std::fmt;

use thiserror::Error;

/// Why a Cayley table was rejected as a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDefect {
    Empty,
    NotSquare { row: usize, len: usize },
    EntryOutOfRange { row: usize, col: usize, value: usize },
    IdentityNotAtZero,
    NotLatin { row: usize, col: usize },
    NotAssociative { a: usize, b: usize, c: usize },
}

impl fmt::Display for GroupDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDefect::Empty => write!(f, "empty table"),
            GroupDefect::NotSquare { row, len } => write!(f, "row {row} has {len} entries"),
            GroupDefect::EntryOutOfRange { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} out of range")
            }
            GroupDefect::IdentityNotAtZero => write!(f, "index 0 is not a two-sided identity"),
            GroupDefect::NotLatin { row, col } => {
                write!(f, "not a Latin square: repeated symbol at ({row},{col})")
            }
            GroupDefect::NotAssociative { a, b, c } => {
                write!(f, "not associative at (a,b,c)=({a},{b},{c})")
            }
        }
    }
}

/// Which map of a construction datum an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapName {
    Phi,
    Gamma,
    Psi,
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapName::Phi => "phi",
            MapName::Gamma => "gamma",
            MapName::Psi => "psi",
        })
    }
}

/// The three equalities making up the first compatibility condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompatibilityPart {
    /// `gamma_c lambda_{psi_c^-1(b)} = lambda_b gamma_c`
    GammaLambda,
    /// `phi_c lambda_b = lambda_b phi_c`
    PhiLambda,
    /// `phi_c gamma_c' = gamma_c' phi_c`
    PhiGamma,
}

impl fmt::Display for CompatibilityPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompatibilityPart::GammaLambda => "gamma_c*lambda_{psi_c^-1(b)} = lambda_b*gamma_c",
            CompatibilityPart::PhiLambda => "phi_c*lambda_b = lambda_b*phi_c",
            CompatibilityPart::PhiGamma => "phi_c*gamma_c' = gamma_c'*phi_c",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotAGroup: {0}")]
    NotAGroup(GroupDefect),

    #[error("size mismatch: {what} (expected {expected}, got {got})")]
    SizeMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("BraceAxiomViolated at (a,b,c)=({a},{b},{c})")]
    BraceAxiomViolated { a: usize, b: usize, c: usize },

    #[error("SearchCapExceeded: order {n} exceeds search cap {cap}")]
    SearchCapExceeded { n: usize, cap: usize },

    #[error("NotNilpotent")]
    NotNilpotent,

    #[error("OrderTooSmall: order {0} is at most 2")]
    OrderTooSmall(usize),

    #[error("WitnessVerificationFailed: {0}")]
    WitnessVerificationFailed(String),

    #[error("AdditiveGroupNotAbelian at (a,b)=({a},{b})")]
    AdditiveGroupNotAbelian { a: usize, b: usize },

    #[error("NotHomomorphism: {map} at (c,c')=({c},{c2})")]
    NotHomomorphism { map: MapName, c: usize, c2: usize },

    #[error("MapNotAutomorphism: {map}_{c} does not preserve the {table} table")]
    MapNotAutomorphism {
        map: MapName,
        c: usize,
        table: &'static str,
    },

    #[error("LambdaCompatibilityViolated: {part} fails at (b,c,c')=({b},{c},{c2})")]
    LambdaCompatibilityViolated {
        part: CompatibilityPart,
        b: usize,
        c: usize,
        c2: usize,
    },

    #[error("CocycleConditionViolated at (c,c',b)=({c},{c2},{b})")]
    CocycleConditionViolated { c: usize, c2: usize, b: usize },

    #[error("NotCharacteristic: B x {{1}} is not characteristic in either group")]
    NotCharacteristic,

    #[error("ConstraintViolated: 4(d3 - eps*d4) + d1*d2*(1 - eps) = 0 mod {p}")]
    ConstraintViolated { p: u64 },

    #[error("PrimeRequired: {0} is not an odd prime")]
    PrimeRequired(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
