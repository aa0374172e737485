use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("zero denominator at position {pos}")]
    ZeroDenominator { pos: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("cannot homogenize a polynomial of degree {actual} to degree {requested}")]
    HomogenizeDegree { requested: usize, actual: usize },
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("division is not exact: {0}")]
    InexactDivision(String),

    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("linear system is underdetermined (solution space of dimension {0})")]
    Underdetermined(usize),
    #[error("modular rank computations disagree ({0} vs {1}); retry with another seed")]
    PrimeDisagreement(usize, usize),

    #[error("curve is not reduced: Hilbert function does not stabilize ({at_3d5} at degree 3d-5, {at_3d4} at degree 3d-4)")]
    NonReducedCurve { at_3d5: usize, at_3d4: usize },
    #[error("curve has mdr(f) = 0 (concurrent lines); deformation analysis is not defined")]
    MdrZero,
    #[error("curve degree must be at least 2, found {0}")]
    DegreeTooSmall(usize),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("Tjurina number {tau} disagrees with the {class} formula value {formula}")]
    TauFormulaMismatch { class: &'static str, tau: usize, formula: i64 },
    #[error("declared local Tjurina numbers sum to {local}, but the curve has tau = {global}")]
    TauBudgetMismatch { local: usize, global: usize },

    #[error("unsupported germ type `{0}`: only A_n, D4, E6 and T(p,q) are quasi-homogeneous two-term germs; other germs need the general equisingular-ideal algorithm, which is not implemented")]
    UnsupportedGermType(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no relation of degree {0} vanishes on the parametrization")]
    KernelDimZero(usize),
    #[error("relations of degree {degree} form a space of dimension {dim} > 1; parametrization is improper or degenerate")]
    KernelDimHigh { degree: usize, dim: usize },
    #[error("parametrization components share a common factor")]
    BasePoints,

    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. }
            | Error::UnknownVariable { .. }
            | Error::ZeroDenominator { .. }
            | Error::NotHomogeneous
            | Error::DegreeTooSmall(_)
            | Error::UnsupportedGermType(_)
            | Error::InvalidParameter(_) => 2,
            Error::NonReducedCurve { .. } => 3,
            Error::TauBudgetMismatch { .. } => 4,
            Error::MdrZero => 5,
            _ => 1,
        }
    }
}
