use alloc::string::String;
use core::fmt;

/// Error type shared by all kernels.
///
/// Variants are split between structural misuse (shape/variable mismatches,
/// parse errors) and mathematical domain errors (unsupported coefficient
/// rings, scale caps). The CLI maps parse errors to exit code 2 and domain
/// errors to exit code 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Groebner-basis / syzygy paths require field coefficients (ℚ or 𝔽_p).
    NonFieldCoefficients,
    /// A polynomial was used in a ring with a different variable set.
    VariableMismatch(String),
    /// Matrix or complex shapes are inconsistent.
    ShapeMismatch(String),
    /// Tor / derived tensor over a base that has no computable resolution path.
    UnsupportedBase(String),
    /// Simplicial resolutions are truncated at level 3.
    TruncationTooDeep(usize),
    /// The base ring admits no resolution procedure.
    NonComputableBase(String),
    /// A homotopy-ring product outside the Koszul subcomplex was requested.
    UnsupportedProduct(String),
    /// The levelwise-free-algebra oracle needs a finite underlying set.
    InfiniteUnderlyingSet,
    /// A generator-count cap was exceeded while building a canonical level.
    CombinatorialBlowup(usize),
    /// Dold-Kan realization takes non-negatively graded complexes.
    NegativeDegrees(i64),
    /// A (co)homology degree beyond the reliable truncation was requested.
    TruncationExceeded(usize),
    /// Base change of the cotangent complex requires Tor-independence.
    NotTorIndependent,
    /// Extension classes can only be enumerated over finite coefficients.
    InfiniteClassGroup,
    /// The thickening handed to the deformation machinery is not square-zero.
    NotSquareZero,
    /// A desk-scale cap (group order, Witt parameters, degree bound) was hit.
    ScaleCap(String),
    /// Derived Hecke parameters out of range (e.g. ℓ divides q).
    BadParameters(String),
    /// Satake restriction needs ℓ odd and q ≡ 1 in Λ.
    BadCharacteristic(String),
    /// Input grammar violation.
    Parse(String),
    /// Division by a non-unit, inversion failure, and similar arithmetic misuse.
    Arithmetic(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFieldCoefficients => write!(f, "NonFieldCoefficients"),
            Error::VariableMismatch(s) => write!(f, "VariableMismatch: {s}"),
            Error::ShapeMismatch(s) => write!(f, "ShapeMismatch: {s}"),
            Error::UnsupportedBase(s) => write!(f, "UnsupportedBase: {s}"),
            Error::TruncationTooDeep(n) => write!(f, "TruncationTooDeep: {n}"),
            Error::NonComputableBase(s) => write!(f, "NonComputableBase: {s}"),
            Error::UnsupportedProduct(s) => write!(f, "UnsupportedProduct: {s}"),
            Error::InfiniteUnderlyingSet => write!(f, "InfiniteUnderlyingSet"),
            Error::CombinatorialBlowup(n) => write!(f, "CombinatorialBlowup: {n}"),
            Error::NegativeDegrees(d) => write!(f, "NegativeDegrees: {d}"),
            Error::TruncationExceeded(d) => write!(f, "TruncationExceeded: {d}"),
            Error::NotTorIndependent => write!(f, "NotTorIndependent"),
            Error::InfiniteClassGroup => write!(f, "InfiniteClassGroup"),
            Error::NotSquareZero => write!(f, "NotSquareZero"),
            Error::ScaleCap(s) => write!(f, "ScaleCap: {s}"),
            Error::BadParameters(s) => write!(f, "BadParameters: {s}"),
            Error::BadCharacteristic(s) => write!(f, "BadCharacteristic: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::Arithmetic(s) => write!(f, "arithmetic error: {s}"),
        }
    }
}

impl Error {
    /// Stable machine-readable name, used in CLI reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonFieldCoefficients => "NonFieldCoefficients",
            Error::VariableMismatch(_) => "VariableMismatch",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::UnsupportedBase(_) => "UnsupportedBase",
            Error::TruncationTooDeep(_) => "TruncationTooDeep",
            Error::NonComputableBase(_) => "NonComputableBase",
            Error::UnsupportedProduct(_) => "UnsupportedProduct",
            Error::InfiniteUnderlyingSet => "InfiniteUnderlyingSet",
            Error::CombinatorialBlowup(_) => "CombinatorialBlowup",
            Error::NegativeDegrees(_) => "NegativeDegrees",
            Error::TruncationExceeded(_) => "TruncationExceeded",
            Error::NotTorIndependent => "NotTorIndependent",
            Error::InfiniteClassGroup => "InfiniteClassGroup",
            Error::NotSquareZero => "NotSquareZero",
            Error::ScaleCap(_) => "ScaleCap",
            Error::BadParameters(_) => "BadParameters",
            Error::BadCharacteristic(_) => "BadCharacteristic",
            Error::Parse(_) => "ParseError",
            Error::Arithmetic(_) => "ArithmeticError",
        }
    }

    /// True for input-grammar violations (CLI exit code 2), false for
    /// mathematical domain errors (exit code 3).
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = core::result::Result<T, Error>;
