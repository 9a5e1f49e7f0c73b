use core::fmt;

/// Errors reported by the numerical kernels and the domain layers on top of
/// them.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// Two shapes that had to agree did not.
    ShapeMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    /// A flat length did not match the requested shape.
    LengthMismatch { expected: usize, got: usize },
    /// Input was required to be Hermitian; `deviation` is `max |M - M*|`.
    NotHermitian { deviation: f64 },
    /// Input failed a positive-semidefiniteness requirement. `witness` is the
    /// offending eigenvalue or pivot, `index` the 1-based leading index when
    /// one is known.
    NotPsd { witness: f64, index: Option<usize> },
    /// An operation refused to run above its combinatorial size limit.
    CapacityExceeded { dim: usize, limit: usize },
    /// An iterative kernel failed to reach its residual target.
    ConvergenceFailure { residual: f64 },
    /// A pseudo-inverse solve against a singular defect product left a
    /// residual, signalling numerically inconsistent (non-positive) data.
    InconsistentResidual { residual: f64 },
    /// An operator norm exceeded the unit bound by more than the clamp slack.
    ContractionNorm { norm: f64 },
    /// A vector norm exceeded an admissibility bound.
    NormBound { got: f64, limit: f64 },
    /// A rate that must be non-negative was not.
    NegativeRate { value: f64 },
    /// Anything else that makes the request unanswerable.
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows}x{cols}")
            }
            Error::ShapeMismatch { expected, got } => write!(
                f,
                "shape mismatch: expected {}x{}, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected}, got {got}")
            }
            Error::NotHermitian { deviation } => {
                write!(f, "matrix is not Hermitian (max |M - M*| = {deviation:e})")
            }
            Error::NotPsd { witness, index } => match index {
                Some(i) => write!(
                    f,
                    "matrix is not positive semidefinite (leading index {i}, witness {witness:e})"
                ),
                None => write!(
                    f,
                    "matrix is not positive semidefinite (witness {witness:e})"
                ),
            },
            Error::CapacityExceeded { dim, limit } => {
                write!(f, "dimension {dim} exceeds the supported limit {limit}")
            }
            Error::ConvergenceFailure { residual } => {
                write!(f, "iteration failed to converge (residual {residual:e})")
            }
            Error::InconsistentResidual { residual } => write!(
                f,
                "inconsistent residual {residual:e} in a singular-defect solve"
            ),
            Error::ContractionNorm { norm } => {
                write!(f, "operator norm {norm} exceeds the contraction bound 1")
            }
            Error::NormBound { got, limit } => {
                write!(f, "norm {got} exceeds the admissible bound {limit}")
            }
            Error::NegativeRate { value } => {
                write!(f, "rates must be non-negative, got {value}")
            }
            Error::InvalidArgument(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for Error {}
