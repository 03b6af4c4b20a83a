use thiserror::Error;

/// Errors raised by exact-arithmetic primitives.
///
/// Every failure mode is a violated precondition or malformed input; there are
/// no "numerical" errors because there is no rounding.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumericError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("shape mismatch: {left} vs {right} for {op}")]
    ShapeMismatch {
        left: String,
        right: String,
        op: &'static str,
    },

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is singular")]
    Singular,

    #[error("operation requires the {0} structure flag to be set")]
    StructureFlagRequired(&'static str),

    #[error("matrix is not {0} (flag assertion failed at entry ({1},{2}))")]
    StructureViolation(&'static str, usize, usize),

    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("expected a real value but found nonzero imaginary part")]
    NonRealValue,

    #[error("malformed input: {0}")]
    Parse(String),
}

impl NumericError {
    pub(crate) fn shape(
        op: &'static str,
        lr: usize,
        lc: usize,
        rr: usize,
        rc: usize,
    ) -> NumericError {
        NumericError::ShapeMismatch {
            left: format!("{lr}x{lc}"),
            right: format!("{rr}x{rc}"),
            op,
        }
    }
}
