use thiserror::Error;

use crate::parse::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("number of variables must be in 1..={max}, got {got}")]
    BadDimension { got: usize, max: usize },
    #[error("variable index {var} out of range for n = {n}")]
    VariableOutOfRange { var: usize, n: usize },
    #[error("objects live in different algebras ({left} vs {right} variables)")]
    ContextMismatch { left: usize, right: usize },
    #[error("matrix must be {n}x{n}")]
    MatrixShape { n: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("variable ranking is not a permutation of 1..={n}")]
    BadRanking { n: usize },
    #[error("lexicographic comparison of words of different degree ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("generator {index} has degree {degree}, expected at least {min}")]
    DegreeTooLow {
        index: usize,
        degree: usize,
        min: usize,
    },
    #[error("monomial {0} does not lie in the monomial ideal")]
    NotInIdeal(String),
    #[error(
        "cannot lift {0}: linear generators are not allowed (for n = 2 and I = (x1), \
         the preimage is (X1, X2^2), so two anti-commutators become redundant)"
    )]
    LinearGenerator(String),
    #[error("not a Groebner basis: {0} obstruction(s) fail to resolve")]
    NotGroebner(usize),
    #[error("invalid request: {0}")]
    InvalidRequest(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
