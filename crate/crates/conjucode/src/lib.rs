//! Additive conjucyclic codes over GF(4) and their binary shadows.
//!
//! An additive conjucyclic (ACC) code of length `n` is an F2-subspace of
//! GF(4)^n closed under the conjucyclic shift `T(c) = (conj(c_{n-1}), c_0, ..., c_{n-2})`.
//! Every such code is the image, under an F2-linear bijection `psi`, of a binary
//! cyclic code of length `2n`, which makes exact computation possible: duals with
//! respect to the trace inner product, hulls, complementary-dual tests, the binary
//! cyclic trace code `Tr(C)`, and entanglement-assisted quantum code parameters all
//! reduce to GF(2) polynomial and matrix arithmetic.
//!
//! Modules:
//! - [`poly`], [`matrix`], [`bits`], [`f4`], [`factor`]: the exact arithmetic substrate
//!   (GF(2) polynomials with factorization of x^n+1, bit-packed matrices, GF(4) scalars).
//! - [`acc`]: ACC codes, the psi/phi correspondence, trace duals, hulls, ACD/ACP tests.
//! - [`tracecode`]: binary cyclic trace codes, their duality inclusions and LCD test.
//! - [`eaqec`]: EAQEC parameter derivation from trace codes.
//! - [`descriptor`], [`analysis`], [`search`], [`fixtures`]: the CLI driver's guts.

pub mod acc;
pub mod analysis;
pub mod bits;
pub mod descriptor;
pub mod eaqec;
pub mod f4;
pub mod factor;
pub mod fixtures;
pub mod matrix;
pub mod poly;
pub mod search;
pub mod tracecode;
pub mod weight;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Polynomial division by the zero polynomial.
    DivisionByZero,
    /// An operation that requires a nonzero polynomial received zero.
    ZeroPolynomial(&'static str),
    /// Determinant of a non-square matrix.
    NonSquare { rows: usize, cols: usize },
    /// Vector or matrix dimensions do not line up.
    DimensionMismatch { left: String, right: String },
    /// A binary vector fed to psi/phi must have even length.
    OddLength(usize),
    /// The generator polynomial does not divide x^N+1.
    NotADivisor { n: usize },
    /// The code was not built from a generator polynomial.
    UnknownGenerator,
    /// Polynomial degree exceeds the bound of a folding operation.
    DegreeOverflow { deg: usize, bound: usize },
    /// Generator rows are F2-dependent.
    DependentRows,
    /// Text input could not be parsed; position is a byte offset.
    Parse { pos: usize, msg: String },
    /// A configured search bound was exceeded.
    BoundExceeded(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by the zero polynomial"),
            Error::ZeroPolynomial(op) => write!(f, "{op} is undefined for the zero polynomial"),
            Error::NonSquare { rows, cols } => {
                write!(f, "determinant requires a square matrix, got {rows}x{cols}")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::OddLength(n) => write!(f, "binary vector length {n} is odd, expected 2n"),
            Error::NotADivisor { n } => {
                write!(f, "generator polynomial does not divide x^{n}+1")
            }
            Error::UnknownGenerator => write!(
                f,
                "code has no known image generator polynomial; rebuild it from a vector first"
            ),
            Error::DegreeOverflow { deg, bound } => {
                write!(f, "polynomial degree {deg} exceeds bound {bound}")
            }
            Error::DependentRows => write!(f, "generator rows are not F2-independent"),
            Error::Parse { pos, msg } => write!(f, "parse error at byte {pos}: {msg}"),
            Error::BoundExceeded(what) => write!(f, "bound exceeded: {what}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
