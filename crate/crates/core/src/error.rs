use std::fmt;

/// Broad category of an [`Error`], used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input or arguments outside an operation's contract.
    Usage,
    /// A mathematically undefined request (inverse of zero, span of nothing).
    Domain,
    /// The request is well formed but outside what the library handles.
    Unsupported,
    /// An internal consistency check failed.
    Integrity,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid field specification {spec:?}: {reason}")]
    FieldSpec { spec: String, reason: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0:?} is not a monic irreducible polynomial of the requested degree")]
    BadModulus(Vec<u32>),

    #[error("value {value} is not an element of a field of order {q}")]
    ForeignElement { value: u32, q: u32 },

    #[error("frobenius exponent {t} outside [0, {m})")]
    FrobeniusExponent { t: u32, m: u32 },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("matrix is singular")]
    Singular,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("the zero vector has no standard representative")]
    ZeroVector,

    #[error("the zero matrix has no projective normalization")]
    ZeroMatrix,

    #[error("subspace of dimension {k} in F_q^{n} is not a vertex")]
    NotAVertex { k: usize, n: usize },

    #[error("k = {k} outside [{lo}, {hi}]")]
    OutOfRange { k: usize, lo: usize, hi: usize },

    #[error("ambient dimension {n} is too small (need n >= {min})")]
    AmbientDimension { n: usize, min: usize },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("not an automorphism: {0}")]
    NotAutomorphism(Violation),

    #[error("not a simple graph: {0}")]
    NotSimple(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("integrity check failed: {0}")]
    Integrity(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::ZeroInverse | Error::Singular | Error::ZeroVector | Error::ZeroMatrix | Error::NotAVertex { .. } => {
                ErrorKind::Domain
            }
            Error::Unsupported(_) => ErrorKind::Unsupported,
            Error::Integrity(_) => ErrorKind::Integrity,
            _ => ErrorKind::Usage,
        }
    }
}

/// The first witness found that a vertex map is not a graph automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The map has the wrong length.
    Length { expected: usize, found: usize },
    /// Two vertices share an image, or an image is out of range.
    NotBijective { vertex: usize, image: usize },
    /// `u ~ v` differs from `image(u) ~ image(v)`.
    Edge { u: usize, v: usize, adjacent: bool },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Length { expected, found } => {
                write!(f, "permutation has length {found}, graph has {expected} vertices")
            }
            Violation::NotBijective { vertex, image } => {
                write!(f, "vertex {vertex} maps to {image}, which is out of range or already taken")
            }
            Violation::Edge { u, v, adjacent: true } => {
                write!(f, "vertices {u} and {v} are adjacent but their images are not")
            }
            Violation::Edge { u, v, adjacent: false } => {
                write!(f, "vertices {u} and {v} are not adjacent but their images are")
            }
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
