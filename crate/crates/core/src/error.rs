use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A row, point or vector has the wrong length.
    DimensionMismatch { expected: usize, found: usize },
    /// Two points of a configuration coincide.
    DuplicatePoints { first: usize, second: usize },
    /// The configuration does not affinely span its ambient space.
    NotSpanning { rank: usize, expected: usize },
    /// The configuration has d+1 affinely dependent points.
    NotGeneralPosition,
    /// Refused because the instance exceeds a documented size guard.
    TooLarge { what: &'static str, value: usize, limit: usize },
    /// A parameter is outside the documented domain.
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::DuplicatePoints { first, second } => {
                write!(f, "points {first} and {second} coincide")
            }
            Error::NotSpanning { rank, expected } => write!(
                f,
                "configuration spans an affine space of dimension {rank}, expected {expected}"
            ),
            Error::NotGeneralPosition => f.write_str("configuration is not in general position"),
            Error::TooLarge { what, value, limit } => {
                write!(f, "{what} = {value} exceeds the limit {limit}")
            }
            Error::InvalidArgument(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}
