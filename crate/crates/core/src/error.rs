use alloc::string::String;
use core::fmt;

use crate::graph::EdgeId;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A constructor or family parameter is out of range.
    InvalidParameter(String),
    /// The edge identifier does not name an edge of the graph.
    EdgeNotFound(EdgeId),
    InvalidArgument(String),
    /// An enumeration would exceed the configured budget.
    ResourceLimit { needed: u128, budget: u128 },
    /// A polynomial division that must be exact left a remainder.
    ExactDivisionFailure(String),
    /// Sampled point counts are not those of a polynomial in `L`.
    NotPolynomialCount(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::EdgeNotFound(id) => write!(f, "edge {id} not found"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::ResourceLimit { needed, budget } => {
                write!(f, "enumeration of {needed} points exceeds budget {budget}")
            }
            Error::ExactDivisionFailure(msg) => write!(f, "exact division failed: {msg}"),
            Error::NotPolynomialCount(msg) => write!(f, "counts are not polynomial: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
