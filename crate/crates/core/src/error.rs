use thiserror::Error;

use crate::exact::{RatPoint, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {0} does not belong to the region")]
    PointNotInRegion(Box<RatPoint>),
    #[error("region is not inside the universe box with margin {margin}")]
    MarginViolation { margin: i64 },
    #[error("invalid region: {}", fmt_violations(.0))]
    InvalidRegion(Vec<Violation>),
    #[error("reflex vertex {0} is not a lattice point")]
    NonLatticeReflexVertex(Box<RatPoint>),
    #[error("point {0} is not a vertex of the cell")]
    NotACellVertex(Box<RatPoint>),
    #[error("vertex {0} is not part of the decomposition")]
    UnknownVertex(Box<RatPoint>),
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

fn fmt_violations(v: &[Violation]) -> String {
    v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
