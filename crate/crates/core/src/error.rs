use thiserror::Error;

use crate::complex::{SimplexId, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("simplex {0:?} appears more than once")]
    DuplicateSimplex(Vec<Vertex>),
    #[error("invalid simplex {0:?}: vertex tuples must be nonempty with distinct vertices")]
    InvalidSimplex(Vec<Vertex>),
    #[error("{what} is not closed (simplex {witness} is missing a face)")]
    NotClosed { what: &'static str, witness: SimplexId },
    #[error("pair is not nested: simplex {witness} lies in E but not in P")]
    NotNested { witness: SimplexId },
    #[error("source pair is not contained in target pair (simplex {witness})")]
    NotSubpair { witness: SimplexId },
    #[error("simplex {simplex:?} has image {image:?} which is not a simplex of the target")]
    NotSimplicial { simplex: Vec<Vertex>, image: Vec<Vertex> },
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("not a partition: simplex {simplex} is {problem}")]
    NotPartition { simplex: SimplexId, problem: PartitionProblem },
    #[error("vector {vector} is not convex: simplex {witness} lies between two of its members")]
    NotConvex { vector: usize, witness: SimplexId },
    #[error("objects live on different complexes")]
    DifferentComplex,
    #[error("set is not contained in the isolating set (simplex {witness})")]
    NotContained { witness: SimplexId },
    #[error("set is not invariant (simplex {witness} carries no essential solution)")]
    NotInvariant { witness: SimplexId },
    #[error("set is not isolated: {0}")]
    NotIsolated(String),
    #[error("index pair failed validation: {0}")]
    ValidationFailed(String),
    #[error("index pairs have different isolating sets")]
    DifferentN,
    #[error("interior P \\ E escapes the new isolating set (simplex {witness})")]
    InteriorEscapes { witness: SimplexId },
    #[error("invariant set changed during {0}")]
    InvariantChanged(&'static str),
    #[error("no index pair for Morse set {set} of step {step}")]
    MissingIndexPair { step: usize, set: usize },
    #[error("Morse sets {0} and {1} reach each other; the order has a cycle")]
    OrderCycle(usize, usize),
    #[error("input too large for the exhaustive oracle ({0} simplices)")]
    TooLarge(usize),
    #[error("vertex map is not edge preserving at edge ({0}, {1})")]
    EdgeNotPreserved(usize, usize),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionProblem {
    Uncovered,
    Repeated,
    OutOfRange,
}

impl std::fmt::Display for PartitionProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PartitionProblem::Uncovered => "not covered by any vector",
            PartitionProblem::Repeated => "listed in more than one vector",
            PartitionProblem::OutOfRange => "not a simplex of the complex",
        })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
