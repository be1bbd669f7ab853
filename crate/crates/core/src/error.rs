use thiserror::Error;

/// Errors produced by csfkit operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid part {0}: parts must be positive")]
    InvalidPart(i64),

    #[error("partitions are not comparable: {0}")]
    Incomparable(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is not a forest")]
    NotAForest,

    #[error("graph is not connected and unicyclic")]
    NotUnicyclic,

    #[error("resource limit exceeded: {what} is {size}, limit is {limit}")]
    ResourceLimit {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("combination mixes vertex counts {0} and {1}")]
    MixedVertexCounts(usize, usize),

    #[error("data describes a tree with two centroids; reconstruction is not unique (see the two-centroid counterexample)")]
    TwoCentroids,

    #[error("inconsistent theta data: {0}")]
    InconsistentData(String),

    #[error("instance with n = {0} is too small for leaf detection")]
    SmallInstance(usize),

    #[error("invalid vertex permutation: {0}")]
    InvalidPermutation(String),
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
