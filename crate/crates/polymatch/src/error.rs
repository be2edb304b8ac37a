use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty basis set")]
    EmptyBasisSet,
    #[error("bases of unequal size")]
    MixedRank,
    #[error("{what} {value} out of range (bound {bound})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("not a triangulation: {0}")]
    NotATriangulation(String),
    #[error("triangulation corrupt: {0}")]
    TriangulationCorrupt(String),
    #[error("rank deficient: no R-saturating matching in tree")]
    RankDeficient,
    #[error("support violation: zero sign at row {row}, column {col} on a matching edge")]
    SupportViolation { row: usize, col: usize },
    #[error("zero entry at row {row}, column {col}")]
    ZeroEntry { row: usize, col: usize },
    #[error("not linkage at tau {tau:?}")]
    NotLinkage { tau: Vec<usize> },
    #[error("not a covector pd-graph: {0}")]
    NotCovectorPdGraph(String),
    #[error("desk-scale limit: {0}")]
    DeskScaleLimit(String),
    #[error("non-generic at sigma {sigma:?}: matchings {first:?} and {second:?} both optimal")]
    NonGeneric {
        sigma: Vec<usize>,
        first: Vec<usize>,
        second: Vec<usize>,
    },
    #[error("inconsistent gluing on basis {basis:?}")]
    InconsistentGluing { basis: Vec<usize> },
    #[error("sign map is not a chirotope")]
    NotChirotope,
    #[error("octahedron face {quad:?}|{rest:?} has no unique odd term")]
    OctahedronTie { quad: [usize; 4], rest: Vec<usize> },
    #[error("orthogonality violated for tau {tau:?}, rho {rho:?}: {count} shared leaf edges")]
    Orthogonality {
        tau: Vec<usize>,
        rho: Vec<usize>,
        count: usize,
    },
    #[error("count law violated: expected {expected}, found {found}")]
    CountLaw { expected: usize, found: usize },
    #[error("unknown hyperfield: {0}")]
    UnknownHyperfield(String),
    #[error("undecidable here: {0}")]
    Undecidable(String),
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("hyperfield axiom violated: {0}")]
    Axiom(String),
}
