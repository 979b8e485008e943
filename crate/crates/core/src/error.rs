use thiserror::Error;

use crate::set::FiniteSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label 0 is not allowed; labels are positive integers")]
    ZeroLabel,
    #[error("apex collision: {0} is already a vertex of the complex")]
    ApexCollision(u32),
    #[error("point configuration has no coordinates")]
    NoCoordinates,
    #[error("{0} is not a coordinate of the configuration")]
    UnknownCoordinate(u32),
    #[error("point {index} has {found} bits but there are {expected} coordinates")]
    PointLength {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("point {index} has a non-0/1 entry {value}")]
    NonBinaryEntry { index: usize, value: i64 },
    #[error("duplicate point {0} in configuration")]
    DuplicatePoint(usize),
    #[error("a matroid needs at least one basis")]
    EmptyBasisList,
    #[error("bases have unequal cardinalities ({first} and {other})")]
    UnequalCardinality { first: usize, other: usize },
    #[error("basis {basis} is not contained in the groundset {groundset}")]
    BasisOutsideGroundset {
        basis: FiniteSet,
        groundset: FiniteSet,
    },
    #[error("exchange axiom fails for B1={b1}, B2={b2}, x={x}")]
    ExchangeViolation {
        b1: FiniteSet,
        b2: FiniteSet,
        x: u32,
    },
    #[error("invalid uniform parameters n={n}, r={r}")]
    InvalidUniform { n: i64, r: i64 },
    #[error("matroid has an empty groundset")]
    EmptyGroundset,
    #[error("{0} is not in the groundset")]
    NotInGroundset(u32),
    #[error("degenerate split: {0} is a loop or coloop")]
    DegenerateSplit(u32),
    #[error("{0} is not a basis")]
    NotABasis(FiniteSet),
    #[error("oracle refuses {0} coordinates (limit {limit})", limit = crate::oracle::MAX_ORACLE_COORDS)]
    TooManyCoordinates(usize),
    #[error("illegal lattice step {0:?}")]
    IllegalStep(char),
    #[error("path shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("path {upper} is not weakly above {lower}")]
    NotWeaklyAbove { upper: String, lower: String },
    #[error("marking path hit both constraints at ({x},{y})")]
    MarkingConflict { x: usize, y: usize },
    #[error("no north step can be raised: the marking path passes through the endpoint")]
    RaiseImpossible,
    #[error("no east step can be lowered: every east step is unmarked")]
    LowerImpossible,
    #[error("no path with statistic {stat} exists among the requested paths")]
    NoPathForStatistic { stat: FiniteSet },
    #[error("invalid descriptor: {0}")]
    Descriptor(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}
