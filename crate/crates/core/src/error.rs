use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {point} is outside the ground set of size {ground}")]
    PointOutOfRange { point: usize, ground: usize },

    #[error("member index {index} is out of range for a family of {len} members")]
    MemberOutOfRange { index: usize, len: usize },

    #[error("member {index} has ground size {found}, expected {expected}")]
    MemberGround {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("node {node} is out of range for a pseudotree of {len} nodes")]
    NodeOutOfRange { node: usize, len: usize },

    #[error("parent map contains a cycle through nodes {0:?}")]
    Cycle(Vec<usize>),

    #[error("cut {cut} is out of range for a chain of length {length}")]
    CutOutOfRange { cut: usize, length: usize },

    #[error("ground sets differ: {left} vs {right}")]
    GroundMismatch { left: usize, right: usize },

    #[error("cover cell {0} is empty")]
    EmptyCell(usize),

    #[error("cells do not cover point {0}")]
    Uncovered(usize),

    #[error("cell {cell} of cover {cover} is not a contiguous interval")]
    NotAnInterval { cover: usize, cell: usize },

    #[error("map has {found} entries, expected {expected}")]
    MapLength { expected: usize, found: usize },

    #[error("map is not surjective: target point {0} has no preimage")]
    NotSurjective(usize),

    #[error("subset must be nonempty")]
    EmptySubset,

    #[error("at least one cover is required")]
    NoCovers,

    #[error("tuple {0} is empty")]
    EmptyTuple(usize),

    #[error("cover index {index} is out of range for a family of {len} covers")]
    CoverOutOfRange { index: usize, len: usize },

    #[error("chi has {found} entries but the witness lists {expected} covers")]
    ChiLength { expected: usize, found: usize },

    #[error("chi values must be positive (cover {0})")]
    NonPositiveChi(usize),

    #[error("the constant M must be positive")]
    NonPositiveM,

    #[error("factor {0} has an empty ground set")]
    EmptyFactor(usize),

    #[error("product ground set is too large ({0} points)")]
    GroundTooLarge(u128),

    #[error("function {function} has {found} values, expected {expected}")]
    FunctionLength {
        function: usize,
        expected: usize,
        found: usize,
    },

    #[error("function {function} takes value {value} outside [0,1] at point {point}")]
    ValueOutOfRange {
        function: usize,
        point: usize,
        value: String,
    },

    #[error("points {0} and {1} are not separated by any function")]
    NotSeparated(usize, usize),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("arithmetic overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("degenerate samples: {0}")]
    DegenerateSamples(&'static str),
}
