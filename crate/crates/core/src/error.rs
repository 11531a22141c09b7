use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty face list")]
    EmptyComplex,
    #[error("face {0:?} repeats a vertex")]
    DegenerateFace([usize; 3]),
    #[error("face {0:?} appears more than once")]
    DuplicateFace([usize; 3]),
    #[error("edge {0:?} lies in more than two faces")]
    NonManifoldEdge([usize; 2]),
    #[error("edge {0:?} lies in only one face (surface has boundary)")]
    OpenEdge([usize; 2]),
    #[error("link of vertex {0} is not a single cycle")]
    BadVertexLink(usize),
    #[error("vertex {0} lies in no face")]
    UnusedVertex(usize),
    #[error("surface is disconnected")]
    Disconnected,
    #[error("surface is not a torus (euler {euler}, orientable {orientable})")]
    NotATorus { euler: i64, orientable: bool },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("not a simple cycle of the complex: {0}")]
    NotACycle(String),
    #[error("surface is not of genus one")]
    NotGenusOne,
    #[error("marking cycle separates the torus")]
    SeparatingMark,
    #[error("cycle separates the torus")]
    SeparatingCycle,
    #[error("marking has length {len} but the shortest non-separating cycle has length {m}")]
    MarkNotShortest { len: usize, m: usize },
    #[error("invalid torus type {m}x{k}")]
    InvalidType { m: i64, k: i64 },
    #[error("invalid parameter k = {0} (need k >= 3)")]
    InvalidK(usize),
    #[error("vertex count {0} outside the supported census range")]
    OutOfRange(usize),
    #[error("time budget of {0} s exceeded")]
    TimeBudgetExceeded(u64),
    #[error("parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("degenerate knot: {0}")]
    DegenerateKnot(String),
    #[error("tube radius too large: {0}")]
    EpsilonTooLarge(String),
    #[error("enclosing octahedron could not be placed: {0}")]
    EnclosureFailure(String),
    #[error("triangle {0:?} is not a face of the cyclic polytope")]
    FaceNotInPolytope([usize; 3]),
    #[error("projection direction is not generic: {0}")]
    NonGenericDirection(String),
    #[error("curves intersect: {0}")]
    IntersectingCurves(String),
    #[error("mesh carries no tube provenance")]
    MissingProvenance,
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
