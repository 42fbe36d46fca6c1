use thiserror::Error;

use crate::complex::Simplex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("simplex {0:?} repeats a vertex")]
    DegenerateSimplex(Vec<usize>),
    #[error("vertex {vertex} out of range for a complex with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("a simplicial circle needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("torus resolution must be at least 3, got {0}")]
    ResolutionTooSmall(usize),
    #[error("torus dimension must be at least 1")]
    ZeroDimension,
    #[error("axis {axis} out of range for a {dim}-torus")]
    BadAxis { axis: usize, dim: usize },
    #[error("arc of length {given} cannot bridge the label ranges (need at least {needed})")]
    ArcTooShort { given: usize, needed: usize },
    #[error("relator {0} is empty")]
    EmptyRelator(usize),
    #[error("relator letter {letter} is not a generator index in ±1..={generators}")]
    BadLetter { letter: i32, generators: usize },
    #[error("complex is not a subcomplex of the reference complex")]
    NotASubcomplex,
    #[error("complex is not connected")]
    NotConnected,
    #[error("labeling violates the morse constraint on {} simplices", .0.len())]
    InvalidLabeling(Vec<Simplex>),
    #[error("expected {expected} labels, got {got}")]
    LabelCountMismatch { expected: usize, got: usize },
    #[error("no labeling available")]
    MissingLabels,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("unsupported field {0:?} (use Q or Fp:<p>)")]
    BadField(String),
    #[error("tent labeling needs a complex produced by the torus or circle generator")]
    NotATorus,
    #[error("annealing parameters invalid: {0}")]
    BadAnnealParams(&'static str),
    #[error("bad file format: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
