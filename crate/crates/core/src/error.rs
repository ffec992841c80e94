use thiserror::Error;

use crate::face::Face;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex id {vertex} outside 1..=64")]
    VertexOutOfRange { vertex: u64 },
    #[error("vertex {vertex} repeated within a face")]
    DuplicateVertex { vertex: u32 },
    #[error("ambient vertex count {n} exceeds 64")]
    AmbientTooLarge { n: u64 },
    #[error("dimension {d} requires more than {n} ambient vertices")]
    DimensionTooLarge { d: usize, n: usize },
    #[error("facet {facet} has {found} vertices, expected {expected}")]
    NotPure {
        facet: Face,
        expected: usize,
        found: usize,
    },
    #[error("facet {0} listed twice")]
    DuplicateFacet(Face),
    #[error("facet {facet} uses vertices outside the ambient set {ambient}")]
    OutsideAmbient { facet: Face, ambient: Face },
    #[error("operation needs a complex with at least one facet")]
    EmptyComplex,
    #[error("{0} is not a face of the complex")]
    NotAFace(Face),
    #[error("{0} is not a facet of the complex")]
    NotAFacet(Face),
    #[error("{0} is already a facet of the complex")]
    AlreadyAFacet(Face),
    #[error("complex is the full skeleton; a proper subcomplex is required")]
    NotProperSubcomplex,
    #[error("expected dimension {expected}, found {found}")]
    WrongDimension { expected: isize, found: isize },
    #[error("dimension {k} out of range 0..={d}")]
    SkeletonOutOfRange { k: usize, d: isize },
    #[error("shelling order is empty")]
    EmptyOrder,
    #[error("order is not a shelling: step {step} fails")]
    InvalidShelling { step: usize },
    #[error("order covers {covered} of {total} facets")]
    IncompleteShelling { covered: usize, total: usize },
    #[error("step {step} ({facet}) is glued along its whole boundary; the source complex is not contractible")]
    NotContractible { step: usize, facet: Face },
    #[error("search supports at most 64 facets, got {0}")]
    TooManyFacets(usize),
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("prime {0} exceeds the supported bound 251")]
    PrimeTooLarge(u32),
    #[error("unknown dataset `{0}`")]
    UnknownDataset(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("dataset `{name}` failed its integrity check: {message}")]
    Integrity { name: String, message: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
