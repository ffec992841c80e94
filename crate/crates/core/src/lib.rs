//! Shellings and counterexample certificates for pure simplicial complexes.
//!
//! Faces are 64-bit vertex sets ([`Face`]); complexes are pure and live in a
//! skeleton `S_{d,n}` ([`Complex`]). On top of that the crate provides
//! shelling verification and search, the austere and quiet predicates, the
//! echo construction with its block shelling order, and reduced homology
//! over prime fields.

pub mod complex;
pub mod corpus;
pub mod echo;
pub mod error;
pub mod face;
pub mod format;
pub mod homology;
pub mod search;
pub mod shelling;

pub use complex::{h_vector, Complex, FVector, FaceSet, HVector};
pub use corpus::{builtin_names, load_builtin, NamedDataset};
pub use echo::{
    classify_steps, echo, echo_shelling, is_quiet, EchoShelling, PairPartition, QuietVerdict,
    StepClass,
};
pub use error::{Error, Result};
pub use face::Face;
pub use homology::{betti_reduced, reisner_cm, BettiVector, ChainComplexFp, CmVerdict, PrimeField};
pub use search::{find_shelling, SearchConfig, SearchOutcome};
pub use shelling::{
    extension_candidates, induced_link_shelling, is_austere, remove_boundary_glued,
    verify_shelling, verify_shelling_bruteforce, AustereVerdict, ShellingOrder, ShellingReport,
};

/// h-vector with 128-bit entries, for skeleta whose alternating sums
/// overflow `i64` intermediates.
pub type WideHVector = HVector<i128>;
