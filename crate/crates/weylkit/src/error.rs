//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the library.
///
/// Construction and group operations are exact, so an error always means the
/// input violates a documented precondition — never a numerical tolerance.
#[derive(Debug, Error)]
pub enum Error {
    /// The supplied matrix violates the generalized Cartan matrix axioms or
    /// its marks are inconsistent. Carries the individual violations.
    #[error("invalid Cartan matrix:\n{0}")]
    InvalidCartanMatrix(String),

    /// No positive length assignment symmetrizes the matrix.
    #[error("matrix is not symmetrizable: {0}")]
    NotSymmetrizable(String),

    /// `load_builtin` was asked for a type outside the supported families.
    #[error("unsupported type label {0}: {1}")]
    UnsupportedType(String, String),

    /// Two objects from incompatible ambient spaces were combined.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An operation requiring affine data (null root, coweights, translations)
    /// was called on finite-type data.
    #[error("operation requires an affine Cartan matrix")]
    NotAffine,

    /// Root enumeration exceeded its cap; the system is likely not finite.
    #[error("root enumeration exceeded cap of {0} roots")]
    RootEnumerationCapExceeded(usize),

    /// `reflection_through` was given a vector that is not a real root.
    #[error("not a real root: {0}")]
    NotARealRoot(String),

    /// A word contains an out-of-range index or an unknown generator name.
    #[error("invalid word: {0}")]
    InvalidWord(String),

    /// The index map is not a symmetry of the Cartan matrix.
    #[error("not a diagram automorphism: {0}")]
    NotADiagramAutomorphism(String),

    /// `translation_element` was given a coweight with a non-integer pairing
    /// against some simple root, so it does not define a lattice translation.
    #[error("not a lattice translation: {0}")]
    NotALatticeTranslation(String),

    /// A set of roots whose pairing graph is not a recognizable A/D diagram
    /// (cycle through a fork, degree ≥ 4 node, wrong lengths, ...).
    #[error("unrecognized diagram: {0}")]
    UnrecognizedDiagram(String),

    /// A root list does not form the kind of simple system an operation
    /// expects (wrong component count, missing affine node, bad pairings).
    #[error("invalid subsystem: {0}")]
    InvalidSubsystem(String),

    /// Breadth-first search over group elements exceeded its dedup budget.
    #[error("search budget exceeded: more than {0} distinct elements")]
    SearchBudgetExceeded(usize),

    /// Normalizer assembly found a candidate that fails conjugation closure
    /// or a factorization block that does not commute with its siblings.
    #[error("incomplete verification: {0}")]
    IncompleteVerification(String),

    /// A pinned fixture identity failed to reproduce.
    #[error("fixture verification failed: {0}")]
    FixtureVerificationFailed(String),

    /// A root, coweight or word expression could not be parsed.
    #[error("parse error: {0}")]
    ParseError(String),
}
