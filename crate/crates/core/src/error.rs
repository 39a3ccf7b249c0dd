use thiserror::Error;

/// Errors raised while constructing or validating groups, subgroups and
/// automorphisms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("malformed Cayley table: {0}")]
    MalformedTable(String),
    #[error("Cayley table has no two-sided identity element")]
    NoIdentity,
    #[error("not a group: {axiom} fails at ({}, {}, {})", witness.0, witness.1, witness.2)]
    NotAGroup {
        axiom: &'static str,
        witness: (usize, usize, usize),
    },
    #[error("element {0} has no two-sided inverse")]
    NonInvertibleElement(usize),
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },
    #[error("group order exceeds the configured bound of {0}")]
    OrderGuardExceeded(usize),
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("subgroup or automorphism belongs to a different group")]
    MismatchedParents,
    #[error("map is not a bijection (element {0} is hit twice)")]
    NotABijection(usize),
    #[error("not a homomorphism: theta({a}*{b}) != theta({a})*theta({b})")]
    NotAHomomorphism { a: usize, b: usize },
    #[error("not an involution: theta(theta({0})) != {0}")]
    NotAnInvolution(usize),
    #[error("generator images are inconsistent at element {0}")]
    InconsistentImages(usize),
    #[error("expected {expected} generator images, got {got}")]
    WrongImageCount { expected: usize, got: usize },
    #[error("inversion is an automorphism only for abelian groups ({0}*{1} != {1}*{0})")]
    InversionRequiresAbelian(usize, usize),
    #[error("subset is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("unknown catalog name `{0}`")]
    UnknownCatalogName(String),
    #[error("unsupported catalog parameter: {0}")]
    UnsupportedParameter(String),
}

/// Errors from double-coset computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetError {
    #[error("subgroups belong to different groups")]
    MismatchedParents,
    #[error("right subgroup is not the image of the left subgroup under theta")]
    RightSubgroupNotThetaOfLeft,
    #[error("sigma does not map double coset {0} to a single double coset")]
    SigmaNotWellDefined(usize),
    #[error("subgroup is not theta-stable")]
    SubgroupNotThetaStable,
    #[error("internal oracle mismatch in {what}: {lhs} != {rhs}")]
    OracleMismatch {
        what: &'static str,
        lhs: i64,
        rhs: i64,
    },
}

/// Errors from the modular character-table computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharTableError {
    #[error("no suitable prime found below 2^31")]
    PrimeSearchOverflow,
    #[error("class matrix {class} depends on the choice of target element in class {target}")]
    ClassMatrixInconsistent { class: usize, target: usize },
    #[error("common eigenspace refinement stalled with a subspace of dimension {0}")]
    EigenspaceNotSplit(usize),
    #[error("eigenvector has zero identity coordinate")]
    UnnormalizableEigenvector,
    #[error("degree square root has two lifts in range")]
    DegreeLiftAmbiguous,
    #[error("degree square {0} has no square root in [1, sqrt|G|]")]
    DegreeLiftFailed(u64),
    #[error("lifted value {value} outside [{lo}, {hi}] in {what}")]
    LiftOutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },
    #[error("twisted indicator lifted to {0}, expected -1, 0 or 1")]
    IndicatorOutOfRange(i64),
    #[error("no row matches the dual-twist of irrep {0}")]
    PartnerRowNotFound(usize),
    #[error("character table invariant violated: {0}")]
    TableInvariantViolated(String),
    #[error("subgroup or automorphism belongs to a different group")]
    MismatchedParents,
}

/// Top-level error for analysis entry points.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    CharTable(#[from] CharTableError),
}
