use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a topology: {0}")]
    NotATopology(String),
    #[error("point set {bits:#b} does not fit a ground set of size {n}")]
    BadPoint { n: usize, bits: u64 },
    #[error("ground size {0} exceeds the hard cap of {max}", max = crate::finspace::MAX_POINTS)]
    GroundTooLarge(usize),
    #[error("relation is not a preorder: {0}")]
    NotAPreorder(String),
    #[error("preorder is not antisymmetric: {0} and {1} are equivalent")]
    NotAntisymmetric(usize, usize),
    #[error("predicate needs a witness subset")]
    MissingWitness,
    #[error("operation needs a nonempty family")]
    EmptyFamily,
    #[error("family mixes ground sizes {0} and {1}")]
    MixedGroundSize(usize, usize),
    #[error("ground size {n} exceeds the limit {limit} for this operation")]
    TooLarge { n: usize, limit: usize },
    #[error("topology is not T0")]
    NotT0,
    #[error("topology is not T1")]
    NotT1,
    #[error("topology is not sober")]
    NotSober,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("choice function does not match the point-closure classes: {0}")]
    BadPartition(String),
    #[error("bad subspace: {0}")]
    BadSubspace(String),
    #[error("points must be distinct, got {0} twice")]
    EqualPoints(u64),
    #[error("points {0} and {1} are comparable in the specialization order")]
    ComparablePair(usize, usize),
    #[error("{0} needs {1} operand(s)")]
    ArityMismatch(&'static str, usize),
    #[error("minimum of the empty set")]
    EmptySetMin,
    #[error("invalid congruence {residue} mod {modulus}")]
    BadCongruence { residue: u64, modulus: u64 },
    #[error("invalid basic open: {0}")]
    BadBasicOpen(String),
    #[error("prime indices overlap: {0}")]
    IndexOverlap(String),
    #[error("set is not cofinite in the carrier")]
    NotCofinite,
}
