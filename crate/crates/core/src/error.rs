use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by constructions and checks.
///
/// Law *violations* are not errors: they come back as
/// [`crate::Verdict::Fails`]. Errors signal malformed inputs, unmet
/// preconditions, or exceeded enumeration bounds.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition for `{set}`: {reason}")]
    InvalidPartition { set: String, reason: String },
    #[error("unknown atom `{atom}` in `{set}`")]
    UnknownAtom { set: String, atom: String },
    #[error("table `{table}` has no entry for atom `{atom}`")]
    MissingEntry { table: String, atom: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("carrier too large: {size} exceeds the enumeration bound {bound}")]
    CarrierTooLarge { size: u128, bound: usize },
    #[error("embedding is not injective: `{left}` and `{right}` have equal images")]
    NotInjective { left: String, right: String },
    #[error("member `{member}` is not (pointwise) in the larger family")]
    NotASubfamily { member: String },
    #[error("not a metric: {axiom} fails at ({})", atoms.join(", "))]
    NotAMetric { axiom: String, atoms: Vec<String> },
    #[error("missing transport map for ({from}, {to})")]
    MissingTransport { from: String, to: String },
    #[error("index set is not discrete at ({left}, {right})")]
    IndexNotDiscrete { left: String, right: String },
    #[error("dependent table is not in the Pi-set: {0}")]
    NotInPiSet(String),
    #[error("arrow is not affine: `{member}` composed with it is not in the source family")]
    NotAffine { member: String },
    #[error("dependent table is not compatible with the transports at ({from}, {to})")]
    NotCompatible { from: String, to: String },
    #[error("value universe is empty")]
    EmptyValueUniverse,
    #[error("not completely separated at ({left}, {right}): {reason}")]
    NotCompletelySeparated {
        left: String,
        right: String,
        reason: String,
    },
    #[error("construction invariant broken: {0}")]
    InvariantBroken(String),
}
