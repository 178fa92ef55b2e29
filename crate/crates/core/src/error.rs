use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Which cokernel failed the rigidity hypothesis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    W,
    WPrime,
}

impl core::fmt::Display for Side {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Side::W => write!(f, "coker(w0)"),
            Side::WPrime => write!(f, "coker(v0)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("relation is not admissible: {0}")]
    NotAdmissible(String),
    #[error("relation mixes path lengths: {0}")]
    Inhomogeneous(String),
    #[error("paths of length {bound} do not all vanish modulo the relations")]
    BoundExceeded { bound: usize },
    #[error("relation `{0}` does not vanish on the representation")]
    RelationViolated(String),
    #[error("blocks do not commute with arrow `{0}`")]
    NotCommuting(String),
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("squares do not share the gluing edge")]
    EdgeMismatch,
    #[error("map is not a monomorphism")]
    NotMono,
    #[error("map is not an epimorphism")]
    NotEpi,
    #[error("the seed monomorphism has zero cokernel")]
    ZeroCokernel,
    #[error("index {n} out of range (depth {depth})")]
    OutOfRange { n: usize, depth: usize },
    #[error("module is not simple")]
    NotSimple,
    #[error("sequence is not a self-extension")]
    NotSelfExtension,
    #[error("module is zero")]
    ZeroModule,
    #[error("extension class is not standard")]
    NotStandard,
    #[error("sequence is not exact at vertex {vertex}: {detail}")]
    NotExact { vertex: String, detail: String },
    #[error("steering map is not nilpotent")]
    NotNilpotent,
    #[error("stage {n} lies below the nilpotency index {t}")]
    BelowIndex { n: usize, t: usize },
    #[error("Ext^1 of {0} with itself is non-zero")]
    NotRigid(Side),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("multiplication by zero is not injective")]
    ZeroMap,
}
