use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("seifert matrix must have even size, got {0}x{0}")]
    OddSize(usize),
    #[error("seifert matrix is not square")]
    NotSquare,
    #[error("det(V - V^T) must be 1, got {0}")]
    BadIntersectionForm(String),
    #[error(
        "operation requires a seifert matrix, but the descriptor `{0}` is a module-level surrogate"
    )]
    SurrogateRejected(String),
    #[error("surrogate descriptor `{0}` carries no mirror data")]
    MirrorUnavailable(String),
    #[error("cannot combine a seifert-matrix descriptor with a module-level surrogate")]
    MixedRepresentation,
    #[error("surrogate descriptors must set signature_zero = true")]
    SurrogateSignature,
    #[error("presentation matrix does not present a torsion module (free rank {0})")]
    NotTorsion(usize),
    #[error("polynomial {0} is a unit in Q[t, t^-1]")]
    UnitPolynomial(String),
    #[error("polynomial is not palindromic and cannot be symmetrized: {0}")]
    NotSymmetric(String),
    #[error("argument outside [-1, 1]: {0}")]
    Domain(String),
    #[error("abscissa {0} lies on a jump of the signature function")]
    AtJump(String),
    #[error("visible hyperbolicity search is limited to size {max}, got {size}")]
    SearchBound { size: usize, max: usize },
    #[error("branched cover degree must be at least 2, got {0}")]
    CoverDegree(u64),
    #[error("{0} does not divide the order of the pattern's Alexander module")]
    AxisDivisibility(String),
    #[error("axis count {axis_count} exceeds the {primary}-primary multiplicity {multiplicity}")]
    AxisCount {
        axis_count: u64,
        multiplicity: usize,
        primary: String,
    },
    #[error("companion rho0 mismatch: recorded {recorded}, recomputed {recomputed}")]
    CompanionRho0 {
        recorded: String,
        recomputed: String,
    },
    #[error("zero pattern slack requires a ribbon pattern")]
    SlackWithoutRibbon,
    #[error("slack constant must be nonnegative: {0}")]
    NegativeSlack(String),
    #[error("dsn is undefined for `{0}`: Arf invariant is 1, so it is not stably doubly slice")]
    NotStablyDoublySlice(String),
    #[error("unknown knot `{0}`")]
    UnknownKnot(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("inconsistent certificate: {0}")]
    Certificate(String),
}
