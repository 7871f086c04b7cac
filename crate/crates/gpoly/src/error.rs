use thiserror::Error;

/// Errors reported by graph construction, family parsing, and the engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop ({0}, {0}) is not allowed")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) has an endpoint out of range for {n} vertices")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("bad edge-list text: {0}")]
    EdgeListParse(String),
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("family '{family}' expects {expected} parameter(s), got {got}")]
    FamilyArity {
        family: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("family '{family}': {reason}")]
    FamilyRange {
        family: &'static str,
        reason: String,
    },
    #[error("bad family string '{0}'")]
    FamilyParse(String),
    #[error("no closed form for '{0}'")]
    UnsupportedClosedForm(String),
    #[error("broom threshold is defined for r >= 6, got r = {0}")]
    BroomThresholdDomain(usize),
    #[error("{count} maximal general position sets exceed the limit of {limit}")]
    TooManyMaximalSets { count: usize, limit: usize },
    #[error("bad polynomial text: {0}")]
    PolynomialParse(String),
    #[error("not a tree: {0}")]
    NotATree(String),
}

pub type Result<T> = std::result::Result<T, Error>;
