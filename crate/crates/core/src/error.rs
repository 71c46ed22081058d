use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("edge {0}{1} already present")]
    EdgeExists(usize, usize),

    #[error("{0}{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    /// A size budget of some exhaustive routine was exceeded.
    #[error("budget exceeded: {what} supports at most {limit}, got {actual}")]
    Budget {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid parameters for {family}: {constraint}")]
    Params { family: String, constraint: String },

    #[error("parse error: {0}")]
    Parse(String),

    /// Something that the mathematics guarantees did not hold.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn budget(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::Budget {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
