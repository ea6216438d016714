use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library reports. Variant names double as the
/// machine-readable error names printed by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is isolated")]
    IsolatedVertex(VertexId),
    #[error("edge {edge} has endpoint {vertex} outside 0..{vertex_count}")]
    BadEndpoint {
        edge: EdgeId,
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("edge {0} has a non-positive weight")]
    NonPositiveWeight(EdgeId),
    #[error("malformed weight {0:?}")]
    BadWeight(String),
    #[error("edge ids must be dense 0..m-1: {0}")]
    BadEdgeId(String),
    #[error("edge {0} does not exist")]
    UnknownEdge(EdgeId),
    #[error("vertex {0} does not exist")]
    UnknownVertex(VertexId),
    #[error("walk is empty")]
    EmptyWalk,
    #[error("dart {0} does not start where dart {0}-1 ends")]
    NotIncident(usize),
    #[error("walk is not closed")]
    NotClosed,
    #[error("darts {0} and {0}+1 form a backtrack")]
    Backtrack(usize),
    #[error("first and last darts form a tail")]
    Tail,
    #[error("bad edge subset: {0}")]
    BadEdgeSubset(String),
    #[error("graph is not simple")]
    NotSimpleGraph,
    #[error("chain is zero")]
    ZeroChain,
    #[error("chain is not a circulation")]
    NotCirculation,
    #[error("support of the chain is not connected")]
    DisconnectedSupport,
    #[error("chain is not universal on the graph")]
    NotUniversal,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("start vertex {0} is not in the support")]
    StartNotInSupport(VertexId),
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("no feasible walk within the length bound")]
    NotFound,
    #[error("{count} support components exceed the Steiner limit {limit}")]
    TooManyComponents { count: usize, limit: usize },
    #[error("forced tree rejected: {0}")]
    BadForcedTree(String),
    #[error("bad tree: {0}")]
    BadTree(String),
    #[error("bad terminal set: {0}")]
    BadTerminals(String),
    #[error("demand {from}->{to} joins non-adjacent vertices")]
    NonAdjacentDemand { from: VertexId, to: VertexId },
    #[error("task matrix is empty")]
    EmptyTask,
    #[error("depot {0} is not on the support of the chosen circulation")]
    StartUnreachable(VertexId),
    #[error("no circulation satisfies the lower bounds")]
    Infeasible,
    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// Stable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::IsolatedVertex(_) => "IsolatedVertex",
            Error::BadEndpoint { .. } => "BadEndpoint",
            Error::NonPositiveWeight(_) => "NonPositiveWeight",
            Error::BadWeight(_) => "BadWeight",
            Error::BadEdgeId(_) => "BadEdgeId",
            Error::UnknownEdge(_) => "UnknownEdge",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::EmptyWalk => "EmptyWalk",
            Error::NotIncident(_) => "NotIncident",
            Error::NotClosed => "NotClosed",
            Error::Backtrack(_) => "Backtrack",
            Error::Tail => "Tail",
            Error::BadEdgeSubset(_) => "BadEdgeSubset",
            Error::NotSimpleGraph => "NotSimpleGraph",
            Error::ZeroChain => "ZeroChain",
            Error::NotCirculation => "NotCirculation",
            Error::DisconnectedSupport => "DisconnectedSupport",
            Error::NotUniversal => "NotUniversal",
            Error::Disconnected => "Disconnected",
            Error::StartNotInSupport(_) => "StartNotInSupport",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::NotFound => "NotFound",
            Error::TooManyComponents { .. } => "TooManyComponents",
            Error::BadForcedTree(_) => "BadForcedTree",
            Error::BadTree(_) => "BadTree",
            Error::BadTerminals(_) => "BadTerminals",
            Error::NonAdjacentDemand { .. } => "NonAdjacentDemand",
            Error::EmptyTask => "EmptyTask",
            Error::StartUnreachable(_) => "StartUnreachable",
            Error::Infeasible => "Infeasible",
            Error::Parse(_) => "Parse",
        }
    }
}
