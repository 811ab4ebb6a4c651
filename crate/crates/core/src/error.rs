use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("edge ({0}, {1}) is out of range or a self-loop")]
    InvalidEdge(usize, usize),
    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("degree sequence is not graphical")]
    NotGraphical,
    #[error("degree sequence has no connected realization")]
    NotConnectedRealizable,
    #[error("degree sequence is not a tree sequence")]
    NotTreeSequence,
    #[error("sequences have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("invalid switch: {0}")]
    InvalidSwitch(&'static str),
    #[error("switch would disconnect the graph")]
    DisconnectingSwitch,
    #[error("no connected Erdős–Rényi sample after {retries} retries from seed {seed}; try a larger p")]
    RetriesExhausted { seed: u64, retries: u32 },
    #[error("maximum at the interval boundary alpha = {alpha}; widen the search interval")]
    BoundaryMaximum { alpha: f64 },
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(usize),
    #[error("enumeration guard exceeded: n = {n} > {limit}")]
    GuardExceeded { n: usize, limit: usize },
    #[error("quantity is undefined: {0}")]
    Undefined(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
