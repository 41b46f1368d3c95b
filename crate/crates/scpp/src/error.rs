//! Crate-wide error type.

/// Errors reported by this crate.
///
/// The variants fall into four groups, which the CLI maps onto exit codes:
/// malformed input (`InvalidInput`, `Parse`), violated promises
/// (`PromiseViolation`), resource/runtime limits (`CompletionCap`,
/// `StepLimit`, `MachineStuck`), and internal invariant breaches
/// (`Internal`), which indicate a bug in this crate rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Structurally invalid input: out-of-range letters, non-permutation
    /// image lists, repeated cycle entries, mismatched degrees, and so on.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A textual wire format could not be parsed. Carries a short
    /// description including the offending token position where known.
    #[error("parse error: {0}")]
    Parse(String),

    /// The input is well-formed but breaks a stated promise (for example,
    /// an odd permutation passed to the commutator solver, or a braid word
    /// with nonzero exponent sum passed to the commutator recognizer).
    #[error("promise violated: {0}")]
    PromiseViolation(String),

    /// Knuth–Bendix completion exceeded the rule-addition cap.
    #[error("completion exceeded the cap of {0} rule additions")]
    CompletionCap(usize),

    /// A machine run exceeded the caller-supplied step limit.
    #[error("step limit of {0} exceeded")]
    StepLimit(u64),

    /// A machine entered a (state, symbol) pair with no transition.
    #[error("machine stuck in state {state:?} reading {symbol:?} after {steps} steps")]
    MachineStuck {
        /// State the machine was in.
        state: String,
        /// Symbol under the head.
        symbol: String,
        /// Transitions invoked before getting stuck.
        steps: u64,
    },

    /// An internal invariant failed. This is always a bug.
    #[error("internal invariant breached: {0}")]
    Internal(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
