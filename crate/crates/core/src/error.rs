//! Error type shared by the core operations.

use alloc::string::String;
use core::fmt;

/// Errors reported by presentation and driver operations.
///
/// Contract violations that indicate a bug (index out of range, malformed
/// match data, signature width mismatch) panic instead; everything a caller
/// can sensibly react to comes through here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    /// Integer overflow during exact arithmetic (Smith normal form). Never
    /// wrapped silently.
    Overflow,
    /// A symbol or query referenced a generator index outside the table.
    UnknownGenerator { index: usize },
    /// A symbol or query referenced a generator that has been eliminated.
    DeadGenerator { index: usize },
    /// `simplify` hit the configured cycle limit before converging.
    CycleLimit { cycles: usize },
    /// A logged move changed the abelian invariants (verification mode).
    VerificationFailed { move_index: usize },
    /// Replaying a transform log diverged from the recorded moves.
    ReplayMismatch { move_index: usize, reason: String },
    /// A requested elimination is not applicable (wrong occurrence count,
    /// relator too short, relator absent).
    InvalidElimination { reason: String },
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::Overflow => write!(f, "integer overflow in exact arithmetic"),
            CoreError::UnknownGenerator { index } => {
                write!(f, "unknown generator index {index}")
            }
            CoreError::DeadGenerator { index } => {
                write!(f, "generator {index} has been eliminated")
            }
            CoreError::CycleLimit { cycles } => {
                write!(f, "cycle limit reached after {cycles} cycles without convergence")
            }
            CoreError::VerificationFailed { move_index } => {
                write!(f, "move {move_index} changed the abelian invariants")
            }
            CoreError::ReplayMismatch { move_index, reason } => {
                write!(f, "replay diverged at move {move_index}: {reason}")
            }
            CoreError::InvalidElimination { reason } => {
                write!(f, "invalid elimination: {reason}")
            }
        }
    }
}

impl core::error::Error for CoreError {}
