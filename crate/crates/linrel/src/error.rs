//! Error taxonomy for exact evaluation, oracles, and numeric cross-checks.
//!
//! Every fallible operation in this crate returns [`Result`]. The variants
//! split into three groups:
//!
//! - series evaluation: [`Error::NonTerminating`], [`Error::DenominatorPole`],
//!   [`Error::TruncationBudgetExceeded`];
//! - domain and formula validity: [`Error::DegenerateBasis`],
//!   [`Error::InvalidOrthogonalityDomain`], [`Error::FormulaPole`],
//!   [`Error::IndexOutOfRange`];
//! - cross-check machinery: [`Error::InternalInconsistency`] (two evaluation
//!   routes that must agree did not), [`Error::EigenFailure`] (the
//!   tridiagonal eigensolver did not converge).

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of exact evaluation and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A hypergeometric series was asked to evaluate without any
    /// nonpositive-integer upper parameter to terminate it.
    #[error("series does not terminate: {0}")]
    NonTerminating(String),

    /// A lower-parameter Pochhammer factor vanished at series term `term`
    /// (1-based) before the numerator terminated the sum.
    #[error("denominator Pochhammer vanished at term {term}")]
    DenominatorPole {
        /// 1-based index of the offending series term.
        term: usize,
    },

    /// Family parameters make the polynomial sequence degenerate
    /// (a leading recurrence coefficient vanishes).
    #[error("degenerate polynomial basis: {0}")]
    DegenerateBasis(String),

    /// Family parameters leave the formal recurrence domain entirely, or an
    /// orthogonality-mode operation got parameters with no positive measure.
    #[error("parameters outside the orthogonality domain: {0}")]
    InvalidOrthogonalityDomain(String),

    /// A closed-form prefactor or limit hit a genuine (non-removable) pole.
    #[error("closed-form expression has a pole: {0}")]
    FormulaPole(String),

    /// An index argument lies outside the range an operation supports.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// A truncated generating-function expansion would need more terms than
    /// the fixed budget allows.
    #[error("truncation budget exceeded: needed {needed}, budget {budget}")]
    TruncationBudgetExceeded {
        /// Terms the expansion would need.
        needed: usize,
        /// Fixed budget.
        budget: usize,
    },

    /// Two internal evaluation routes that must agree disagreed, or a
    /// truncated-Laurent window lost every trusted coefficient.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    /// The symmetric tridiagonal eigensolver failed to converge.
    #[error("eigenvalue decomposition failed: {0}")]
    EigenFailure(String),
}
