//! Error types for the divide pipeline, homology assembly and exact linear
//! algebra. Variants distinguish user input problems from mathematical
//! precondition failures and from internal invariant breakage; the CLI maps
//! these classes to distinct exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DivideError {
    #[error("syntax error at line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("slot error: {0}")]
    Slot(String),
    #[error("stub error: {0}")]
    Stub(String),
    #[error("not planar in the disk: capped map has Euler characteristic {chi} (expected 2), connected: {connected}")]
    NonPlanar { chi: i64, connected: bool },
    #[error("coloring conflict: faces cannot be 2-colored across divide edges")]
    ColoringConflict,
    #[error("sign flip rejected: it would leave no positive interior region")]
    NoPositiveRegion,
    #[error("adjacency inconsistency: {0}")]
    Inconsistency(String),
}

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("matrix is not unit upper triangular")]
    NotUnimodular,
    #[error("conjugation matrix is not an involution: C*C != Id")]
    Involution,
    #[error("T*C deviates from the transgradient block form")]
    BlockMismatch,
    #[error("cycle index {index} out of range 1..={mu}")]
    IndexOutOfRange { index: usize, mu: usize },
    #[error("mu + 1 - r = {0} is odd, genus is not an integer")]
    Parity(i64),
    #[error("divide is not connected; fiber invariants need a connected divide")]
    NotConnected,
}

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("matrix is not square")]
    NonSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not unimodular triangular")]
    NotUnimodular,
    #[error("characteristic polynomial is not a product of cyclotomics; remainder: {remainder}")]
    NotCyclotomic { remainder: String },
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("input rejected: {0}")]
    InvalidInput(String),
    #[error("certificate verification failed: {0}")]
    CertificateFailure(String),
}

#[derive(Debug, Error)]
pub enum EnumError {
    #[error("candidate budget exceeded at genus {genus}: {candidates} candidates > budget {budget}")]
    BudgetExceeded { genus: usize, candidates: u128, budget: u128 },
}
