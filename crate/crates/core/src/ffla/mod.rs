//! Exact linear algebra over prime fields.

mod field;
mod matrix;
mod poly;

pub use field::{field_inverse, is_prime, prime_factors, FieldPurpose, FieldSpec};
pub use matrix::{restrict_to_subspace, restrict_with, Matrix, Rref, SpanSolver};
pub use poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("division by zero in a prime field")]
    DivisionByZero,
    #[error("{0} is not a usable prime characteristic")]
    NotPrime(u64),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix minus identity is not nilpotent")]
    NotUnipotent,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
