//! Complex character tables by the Dixon–Schneider method, with restriction
//! and the regular-character containment test.

mod cyclo;
mod dixon;
mod restrict;

pub use cyclo::{cyclotomic_polynomial, CycInt};
pub use dixon::{auxiliary_prime, dixon_character_table, CharacterTable, ClassExport, TableExport, ValueExport};
pub use restrict::{
    character_kernel, contains_regular_character, faithful_on, inner_product, restrict_character, Containment,
    RestrictionReport, SubgroupTable,
};

use crate::ffla::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChartabError {
    #[error("no auxiliary prime q ≡ 1 mod {exponent} with q > {lower} below {bound}")]
    NoAuxiliaryPrime { exponent: usize, lower: u64, bound: u64 },
    #[error("group of order {0} exceeds the character table cap")]
    TooLarge(usize),
    #[error("eigenspace of dimension {dim} did not split after {tries} random combinations")]
    NoSplit { dim: usize, tries: usize },
    #[error("character table verification failed: {0}")]
    Verification(String),
    #[error("inner product is not a rational integer: {0}")]
    NonInteger(String),
    #[error("subgroup does not belong to this group")]
    ForeignSubgroup,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
