//! Regular orbits for `A = B × C` with `B` a cyclic `p`-group and `C` a
//! `p′`-group acting on a faithful module in characteristic `p`.

mod construct;
mod hypotheses;
mod input;
mod random;
mod remark;

pub use construct::{construct_regular_vector, verify_certificate, ComponentTrace, RegularVectorCertificate};
pub use hypotheses::{check_proposition_hypotheses, PropositionInstance, Rejection, Split};
pub use input::{DadeInput, SplitSpec};
pub use random::{random_instance, RandomInstance};
pub use remark::{remark_counterexample, RemarkReport};

use crate::gmod::ModuleError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DadeError {
    #[error("no Jordan block of U has size above p^(n-1) in component {component}")]
    NoFaithfulBlock { component: usize },
    #[error("C/C_C(X) has no regular orbit on the isotype of component {component}")]
    NoRegularSectionVector { component: usize },
    #[error("constructed vector has a nontrivial stabilizer {stabilizer:?}")]
    StabilizerNotTrivial { stabilizer: Vec<usize> },
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
}
