//! Extraspecial groups, isometry lifting, `PRA` assembly and the checks of
//! the theorem's hypotheses and conclusion.

mod assemble;
mod extraspecial;
mod hypotheses;
mod lift;
mod theorem;

pub use assemble::{assemble_scenario, ActorSpec, Embeddings, PKind, PSpec, Scenario, ScenarioSpec, SCHEMA_VERSION};
pub use extraspecial::{build_extraspecial, ExtraspecialData, Sign};
pub use hypotheses::{
    is_fermat_prime, validate_theorem_hypotheses, Check, HypothesisA, HypothesisB, HypothesisC, HypothesisReport,
    Witness,
};
pub use lift::{is_isometry, lift_isometry, lift_isometry_with, verify_lift, LiftedAutomorphism};
pub use theorem::{run_theorem_check, CharacterVerdict, RestrictionSummary, TheoremReport};

use crate::chartab::ChartabError;
use crate::ffla::LinalgError;
use crate::gmod::ModuleError;
use crate::grp::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScenError {
    #[error("group of order {order} exceeds the cap")]
    Cap { order: u128 },
    #[error("invalid scenario: {0}")]
    Spec(String),
    #[error("matrix is not an isometry of the form: {0}")]
    NotIsometry(String),
    #[error("lift failed: {0}")]
    Lift(String),
    #[error("assembly failed: {0}")]
    Assembly(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Chartab(#[from] ChartabError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
