//! Linear actions of finite groups over prime fields.

mod decomp;
mod module;
mod tensor;

pub use decomp::{commutant, homogeneous_components, HomogeneousComponent, HomogeneousDecomposition, Isotype};
pub use module::{
    dual_module, module_from_generators, orbit_and_stabilizer, regular_orbit_scan, restrict_module, section_action,
    vector_from_index, vector_index, GModule, OrbitReport, ScanMode, ScanReport, SCAN_CAP,
};
pub use tensor::{hom_space_module, tensor_assemble, EndoField, HomSpace, TensorFactorization};

use crate::ffla::LinalgError;
use crate::grp::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("generator matrices do not define a module: {0}")]
    NotAModule(String),
    #[error("invalid generator matrix: {0}")]
    InvalidMatrix(String),
    #[error("scan of {size} vectors exceeds the cap of {cap}")]
    ScanTooLarge { size: u128, cap: u128 },
    #[error("characteristic {p} divides the order {order} of the acting subgroup")]
    NotSemisimple { p: u64, order: usize },
    #[error("component is not homogeneous of the given isotype: {0}")]
    Isotype(String),
    #[error("section is not an elementary abelian group: {0}")]
    Structure(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
