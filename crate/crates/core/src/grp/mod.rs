//! Finite groups as explicit multiplication tables.

pub mod catalog;
mod group;
mod invariants;
mod product;
mod spec;
mod subgroup;
mod sylow;

pub use group::{close_generators, gcd, lcm, FiniteGroup, Generator, Provenance, ORDER_CAP};
pub use invariants::{
    brute_force_frattini, conjugacy_classes, frattini_subgroup, group_invariants, prime_power, ConjugacyData,
    GroupInvariants,
};
pub use product::{complement_element, direct_product, product_group, quotient_group, Action, Homomorphism};
pub use spec::{element_of, evaluate_word, GeneratorSpec, GroupSpec};
pub use subgroup::{
    center, centralizer, commutator_subgroup, generating_set, normal_closure, subgroup_as_group, Subgroup,
};
pub use sylow::{
    elements_of_order_dividing, is_cyclic, nilpotent_sylow_decomposition, pr_decomposition, PrDecomposition,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group order exceeds cap {cap} (reached {reached})")]
    OrderCap { cap: usize, reached: usize },
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("map is not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("group is not nilpotent")]
    NotNilpotent,
    #[error("unsupported: {0}")]
    Unsupported(String),
}
