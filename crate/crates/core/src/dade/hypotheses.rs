use serde::Serialize;

use crate::gmod::{homogeneous_components, GModule, HomogeneousDecomposition};
use crate::grp::{is_cyclic, FiniteGroup, Subgroup};

/// How `A` is split as `B × C`.
#[derive(Clone, Debug)]
pub enum Split {
    Explicit {
        b: Subgroup,
        c: Subgroup,
    },
    /// `B` = the `p`-elements, `C` = the `p′`-elements.
    Automatic,
}

/// First hypothesis that fails, with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "hypothesis", rename_all = "snake_case")]
pub enum Rejection {
    NotFaithful { kernel: Vec<usize> },
    NoValidSplit { reason: String },
    BNotCyclicPGroup { order: usize, reason: String },
    CNotPPrime { order: usize },
    NotDirectProduct { reason: String, witness: Option<(usize, usize)> },
    NoRegularOrbitOnSection { component: usize, isotype_dim: usize },
    Module { message: String },
}

/// A validated configuration, ready for the construction.
#[derive(Clone, Debug)]
pub struct PropositionInstance {
    pub module: GModule,
    pub b: Subgroup,
    /// Generator of `B`: its least element of maximal order.
    pub alpha: usize,
    pub c: Subgroup,
    pub decomposition: HomogeneousDecomposition,
    /// For each component, the least `x` in isotype coordinates with
    /// `C_C(x) = C_C(X)`.
    pub section_vectors: Vec<Vec<u64>>,
    pub seed: u64,
}

fn is_p_power(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

fn automatic_split(a: &FiniteGroup, p: usize) -> Result<(Subgroup, Subgroup), Rejection> {
    let p_els: Vec<usize> = (0..a.order()).filter(|&x| is_p_power(a.element_order(x), p)).collect();
    let q_els: Vec<usize> = (0..a.order()).filter(|&x| !a.element_order(x).is_multiple_of(p)).collect();
    let b = Subgroup::from_elements(a, &p_els)
        .map_err(|_| Rejection::NoValidSplit { reason: format!("the {p}-elements do not form a subgroup") })?;
    let c = Subgroup::from_elements(a, &q_els)
        .map_err(|_| Rejection::NoValidSplit { reason: format!("the {p}'-elements do not form a subgroup") })?;
    if !is_cyclic(a, &b) {
        return Err(Rejection::NoValidSplit {
            reason: format!("the {p}-part of A (order {}) is not cyclic", b.order()),
        });
    }
    Ok((b, c))
}

/// Checks the hypotheses of the regular-orbit construction, in order:
/// faithfulness, the `B × C` split, then a regular orbit of `C/C_C(X)` on
/// every isotype `X`.
pub fn check_proposition_hypotheses(v: &GModule, split: Split, seed: u64) -> Result<PropositionInstance, Rejection> {
    let a = v.group().clone();
    let p = v.p() as usize;
    if !v.is_faithful() {
        return Err(Rejection::NotFaithful { kernel: v.kernel().elements().to_vec() });
    }
    let (b, c) = match split {
        Split::Explicit { b, c } => (b, c),
        Split::Automatic => automatic_split(&a, p)?,
    };
    if !is_p_power(b.order(), p) {
        return Err(Rejection::BNotCyclicPGroup { order: b.order(), reason: format!("order is not a power of {p}") });
    }
    if !is_cyclic(&a, &b) {
        return Err(Rejection::BNotCyclicPGroup { order: b.order(), reason: "not cyclic".into() });
    }
    if c.order() % p == 0 {
        return Err(Rejection::CNotPPrime { order: c.order() });
    }
    if b.order() * c.order() != a.order() {
        return Err(Rejection::NotDirectProduct { reason: "|B|·|C| ≠ |A|".into(), witness: None });
    }
    if !b.intersection(&c).is_trivial() {
        return Err(Rejection::NotDirectProduct { reason: "B ∩ C ≠ 1".into(), witness: None });
    }
    for &x in b.elements() {
        for &y in c.elements() {
            if a.mul(x, y) != a.mul(y, x) {
                return Err(Rejection::NotDirectProduct {
                    reason: "B and C do not commute".into(),
                    witness: Some((x, y)),
                });
            }
        }
    }
    let alpha = b.elements().iter().copied().find(|&x| a.element_order(x) == b.order()).expect("cyclic");
    let decomposition =
        homogeneous_components(v, &c, seed).map_err(|e| Rejection::Module { message: e.to_string() })?;
    let mut section_vectors = Vec::new();
    for (i, comp) in decomposition.components.iter().enumerate() {
        match comp.isotype.regular_vector() {
            Some(x) => section_vectors.push(x),
            None => return Err(Rejection::NoRegularOrbitOnSection { component: i, isotype_dim: comp.isotype.dim() }),
        }
    }
    Ok(PropositionInstance { module: v.clone(), b, alpha, c, decomposition, section_vectors, seed })
}
