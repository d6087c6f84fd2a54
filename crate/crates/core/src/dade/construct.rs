use serde::Serialize;

use crate::ffla::{Matrix, SpanSolver};
use crate::gmod::{hom_space_module, tensor_assemble, vector_from_index};

use super::{DadeError, PropositionInstance};

/// What the construction did on one homogeneous component `W_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentTrace {
    pub component: usize,
    pub component_dim: usize,
    pub isotype_dim: usize,
    pub endo_degree: usize,
    pub multiplicity: usize,
    /// Chosen `x`, in the ambient coordinates.
    pub x: Vec<u64>,
    /// Jordan block sizes of `α` on `U` over the endomorphism field.
    pub partition: Vec<usize>,
    /// `p^n`, the order of `α` on `U`.
    pub alpha_order: u64,
    pub n: u32,
    /// Size `j` of the block the generator `u` was taken from.
    pub block_size: usize,
    /// `u` in the coordinates of the basis of `U`.
    pub u: Vec<u64>,
    /// `w_i`, the image of `x ⊗ u`.
    pub w: Vec<u64>,
    pub stabilizer_of_w: Vec<usize>,
    pub stabilizer_of_component: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularVectorCertificate {
    pub v: Vec<u64>,
    pub stabilizer: Vec<usize>,
    pub trace: Vec<ComponentTrace>,
}

/// Least vector `u` (coordinate 0 most significant) with `u·N^{j-1} ≠ 0`.
fn least_outside_kernel(n_pow: &Matrix, p: u64) -> Vec<u64> {
    let d = n_pow.rows();
    (0..p.pow(d as u32))
        .map(|i| vector_from_index(i, p, d))
        .find(|u| n_pow.vec_mul(u).iter().any(|&c| c != 0))
        .expect("N^{j-1} is nonzero")
}

/// Builds `v = Σ w_i` with `C_A(v) = 1`, one component at a time.
pub fn construct_regular_vector(inst: &PropositionInstance) -> Result<RegularVectorCertificate, DadeError> {
    let m = &inst.module;
    let field = m.field();
    let p = field.p();
    let mut v = vec![0u64; m.dim()];
    let mut trace = Vec::new();
    for (i, comp) in inst.decomposition.components.iter().enumerate() {
        let hom = hom_space_module(m, &comp.isotype, &comp.basis, inst.alpha, inst.seed)?;
        tensor_assemble(m, &comp.isotype, &comp.basis, &hom)?;
        let n = log_p(hom.alpha_order, p);
        let j = hom.partition[0];
        let bound = if n == 0 { 1 } else { p.pow(n - 1) as usize + 1 };
        if j < bound {
            return Err(DadeError::NoFaithfulBlock { component: i });
        }
        let nil = hom.alpha_matrix.sub(&Matrix::identity(field, hom.maps.len()));
        let u = least_outside_kernel(&nil.pow(j as u64 - 1), p);
        let x_local = inst.section_vectors[i].clone();
        let w_local = hom.map_of(&u).vec_mul(&x_local);
        let w = comp.basis.vec_mul(&w_local);
        let x = comp.isotype.basis.vec_mul(&x_local);
        let stab_w = m.stabilizer(&w);
        let stab_comp = m.pointwise_stabilizer(&comp.basis);
        for (a, b) in v.iter_mut().zip(&w) {
            *a = field.add(*a, *b);
        }
        trace.push(ComponentTrace {
            component: i,
            component_dim: comp.basis.rows(),
            isotype_dim: comp.isotype.dim(),
            endo_degree: comp.endo_degree,
            multiplicity: comp.multiplicity,
            x,
            partition: hom.partition.clone(),
            alpha_order: hom.alpha_order,
            n,
            block_size: j,
            u,
            w,
            stabilizer_of_w: stab_w.elements().to_vec(),
            stabilizer_of_component: stab_comp.elements().to_vec(),
        });
    }
    let stabilizer = m.stabilizer(&v).elements().to_vec();
    if stabilizer.len() != 1 {
        return Err(DadeError::StabilizerNotTrivial { stabilizer });
    }
    Ok(RegularVectorCertificate { v, stabilizer, trace })
}

fn log_p(mut q: u64, p: u64) -> u32 {
    let mut n = 0;
    while q > 1 {
        q /= p;
        n += 1;
    }
    n
}

/// Replays a certificate against its instance: `v = Σ w_i`, `w_i ∈ W_i`,
/// `C_A(w_i) = C_A(W_i)`, the block bound, and `C_A(v) = 1`.
pub fn verify_certificate(inst: &PropositionInstance, cert: &RegularVectorCertificate) -> Result<(), String> {
    let m = &inst.module;
    let field = m.field();
    let p = field.p();
    let comps = &inst.decomposition.components;
    if cert.trace.len() != comps.len() {
        return Err(format!("trace has {} entries for {} components", cert.trace.len(), comps.len()));
    }
    let mut sum = vec![0u64; m.dim()];
    for (t, comp) in cert.trace.iter().zip(comps) {
        if !SpanSolver::new(&comp.basis).contains(&t.w) {
            return Err(format!("w_{} is not in its component", t.component));
        }
        let stab_w = m.stabilizer(&t.w);
        let stab_comp = m.pointwise_stabilizer(&comp.basis);
        if stab_w != stab_comp {
            return Err(format!("C_A(w_{0}) differs from C_A(W_{0})", t.component));
        }
        if stab_w.elements() != t.stabilizer_of_w.as_slice() {
            return Err(format!("recorded stabilizer of w_{} is wrong", t.component));
        }
        if p.pow(t.n) != t.alpha_order {
            return Err(format!("order of α on U_{} is not p^n", t.component));
        }
        let bound = if t.n == 0 { 1 } else { p.pow(t.n - 1) as usize + 1 };
        if t.block_size < bound || !t.partition.contains(&t.block_size) {
            return Err(format!("block size {} violates the bound {bound}", t.block_size));
        }
        for (a, b) in sum.iter_mut().zip(&t.w) {
            *a = field.add(*a, *b);
        }
    }
    if sum != cert.v {
        return Err("v is not the sum of the w_i".into());
    }
    let stab = m.stabilizer(&cert.v);
    if !stab.is_trivial() || stab.elements() != cert.stabilizer.as_slice() {
        return Err("C_A(v) is not trivial".into());
    }
    Ok(())
}
