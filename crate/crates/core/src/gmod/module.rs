use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use crate::ffla::{FieldSpec, Matrix};
use crate::grp::{quotient_group, FiniteGroup, Subgroup};

use super::ModuleError;

/// Largest number of vectors a full scan will visit.
pub const SCAN_CAP: u128 = 1 << 24;

/// A finite group acting on `F_p^d` on the right.
#[derive(Clone, Debug)]
pub struct GModule {
    group: Arc<FiniteGroup>,
    field: FieldSpec,
    dim: usize,
    generator_matrices: Vec<Matrix>,
    matrices: Vec<Matrix>,
    kernel: Subgroup,
}

/// Builds the module from one matrix per group generator, propagating along
/// generator words and checking `ρ(xg) = ρ(x)ρ(g)` for every element and
/// generator.
pub fn module_from_generators(
    group: Arc<FiniteGroup>,
    generator_matrices: Vec<Matrix>,
    field: FieldSpec,
    dim: usize,
) -> Result<GModule, ModuleError> {
    if generator_matrices.len() != group.generators().len() {
        return Err(ModuleError::NotAModule(format!(
            "{} matrices for {} generators",
            generator_matrices.len(),
            group.generators().len()
        )));
    }
    for m in &generator_matrices {
        if m.rows() != dim || m.cols() != dim || !m.field().same_as(&field) {
            return Err(ModuleError::InvalidMatrix("wrong size or field".into()));
        }
        if m.determinant() == 0 {
            return Err(ModuleError::InvalidMatrix("singular generator matrix".into()));
        }
    }
    let n = group.order();
    let mut mats: Vec<Option<Matrix>> = vec![None; n];
    mats[0] = Some(Matrix::identity(field, dim));
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (gi, &g) in group.generators().iter().enumerate() {
            let y = group.mul(x, g);
            if mats[y].is_none() {
                mats[y] = Some(mats[x].as_ref().unwrap().mul(&generator_matrices[gi]));
                queue.push_back(y);
            }
        }
    }
    let matrices: Vec<Matrix> = mats.into_iter().map(|m| m.expect("generators generate")).collect();
    for x in 0..n {
        for (gi, &g) in group.generators().iter().enumerate() {
            if matrices[group.mul(x, g)] != matrices[x].mul(&generator_matrices[gi]) {
                return Err(ModuleError::NotAModule(format!("relation fails at element {x}, generator {gi}")));
            }
        }
    }
    let kernel_els: Vec<usize> = (0..n).filter(|&x| matrices[x].is_identity()).collect();
    let kernel = Subgroup::from_elements(&group, &kernel_els)?;
    Ok(GModule { group, field, dim, generator_matrices, matrices, kernel })
}

impl GModule {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_matrices(&self) -> &[Matrix] {
        &self.generator_matrices
    }

    pub fn matrix(&self, x: usize) -> &Matrix {
        &self.matrices[x]
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel.is_trivial()
    }

    /// Order of `A/C_A(V)`.
    pub fn effective_order(&self) -> usize {
        self.group.order() / self.kernel.order()
    }

    pub fn act(&self, v: &[u64], x: usize) -> Vec<u64> {
        self.matrices[x].vec_mul(v)
    }

    /// Elements fixing `v`.
    pub fn stabilizer(&self, v: &[u64]) -> Subgroup {
        let els: Vec<usize> = (0..self.group.order()).filter(|&x| self.act(v, x) == v).collect();
        Subgroup::from_elements(&self.group, &els).expect("stabilizers are subgroups")
    }

    /// Elements fixing every row of `basis`.
    pub fn pointwise_stabilizer(&self, basis: &Matrix) -> Subgroup {
        let els: Vec<usize> = (0..self.group.order()).filter(|&x| basis.mul(&self.matrices[x]) == *basis).collect();
        Subgroup::from_elements(&self.group, &els).expect("stabilizers are subgroups")
    }
}

/// Orbit of a vector and its stabilizer.
#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub base: Vec<u64>,
    /// Orbit vectors in order of first appearance along the group elements.
    pub orbit: Vec<Vec<u64>>,
    pub orbit_size: usize,
    pub stabilizer: Subgroup,
    pub span_rank: usize,
    pub regular_orbit: bool,
    pub regular_module: bool,
}

pub fn orbit_and_stabilizer(m: &GModule, v: &[u64]) -> OrbitReport {
    let mut orbit: Vec<Vec<u64>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for x in 0..m.group.order() {
        let w = m.act(v, x);
        if seen.insert(w.clone()) {
            orbit.push(w);
        }
    }
    let stabilizer = m.stabilizer(v);
    let span_rank = Matrix::from_vectors(m.field, m.dim, &orbit).rank();
    let regular_orbit = stabilizer == m.kernel;
    let regular_module = regular_orbit && span_rank == orbit.len();
    OrbitReport {
        base: v.to_vec(),
        orbit_size: orbit.len(),
        orbit,
        stabilizer,
        span_rank,
        regular_orbit,
        regular_module,
    }
}

/// Index of a vector in lexicographic order, coordinate 0 most significant.
pub fn vector_index(v: &[u64], p: u64) -> u64 {
    v.iter().fold(0, |acc, &c| acc * p + c)
}

pub fn vector_from_index(mut idx: u64, p: u64, dim: usize) -> Vec<u64> {
    let mut v = vec![0; dim];
    for c in v.iter_mut().rev() {
        *c = idx % p;
        idx /= p;
    }
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    /// Visit every orbit.
    Full,
    /// Stop at the first regular orbit.
    UntilRegularOrbit,
    /// Stop at the first regular module witness.
    UntilRegularModule,
}

/// Outcome of a lexicographic orbit scan. Witnesses are the least vectors of
/// their kind.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ScanReport {
    pub regular_orbit_witness: Option<Vec<u64>>,
    pub regular_module_witness: Option<Vec<u64>>,
    /// Orbit size → number of orbits of that size.
    pub histogram: BTreeMap<usize, usize>,
    pub complete: bool,
}

pub fn regular_orbit_scan(m: &GModule, mode: ScanMode) -> Result<ScanReport, ModuleError> {
    let p = m.p();
    let size = (p as u128).pow(m.dim as u32);
    if size > SCAN_CAP {
        return Err(ModuleError::ScanTooLarge { size, cap: SCAN_CAP });
    }
    let size = size as usize;
    let perms: Vec<Vec<u32>> = m
        .generator_matrices
        .iter()
        .map(|g| {
            (0..size).map(|i| vector_index(&g.vec_mul(&vector_from_index(i as u64, p, m.dim)), p) as u32).collect()
        })
        .collect();
    let target = m.effective_order();
    let mut visited = vec![false; size];
    let mut report = ScanReport {
        regular_orbit_witness: None,
        regular_module_witness: None,
        histogram: BTreeMap::new(),
        complete: true,
    };
    let mut orbit: Vec<u32> = Vec::new();
    for start in 0..size {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        orbit.clear();
        orbit.push(start as u32);
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head] as usize;
            head += 1;
            for perm in &perms {
                let y = perm[x] as usize;
                if !visited[y] {
                    visited[y] = true;
                    orbit.push(y as u32);
                }
            }
        }
        *report.histogram.entry(orbit.len()).or_insert(0) += 1;
        if orbit.len() == target {
            let v = vector_from_index(start as u64, p, m.dim);
            if report.regular_orbit_witness.is_none() {
                report.regular_orbit_witness = Some(v.clone());
            }
            if report.regular_module_witness.is_none() && target <= m.dim {
                let vecs: Vec<Vec<u64>> = orbit.iter().map(|&i| vector_from_index(i as u64, p, m.dim)).collect();
                if Matrix::from_vectors(m.field, m.dim, &vecs).rank() == target {
                    report.regular_module_witness = Some(v);
                }
            }
            let stop = match mode {
                ScanMode::Full => false,
                ScanMode::UntilRegularOrbit => true,
                ScanMode::UntilRegularModule => report.regular_module_witness.is_some(),
            };
            if stop {
                report.complete = start + 1 == size || visited.iter().all(|&b| b);
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// Contragredient module: `g ↦ ρ(g)^{-T}`.
pub fn dual_module(m: &GModule) -> GModule {
    let gens: Vec<Matrix> =
        m.generator_matrices.iter().map(|g| g.inverse().expect("module matrices are invertible").transpose()).collect();
    module_from_generators(m.group.clone(), gens, m.field, m.dim).expect("the dual of a module is a module")
}

/// The action of `A` on the elementary abelian section `R/Φ` induced by
/// automorphisms of `R`, one image list per generator of `A`. Coordinates
/// come from a greedy basis of the quotient.
pub fn section_action(
    r_group: &FiniteGroup,
    phi: &Subgroup,
    a_group: Arc<FiniteGroup>,
    automorphisms: &[Vec<usize>],
    r: u64,
) -> Result<GModule, ModuleError> {
    let field = FieldSpec::module(r)?;
    let (q, proj) = quotient_group(r_group, phi)?;
    if !q.is_abelian() || (1..q.order()).any(|x| q.element_order(x) as u64 != r) {
        return Err(ModuleError::Structure(format!(
            "R/Φ of order {} is not elementary abelian of exponent {r}",
            q.order()
        )));
    }
    let basis = crate::grp::generating_set(&q, &Subgroup::whole(&q));
    let dim = basis.len();
    // coordinates of every quotient element
    let mut coords: Vec<Option<Vec<u64>>> = vec![None; q.order()];
    for idx in 0..(r as usize).pow(dim as u32) {
        let c = vector_from_index(idx as u64, r, dim);
        let mut x = 0;
        for (i, &ci) in c.iter().enumerate() {
            x = q.mul(x, q.pow(basis[i], ci as usize));
        }
        coords[x] = Some(c);
    }
    let coords: Vec<Vec<u64>> = coords
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| ModuleError::Structure("greedy basis does not span the quotient".into()))?;
    let reps: Vec<usize> = basis.iter().map(|&b| (0..r_group.order()).find(|&x| proj.apply(x) == b).unwrap()).collect();
    let mut gens = Vec::with_capacity(automorphisms.len());
    for aut in automorphisms {
        if phi.elements().iter().any(|&x| !phi.contains(aut[x])) {
            return Err(ModuleError::Structure("automorphism does not preserve the Frattini subgroup".into()));
        }
        let rows: Vec<Vec<u64>> = reps.iter().map(|&x| coords[proj.apply(aut[x])].clone()).collect();
        gens.push(Matrix::from_vectors(field, dim, &rows));
    }
    module_from_generators(a_group, gens, field, dim)
}

/// The module restricted to a subgroup, acting through its own generators.
pub fn restrict_module(m: &GModule, sub: &Subgroup) -> Result<GModule, ModuleError> {
    let (local, emb) = crate::grp::subgroup_as_group(&m.group, sub);
    let gens = local.generators().iter().map(|&g| m.matrix(emb[g]).clone()).collect();
    module_from_generators(Arc::new(local), gens, m.field, m.dim)
}
