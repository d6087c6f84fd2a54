use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ffla::{restrict_to_subspace, FieldSpec, Matrix, Poly};
use crate::grp::{conjugacy_classes, generating_set, subgroup_as_group, Subgroup};

use super::{GModule, ModuleError};

const RANDOM_TRIES: usize = 200;

/// Basis of `{H : A_i·H = H·B_i for all i}`, with `H` of shape
/// `rows(A) × rows(B)`. Returned in the order given by the kernel basis.
pub fn commutant(field: FieldSpec, a: &[Matrix], b: &[Matrix]) -> Vec<Matrix> {
    let (ra, rb) = (a.first().map_or(0, |m| m.rows()), b.first().map_or(0, |m| m.rows()));
    commutant_shaped(field, ra, rb, a, b)
}

fn commutant_shaped(field: FieldSpec, ra: usize, rb: usize, a: &[Matrix], b: &[Matrix]) -> Vec<Matrix> {
    let unknowns = ra * rb;
    if a.is_empty() {
        return (0..unknowns)
            .map(|k| {
                let mut m = Matrix::zeros(field, ra, rb);
                m.set(k / rb, k % rb, 1);
                m
            })
            .collect();
    }
    // equation (i, r, s): (A_i H - H B_i)[r][s] = 0; H vectorized row-major
    let eqs = a.len() * unknowns;
    let mut coef = Matrix::zeros(field, unknowns, eqs);
    for (i, (am, bm)) in a.iter().zip(b).enumerate() {
        for r in 0..ra {
            for s in 0..rb {
                let col = i * unknowns + r * rb + s;
                for k in 0..ra {
                    let c = am.get(r, k);
                    if c != 0 {
                        let row = k * rb + s;
                        coef.set(row, col, field.add(coef.get(row, col), c));
                    }
                }
                for k in 0..rb {
                    let c = bm.get(k, s);
                    if c != 0 {
                        let row = r * rb + k;
                        coef.set(row, col, field.sub(coef.get(row, col), c));
                    }
                }
            }
        }
    }
    coef.left_kernel().into_iter().map(|v| Matrix::from_flat(field, ra, rb, v)).collect()
}

/// Basis of the unital algebra generated by `mats`.
pub(crate) fn algebra_span(field: FieldSpec, dim: usize, mats: &[Matrix]) -> Vec<Matrix> {
    let mut basis: Vec<Matrix> = Vec::new();
    let mut flat: Vec<Vec<u64>> = Vec::new();
    let mut queue = vec![Matrix::identity(field, dim)];
    while let Some(m) = queue.pop() {
        let mut trial = flat.clone();
        trial.push(m.data().to_vec());
        if Matrix::from_vectors(field, dim * dim, &trial).rank() > flat.len() {
            flat = trial;
            for g in mats {
                queue.push(m.mul(g));
            }
            basis.push(m);
        }
    }
    basis
}

fn random_combination(rng: &mut ChaCha8Rng, field: FieldSpec, basis: &[Matrix]) -> Matrix {
    let mut acc = Matrix::zeros(field, basis[0].rows(), basis[0].cols());
    for b in basis {
        acc = acc.add(&b.scale(rng.gen_range(0..field.p())));
    }
    acc
}

/// An irreducible `C`-submodule `X` of a homogeneous component.
#[derive(Clone, Debug)]
pub struct Isotype {
    /// Rows span `X` inside the ambient module.
    pub basis: Matrix,
    /// Action on `X` in the coordinates of `basis`, one matrix per element of
    /// `C` in the order of `C.elements()`.
    pub matrices: Vec<Matrix>,
    /// Elements of `C` in the acting group.
    pub elements: Vec<usize>,
    /// Positions in `elements` of a generating set of `C`.
    pub generator_positions: Vec<usize>,
    /// `dim_{F_p} End_C(X)`.
    pub endo_degree: usize,
}

impl Isotype {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn generator_matrices(&self) -> Vec<Matrix> {
        self.generator_positions.iter().map(|&i| self.matrices[i].clone()).collect()
    }

    /// Positions in `C` acting trivially on `X`.
    pub fn kernel_positions(&self) -> Vec<usize> {
        (0..self.matrices.len()).filter(|&i| self.matrices[i].is_identity()).collect()
    }

    /// Lexicographically least nonzero `x` (coordinates relative to `basis`)
    /// with `C_C(x) = C_C(X)`, i.e. a regular orbit of `C/C_C(X)` on `X`.
    pub fn regular_vector(&self) -> Option<Vec<u64>> {
        let p = self.basis.field().p();
        let d = self.dim();
        let kernel = self.kernel_positions();
        let total = p.checked_pow(d as u32)?;
        (1..total)
            .map(|i| super::vector_from_index(i, p, d))
            .find(|x| (0..self.matrices.len()).all(|i| kernel.contains(&i) || self.matrices[i].vec_mul(x) != *x))
    }
}

#[derive(Clone, Debug)]
pub struct HomogeneousComponent {
    /// Rows span the component `W`, in reduced echelon form.
    pub basis: Matrix,
    pub isotype: Isotype,
    /// Degree of `End_C(X)` over the prime field.
    pub endo_degree: usize,
    /// Number of copies of `X` in `W`.
    pub multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct HomogeneousDecomposition {
    pub subgroup: Subgroup,
    /// Sorted by echelon basis.
    pub components: Vec<HomogeneousComponent>,
}

/// Decomposes `V` restricted to `C` into homogeneous components by splitting
/// with random elements of the image of the centre of `F_p C`.
pub fn homogeneous_components(m: &GModule, c: &Subgroup, seed: u64) -> Result<HomogeneousDecomposition, ModuleError> {
    let field = m.field();
    if (c.order() as u64).is_multiple_of(field.p()) {
        return Err(ModuleError::NotSemisimple { p: field.p(), order: c.order() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (cg, emb) = subgroup_as_group(m.group(), c);
    let classes = conjugacy_classes(&cg);
    let class_sums: Vec<Matrix> = (0..classes.len())
        .map(|k| {
            classes
                .members(k)
                .into_iter()
                .fold(Matrix::zeros(field, m.dim(), m.dim()), |acc, x| acc.add(m.matrix(emb[x])))
        })
        .collect();

    let mut done: Vec<Matrix> = Vec::new();
    let mut work = vec![Matrix::identity(field, m.dim())];
    'pieces: while let Some(w) = work.pop() {
        let local: Vec<Matrix> =
            class_sums.iter().map(|s| restrict_to_subspace(&w, s).expect("class sums preserve C-submodules")).collect();
        let algebra = algebra_span(field, w.rows(), &local);
        if algebra.len() == 1 {
            done.push(w);
            continue;
        }
        for _ in 0..RANDOM_TRIES {
            let t = random_combination(&mut rng, field, &algebra);
            let mp = t.minimal_polynomial();
            let factors = mp.factor();
            if factors.len() > 1 {
                for (f, _) in factors {
                    let ker = Matrix::from_vectors(field, w.rows(), &f.eval_matrix(&t).left_kernel());
                    work.push(ker.mul(&w));
                }
                continue 'pieces;
            }
            if mp.degree() == Some(algebra.len()) {
                done.push(w);
                continue 'pieces;
            }
        }
        return Err(ModuleError::Internal("random splitting of the central algebra did not settle".into()));
    }

    let c_gens = generating_set(m.group(), c);
    let gen_positions: Vec<usize> = c_gens.iter().map(|g| c.elements().binary_search(g).unwrap()).collect();
    let mut components = Vec::with_capacity(done.len());
    for w in done {
        let w = w.rref().reduced.select_rows(&(0..w.rows()).collect::<Vec<_>>());
        let x_basis = irreducible_submodule(m, &c_gens, &w, &mut rng)?;
        let matrices: Vec<Matrix> = c
            .elements()
            .iter()
            .map(|&g| restrict_to_subspace(&x_basis, m.matrix(g)).expect("X is C-invariant"))
            .collect();
        let gm: Vec<Matrix> = gen_positions.iter().map(|&i| matrices[i].clone()).collect();
        let endo_degree = commutant_shaped(field, x_basis.rows(), x_basis.rows(), &gm, &gm).len();
        let multiplicity = w.rows() / x_basis.rows();
        components.push(HomogeneousComponent {
            basis: w,
            isotype: Isotype {
                basis: x_basis,
                matrices,
                elements: c.elements().to_vec(),
                generator_positions: gen_positions.clone(),
                endo_degree,
            },
            endo_degree,
            multiplicity,
        });
    }
    components.sort_by(|a, b| a.basis.data().cmp(b.basis.data()).then(a.basis.rows().cmp(&b.basis.rows())));
    Ok(HomogeneousDecomposition { subgroup: c.clone(), components })
}

/// Finds an irreducible `C`-submodule inside a homogeneous piece `S` by
/// cutting with kernels of elements of `End_C(S)` until it is commutative.
fn irreducible_submodule(
    m: &GModule,
    c_gens: &[usize],
    s: &Matrix,
    rng: &mut ChaCha8Rng,
) -> Result<Matrix, ModuleError> {
    let field = m.field();
    let mut s = s.clone();
    'outer: loop {
        let local: Vec<Matrix> =
            c_gens.iter().map(|&g| restrict_to_subspace(&s, m.matrix(g)).expect("C-invariant")).collect();
        let d = s.rows();
        let endo = commutant_shaped(field, d, d, &local, &local);
        let commutative = endo.iter().all(|a| endo.iter().all(|b| a.mul(b) == b.mul(a)));
        if commutative {
            return Ok(s);
        }
        for _ in 0..RANDOM_TRIES {
            let t = random_combination(rng, field, &endo);
            let mp: Poly = t.minimal_polynomial();
            let factors = mp.factor();
            let parts: usize = factors.iter().map(|(_, k)| k).sum();
            if parts > 1 {
                let f = &factors[0].0;
                let ker = Matrix::from_vectors(field, d, &f.eval_matrix(&t).left_kernel());
                s = ker.mul(&s);
                continue 'outer;
            }
        }
        return Err(ModuleError::Internal("no splitting endomorphism found".into()));
    }
}
