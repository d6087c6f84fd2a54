use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ffla::{restrict_to_subspace, FieldSpec, Matrix, Poly, SpanSolver};

use super::{commutant, module_from_generators, GModule, Isotype, ModuleError};

/// `E = End_C(X)`, a finite field, presented by a primitive element `T`
/// acting on `X` on the right.
#[derive(Clone, Debug)]
pub struct EndoField {
    pub t: Matrix,
    pub minpoly: Poly,
    pub degree: usize,
}

impl EndoField {
    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = self.t.field();
        let prod = Poly::new(f, a.to_vec()).mul(&Poly::new(f, b.to_vec())).rem(&self.minpoly);
        pad(prod.coeffs(), self.degree)
    }

    fn t_power(&self, k: usize) -> Vec<u64> {
        let f = self.t.field();
        let xk = Poly::new(f, (0..=k).map(|i| u64::from(i == k)).collect()).rem(&self.minpoly);
        pad(xk.coeffs(), self.degree)
    }

    /// Right-regular representation of `a`: row `k` holds `t^k·a`.
    fn block(&self, a: &[u64]) -> Matrix {
        let rows: Vec<Vec<u64>> = (0..self.degree).map(|k| self.mul(&self.t_power(k), a)).collect();
        Matrix::from_vectors(self.t.field(), self.degree, &rows)
    }
}

fn pad(c: &[u64], n: usize) -> Vec<u64> {
    let mut v = c.to_vec();
    v.resize(n, 0);
    v
}

/// `U = Hom_C(X, W)` with `B = ⟨α⟩` acting by post-composition and `E` by
/// pre-composition.
#[derive(Clone, Debug)]
pub struct HomSpace {
    /// `F_p`-basis of `U`; each map is `dim X × dim W` in the coordinates of
    /// the isotype basis and the component basis.
    pub maps: Vec<Matrix>,
    pub endo: EndoField,
    /// The element of the acting group playing the role of `α`.
    pub alpha: usize,
    /// `α` on `U` in the basis `maps`.
    pub alpha_matrix: Matrix,
    /// `dim_E U`, equal to the multiplicity of `X` in `W`.
    pub e_dim: usize,
    /// Jordan block sizes of `α` on `U` over `F_p`.
    pub partition_fp: Vec<usize>,
    /// Jordan block sizes of `α` on `U` over `E`.
    pub partition: Vec<usize>,
    /// Multiplicative order of `α` on `U`, a power of `p`.
    pub alpha_order: u64,
}

impl HomSpace {
    /// `Σ u_i H_i` for coordinates `u` in the basis `maps`.
    pub fn map_of(&self, u: &[u64]) -> Matrix {
        let f = self.endo.t.field();
        let first = &self.maps[0];
        self.maps.iter().zip(u).fold(Matrix::zeros(f, first.rows(), first.cols()), |acc, (h, &c)| acc.add(&h.scale(c)))
    }
}

fn c_matrices_on(m: &GModule, iso: &Isotype, basis: &Matrix) -> Result<Vec<Matrix>, ModuleError> {
    iso.generator_positions
        .iter()
        .map(|&i| {
            restrict_to_subspace(basis, m.matrix(iso.elements[i]))
                .ok_or_else(|| ModuleError::Isotype("component is not C-invariant".into()))
        })
        .collect()
}

/// Finds a primitive element of the field `End_C(X)`.
fn endo_field(field: FieldSpec, x_gens: &[Matrix], dim: usize, seed: u64) -> Result<EndoField, ModuleError> {
    let basis = commutant(field, x_gens, x_gens);
    let basis = if basis.is_empty() || x_gens.is_empty() {
        if x_gens.is_empty() && dim > 1 {
            return Err(ModuleError::Isotype("isotype of a trivial group must be one-dimensional".into()));
        }
        vec![Matrix::identity(field, dim)]
    } else {
        basis
    };
    let e = basis.len();
    let check = |t: &Matrix| {
        let mp = t.minimal_polynomial();
        (mp.degree() == Some(e)).then(|| EndoField { t: t.clone(), minpoly: mp, degree: e })
    };
    if let Some(found) = basis.iter().find_map(check) {
        return Ok(found);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..500 {
        let t =
            basis.iter().fold(Matrix::zeros(field, dim, dim), |acc, b| acc.add(&b.scale(rng.gen_range(0..field.p()))));
        if let Some(found) = check(&t) {
            return Ok(found);
        }
    }
    Err(ModuleError::Isotype("endomorphism ring of X is not a field; X is not irreducible".into()))
}

/// Builds `U = Hom_C(X, W)` for the component with basis `w_basis` and the
/// matrix of `α` on it.
pub fn hom_space_module(
    m: &GModule,
    iso: &Isotype,
    w_basis: &Matrix,
    alpha: usize,
    seed: u64,
) -> Result<HomSpace, ModuleError> {
    let field = m.field();
    let dx = iso.dim();
    let dw = w_basis.rows();
    let x_gens = iso.generator_matrices();
    let w_gens = c_matrices_on(m, iso, w_basis)?;
    let maps = if x_gens.is_empty() { commutant_trivial(field, dx, dw) } else { commutant(field, &x_gens, &w_gens) };
    let endo = endo_field(field, &x_gens, dx, seed)?;
    let e = endo.degree;
    if !dw.is_multiple_of(dx) || maps.is_empty() || maps.len() != e * (dw / dx) {
        return Err(ModuleError::Isotype(format!(
            "Hom_C(X, W) has dimension {} but a homogeneous W of dimension {dw} over X of dimension {dx} needs {}",
            maps.len(),
            e * (dw / dx).max(1)
        )));
    }
    let rho_alpha = restrict_to_subspace(w_basis, m.matrix(alpha))
        .ok_or_else(|| ModuleError::Isotype("component is not invariant under α".into()))?;
    let flat = Matrix::from_vectors(field, dx * dw, &maps.iter().map(|h| h.data().to_vec()).collect::<Vec<_>>());
    let solver = SpanSolver::new(&flat);
    let rows: Vec<Vec<u64>> = maps
        .iter()
        .map(|h| {
            solver
                .coordinates(h.mul(&rho_alpha).data())
                .ok_or_else(|| ModuleError::Isotype("α does not commute with C on W".into()))
        })
        .collect::<Result<_, _>>()?;
    let alpha_matrix = Matrix::from_vectors(field, maps.len(), &rows);
    let partition_fp = alpha_matrix.unipotent_partition()?;
    let mut partition = Vec::new();
    let mut sizes = partition_fp.clone();
    sizes.dedup();
    for s in sizes {
        let count = partition_fp.iter().filter(|&&t| t == s).count();
        if count % e != 0 {
            return Err(ModuleError::Internal("α is not E-linear on U".into()));
        }
        partition.extend(std::iter::repeat_n(s, count / e));
    }
    let alpha_order = alpha_matrix
        .multiplicative_order(u64::MAX)
        .ok_or_else(|| ModuleError::Internal("α has no finite order on U".into()))?;
    Ok(HomSpace { e_dim: maps.len() / e, maps, endo, alpha, alpha_matrix, partition_fp, partition, alpha_order })
}

fn commutant_trivial(field: FieldSpec, dx: usize, dw: usize) -> Vec<Matrix> {
    (0..dx * dw)
        .map(|k| {
            let mut h = Matrix::zeros(field, dx, dw);
            h.set(k / dw, k % dw, 1);
            h
        })
        .collect()
}

/// `X ⊗_E U` with its own action and the evaluation map to `W`.
#[derive(Clone, Debug)]
pub struct TensorFactorization {
    pub endo_degree: usize,
    /// `dim_E X`
    pub x_e_dim: usize,
    /// `dim_E U`
    pub u_e_dim: usize,
    pub alpha_on_u: Matrix,
    pub partition: Vec<usize>,
    /// Action of the whole group on `X ⊗_E U`. Basis vector
    /// `((i·dim_E U + j)·e + k)` is `(x_i T^k) ⊗ u_j`.
    pub module: GModule,
    /// Row `b` is the image in `W` (component coordinates) of basis vector `b`.
    pub evaluation: Matrix,
}

/// Greedy `E`-basis: keeps candidates not in the span of the earlier
/// `E`-multiples. Returns chosen candidates and the solver for the rows
/// `c_i·T^k`, ordered `(i, k)`.
fn e_basis(
    field: FieldSpec,
    width: usize,
    e: usize,
    candidates: &[Vec<u64>],
    times_t: impl Fn(&[u64]) -> Vec<u64>,
) -> (Vec<Vec<u64>>, Vec<Vec<u64>>) {
    let mut chosen = Vec::new();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for c in candidates {
        if SpanSolver::new(&Matrix::from_vectors(field, width, &rows)).contains(c) {
            continue;
        }
        let mut y = c.clone();
        for _ in 0..e {
            rows.push(y.clone());
            y = times_t(&y);
        }
        chosen.push(c.clone());
    }
    (chosen, rows)
}

fn e_coordinates(solver: &SpanSolver, e: usize, v: &[u64]) -> Result<Vec<Vec<u64>>, ModuleError> {
    let c = solver.coordinates(v).ok_or_else(|| ModuleError::Internal("vector outside the E-span".into()))?;
    Ok(c.chunks(e).map(|ch| ch.to_vec()).collect())
}

/// Expands an `E`-matrix with `n × n` entries into an `F_p`-matrix.
fn expand(endo: &EndoField, entries: &[Vec<Vec<u64>>]) -> Matrix {
    let e = endo.degree;
    let n = entries.len();
    let mut out = Matrix::zeros(endo.t.field(), n * e, n * e);
    for (r, row) in entries.iter().enumerate() {
        for (c, a) in row.iter().enumerate() {
            if a.iter().all(|&x| x == 0) {
                continue;
            }
            let b = endo.block(a);
            for k in 0..e {
                for l in 0..e {
                    out.set(r * e + k, c * e + l, b.get(k, l));
                }
            }
        }
    }
    out
}

fn kron_e(a: &[Vec<Vec<u64>>], b: &[Vec<Vec<u64>>], endo: &EndoField) -> Vec<Vec<Vec<u64>>> {
    let (na, nb) = (a.len(), b.len());
    let mut out = vec![vec![vec![0u64; endo.degree]; na * nb]; na * nb];
    for i in 0..na {
        for j in 0..nb {
            for i2 in 0..na {
                for j2 in 0..nb {
                    out[i * nb + j][i2 * nb + j2] = endo.mul(&a[i][i2], &b[j][j2]);
                }
            }
        }
    }
    out
}

fn e_identity(n: usize, e: usize) -> Vec<Vec<Vec<u64>>> {
    (0..n).map(|i| (0..n).map(|j| pad(&[u64::from(i == j)], e)).collect()).collect()
}

/// Reassembles `W` as `X ⊗_E U`. Every generator of the acting group must
/// factor as `α^s·c` with `c ∈ C`.
pub fn tensor_assemble(
    m: &GModule,
    iso: &Isotype,
    w_basis: &Matrix,
    hom: &HomSpace,
) -> Result<TensorFactorization, ModuleError> {
    let field = m.field();
    let endo = &hom.endo;
    let e = endo.degree;
    let dx = iso.dim();
    let dw = w_basis.rows();
    if hom.maps.first().map(|h| (h.rows(), h.cols())) != Some((dx, dw)) {
        return Err(ModuleError::Isotype("Hom space does not match the isotype and component".into()));
    }

    let std_x: Vec<Vec<u64>> = (0..dx).map(|i| (0..dx).map(|j| u64::from(i == j)).collect()).collect();
    let (xs, x_rows) = e_basis(field, dx, e, &std_x, |v| endo.t.vec_mul(v));
    let x_solver = SpanSolver::new(&Matrix::from_vectors(field, dx, &x_rows));
    let flat_maps: Vec<Vec<u64>> = hom.maps.iter().map(|h| h.data().to_vec()).collect();
    let (us, u_rows) = e_basis(field, dx * dw, e, &flat_maps, |v| {
        endo.t.mul(&Matrix::from_flat(field, dx, dw, v.to_vec())).data().to_vec()
    });
    let u_solver = SpanSolver::new(&Matrix::from_vectors(field, dx * dw, &u_rows));
    if xs.len() * e != dx || us.len() != hom.e_dim {
        return Err(ModuleError::Internal("E-bases have the wrong size".into()));
    }
    let us: Vec<Matrix> = us.into_iter().map(|v| Matrix::from_flat(field, dx, dw, v)).collect();

    // evaluation: (x_i T^k) ⊗ u_j ↦ x_i T^k H_j
    let mut ev_rows = Vec::with_capacity(dw);
    for x in &xs {
        for h in &us {
            let mut y = x.clone();
            for _ in 0..e {
                ev_rows.push(h.vec_mul(&y));
                y = endo.t.vec_mul(&y);
            }
        }
    }
    let evaluation = Matrix::from_vectors(field, dw, &ev_rows);
    if evaluation.rows() != dw || evaluation.rank() != dw {
        return Err(ModuleError::Internal("evaluation map is not bijective".into()));
    }

    let nx = xs.len();
    let nu = us.len();
    let rho_alpha = restrict_to_subspace(w_basis, m.matrix(hom.alpha)).expect("checked in hom_space_module");
    let b_e: Vec<Vec<Vec<u64>>> =
        us.iter().map(|h| e_coordinates(&u_solver, e, h.mul(&rho_alpha).data())).collect::<Result<_, _>>()?;
    let alpha_t = expand(endo, &kron_e(&e_identity(nx, e), &b_e, endo));
    let c_tensor = |pos: usize| -> Result<Matrix, ModuleError> {
        let a: Vec<Vec<Vec<u64>>> =
            xs.iter().map(|x| e_coordinates(&x_solver, e, &iso.matrices[pos].vec_mul(x))).collect::<Result<_, _>>()?;
        Ok(expand(endo, &kron_e(&a, &e_identity(nu, e), endo)))
    };

    let group = m.group();
    let alpha_powers: Vec<usize> = {
        let mut v = vec![0];
        let mut y = hom.alpha;
        while y != 0 {
            v.push(y);
            y = group.mul(y, hom.alpha);
        }
        v
    };
    let mut gens = Vec::new();
    for &g in group.generators() {
        let split = alpha_powers.iter().enumerate().find_map(|(s, &b)| {
            let c = group.mul(group.inv(b), g);
            iso.elements.binary_search(&c).ok().map(|pos| (s, pos))
        });
        let (s, pos) = split.ok_or_else(|| ModuleError::Isotype(format!("generator {g} is not in ⟨α⟩·C")))?;
        gens.push(alpha_t.pow(s as u64).mul(&c_tensor(pos)?));
    }
    let module = module_from_generators(group.clone(), gens, field, dw)?;
    for &g in group.generators() {
        let rho_w = restrict_to_subspace(w_basis, m.matrix(g))
            .ok_or_else(|| ModuleError::Isotype("component is not invariant".into()))?;
        if module.matrix(g).mul(&evaluation) != evaluation.mul(&rho_w) {
            return Err(ModuleError::Internal(format!("evaluation does not intertwine generator {g}")));
        }
    }
    Ok(TensorFactorization {
        endo_degree: e,
        x_e_dim: nx,
        u_e_dim: nu,
        alpha_on_u: hom.alpha_matrix.clone(),
        partition: hom.partition.clone(),
        module,
        evaluation,
    })
}
