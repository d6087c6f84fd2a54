use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ffla::{FieldSpec, Matrix, Poly};
use crate::gmod::{module_from_generators, GModule};
use crate::grp::catalog::quaternion8;
use crate::grp::{direct_product, FiniteGroup, Subgroup};

const MAX_DIM: usize = 8;
const MAX_ORDER: usize = 72;

/// A seeded instance `V = ⊕ X_k ⊗ U_k` for `A = C_{p^n} × C` under a random
/// change of basis.
#[derive(Clone, Debug)]
pub struct RandomInstance {
    pub module: GModule,
    pub b: Subgroup,
    pub c: Subgroup,
    pub description: String,
}

struct Pool {
    name: &'static str,
    group: FiniteGroup,
    /// Irreducible representations, one matrix per generator.
    irreps: Vec<Vec<Matrix>>,
}

fn comp(field: FieldSpec, coeffs: &[i64]) -> Matrix {
    Matrix::companion(&Poly::from_signed(field, coeffs))
}

fn scalar(field: FieldSpec, c: i64) -> Matrix {
    Matrix::from_rows(field, &[vec![c]])
}

fn cyclic_pool(name: &'static str, n: usize, field: FieldSpec, reps: &[&[i64]]) -> Pool {
    let mut irreps = vec![vec![scalar(field, 1)]];
    irreps.extend(reps.iter().map(|c| vec![comp(field, c)]));
    Pool { name, group: FiniteGroup::cyclic(n).unwrap(), irreps }
}

fn pools(p: u64) -> Vec<Pool> {
    let f = FieldSpec::module(p).unwrap();
    if p == 2 {
        let w = comp(f, &[1, 1, 1]);
        let one = Matrix::identity(f, 2);
        let c3 = FiniteGroup::cyclic(3).unwrap();
        vec![
            cyclic_pool("C3", 3, f, &[&[1, 1, 1]]),
            cyclic_pool("C5", 5, f, &[&[1, 1, 1, 1, 1]]),
            cyclic_pool("C7", 7, f, &[&[1, 1, 0, 1], &[1, 0, 1, 1]]),
            cyclic_pool("C15", 15, f, &[&[1, 1, 1], &[1, 1, 1, 1, 1], &[1, 1, 0, 0, 1], &[1, 0, 0, 1, 1]]),
            Pool {
                name: "C3xC3",
                group: direct_product(&c3, &c3).unwrap(),
                irreps: vec![
                    vec![scalar(f, 1), scalar(f, 1)],
                    vec![w.clone(), one.clone()],
                    vec![one, w.clone()],
                    vec![w.clone(), w.clone()],
                    vec![w.clone(), w.mul(&w)],
                ],
            },
        ]
    } else {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let signs = |a: i64, b: i64| vec![scalar(f, a), scalar(f, b)];
        let mut q8 = vec![signs(1, 1), signs(-1, 1), signs(1, -1), signs(-1, -1)];
        q8.push(vec![Matrix::from_rows(f, &[vec![0, 2], vec![1, 0]]), Matrix::from_rows(f, &[vec![1, 1], vec![1, 2]])]);
        vec![
            Pool { name: "C2", group: c2.clone(), irreps: vec![vec![scalar(f, 1)], vec![scalar(f, -1)]] },
            Pool {
                name: "C4",
                group: FiniteGroup::cyclic(4).unwrap(),
                irreps: vec![vec![scalar(f, 1)], vec![scalar(f, -1)], vec![comp(f, &[1, 0, 1])]],
            },
            Pool {
                name: "C2xC2",
                group: direct_product(&c2, &c2).unwrap(),
                irreps: vec![signs(1, 1), signs(-1, 1), signs(1, -1), signs(-1, -1)],
            },
            Pool { name: "Q8", group: quaternion8(), irreps: q8 },
            Pool {
                name: "C8",
                group: FiniteGroup::cyclic(8).unwrap(),
                irreps: vec![
                    vec![scalar(f, 1)],
                    vec![scalar(f, -1)],
                    vec![comp(f, &[1, 0, 1])],
                    vec![comp(f, &[2, 1, 1])],
                    vec![comp(f, &[2, 2, 1])],
                ],
            },
        ]
    }
}

fn random_invertible(rng: &mut ChaCha8Rng, field: FieldSpec, d: usize) -> Matrix {
    loop {
        let data = (0..d * d).map(|_| rng.gen_range(0..field.p())).collect();
        let m = Matrix::from_flat(field, d, d, data);
        if m.determinant() != 0 {
            return m;
        }
    }
}

/// Draws a faithful instance with `dim V ≤ 8` and `|A| ≤ 72`. Supported
/// characteristics are 2 and 3.
pub fn random_instance(p: u64, seed: u64) -> RandomInstance {
    assert!(p == 2 || p == 3, "instance pools exist for p = 2 and p = 3");
    let field = FieldSpec::module(p).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pools = pools(p);
    loop {
        let pool = pools.choose(&mut rng).unwrap();
        let max_n = (0..4u32)
            .filter(|&n| pool.group.order() * (p as usize).pow(n) <= MAX_ORDER && (p as usize).pow(n) <= MAX_DIM)
            .max()
            .unwrap();
        let n = rng.gen_range(0..=max_n);
        let bsize = (p as usize).pow(n);
        let mut summands: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut dim = 0;
        for _ in 0..rng.gen_range(1..=3) {
            let k = rng.gen_range(0..pool.irreps.len());
            let dx = pool.irreps[k][0].rows();
            let blocks: Vec<usize> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(1..=bsize)).collect();
            let du: usize = blocks.iter().sum();
            if dim + dx * du <= MAX_DIM {
                dim += dx * du;
                summands.push((k, blocks));
            }
        }
        if summands.is_empty() {
            continue;
        }
        let b_group = FiniteGroup::cyclic(bsize).unwrap();
        let a = Arc::new(direct_product(&b_group, &pool.group).unwrap());
        let mut gens = Vec::new();
        if bsize > 1 {
            let blocks: Vec<Matrix> = summands
                .iter()
                .map(|(k, bl)| {
                    let dx = pool.irreps[*k][0].rows();
                    let j: Vec<Matrix> = bl.iter().map(|&s| Matrix::jordan_block(field, s)).collect();
                    Matrix::identity(field, dx).kronecker(&Matrix::block_diagonal(field, &j))
                })
                .collect();
            gens.push(Matrix::block_diagonal(field, &blocks));
        }
        for gi in 0..pool.group.generators().len() {
            let blocks: Vec<Matrix> = summands
                .iter()
                .map(|(k, bl)| pool.irreps[*k][gi].kronecker(&Matrix::identity(field, bl.iter().sum())))
                .collect();
            gens.push(Matrix::block_diagonal(field, &blocks));
        }
        let pm = random_invertible(&mut rng, field, dim);
        let pinv = pm.inverse().unwrap();
        let gens: Vec<Matrix> = gens.iter().map(|g| pinv.mul(g).mul(&pm)).collect();
        let module = module_from_generators(a.clone(), gens, field, dim).expect("pool representations are modules");
        if !module.is_faithful() {
            continue;
        }
        let b = Subgroup::generated(&a, &[if bsize > 1 { 1 } else { 0 }]);
        let c_els: Vec<usize> = (0..pool.group.order()).map(|h| h * bsize).collect();
        let c = Subgroup::from_elements(&a, &c_els).unwrap();
        let description = format!("A = C{bsize} x {}, summands {:?}", pool.name, summands);
        return RandomInstance { module, b, c, description };
    }
}
