use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ffla::{is_prime, restrict_to_subspace, FieldSpec, Matrix};
use crate::grp::{conjugacy_classes, ConjugacyData, FiniteGroup, ORDER_CAP};

use super::{ChartabError, CycInt};

const SPLIT_TRIES: usize = 200;
const PRIME_BOUND: u64 = 1 << 30;

/// Irreducible complex characters of a finite group. Characters are indexed
/// by class; `characters[0]` is the trivial character.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    classes: ConjugacyData,
    characters: Vec<Vec<CycInt>>,
    degrees: Vec<usize>,
    aux_prime: u64,
}

impl CharacterTable {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyData {
        &self.classes
    }

    pub fn characters(&self) -> &[Vec<CycInt>] {
        &self.characters
    }

    pub fn character(&self, i: usize) -> &[CycInt] {
        &self.characters[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn exponent(&self) -> usize {
        self.classes.exponent
    }

    pub fn aux_prime(&self) -> u64 {
        self.aux_prime
    }

    /// `χ_i(x)` for a group element `x`.
    pub fn value(&self, i: usize, x: usize) -> &CycInt {
        &self.characters[i][self.classes.class_of[x]]
    }

    pub fn export(&self) -> TableExport {
        let classes = (0..self.classes.len())
            .map(|c| ClassExport {
                representative_word: self.group.word(self.classes.reps[c]).to_vec(),
                size: self.classes.sizes[c],
                element_order: self.classes.class_order(c),
            })
            .collect();
        let characters = self
            .characters
            .iter()
            .zip(&self.degrees)
            .map(|(chi, &degree)| ValueExport {
                degree,
                values: chi.iter().map(|v| (v.exponent(), v.coeffs().to_vec())).collect(),
            })
            .collect();
        TableExport {
            order: self.group.order(),
            exponent: self.exponent(),
            auxiliary_prime: self.aux_prime,
            classes,
            characters,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassExport {
    /// Generator indices whose product, left to right, is the representative.
    pub representative_word: Vec<u16>,
    pub size: usize,
    pub element_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValueExport {
    pub degree: usize,
    /// `(E, c)` meaning `Σ_u c_u ζ_E^u`.
    pub values: Vec<(usize, Vec<i64>)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableExport {
    pub order: usize,
    pub exponent: usize,
    pub auxiliary_prime: u64,
    pub classes: Vec<ClassExport>,
    pub characters: Vec<ValueExport>,
}

/// Least prime `q ≡ 1 (mod e)` with `q > 2√n`.
pub fn auxiliary_prime(e: usize, n: usize) -> Result<u64, ChartabError> {
    let e = e as u64;
    let lower = 2 * (n as f64).sqrt().ceil() as u64;
    let mut q = e + 1;
    while q <= PRIME_BOUND {
        if q * q > 4 * n as u64 && is_prime(q) {
            return Ok(q);
        }
        q += e;
    }
    Err(ChartabError::NoAuxiliaryPrime { exponent: e as usize, lower, bound: PRIME_BOUND })
}

/// Class matrices `N_j` with `N_j[l][k] = a_{jkl}`, where
/// `C_j·C_k = Σ_l a_{jkl} C_l` in the centre of the group algebra. A central
/// character `ω` satisfies `ω·N_j = ω(C_j)·ω`.
fn class_matrices(g: &FiniteGroup, cc: &ConjugacyData, field: FieldSpec) -> Vec<Matrix> {
    let k = cc.len();
    let mut members = vec![Vec::new(); k];
    for (x, &c) in cc.class_of.iter().enumerate() {
        members[c].push(x);
    }
    (0..k)
        .map(|j| {
            let mut m = Matrix::zeros(field, k, k);
            for l in 0..k {
                let gl = cc.reps[l];
                for &x in &members[j] {
                    let kk = cc.class_of[g.mul(g.inv(x), gl)];
                    m.set(l, kk, field.add(m.get(l, kk), 1));
                }
            }
            m
        })
        .collect()
}

/// Common eigenvectors of the commuting family `mats` acting on row vectors,
/// found by splitting along eigenspaces of random combinations.
fn common_eigenvectors(mats: &[Matrix], field: FieldSpec, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<u64>>, ChartabError> {
    let k = mats[0].rows();
    let mut pending = vec![Matrix::identity(field, k)];
    let mut done = Vec::new();
    while let Some(space) = pending.pop() {
        let d = space.rows();
        if d == 1 {
            done.push(space.row(0).to_vec());
            continue;
        }
        let local: Vec<Matrix> = mats
            .iter()
            .map(|m| restrict_to_subspace(&space, m).expect("class matrices preserve eigenspaces"))
            .collect();
        let mut split = None;
        for _ in 0..SPLIT_TRIES {
            let mut comb = Matrix::zeros(field, d, d);
            for m in &local {
                comb = comb.add(&m.scale(rng.gen_range(0..field.p())));
            }
            let roots = comb.minimal_polynomial().roots();
            if roots.len() > 1 {
                split = Some((comb, roots));
                break;
            }
        }
        let (comb, roots) = split.ok_or(ChartabError::NoSplit { dim: d, tries: SPLIT_TRIES })?;
        let mut total = 0;
        for lambda in roots {
            let shifted = comb.sub(&Matrix::identity(field, d).scale(lambda));
            let kernel = shifted.left_kernel();
            total += kernel.len();
            let basis = Matrix::from_vectors(field, d, &kernel).mul(&space);
            pending.push(basis);
        }
        if total != d {
            return Err(ChartabError::Verification("class matrices are not simultaneously diagonalizable".into()));
        }
    }
    Ok(done)
}

/// Lift of a character from `F_q` values to cyclotomic integers, one class
/// at a time, through the eigenvalue multiplicities of `ρ(g)`.
fn lift_character(
    cc: &ConjugacyData,
    values_q: &[u64],
    degree: usize,
    field: FieldSpec,
    z_e: u64,
) -> Result<Vec<CycInt>, ChartabError> {
    let e = cc.exponent;
    (0..cc.len())
        .map(|c| {
            let o = cc.class_order(c);
            let z_o = field.pow(z_e, (e / o) as u64);
            let z_inv = field.inv(z_o)?;
            let o_inv = field.inv(o as u64 % field.p())?;
            let mut coeffs = vec![0i64; e];
            let mut total = 0usize;
            for u in 0..o {
                let step = field.pow(z_inv, u as u64);
                let mut acc = 0u64;
                let mut w = 1u64;
                for t in 0..o {
                    acc = field.add(acc, field.mul(values_q[cc.power_maps[c][t]], w));
                    w = field.mul(w, step);
                }
                let m = field.mul(acc, o_inv) as usize;
                if m > degree {
                    return Err(ChartabError::Verification(format!(
                        "eigenvalue multiplicity {m} exceeds degree {degree} on class {c}"
                    )));
                }
                coeffs[u * (e / o)] = m as i64;
                total += m;
            }
            if total != degree {
                return Err(ChartabError::Verification(format!("multiplicities on class {c} sum to {total}")));
            }
            Ok(CycInt::new(e, coeffs))
        })
        .collect()
}

/// Irreducible characters of `g`, exact and verified by both orthogonality
/// relations.
pub fn dixon_character_table(g: Arc<FiniteGroup>, seed: u64) -> Result<CharacterTable, ChartabError> {
    let n = g.order();
    if n > ORDER_CAP {
        return Err(ChartabError::TooLarge(n));
    }
    let cc = conjugacy_classes(&g);
    let e = cc.exponent;
    let q = auxiliary_prime(e, n)?;
    let field = FieldSpec::character_table(q)?;
    let z_e = field.pow(field.primitive_root(), (q - 1) / e as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mats = class_matrices(&g, &cc, field);
    let vectors = common_eigenvectors(&mats, field, &mut rng)?;
    if vectors.len() != cc.len() {
        return Err(ChartabError::Verification("wrong number of central characters".into()));
    }

    let mut chars = Vec::with_capacity(cc.len());
    for v in vectors {
        let lead = field.inv(v[0])?;
        let omega: Vec<u64> = v.iter().map(|&x| field.mul(x, lead)).collect();
        // Σ_j ω_j ω_{j*} / |C_j| = n / d²
        let mut s = 0u64;
        for j in 0..cc.len() {
            let term = field.mul(omega[j], omega[cc.inverse_class[j]]);
            s = field.add(s, field.mul(term, field.inv(cc.sizes[j] as u64 % q)?));
        }
        let d2 = field.mul(n as u64 % q, field.inv(s)?);
        let degree = (1..=n)
            .take_while(|d| d * d <= n)
            .find(|&d| (d as u64 * d as u64) % q == d2)
            .ok_or_else(|| ChartabError::Verification("no degree matches the normalization".into()))?;
        let values_q: Vec<u64> = (0..cc.len())
            .map(|j| Ok(field.mul(field.mul(omega[j], degree as u64), field.inv(cc.sizes[j] as u64 % q)?)))
            .collect::<Result<_, ChartabError>>()?;
        chars.push((degree, lift_character(&cc, &values_q, degree, field, z_e)?));
    }

    // degree ascending, then multiplicity vectors descending, so the trivial
    // character comes first
    chars.sort_by(|(da, a), (db, b)| {
        da.cmp(db).then_with(|| {
            let ka = a.iter().map(|v| v.coeffs());
            let kb = b.iter().map(|v| v.coeffs());
            kb.cmp(ka)
        })
    });
    let (degrees, characters): (Vec<usize>, Vec<Vec<CycInt>>) = chars.into_iter().unzip();
    let table = CharacterTable { group: g, classes: cc, characters, degrees, aux_prime: q };
    verify_table(&table)?;
    Ok(table)
}

fn verify_table(t: &CharacterTable) -> Result<(), ChartabError> {
    let cc = &t.classes;
    let n = t.group.order();
    let e = cc.exponent;
    let k = cc.len();
    if t.characters.len() != k {
        return Err(ChartabError::Verification("row count differs from class count".into()));
    }
    if t.degrees.iter().map(|d| d * d).sum::<usize>() != n {
        return Err(ChartabError::Verification("squared degrees do not sum to the order".into()));
    }
    for (i, &d) in t.degrees.iter().enumerate() {
        if !n.is_multiple_of(d) || t.characters[i][0].as_integer() != Some(d as i64) {
            return Err(ChartabError::Verification(format!("bad degree {d} for character {i}")));
        }
    }
    let conj: Vec<Vec<CycInt>> = t.characters.iter().map(|chi| chi.iter().map(CycInt::conj).collect()).collect();
    for i in 0..k {
        for j in i..k {
            let mut acc = vec![0i64; e];
            for c in 0..k {
                CycInt::mul_acc(&mut acc, &t.characters[i][c], &conj[j][c], cc.sizes[c] as i64);
            }
            let want = if i == j { n as i64 } else { 0 };
            if CycInt::new(e, acc).as_integer() != Some(want) {
                return Err(ChartabError::Verification(format!("row orthogonality fails for ({i}, {j})")));
            }
        }
    }
    for a in 0..k {
        for b in a..k {
            let mut acc = vec![0i64; e];
            for i in 0..k {
                CycInt::mul_acc(&mut acc, &t.characters[i][a], &conj[i][b], 1);
            }
            let want = if a == b { cc.centralizer_order(a) as i64 } else { 0 };
            if CycInt::new(e, acc).as_integer() != Some(want) {
                return Err(ChartabError::Verification(format!("column orthogonality fails for ({a}, {b})")));
            }
        }
    }
    Ok(())
}
