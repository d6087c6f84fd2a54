use serde::Serialize;

use crate::ffla::{FieldSpec, Matrix};
use crate::gmod::vector_from_index;
use crate::grp::gcd;

use super::{ExtraspecialData, ScenError};

/// An automorphism of `P` inducing `σ` on `P/Z(P)` and fixing `Z(P)`.
#[derive(Clone, Debug, Serialize)]
pub struct LiftedAutomorphism {
    #[serde(skip)]
    pub sigma: Matrix,
    /// Linear central correction `λ`: `(a, v) ↦ (a + μ(v) + λ·v, vσ)`.
    pub correction: Vec<u64>,
    /// Exponent `m` with the returned map equal to `φ^m`.
    pub power: usize,
    pub order: usize,
    #[serde(skip)]
    pub images: Vec<usize>,
}

/// `σBσᵀ − B`; the lift exists iff this is symmetric (alternating for
/// `p = 2`).
fn defect(e: &ExtraspecialData, sigma: &Matrix) -> Matrix {
    let f = sigma.field();
    let b = Matrix::from_rows(f, &e.beta.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect::<Vec<_>>());
    sigma.mul(&b).mul(&sigma.transpose()).sub(&b)
}

pub fn is_isometry(e: &ExtraspecialData, sigma: &Matrix) -> bool {
    let d = e.dim();
    if sigma.rows() != d || sigma.cols() != d || sigma.field().p() != e.p || sigma.determinant() == 0 {
        return false;
    }
    let dm = defect(e, sigma);
    (0..d).all(|i| (0..d).all(|j| dm.get(i, j) == dm.get(j, i))) && (e.p != 2 || (0..d).all(|i| dm.get(i, i) == 0))
}

fn field_of(e: &ExtraspecialData) -> FieldSpec {
    FieldSpec::module(e.p).expect("p is prime")
}

/// Image list of `(a, v) ↦ (a + μ(v) + λ·v, vσ)` with `μ` the quadratic
/// form whose polar form is `σBσᵀ − B`.
fn raw_lift(e: &ExtraspecialData, sigma: &Matrix, lambda: &[u64]) -> Vec<usize> {
    let f = field_of(e);
    let p = e.p;
    let d = e.dim();
    let dm = defect(e, sigma);
    let half = if p == 2 { 0 } else { f.inv(2).unwrap() };
    let order = e.group.order();
    let mut images = vec![0; order];
    for idx in 0..(order as u64 / p) {
        let v = vector_from_index(idx, p, d);
        let mut mu = 0;
        for i in 0..d {
            if v[i] == 0 {
                continue;
            }
            mu = f.add(mu, f.mul(f.mul(dm.get(i, i), half), f.mul(v[i], v[i])));
            mu = f.add(mu, f.mul(lambda[i], v[i]));
            for j in i + 1..d {
                mu = f.add(mu, f.mul(dm.get(i, j), f.mul(v[i], v[j])));
            }
        }
        let w = sigma.vec_mul(&v);
        for a in 0..p {
            images[e.index(a, &v)] = e.index(f.add(a, mu), &w);
        }
    }
    images
}

fn compose_power(images: &[usize], m: usize) -> Vec<usize> {
    (0..images.len()).map(|x| (0..m).fold(x, |y, _| images[y])).collect()
}

fn map_order(images: &[usize]) -> usize {
    let mut cur: Vec<usize> = images.to_vec();
    let mut k = 1;
    while cur.iter().enumerate().any(|(i, &x)| i != x) {
        cur = cur.iter().map(|&x| images[x]).collect();
        k += 1;
    }
    k
}

/// Lifts with `λ = 0`.
pub fn lift_isometry(e: &ExtraspecialData, sigma: &Matrix) -> Result<LiftedAutomorphism, ScenError> {
    let lift = lift_isometry_with(e, sigma, &vec![0; e.dim()])?;
    verify_lift(e, &lift)?;
    Ok(lift)
}

/// Lifts with a given central correction. When `|σ|` is prime to `p`, the
/// lift is replaced by `φ^m` with `m ≡ 1 (mod |σ|)`, `p | m`, which still
/// induces `σ` and has order `|σ|`.
pub fn lift_isometry_with(
    e: &ExtraspecialData,
    sigma: &Matrix,
    lambda: &[u64],
) -> Result<LiftedAutomorphism, ScenError> {
    if !is_isometry(e, sigma) {
        return Err(ScenError::NotIsometry(format!("{:?}", sigma.to_rows())));
    }
    let sigma_order =
        sigma.multiplicative_order(1 << 20).ok_or_else(|| ScenError::Lift("isometry order not found".into()))? as usize;
    let raw = raw_lift(e, sigma, lambda);
    let mut power = 1;
    let mut images = raw.clone();
    let mut order = map_order(&raw);
    if order != sigma_order && gcd(sigma_order, e.p as usize) == 1 {
        power = (1..=e.p as usize).map(|k| k * sigma_order + 1).find(|m| m % e.p as usize == 0).unwrap();
        images = compose_power(&raw, power);
        order = map_order(&images);
        if order != sigma_order {
            return Err(ScenError::Lift(format!("adjusted lift has order {order}, expected {sigma_order}")));
        }
    }
    Ok(LiftedAutomorphism { sigma: sigma.clone(), correction: lambda.to_vec(), power, order, images })
}

/// Exhaustive check: automorphism, identity on `Z(P)`, and `σ` on `P/Z(P)`.
pub fn verify_lift(e: &ExtraspecialData, lift: &LiftedAutomorphism) -> Result<(), ScenError> {
    let g = &e.group;
    let n = g.order();
    let im = &lift.images;
    let mut hit = vec![false; n];
    for &y in im {
        if std::mem::replace(&mut hit[y], true) {
            return Err(ScenError::Lift("lift is not bijective".into()));
        }
    }
    for x in 0..n {
        for y in 0..n {
            if im[g.mul(x, y)] != g.mul(im[x], im[y]) {
                return Err(ScenError::Lift(format!("lift is not a homomorphism at ({x}, {y})")));
            }
        }
    }
    for a in 0..e.p as usize {
        if im[a] != a {
            return Err(ScenError::Lift("lift moves the centre".into()));
        }
    }
    let sig = lift.sigma.pow(lift.power as u64);
    for x in 0..n {
        let (_, v) = e.coords(x);
        if e.coords(im[x]).1 != sig.vec_mul(&v) {
            return Err(ScenError::Lift("lift induces the wrong map on P/Z".into()));
        }
    }
    Ok(())
}
