use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::gmod::{vector_from_index, vector_index};
use crate::grp::{center, commutator_subgroup, frattini_subgroup, FiniteGroup, Provenance, Subgroup, ORDER_CAP};

use super::ScenError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// `P = {(a, v)}` with `(a,v)(b,w) = (a + b + β(v,w), v + w)`, `a ∈ F_p`,
/// `v ∈ F_p^{2n}`. Element `(a, v)` has index `a + p·index(v)`.
#[derive(Clone, Debug)]
pub struct ExtraspecialData {
    pub p: u64,
    pub n: usize,
    pub sign: Sign,
    /// `β(x, y) = x·B·yᵀ`.
    pub beta: Vec<Vec<u64>>,
    pub group: Arc<FiniteGroup>,
}

impl ExtraspecialData {
    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn index(&self, a: u64, v: &[u64]) -> usize {
        (a + self.p * vector_index(v, self.p)) as usize
    }

    pub fn coords(&self, x: usize) -> (u64, Vec<u64>) {
        let x = x as u64;
        (x % self.p, vector_from_index(x / self.p, self.p, self.dim()))
    }

    pub fn form(&self, v: &[u64], w: &[u64]) -> u64 {
        let p = self.p;
        let mut acc = 0;
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for (j, &wj) in w.iter().enumerate() {
                acc = (acc + vi * self.beta[i][j] % p * wj) % p;
            }
        }
        acc
    }

    /// `Q(v) = β(v, v)`; the squaring map for `p = 2`.
    pub fn quadratic(&self, v: &[u64]) -> u64 {
        self.form(v, v)
    }

    pub fn center(&self) -> Subgroup {
        let els: Vec<usize> = (0..self.p as usize).collect();
        Subgroup::from_elements(&self.group, &els).expect("the a-axis is a subgroup")
    }
}

/// Builds `p^{1+2n}`: exponent `p` for odd `p`, and for `p = 2` the type
/// given by `sign`.
pub fn build_extraspecial(p: u64, n: usize, sign: Sign) -> Result<ExtraspecialData, ScenError> {
    if !crate::ffla::is_prime(p) || n == 0 {
        return Err(ScenError::Spec(format!("no extraspecial group for p = {p}, n = {n}")));
    }
    let order = (p as u128).checked_pow(1 + 2 * n as u32).unwrap_or(u128::MAX);
    if order > ORDER_CAP as u128 {
        return Err(ScenError::Cap { order });
    }
    let order = order as usize;
    let d = 2 * n;
    let mut beta = vec![vec![0u64; d]; d];
    for i in 0..n {
        beta[i][n + i] = 1;
    }
    if p == 2 && sign == Sign::Minus {
        beta[0][0] = 1;
        beta[n][n] = 1;
    }
    let mut data = ExtraspecialData { p, n, sign, beta, group: Arc::new(FiniteGroup::trivial()) };
    let coords: Vec<(u64, Vec<u64>)> = (0..order).map(|x| data.coords(x)).collect();
    let mut table = vec![0u16; order * order];
    for (x, (a, v)) in coords.iter().enumerate() {
        for (y, (b, w)) in coords.iter().enumerate() {
            let c = (a + b + data.form(v, w)) % p;
            let s: Vec<u64> = v.iter().zip(w).map(|(vi, wi)| (vi + wi) % p).collect();
            table[x * order + y] = data.index(c, &s) as u16;
        }
    }
    let gens: Vec<usize> = (0..d)
        .map(|i| {
            let mut e = vec![0; d];
            e[i] = 1;
            data.index(0, &e)
        })
        .collect();
    let prov = Provenance::Coordinates(coords.iter().map(|(a, v)| [vec![*a], v.clone()].concat()).collect());
    data.group = Arc::new(FiniteGroup::from_table(order, table, gens, prov)?);
    verify_extraspecial(&data)?;
    Ok(data)
}

fn verify_extraspecial(e: &ExtraspecialData) -> Result<(), ScenError> {
    let g = &e.group;
    let z = e.center();
    let whole = Subgroup::whole(g);
    let fail = |what: &str| Err(ScenError::Internal(format!("extraspecial check failed: {what}")));
    if center(g) != z {
        return fail("center");
    }
    if commutator_subgroup(g, &whole, &whole) != z {
        return fail("derived subgroup");
    }
    if frattini_subgroup(g)? != z {
        return fail("Frattini subgroup");
    }
    let want_exp = if e.p == 2 { 4 } else { e.p as usize };
    if g.exponent() != want_exp {
        return fail("exponent");
    }
    if e.p == 2 {
        // singular vectors: 2^{2n-1} + ε·2^{n-1}
        let d = e.dim();
        let singular = (0..1u64 << d).filter(|&i| e.quadratic(&vector_from_index(i, 2, d)) == 0).count() as i64;
        let half = 1i64 << (d - 1);
        let eps = 1i64 << (e.n - 1);
        let want = if e.sign == Sign::Plus { half + eps } else { half - eps };
        if singular != want {
            return fail("Arf invariant");
        }
    }
    Ok(())
}
