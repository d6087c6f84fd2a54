use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::ffla::{FieldSpec, Matrix};
use crate::grp::{center, prime_power, product_group, Action, FiniteGroup, GeneratorSpec, GroupSpec, Subgroup};

use super::{
    build_extraspecial, lift_isometry_with, verify_lift, ExtraspecialData, LiftedAutomorphism, ScenError, Sign,
};

pub const SCHEMA_VERSION: u32 = 1;
const REPAIR_CAP: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PKind {
    Extraspecial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PSpec {
    pub kind: PKind,
    pub n: usize,
    #[serde(default = "default_sign")]
    pub sign: Sign,
}

fn default_sign() -> Sign {
    Sign::Plus
}

/// Generators of `R` or `A` inside a common ambient group, each with the
/// isometry of `P/Z(P)` it induces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActorSpec {
    /// Needed for matrix generators.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u64>,
    pub generators: Vec<GeneratorSpec>,
    pub isometry_images: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioSpec {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub p: u64,
    pub r: u64,
    #[serde(rename = "P")]
    pub p_spec: PSpec,
    #[serde(rename = "R")]
    pub r_spec: ActorSpec,
    #[serde(rename = "A")]
    pub a_spec: ActorSpec,
    /// Keys among `P`, `R`, `A`, `RA`, `GA`.
    #[serde(default)]
    pub expected_orders: BTreeMap<String, usize>,
}

impl ScenarioSpec {
    pub fn from_json(text: &str) -> Result<Self, ScenError> {
        let spec: ScenarioSpec = serde_json::from_str(text).map_err(|e| ScenError::Spec(e.to_string()))?;
        if spec.schema_version != SCHEMA_VERSION {
            return Err(ScenError::Spec(format!("unsupported schema_version {}", spec.schema_version)));
        }
        Ok(spec)
    }
}

/// `P`, `R`, `A` as subgroups of `GA = P ⋊ RA`.
#[derive(Clone, Debug)]
pub struct Embeddings {
    pub p: Subgroup,
    pub r: Subgroup,
    pub a: Subgroup,
}

#[derive(Clone, Debug)]
pub struct Scenario {
    pub spec: ScenarioSpec,
    pub extraspecial: ExtraspecialData,
    pub ra: Arc<FiniteGroup>,
    pub ga: Arc<FiniteGroup>,
    pub embeddings: Embeddings,
    /// One lift per generator of `RA`.
    pub lifts: Vec<LiftedAutomorphism>,
    /// Whether a nonzero central correction was needed.
    pub repaired: bool,
}

/// Extends per-generator maps along the group and checks that they define a
/// right action `σ_{xg} = σ_x then σ_g`.
fn relations_hold(h: &FiniteGroup, p_order: usize, maps: &[&[usize]]) -> bool {
    let mut sig: Vec<Option<Vec<usize>>> = vec![None; h.order()];
    sig[0] = Some((0..p_order).collect());
    let mut queue = std::collections::VecDeque::from([0usize]);
    let mut done = vec![false; h.order()];
    while let Some(x) = queue.pop_front() {
        if std::mem::replace(&mut done[x], true) {
            continue;
        }
        let sx = sig[x].clone().unwrap();
        for (gi, &g) in h.generators().iter().enumerate() {
            let y = h.mul(x, g);
            let sy: Vec<usize> = sx.iter().map(|&n| maps[gi][n]).collect();
            match &sig[y] {
                Some(existing) if *existing != sy => return false,
                Some(_) => {}
                None => {
                    sig[y] = Some(sy);
                    queue.push_back(y);
                }
            }
        }
    }
    true
}

fn check_prime(q: u64, what: &str) -> Result<(), ScenError> {
    if crate::ffla::is_prime(q) {
        Ok(())
    } else {
        Err(ScenError::Spec(format!("{what} = {q} is not prime")))
    }
}

pub fn assemble_scenario(spec: &ScenarioSpec) -> Result<Scenario, ScenError> {
    check_prime(spec.p, "p")?;
    check_prime(spec.r, "r")?;
    if spec.p == spec.r {
        return Err(ScenError::Spec("p and r must be distinct".into()));
    }
    let e = build_extraspecial(spec.p, spec.p_spec.n, spec.p_spec.sign)?;
    let field = FieldSpec::module(spec.p)?;

    let characteristic = match (spec.r_spec.characteristic, spec.a_spec.characteristic) {
        (Some(x), Some(y)) if x != y => return Err(ScenError::Spec("R and A disagree on the characteristic".into())),
        (x, y) => x.or(y),
    };
    let mut listed = Vec::new();
    let mut images = Vec::new();
    for actor in [&spec.r_spec, &spec.a_spec] {
        if actor.generators.len() != actor.isometry_images.len() {
            return Err(ScenError::Spec("one isometry image per generator is required".into()));
        }
        listed.extend(actor.generators.iter().cloned());
        for rows in &actor.isometry_images {
            if rows.len() != e.dim() || rows.iter().any(|r| r.len() != e.dim()) {
                return Err(ScenError::Spec(format!("isometry images must be {0}×{0}", e.dim())));
            }
            images.push(Matrix::from_rows(field, rows));
        }
    }
    let ambient = GroupSpec { characteristic, generators: listed };
    let (ra, positions) = ambient.build()?;
    let n_r = spec.r_spec.generators.len();
    let r_sub = Subgroup::generated(&ra, &positions[..n_r]);
    let a_sub = Subgroup::generated(&ra, &positions[n_r..]);
    if r_sub.order() > 1 && prime_power(r_sub.order()) != Some(spec.r as usize) {
        return Err(ScenError::Assembly(format!("R has order {}, not a power of {}", r_sub.order(), spec.r)));
    }
    if !r_sub.normalized_by(&ra, &positions[n_r..]) {
        return Err(ScenError::Assembly("A does not normalize R".into()));
    }
    if !r_sub.intersection(&a_sub).is_trivial() || r_sub.order() * a_sub.order() != ra.order() {
        return Err(ScenError::Assembly("RA is not a semidirect product R⋊A".into()));
    }

    // one isometry per generator of the closed group
    let mut gen_sigma: Vec<Matrix> = Vec::new();
    for &g in ra.generators() {
        let first = positions.iter().position(|&x| x == g).expect("closure generators are listed");
        gen_sigma.push(images[first].clone());
    }
    for (i, &x) in positions.iter().enumerate() {
        let expected = match ra.generators().iter().position(|&g| g == x) {
            Some(k) => gen_sigma[k].clone(),
            None if x == 0 => Matrix::identity(field, e.dim()),
            None => continue,
        };
        if images[i] != expected {
            return Err(ScenError::Assembly(format!("generator {i} repeats an element with a different isometry")));
        }
    }

    let (lifts, repaired) = repair_lifts(&e, &ra, &gen_sigma)?;
    for lift in &lifts {
        verify_lift(&e, lift)?;
    }
    let maps: Vec<Vec<usize>> = lifts.iter().map(|l| l.images.clone()).collect();
    let ga = product_group(&e.group, &ra, &Action::Automorphisms(maps))?;
    let po = e.group.order();
    let p_emb = Subgroup::from_elements(&ga, &(0..po).collect::<Vec<_>>())?;
    let lift_sub =
        |s: &Subgroup| Subgroup::from_elements(&ga, &s.elements().iter().map(|&h| h * po).collect::<Vec<_>>());
    let embeddings = Embeddings { p: p_emb, r: lift_sub(&r_sub)?, a: lift_sub(&a_sub)? };
    if !embeddings.p.is_normal_in(&ga) {
        return Err(ScenError::Assembly("P is not normal in GA".into()));
    }
    let zga = center(&ga);
    if !(0..spec.p as usize).all(|z| zga.contains(z)) {
        return Err(ScenError::Assembly("Z(P) is not central in GA".into()));
    }
    let actual: BTreeMap<&str, usize> =
        [("P", po), ("R", r_sub.order()), ("A", a_sub.order()), ("RA", ra.order()), ("GA", ga.order())]
            .into_iter()
            .collect();
    for (k, &want) in &spec.expected_orders {
        match actual.get(k.as_str()) {
            None => return Err(ScenError::Spec(format!("unknown expected_orders key {k}"))),
            Some(&got) if got != want => {
                return Err(ScenError::Assembly(format!("|{k}| = {got}, declared {want}")));
            }
            _ => {}
        }
    }
    Ok(Scenario {
        spec: spec.clone(),
        extraspecial: e,
        ra: Arc::new(ra),
        ga: Arc::new(ga),
        embeddings,
        lifts,
        repaired,
    })
}

/// Lifts every generator's isometry, then searches central corrections in
/// lexicographic order until the lifts satisfy the relations of `RA`.
fn repair_lifts(
    e: &ExtraspecialData,
    ra: &FiniteGroup,
    sigmas: &[Matrix],
) -> Result<(Vec<LiftedAutomorphism>, bool), ScenError> {
    let p = e.p;
    let d = e.dim();
    let per = (p as usize).pow(d as u32);
    let k = sigmas.len();
    let tuples = per.checked_pow(k as u32).filter(|&t| t <= REPAIR_CAP).unwrap_or(REPAIR_CAP);
    let candidates: Vec<Vec<LiftedAutomorphism>> = sigmas
        .iter()
        .map(|s| {
            (0..per)
                .map(|i| lift_isometry_with(e, s, &crate::gmod::vector_from_index(i as u64, p, d)))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    for t in 0..tuples {
        let mut digits = Vec::with_capacity(k);
        let mut rest = t;
        for _ in 0..k {
            digits.push(rest % per);
            rest /= per;
        }
        digits.reverse();
        let maps: Vec<&[usize]> = digits.iter().enumerate().map(|(g, &i)| candidates[g][i].images.as_slice()).collect();
        if relations_hold(ra, e.group.order(), &maps) {
            let lifts = digits.iter().enumerate().map(|(g, &i)| candidates[g][i].clone()).collect();
            return Ok((lifts, t != 0));
        }
    }
    Err(ScenError::Assembly(format!("no central correction among {tuples} candidates satisfies the relations")))
}
