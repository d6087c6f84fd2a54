use std::sync::Arc;

use serde::Serialize;

use crate::gmod::{
    dual_module, homogeneous_components, regular_orbit_scan, restrict_module, section_action, GModule, ScanMode,
};
use crate::grp::{
    center, centralizer, commutator_subgroup, frattini_subgroup, group_invariants, pr_decomposition, prime_power,
    quotient_group, subgroup_as_group, FiniteGroup, Subgroup,
};

use super::{Embeddings, ScenError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Parent indices of a subgroup.
    Subgroup {
        order: usize,
        elements: Vec<usize>,
    },
    Element {
        element: usize,
    },
    /// A vector of `R/Φ(R)` whose stabilizer is the kernel of the action.
    Vector {
        vector: Vec<u64>,
    },
    /// One vector per irreducible section, in ambient coordinates.
    Sections {
        module: String,
        vectors: Vec<Option<Vec<u64>>>,
    },
    Note {
        text: String,
    },
}

impl Witness {
    fn subgroup(s: &Subgroup) -> Self {
        Witness::Subgroup { order: s.order(), elements: s.elements().to_vec() }
    }

    fn note(t: impl Into<String>) -> Self {
        Witness::Note { text: t.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub holds: bool,
    pub witness: Witness,
}

impl Check {
    fn new(holds: bool, witness: Witness) -> Self {
        Check { holds, witness }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HypothesisA {
    pub extraspecial: Check,
    pub center_is_central: Check,
    pub centralizer_of_p_in_a_trivial: Check,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HypothesisB {
    /// `R₀ = C_R(P)`.
    pub r0: Witness,
    pub class_at_most_two: Check,
    pub exponent_divides_r: Check,
    pub centralizer_in_a_trivial: Check,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HypothesisC {
    pub decomposition: Check,
    pub a_p_cyclic: Check,
    pub a_r_cyclic: Check,
    /// `A_{p,r}′` has a regular orbit on the whole of `R/Φ(R)`.
    pub whole_module_a_pr: Check,
    /// `A_{p,r}′` has a regular orbit on every irreducible section.
    pub per_section_a_pr: Check,
    /// `A_{r′}` has a regular orbit on every irreducible section of
    /// `R/Φ(R)` and of its dual.
    pub per_section_a_rprime: Check,
    /// `A` acts faithfully on `R/Φ(R)`.
    pub section_module_faithful: bool,
    /// The reading used for `holds`.
    pub reading: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HypothesisReport {
    pub p: u64,
    pub r: u64,
    pub a: HypothesisA,
    pub b: HypothesisB,
    pub c: HypothesisC,
    pub d: Check,
    pub all_hold: bool,
}

pub fn is_fermat_prime(r: u64) -> bool {
    crate::ffla::is_prime(r) && (r - 1).is_power_of_two()
}

fn local_index(emb: &[usize], order: usize) -> Vec<usize> {
    let mut back = vec![usize::MAX; order];
    for (i, &x) in emb.iter().enumerate() {
        back[x] = i;
    }
    back
}

fn check_a(g: &FiniteGroup, emb: &Embeddings, p: u64) -> Result<HypothesisA, ScenError> {
    let (pg, pemb) = subgroup_as_group(g, &emb.p);
    let z_local = center(&pg);
    let z: Vec<usize> = z_local.elements().iter().map(|&x| pemb[x]).collect();
    let z_global = Subgroup::from_elements(g, &z)?;
    let whole = Subgroup::whole(&pg);
    let order_ok = prime_power(pg.order()) == Some(p as usize) && {
        let k = pg.order().ilog(p as usize);
        k >= 3 && k % 2 == 1
    };
    let extraspecial = order_ok
        && z_local.order() == p as usize
        && commutator_subgroup(&pg, &whole, &whole) == z_local
        && frattini_subgroup(&pg)? == z_local;
    let zg = center(g);
    let outside = z.iter().copied().find(|&x| !zg.contains(x));
    let center_is_central = match outside {
        None => Check::new(true, Witness::subgroup(&z_global)),
        Some(x) => Check::new(false, Witness::Element { element: x }),
    };
    let cp = centralizer(g, emb.p.elements()).intersection(&emb.a);
    let a = HypothesisA {
        extraspecial: Check::new(extraspecial, Witness::subgroup(&z_global)),
        centralizer_of_p_in_a_trivial: Check::new(cp.is_trivial(), Witness::subgroup(&cp)),
        holds: extraspecial && outside.is_none() && cp.is_trivial(),
        center_is_central,
    };
    Ok(a)
}

fn check_b(g: &FiniteGroup, emb: &Embeddings, r: u64) -> Result<HypothesisB, ScenError> {
    let r0 = centralizer(g, emb.p.elements()).intersection(&emb.r);
    let (rg, remb) = subgroup_as_group(g, &emb.r);
    let back = local_index(&remb, g.order());
    let r0_local = Subgroup::from_elements(&rg, &r0.elements().iter().map(|&x| back[x]).collect::<Vec<_>>())?;
    let (q, _) = quotient_group(&rg, &r0_local)?;
    let inv = group_invariants(&q);
    let class_ok = matches!(inv.nilpotency_class, Some(c) if c <= 2);
    let exp_ok = (r as usize).is_multiple_of(inv.exponent);
    let r_gens = crate::grp::generating_set(g, &emb.r);
    let a0_els: Vec<usize> =
        emb.a.elements().iter().copied().filter(|&a| r_gens.iter().all(|&x| r0.contains(g.commutator(x, a)))).collect();
    let a0 = Subgroup::from_elements(g, &a0_els)?;
    Ok(HypothesisB {
        r0: Witness::subgroup(&r0),
        class_at_most_two: Check::new(
            class_ok,
            Witness::note(format!("R/R0 has order {} and class {:?}", q.order(), inv.nilpotency_class)),
        ),
        exponent_divides_r: Check::new(exp_ok, Witness::note(format!("exponent of R/R0 is {}", inv.exponent))),
        centralizer_in_a_trivial: Check::new(a0.is_trivial(), Witness::subgroup(&a0)),
        holds: class_ok && exp_ok && a0.is_trivial(),
    })
}

/// Regular orbit of `sub` (modulo its kernel) on every irreducible section.
fn sections_check(m: &GModule, sub: &Subgroup, label: &str, seed: u64) -> Result<(bool, Witness), ScenError> {
    let dec = homogeneous_components(m, sub, seed)?;
    let vectors: Vec<Option<Vec<u64>>> =
        dec.components.iter().map(|c| c.isotype.regular_vector().map(|x| c.isotype.basis.vec_mul(&x))).collect();
    let ok = vectors.iter().all(Option::is_some);
    Ok((ok, Witness::Sections { module: label.into(), vectors }))
}

fn check_c(g: &FiniteGroup, emb: &Embeddings, p: u64, r: u64, seed: u64) -> Result<HypothesisC, ScenError> {
    let (ag, aemb) = subgroup_as_group(g, &emb.a);
    let ag = Arc::new(ag);
    let reading = "whole_module_a_pr";
    let dec = match pr_decomposition(&ag, p as usize, r as usize) {
        Ok(d) => d,
        Err(reason) => {
            let skipped = || Check::new(false, Witness::note("no decomposition"));
            return Ok(HypothesisC {
                decomposition: Check::new(false, Witness::note(reason)),
                a_p_cyclic: skipped(),
                a_r_cyclic: skipped(),
                whole_module_a_pr: skipped(),
                per_section_a_pr: skipped(),
                per_section_a_rprime: skipped(),
                section_module_faithful: false,
                reading,
                holds: false,
            });
        }
    };
    let global = |s: &Subgroup| Subgroup::from_elements(g, &s.elements().iter().map(|&x| aemb[x]).collect::<Vec<_>>());
    let a_p_cyclic = Check::new(dec.a_p_cyclic, Witness::subgroup(&global(&dec.a_p)?));
    let a_r_cyclic = Check::new(dec.a_r_cyclic, Witness::subgroup(&global(&dec.a_r)?));
    let decomposition = Check::new(true, Witness::subgroup(&global(&dec.a_rest)?));

    let (rg, remb) = subgroup_as_group(g, &emb.r);
    let (whole_module_a_pr, per_section_a_pr, per_section_a_rprime, faithful) = if rg.order() == 1 {
        let vac = || Check::new(true, Witness::note("R is trivial"));
        (vac(), vac(), vac(), ag.order() == 1)
    } else {
        let back = local_index(&remb, g.order());
        let phi = frattini_subgroup(&rg)?;
        let auts: Vec<Vec<usize>> =
            ag.generators().iter().map(|&a| remb.iter().map(|&x| back[g.conj(x, aemb[a])]).collect()).collect();
        let m = section_action(&rg, &phi, ag.clone(), &auts, r)?;
        let restricted = restrict_module(&m, &dec.a_rest)?;
        let scan = regular_orbit_scan(&restricted, ScanMode::UntilRegularOrbit)?;
        let whole = match scan.regular_orbit_witness {
            Some(v) => Check::new(true, Witness::Vector { vector: v }),
            None => Check::new(false, Witness::note(format!("orbit sizes {:?}", scan.histogram))),
        };
        let (ok1, w1) = sections_check(&m, &dec.a_rest, "R/Φ(R)", seed)?;
        let a_rprime = dec.a_p.join(&ag, &dec.a_rest);
        let (ok2, w2) = sections_check(&m, &a_rprime, "R/Φ(R)", seed)?;
        let (ok3, w3) = sections_check(&dual_module(&m), &a_rprime, "dual of R/Φ(R)", seed)?;
        let w = match (w2, w3) {
            (Witness::Sections { vectors: v2, .. }, Witness::Sections { vectors: v3, .. }) => Witness::Sections {
                module: "R/Φ(R) then its dual".into(),
                vectors: v2.into_iter().chain(v3).collect(),
            },
            _ => unreachable!(),
        };
        (whole, Check::new(ok1, w1), Check::new(ok2 && ok3, w), m.is_faithful())
    };
    let holds = dec.a_p_cyclic && dec.a_r_cyclic && whole_module_a_pr.holds;
    Ok(HypothesisC {
        decomposition,
        a_p_cyclic,
        a_r_cyclic,
        whole_module_a_pr,
        per_section_a_pr,
        per_section_a_rprime,
        section_module_faithful: faithful,
        reading,
        holds,
    })
}

pub fn validate_theorem_hypotheses(
    g: &FiniteGroup,
    emb: &Embeddings,
    p: u64,
    r: u64,
    seed: u64,
) -> Result<HypothesisReport, ScenError> {
    let a = check_a(g, emb, p)?;
    let b = check_b(g, emb, r)?;
    let c = check_c(g, emb, p, r, seed)?;
    let fermat = is_fermat_prime(r);
    let d = Check::new(
        !(p == 2 && fermat),
        Witness::note(if fermat { format!("{r} is a Fermat prime") } else { format!("{r} is not a Fermat prime") }),
    );
    let all_hold = a.holds && b.holds && c.holds && d.holds;
    Ok(HypothesisReport { p, r, a, b, c, d, all_hold })
}
