use std::sync::Arc;

use serde::Serialize;

use crate::grp::{subgroup_as_group, ConjugacyData, FiniteGroup, Subgroup};

use super::{dixon_character_table, CharacterTable, ChartabError, CycInt};

/// A subgroup together with its own character table. `embedding[i]` is the
/// parent index of the subgroup's element `i`.
#[derive(Clone, Debug)]
pub struct SubgroupTable {
    pub subgroup: Subgroup,
    pub embedding: Vec<usize>,
    pub table: CharacterTable,
}

impl SubgroupTable {
    pub fn new(g: &FiniteGroup, subgroup: &Subgroup, seed: u64) -> Result<Self, ChartabError> {
        if subgroup.parent_order() != g.order() {
            return Err(ChartabError::ForeignSubgroup);
        }
        let (local, embedding) = subgroup_as_group(g, subgroup);
        let table = dixon_character_table(Arc::new(local), seed)?;
        Ok(SubgroupTable { subgroup: subgroup.clone(), embedding, table })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub character: usize,
    pub degree: usize,
    pub subgroup_order: usize,
    /// `χ` on each class of the subgroup.
    #[serde(skip)]
    pub values: Vec<CycInt>,
    /// `m_λ = ⟨χ_A, λ⟩`, one per irreducible of the subgroup.
    pub multiplicities: Vec<i64>,
    pub irreducible_degrees: Vec<usize>,
    pub containment: Containment,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Containment {
    pub contains_regular: bool,
    /// `min_λ (m_λ − λ(1))`.
    pub min_slack: i64,
}

/// `(1/|A|) Σ_a φ(a)·ψ(a⁻¹)` for class functions given on the classes `cc`.
pub fn inner_product(phi: &[CycInt], psi: &[CycInt], cc: &ConjugacyData) -> Result<i64, ChartabError> {
    let order: usize = cc.sizes.iter().sum();
    let mut acc = CycInt::zero(1);
    for c in 0..cc.len() {
        let term = phi[c].mul(&psi[cc.inverse_class[c]]).scale(cc.sizes[c] as i64);
        acc = acc.add(&term);
    }
    match acc.as_integer() {
        Some(v) if v % order as i64 == 0 => Ok(v / order as i64),
        _ => Err(ChartabError::NonInteger(format!("{acc} / {order}"))),
    }
}

pub fn restrict_character(
    t: &CharacterTable,
    chi: usize,
    sub: &SubgroupTable,
) -> Result<RestrictionReport, ChartabError> {
    if sub.subgroup.parent_order() != t.group().order() {
        return Err(ChartabError::ForeignSubgroup);
    }
    let local = sub.table.classes();
    let values: Vec<CycInt> = local.reps.iter().map(|&r| t.value(chi, sub.embedding[r]).clone()).collect();
    let mut multiplicities = Vec::with_capacity(sub.table.len());
    for lambda in sub.table.characters() {
        let m = inner_product(&values, lambda, local)?;
        if m < 0 {
            return Err(ChartabError::NonInteger(format!("negative multiplicity {m}")));
        }
        multiplicities.push(m);
    }
    let degrees = sub.table.degrees().to_vec();
    let degree = t.degrees()[chi];
    let total: i64 = multiplicities.iter().zip(&degrees).map(|(m, &d)| m * d as i64).sum();
    if total != degree as i64 {
        return Err(ChartabError::Verification(format!("restriction has degree {total}, expected {degree}")));
    }
    let mut report = RestrictionReport {
        character: chi,
        degree,
        subgroup_order: sub.subgroup.order(),
        values,
        multiplicities,
        irreducible_degrees: degrees,
        containment: Containment { contains_regular: false, min_slack: 0 },
    };
    report.containment = contains_regular_character(&report);
    Ok(report)
}

/// `χ_A` contains the regular character when `m_λ ≥ λ(1)` for every `λ`.
pub fn contains_regular_character(rep: &RestrictionReport) -> Containment {
    let min_slack =
        rep.multiplicities.iter().zip(&rep.irreducible_degrees).map(|(&m, &d)| m - d as i64).min().unwrap_or(0);
    Containment { contains_regular: min_slack >= 0, min_slack }
}

pub fn character_kernel(t: &CharacterTable, chi: usize) -> Subgroup {
    let row = t.character(chi);
    let cc = t.classes();
    let in_kernel: Vec<bool> = row.iter().map(|v| v.equals(&row[0])).collect();
    let els: Vec<usize> = (0..cc.class_of.len()).filter(|&x| in_kernel[cc.class_of[x]]).collect();
    Subgroup::from_elements(t.group(), &els).expect("a character kernel is a subgroup")
}

pub fn faithful_on(t: &CharacterTable, chi: usize, p: &Subgroup) -> bool {
    character_kernel(t, chi).intersection(p).is_trivial()
}
