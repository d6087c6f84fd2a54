use std::sync::Arc;

use serde::Serialize;

use crate::chartab::{
    dixon_character_table, faithful_on, restrict_character, Containment, RestrictionReport, SubgroupTable,
};
use crate::grp::FiniteGroup;

use super::{Embeddings, ScenError};

#[derive(Clone, Debug, Serialize)]
pub struct RestrictionSummary {
    pub multiplicities: Vec<i64>,
    pub irreducible_degrees: Vec<usize>,
    pub containment: Containment,
}

impl From<RestrictionReport> for RestrictionSummary {
    fn from(r: RestrictionReport) -> Self {
        RestrictionSummary {
            multiplicities: r.multiplicities,
            irreducible_degrees: r.irreducible_degrees,
            containment: r.containment,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterVerdict {
    pub index: usize,
    pub degree: usize,
    pub faithful_on_p: bool,
    /// `χ_A`, for characters faithful on `P`.
    pub a: Option<RestrictionSummary>,
    /// `χ_R`, for characters faithful on `P`.
    pub r: Option<RestrictionSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub group_order: usize,
    pub class_count: usize,
    pub auxiliary_prime: u64,
    pub faithful_count: usize,
    /// No character is faithful on `P`.
    pub vacuous: bool,
    /// Every character faithful on `P` contains the regular `A`-character.
    pub summary: bool,
    /// Every character faithful on `P` contains the regular `R`-character.
    pub r_subclaim: bool,
    /// Set by callers that ran the check although hypotheses failed.
    pub hypotheses_hold: Option<bool>,
    pub characters: Vec<CharacterVerdict>,
}

pub fn run_theorem_check(g: Arc<FiniteGroup>, emb: &Embeddings, seed: u64) -> Result<TheoremReport, ScenError> {
    let table = dixon_character_table(g.clone(), seed)?;
    let a_table = SubgroupTable::new(&g, &emb.a, seed)?;
    let r_table = SubgroupTable::new(&g, &emb.r, seed)?;
    let mut characters = Vec::with_capacity(table.len());
    for chi in 0..table.len() {
        let faithful = faithful_on(&table, chi, &emb.p);
        let (a, r) = if faithful {
            (
                Some(restrict_character(&table, chi, &a_table)?.into()),
                Some(restrict_character(&table, chi, &r_table)?.into()),
            )
        } else {
            (None, None)
        };
        characters.push(CharacterVerdict { index: chi, degree: table.degrees()[chi], faithful_on_p: faithful, a, r });
    }
    let checked: Vec<&CharacterVerdict> = characters.iter().filter(|c| c.faithful_on_p).collect();
    let holds = |f: fn(&CharacterVerdict) -> &Option<RestrictionSummary>| {
        checked.iter().all(|c| f(c).as_ref().is_some_and(|s| s.containment.contains_regular))
    };
    Ok(TheoremReport {
        group_order: g.order(),
        class_count: table.len(),
        auxiliary_prime: table.aux_prime(),
        faithful_count: checked.len(),
        vacuous: checked.is_empty(),
        summary: holds(|c| &c.a),
        r_subclaim: holds(|c| &c.r),
        hypotheses_hold: None,
        characters,
    })
}
