use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::ffla::{FieldSpec, Matrix};
use crate::gmod::{module_from_generators, GModule};
use crate::grp::{evaluate_word, GroupSpec, Subgroup};

use super::{DadeError, Split};

/// `B` and `C` as lists of words in the listed generators (input positions).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub b: Vec<Vec<usize>>,
    pub c: Vec<Vec<usize>>,
}

/// A module for the regular-orbit construction as read from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DadeInput {
    #[serde(default)]
    pub schema_version: Option<u32>,
    /// Characteristic of the module.
    pub p: u64,
    /// The acting group `A`.
    pub group: GroupSpec,
    /// One matrix over `F_p` per listed generator of `A`.
    pub module: Vec<Vec<Vec<i64>>>,
    /// Omitted: split off the `p`-part automatically.
    #[serde(default)]
    pub split: Option<SplitSpec>,
}

impl DadeInput {
    pub fn build(&self) -> Result<(GModule, Split), DadeError> {
        let bad = |e: &dyn std::fmt::Display| DadeError::Input(e.to_string());
        let field = FieldSpec::module(self.p).map_err(|e| bad(&e))?;
        let (group, elements) = self.group.build().map_err(|e| bad(&e))?;
        if self.module.len() != elements.len() {
            return Err(DadeError::Input(format!(
                "{} module matrices for {} generators",
                self.module.len(),
                elements.len()
            )));
        }
        let dim = self.module.first().map_or(0, |m| m.len());
        if self.module.iter().any(|m| m.len() != dim || m.iter().any(|r| r.len() != dim)) || dim == 0 {
            return Err(DadeError::Input("module matrices must be square of one size".into()));
        }
        let mats: Vec<Matrix> = self.module.iter().map(|m| Matrix::from_rows(field, m)).collect();
        let gens =
            group.generators().iter().map(|g| mats[elements.iter().position(|e| e == g).unwrap()].clone()).collect();
        let group = Arc::new(group);
        let module = module_from_generators(group.clone(), gens, field, dim)?;
        for (e, m) in elements.iter().zip(&mats) {
            if module.matrix(*e) != m {
                return Err(DadeError::Input("module matrices are inconsistent with the group".into()));
            }
        }
        let split = match &self.split {
            None => Split::Automatic,
            Some(s) => {
                let eval = |words: &[Vec<usize>]| -> Result<Subgroup, DadeError> {
                    let els = words
                        .iter()
                        .map(|w| evaluate_word(&group, &elements, w))
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(|| DadeError::Input("word refers to a missing generator".into()))?;
                    Ok(Subgroup::generated(&group, &els))
                };
                Split::Explicit { b: eval(&s.b)?, c: eval(&s.c)? }
            }
        };
        Ok((module, split))
    }
}
