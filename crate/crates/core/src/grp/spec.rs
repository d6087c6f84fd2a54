use serde::{Deserialize, Serialize};

use crate::ffla::{FieldSpec, Matrix};

use super::{close_generators, FiniteGroup, Generator, GroupError, Provenance, ORDER_CAP};

/// A generator as written in JSON: a permutation is a flat image list, a
/// matrix a list of rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Permutation(Vec<usize>),
    Matrix(Vec<Vec<i64>>),
}

/// A group given by generators. Matrices need `characteristic`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u64>,
    pub generators: Vec<GeneratorSpec>,
}

impl GroupSpec {
    pub fn to_generators(&self) -> Result<Vec<Generator>, GroupError> {
        self.generators
            .iter()
            .map(|g| match g {
                GeneratorSpec::Permutation(p) => Ok(Generator::Permutation(p.clone())),
                GeneratorSpec::Matrix(rows) => {
                    let p = self.characteristic.ok_or_else(|| {
                        GroupError::InvalidGenerator("matrix generators need a characteristic".into())
                    })?;
                    let field = FieldSpec::module(p).map_err(|e| GroupError::InvalidGenerator(e.to_string()))?;
                    if rows.is_empty() || rows.iter().any(|r| r.len() != rows.len()) {
                        return Err(GroupError::InvalidGenerator("matrix generator is not square".into()));
                    }
                    Ok(Generator::Matrix(Matrix::from_rows(field, rows)))
                }
            })
            .collect()
    }

    /// Closes the generators. Also returns the element reached by each listed
    /// generator, in input order (identity entries included).
    pub fn build(&self) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        let gens = self.to_generators()?;
        let group = close_generators(&gens, ORDER_CAP)?;
        let positions = gens.iter().map(|g| element_of(&group, g).expect("generators lie in their closure")).collect();
        Ok((group, positions))
    }
}

/// Index of a permutation or matrix inside a group closed from such
/// generators.
pub fn element_of(group: &FiniteGroup, g: &Generator) -> Option<usize> {
    match (group.provenance(), g) {
        (Provenance::Permutations(all), Generator::Permutation(p)) => all.iter().position(|q| q == p),
        (Provenance::Matrices(all), Generator::Matrix(m)) => all.iter().position(|q| q == m),
        _ if group.order() == 1 => match g {
            Generator::Permutation(p) => p.iter().enumerate().all(|(i, &x)| i == x).then_some(0),
            Generator::Matrix(m) => m.is_identity().then_some(0),
        },
        _ => None,
    }
}

/// Product of listed generators along a word of input positions.
pub fn evaluate_word(group: &FiniteGroup, generator_elements: &[usize], word: &[usize]) -> Option<usize> {
    word.iter().try_fold(0, |acc, &i| generator_elements.get(i).map(|&g| group.mul(acc, g)))
}
