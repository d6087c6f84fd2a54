use std::sync::Arc;

use serde::Serialize;

use crate::ffla::{FieldSpec, Matrix};
use crate::gmod::{module_from_generators, regular_orbit_scan, vector_from_index, GModule, ScanMode, ScanReport};
use crate::grp::{direct_product, FiniteGroup};

use super::{check_proposition_hypotheses, DadeError, Rejection, Split};

#[derive(Clone, Debug, Serialize)]
pub struct RemarkReport {
    pub p: u64,
    #[serde(skip)]
    pub module: GModule,
    pub generators: Vec<Vec<Vec<u64>>>,
    pub scan: ScanReport,
    pub fixed_vectors: Vec<Vec<u64>>,
    pub no_regular_orbit: bool,
    pub orbit_sizes_divide_p: bool,
    /// The fixed vectors are exactly the multiples of `v₁`.
    pub fixed_are_multiples_of_v1: bool,
    /// Outcome of the hypothesis check with the automatic split.
    pub proposition_rejection: Option<Rejection>,
    pub verdict: bool,
}

/// The module `V = F_p³` for `A = C_p × C_p`, where `a₁` sends `v₂` to
/// `v₁ + v₂` and `a₂` sends `v₃` to `v₁ + v₃`, with its full scan.
pub fn remark_counterexample(p: u64) -> Result<RemarkReport, DadeError> {
    let field = FieldSpec::module(p).map_err(|e| DadeError::Input(e.to_string()))?;
    let c = FiniteGroup::cyclic(p as usize).map_err(|e| DadeError::Input(e.to_string()))?;
    let a = Arc::new(direct_product(&c, &c).map_err(|e| DadeError::Input(e.to_string()))?);
    let a1 = Matrix::from_rows(field, &[vec![1, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]);
    let a2 = Matrix::from_rows(field, &[vec![1, 0, 0], vec![0, 1, 0], vec![1, 0, 1]]);
    let module = module_from_generators(a, vec![a1, a2], field, 3)?;
    let scan = regular_orbit_scan(&module, ScanMode::Full)?;
    let fixed_vectors: Vec<Vec<u64>> =
        (0..p.pow(3)).map(|i| vector_from_index(i, p, 3)).filter(|v| module.stabilizer(v).is_whole()).collect();
    let no_regular_orbit = scan.regular_orbit_witness.is_none();
    let orbit_sizes_divide_p = scan.histogram.keys().all(|&k| (p as usize).is_multiple_of(k));
    let fixed_are_multiples_of_v1 =
        fixed_vectors.len() == p as usize && fixed_vectors.iter().all(|v| v[1] == 0 && v[2] == 0);
    let proposition_rejection = check_proposition_hypotheses(&module, Split::Automatic, 0).err();
    Ok(RemarkReport {
        p,
        generators: module.generator_matrices().iter().map(|m| m.to_rows()).collect(),
        module,
        scan,
        fixed_vectors,
        verdict: no_regular_orbit && orbit_sizes_divide_p && fixed_are_multiples_of_v1,
        no_regular_orbit,
        orbit_sizes_divide_p,
        fixed_are_multiples_of_v1,
        proposition_rejection,
    })
}
