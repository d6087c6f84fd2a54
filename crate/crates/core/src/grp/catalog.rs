//! Small named groups used as fixtures and test oracles.

use crate::ffla::{FieldSpec, Matrix};

use super::{close_generators, FiniteGroup, Generator};

fn perms(gens: &[Vec<usize>]) -> FiniteGroup {
    let g: Vec<Generator> = gens.iter().cloned().map(Generator::Permutation).collect();
    close_generators(&g, super::ORDER_CAP).expect("catalog group")
}

pub fn symmetric3() -> FiniteGroup {
    perms(&[vec![1, 0, 2], vec![1, 2, 0]])
}

/// Dihedral group of order 8 acting on the square.
pub fn dihedral8() -> FiniteGroup {
    perms(&[vec![1, 2, 3, 0], vec![3, 2, 1, 0]])
}

/// `Q₈` inside `GL(2,3)`.
pub fn quaternion8() -> FiniteGroup {
    let f = FieldSpec::module(3).unwrap();
    let i = Matrix::from_rows(f, &[vec![0, 2], vec![1, 0]]);
    let j = Matrix::from_rows(f, &[vec![1, 1], vec![1, 2]]);
    close_generators(&[Generator::Matrix(i), Generator::Matrix(j)], 16).expect("Q8")
}

/// Upper unitriangular 3×3 matrices over `F_p`.
pub fn heisenberg(p: u64) -> FiniteGroup {
    let f = FieldSpec::module(p).unwrap();
    let e12 = Matrix::from_rows(f, &[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    let e23 = Matrix::from_rows(f, &[vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, 1]]);
    close_generators(&[Generator::Matrix(e12), Generator::Matrix(e23)], super::ORDER_CAP).expect("Heisenberg")
}

/// `C₇ ⋊ C₃` as the affine maps `x ↦ x + 1` and `x ↦ 2x` on `F_7`.
pub fn frobenius21() -> FiniteGroup {
    perms(&[(0..7).map(|x| (x + 1) % 7).collect(), (0..7).map(|x| (2 * x) % 7).collect()])
}
