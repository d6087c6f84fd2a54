use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::ffla::Matrix;

use super::GroupError;

/// Largest group handled with an explicit multiplication table. Table
/// entries are 16-bit indices.
pub const ORDER_CAP: usize = 5000;

/// A generator handed to [`close_generators`]. Permutations are image lists
/// on `0..n` and compose left to right: `(x·y)(i) = y(x(i))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    Permutation(Vec<usize>),
    Matrix(Matrix),
}

/// Where the elements of a group came from.
#[derive(Clone, Debug)]
pub enum Provenance {
    Permutations(Vec<Vec<usize>>),
    Matrices(Vec<Matrix>),
    /// Semidirect or direct product: (normal part, complement part).
    Pairs(Vec<(usize, usize)>),
    /// Quotient: a representative of each coset in the parent group.
    Cosets(Vec<usize>),
    /// Subgroup turned into a group: the parent index of each element.
    Embedded(Vec<usize>),
    /// Coordinates `(a, v)` of an extraspecial group, flattened as `[a, v..]`.
    Coordinates(Vec<Vec<u64>>),
    Abstract,
}

/// A finite group stored as a full multiplication table. Index 0 is the
/// identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverses: Vec<u16>,
    generators: Vec<usize>,
    words: Vec<Vec<u16>>,
    provenance: Provenance,
}

impl FiniteGroup {
    /// Builds a group from a multiplication table, checking the Latin square
    /// property, that 0 is the identity and that the generators generate.
    /// Associativity is the caller's responsibility.
    pub fn from_table(
        order: usize,
        table: Vec<u16>,
        generators: Vec<usize>,
        provenance: Provenance,
    ) -> Result<Self, GroupError> {
        if order == 0 || order > ORDER_CAP {
            return Err(GroupError::OrderCap { cap: ORDER_CAP, reached: order });
        }
        if table.len() != order * order {
            return Err(GroupError::Construction("table has the wrong size".into()));
        }
        for x in 0..order {
            if table[x] as usize != x || table[x * order] as usize != x {
                return Err(GroupError::Construction("index 0 is not the identity".into()));
            }
        }
        let mut seen = vec![0u32; order];
        let mut stamp = 0u32;
        for x in 0..order {
            stamp += 1;
            for y in 0..order {
                let z = table[x * order + y] as usize;
                if z >= order || seen[z] == stamp {
                    return Err(GroupError::Construction("table is not a Latin square".into()));
                }
                seen[z] = stamp;
            }
        }
        for y in 0..order {
            stamp += 1;
            for x in 0..order {
                let z = table[x * order + y] as usize;
                if seen[z] == stamp {
                    return Err(GroupError::Construction("table is not a Latin square".into()));
                }
                seen[z] = stamp;
            }
        }
        let mut inverses = vec![0u16; order];
        for x in 0..order {
            let y = (0..order).find(|&y| table[x * order + y] == 0).expect("Latin square rows contain the identity");
            inverses[x] = y as u16;
        }
        let mut g =
            FiniteGroup { order, table, inverses, generators: generators.clone(), words: Vec::new(), provenance };
        g.words = g.generator_words()?;
        Ok(g)
    }

    /// Breadth-first words in the generators; errors if they do not generate.
    fn generator_words(&self) -> Result<Vec<Vec<u16>>, GroupError> {
        let n = self.order;
        let mut words: Vec<Option<Vec<u16>>> = vec![None; n];
        words[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (gi, &g) in self.generators.iter().enumerate() {
                let y = self.mul(x, g);
                if words[y].is_none() {
                    let mut w = words[x].clone().unwrap();
                    w.push(gi as u16);
                    words[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        words
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| GroupError::Construction("generators do not generate the table".into()))
    }

    pub fn trivial() -> Self {
        FiniteGroup::from_table(1, vec![0], Vec::new(), Provenance::Abstract).unwrap()
    }

    /// Cyclic group of order `n` with generator 1 and `i·j = i + j mod n`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 || n > ORDER_CAP {
            return Err(GroupError::OrderCap { cap: ORDER_CAP, reached: n });
        }
        let table = (0..n * n).map(|k| ((k / n + k % n) % n) as u16).collect();
        let gens = if n > 1 { vec![1] } else { Vec::new() };
        FiniteGroup::from_table(n, table, gens, Provenance::Abstract)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `g⁻¹ x g`
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a⁻¹ b⁻¹ a b`
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).map(|x| self.element_order(x)).fold(1, lcm)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Word in generator positions producing `x` (empty for the identity).
    pub fn word(&self, x: usize) -> &[u16] {
        &self.words[x]
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Checks associativity exhaustively; O(n³), meant for tests on small
    /// groups.
    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.mul(a, b);
                (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Closure of a generating set under a multiplication, returning the
/// elements in breadth-first order (identity first) and the group table.
fn close_with<T, F>(identity: T, gens: &[T], mul: F, cap: usize) -> Result<(Vec<T>, Vec<u16>, Vec<usize>), GroupError>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
    // parent[y] = (x, generator position) with y = x·g
    let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        let mut row = Vec::with_capacity(gens.len());
        for (gi, g) in gens.iter().enumerate() {
            let y = mul(&elements[head], g);
            let idx = match index.get(&y) {
                Some(&i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(GroupError::OrderCap { cap, reached: elements.len() + 1 });
                    }
                    let i = elements.len();
                    index.insert(y.clone(), i);
                    elements.push(y);
                    parent.push((head, gi));
                    i
                }
            };
            row.push(idx);
        }
        right.push(row);
        head += 1;
    }
    let n = elements.len();
    let mut table = vec![0u16; n * n];
    for x in 0..n {
        table[x * n] = x as u16;
        for y in 1..n {
            let (py, gi) = parent[y];
            table[x * n + y] = right[table[x * n + py] as usize][gi] as u16;
        }
    }
    let gen_idx = gens.iter().map(|g| index[g]).collect();
    Ok((elements, table, gen_idx))
}

/// Generates a finite group from permutations or invertible matrices.
pub fn close_generators(gens: &[Generator], cap: usize) -> Result<FiniteGroup, GroupError> {
    let cap = cap.min(ORDER_CAP);
    match gens.first() {
        None => Ok(FiniteGroup::trivial()),
        Some(Generator::Permutation(first)) => {
            let degree = first.len();
            let perms: Vec<Vec<usize>> = gens
                .iter()
                .map(|g| match g {
                    Generator::Permutation(p) if p.len() == degree && is_permutation(p) => Ok(p.clone()),
                    _ => Err(GroupError::InvalidGenerator(format!("{g:?} is not a permutation of degree {degree}"))),
                })
                .collect::<Result<_, _>>()?;
            let id: Vec<usize> = (0..degree).collect();
            let (elements, table, gi) = close_with(id, &perms, |x, y| x.iter().map(|&i| y[i]).collect(), cap)?;
            let n = elements.len();
            FiniteGroup::from_table(n, table, dedup_generators(gi), Provenance::Permutations(elements))
        }
        Some(Generator::Matrix(first)) => {
            let field = first.field();
            let dim = first.rows();
            let mats: Vec<Matrix> = gens
                .iter()
                .map(|g| match g {
                    Generator::Matrix(m) if m.is_square() && m.rows() == dim && m.field().same_as(&field) => {
                        if m.determinant() == 0 {
                            Err(GroupError::InvalidGenerator("singular matrix generator".into()))
                        } else {
                            Ok(m.clone())
                        }
                    }
                    _ => Err(GroupError::InvalidGenerator("matrix generators must share size and field".into())),
                })
                .collect::<Result<_, _>>()?;
            let id = crate::ffla::Matrix::identity(field, dim);
            let (elements, table, gi) = close_with(id, &mats, |x, y| x.mul(y), cap)?;
            let n = elements.len();
            FiniteGroup::from_table(n, table, dedup_generators(gi), Provenance::Matrices(elements))
        }
    }
}

/// Keeps generator positions stable but drops identity and repeated entries.
fn dedup_generators(gi: Vec<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for g in gi {
        if g != 0 && !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&i| i < p.len() && !std::mem::replace(&mut seen[i], true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffla::FieldSpec;

    #[test]
    fn symmetric_group_of_degree_three() {
        let g = close_generators(&[Generator::Permutation(vec![1, 0, 2]), Generator::Permutation(vec![1, 2, 0])], 100)
            .unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_associative());
        assert!(!g.is_abelian());
        for x in 0..6 {
            assert_eq!(g.mul(x, g.inv(x)), 0);
        }
    }

    #[test]
    fn unipotent_matrix_over_f3() {
        let f = FieldSpec::module(3).unwrap();
        let m = Matrix::from_rows(f, &[vec![1, 1], vec![0, 1]]);
        let g = close_generators(&[Generator::Matrix(m)], 100).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn heisenberg_by_unitriangular_generators() {
        let f = FieldSpec::module(3).unwrap();
        let e12 = Matrix::from_rows(f, &[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let e23 = Matrix::from_rows(f, &[vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, 1]]);
        let g = close_generators(&[Generator::Matrix(e12), Generator::Matrix(e23)], 100).unwrap();
        assert_eq!(g.order(), 27);
        // brute-force order scan
        assert!((1..27).all(|x| g.element_order(x) == 3));
        assert_eq!(g.exponent(), 3);
        assert!(g.is_associative());
    }

    #[test]
    fn cap_and_invalid_generators() {
        let s5 = [Generator::Permutation(vec![1, 0, 2, 3, 4]), Generator::Permutation(vec![1, 2, 3, 4, 0])];
        assert!(matches!(close_generators(&s5, 50), Err(GroupError::OrderCap { .. })));
        let f = FieldSpec::module(3).unwrap();
        let sing = Matrix::from_rows(f, &[vec![1, 1], vec![1, 1]]);
        assert!(matches!(close_generators(&[Generator::Matrix(sing)], 10), Err(GroupError::InvalidGenerator(_))));
        assert!(matches!(
            close_generators(&[Generator::Permutation(vec![0, 0])], 10),
            Err(GroupError::InvalidGenerator(_))
        ));
    }

    #[test]
    fn closure_is_idempotent() {
        let g = close_generators(
            &[Generator::Permutation(vec![1, 2, 3, 0]), Generator::Permutation(vec![3, 2, 1, 0])],
            100,
        )
        .unwrap();
        let Provenance::Permutations(perms) = g.provenance() else { panic!() };
        let all: Vec<Generator> = perms.iter().cloned().map(Generator::Permutation).collect();
        assert_eq!(close_generators(&all, 100).unwrap().order(), g.order());
        assert_eq!(g.order(), 8);
    }

    #[test]
    fn words_reproduce_elements() {
        let g = close_generators(
            &[Generator::Permutation(vec![1, 0, 2, 3]), Generator::Permutation(vec![1, 2, 3, 0])],
            100,
        )
        .unwrap();
        for x in 0..g.order() {
            let y = g.word(x).iter().fold(0, |acc, &gi| g.mul(acc, g.generators()[gi as usize]));
            assert_eq!(x, y);
        }
    }
}
