use std::fmt;

use super::{FieldSpec, LinalgError, Poly};

/// Dense matrix over a prime field. Vectors are rows and groups act on the
/// right: a vector `v` is sent to `v·M`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[F_{}]{:?}", self.field.p(), self.to_rows())
    }
}

/// Output of Gauss–Jordan elimination.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, field, data: vec![0; rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    pub fn from_flat(field: FieldSpec, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols, "flat data has the wrong length");
        let p = field.p();
        Matrix { rows, cols, field, data: data.into_iter().map(|x| x % p).collect() }
    }

    /// Builds a matrix from signed integer rows, reducing every entry.
    /// Panics on ragged input.
    pub fn from_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        let data = rows.iter().flatten().map(|&x| field.reduce(x)).collect();
        Matrix { rows: rows.len(), cols, field, data }
    }

    pub fn from_vectors(field: FieldSpec, cols: usize, vectors: &[Vec<u64>]) -> Self {
        let mut data = Vec::with_capacity(vectors.len() * cols);
        for v in vectors {
            assert_eq!(v.len(), cols);
            data.extend(v.iter().map(|&x| x % field.p()));
        }
        Matrix { rows: vectors.len(), cols, field, data }
    }

    pub fn diagonal(field: FieldSpec, diag: &[u64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(field, n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d % field.p();
        }
        m
    }

    /// Companion matrix of a monic polynomial `c_0 + c_1 x + … + x^n`,
    /// acting on row vectors: `e_i ↦ e_{i+1}` and `e_{n-1} ↦ -Σ c_k e_k`.
    pub fn companion(poly: &Poly) -> Self {
        let field = poly.field();
        let poly = poly.monic();
        let n = poly.degree().expect("companion of zero polynomial");
        let mut m = Self::zeros(field, n, n);
        for i in 0..n.saturating_sub(1) {
            m.set(i, i + 1, 1);
        }
        for k in 0..n {
            m.set(n - 1, k, field.neg(poly.coeff(k)));
        }
        m
    }

    /// Unipotent Jordan block `J_n`: ones on the diagonal and superdiagonal.
    pub fn jordan_block(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::identity(field, n);
        for i in 0..n.saturating_sub(1) {
            m.set(i, i + 1, 1);
        }
        m
    }

    pub fn block_diagonal(field: FieldSpec, blocks: &[Matrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = Self::zeros(field, n, n);
        let mut off = 0;
        for b in blocks {
            assert!(b.is_square());
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.rows;
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.field.p();
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let f = self.field;
        let p = f.p();
        let mut out = Self::zeros(f, self.rows, other.cols);
        let n = other.cols;
        // Accumulate in u128-free fashion: entries < 2^31, so a handful of
        // products can be summed before reducing.
        for i in 0..self.rows {
            let orow = &mut out.data[i * n..(i + 1) * n];
            let mut acc = vec![0u64; n];
            let mut pending = 0;
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (s, &b) in acc.iter_mut().zip(brow) {
                    *s += a * b;
                }
                pending += 1;
                if pending == 3 {
                    for s in acc.iter_mut() {
                        *s %= p;
                    }
                    pending = 0;
                }
            }
            for (o, s) in orow.iter_mut().zip(acc) {
                *o = s % p;
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let p = self.field.p();
        let mut acc = vec![0u64; self.cols];
        let mut pending = 0;
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (s, &b) in acc.iter_mut().zip(self.row(k)) {
                *s += a * b;
            }
            pending += 1;
            if pending == 3 {
                for s in acc.iter_mut() {
                    *s %= p;
                }
                pending = 0;
            }
        }
        acc.into_iter().map(|s| s % p).collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: f,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: f,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Matrix {
        let f = self.field;
        Matrix { rows: self.rows, cols: self.cols, field: f, data: self.data.iter().map(|&a| f.mul(a, c)).collect() }
    }

    pub fn pow(&self, mut exp: u64) -> Matrix {
        assert!(self.is_square());
        let mut acc = Self::identity(self.field, self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u64::from(i == j)))
    }

    /// Gauss–Jordan elimination with lowest-index pivots.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            m.scale_row(r, inv);
            for i in 0..m.rows {
                if i != r {
                    let factor = m.get(i, c);
                    if factor != 0 {
                        m.add_row_multiple(i, r, f.neg(factor));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { reduced: m, rank: r, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, c: u64) {
        let f = self.field;
        for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *x = f.mul(*x, c);
        }
    }

    /// row[target] += c · row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, c: u64) {
        let f = self.field;
        for j in 0..self.cols {
            let s = self.data[source * self.cols + j];
            if s != 0 {
                let t = &mut self.data[target * self.cols + j];
                *t = f.add(*t, f.mul(c, s));
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn determinant(&self) -> u64 {
        assert!(self.is_square());
        let f = self.field;
        let mut m = self.clone();
        let mut det = 1;
        for c in 0..m.cols {
            let Some(pr) = (c..m.rows).find(|&i| m.get(i, c) != 0) else {
                return 0;
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = f.neg(det);
            }
            let piv = m.get(c, c);
            det = f.mul(det, piv);
            let inv = f.inv(piv).expect("pivot is nonzero");
            for i in c + 1..m.rows {
                let factor = m.get(i, c);
                if factor != 0 {
                    m.add_row_multiple(i, c, f.neg(f.mul(factor, inv)));
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let rr = aug.rref();
        if rr.pivots.iter().take(n).enumerate().any(|(i, &c)| c != i) || rr.rank < n {
            return Err(LinalgError::Singular);
        }
        let mut inv = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, rr.reduced.get(i, n + j));
            }
        }
        Ok(inv)
    }

    /// Basis of the left kernel `{x : x·M = 0}`, one free variable per
    /// basis vector.
    pub fn left_kernel(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let t = self.transpose().rref();
        let n = self.rows;
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; n];
            for (i, &c) in t.pivots.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for free in (0..n).filter(|&c| pivot_set[c].is_none()) {
            let mut x = vec![0u64; n];
            x[free] = 1;
            for (i, &c) in t.pivots.iter().enumerate() {
                x[c] = f.neg(t.reduced.get(i, free));
            }
            basis.push(x);
        }
        basis
    }

    /// Kronecker product with the lexicographic tensor index
    /// `(i, k) ↦ i·dim(B) + k`, so that `(x ⊗ y)(A ⊗ B) = (xA) ⊗ (yB)`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        assert!(self.field.same_as(&other.field), "kronecker across fields");
        let f = self.field;
        let (br, bc) = (other.rows, other.cols);
        let mut out = Self::zeros(f, self.rows * br, self.cols * bc);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..br {
                    for l in 0..bc {
                        out.set(i * br + k, j * bc + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        out
    }

    /// Least monic polynomial annihilating the matrix, assembled as the lcm
    /// of the Krylov minimal polynomials of the standard basis vectors.
    pub fn minimal_polynomial(&self) -> Poly {
        assert!(self.is_square());
        let f = self.field;
        let n = self.rows;
        let mut acc = Poly::one(f);
        for i in 0..n {
            let mut e = vec![0u64; n];
            e[i] = 1;
            if acc.eval_at_vector(self, &e).iter().all(|&x| x == 0) {
                continue;
            }
            acc = acc.lcm(&self.krylov_polynomial(&e));
        }
        acc
    }

    /// Minimal polynomial of `v` relative to the matrix.
    fn krylov_polynomial(&self, v: &[u64]) -> Poly {
        let f = self.field;
        let n = self.rows;
        // Fully reduced rows, their pivots, and the Krylov combinations
        // that produce them.
        let mut rows: Vec<Vec<u64>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        let mut combos: Vec<Vec<u64>> = Vec::new();
        let mut current = v.to_vec();
        for k in 0..=n {
            let mut r = current.clone();
            let mut t = vec![0u64; n + 1];
            t[k] = 1;
            for ((row, &pc), combo) in rows.iter().zip(&pivots).zip(&combos) {
                let c = r[pc];
                if c != 0 {
                    let nc = f.neg(c);
                    for (x, &y) in r.iter_mut().zip(row) {
                        *x = f.add(*x, f.mul(nc, y));
                    }
                    for (x, &y) in t.iter_mut().zip(combo) {
                        *x = f.add(*x, f.mul(nc, y));
                    }
                }
            }
            match r.iter().position(|&x| x != 0) {
                None => return Poly::new(f, t[..=k].to_vec()),
                Some(pc) => {
                    let inv = f.inv(r[pc]).expect("nonzero pivot");
                    for x in r.iter_mut() {
                        *x = f.mul(*x, inv);
                    }
                    for x in t.iter_mut() {
                        *x = f.mul(*x, inv);
                    }
                    for (row, combo) in rows.iter_mut().zip(combos.iter_mut()) {
                        let c = row[pc];
                        if c != 0 {
                            let nc = f.neg(c);
                            for (x, &y) in row.iter_mut().zip(&r) {
                                *x = f.add(*x, f.mul(nc, y));
                            }
                            for (x, &y) in combo.iter_mut().zip(&t) {
                                *x = f.add(*x, f.mul(nc, y));
                            }
                        }
                    }
                    rows.push(r);
                    pivots.push(pc);
                    combos.push(t);
                }
            }
            current = self.vec_mul(&current);
        }
        unreachable!("Krylov sequence of length n+1 is always dependent")
    }

    /// Jordan block sizes (descending) of a unipotent matrix, read off the
    /// rank sequence `r_k = rank((M - I)^k)`: the number of blocks of size
    /// at least `k` is `r_{k-1} - r_k`.
    pub fn unipotent_partition(&self) -> Result<Vec<usize>, LinalgError> {
        assert!(self.is_square());
        let n = self.rows;
        let nil = self.sub(&Self::identity(self.field, n));
        let mut ranks = vec![n];
        let mut power = Self::identity(self.field, n);
        while *ranks.last().unwrap() > 0 {
            if ranks.len() > n {
                return Err(LinalgError::NotUnipotent);
            }
            power = power.mul(&nil);
            ranks.push(power.rank());
        }
        // at_least[k] = number of blocks of size ≥ k (k ≥ 1)
        let at_least: Vec<usize> = (1..ranks.len()).map(|k| ranks[k - 1] - ranks[k]).collect();
        let mut sizes = Vec::new();
        for k in (1..=at_least.len()).rev() {
            let exact = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
            sizes.extend(std::iter::repeat_n(k, exact));
        }
        Ok(sizes)
    }

    /// Multiplicative order, or `None` if it exceeds `cap` (or the matrix is
    /// singular).
    pub fn multiplicative_order(&self, cap: u64) -> Option<u64> {
        assert!(self.is_square());
        let mut x = self.clone();
        for k in 1..=cap {
            if x.is_identity() {
                return Some(k);
            }
            x = x.mul(self);
        }
        None
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let vecs: Vec<Vec<u64>> = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Self::from_vectors(self.field, self.cols, &vecs)
    }

    /// Row space basis in reduced echelon form.
    pub fn row_basis(&self) -> Matrix {
        let rr = self.rref();
        let idx: Vec<usize> = (0..rr.rank).collect();
        rr.reduced.select_rows(&idx)
    }

    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, field: self.field, data }
    }
}

/// Solves `c · B = v` for a fixed basis `B` (rows assumed independent).
#[derive(Clone, Debug)]
pub struct SpanSolver {
    reduced: Matrix,
    pivots: Vec<usize>,
    // transform · basis = reduced
    transform: Matrix,
}

impl SpanSolver {
    pub fn new(basis: &Matrix) -> Self {
        let f = basis.field();
        let k = basis.rows();
        let d = basis.cols();
        let mut aug = Matrix::zeros(f, k, d + k);
        for i in 0..k {
            for j in 0..d {
                aug.set(i, j, basis.get(i, j));
            }
            aug.set(i, d + i, 1);
        }
        let rr = aug.rref();
        let pivots: Vec<usize> = rr.pivots.iter().copied().filter(|&c| c < d).collect();
        assert_eq!(pivots.len(), k, "basis rows are not independent");
        let mut reduced = Matrix::zeros(f, k, d);
        let mut transform = Matrix::zeros(f, k, k);
        for i in 0..k {
            for j in 0..d {
                reduced.set(i, j, rr.reduced.get(i, j));
            }
            for j in 0..k {
                transform.set(i, j, rr.reduced.get(i, d + j));
            }
        }
        SpanSolver { reduced, pivots, transform }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        let f = self.reduced.field();
        let cr: Vec<u64> = self.pivots.iter().map(|&c| v[c]).collect();
        if self.reduced.vec_mul(&cr) != v {
            return None;
        }
        let _ = f;
        Some(self.transform.vec_mul(&cr))
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let cr: Vec<u64> = self.pivots.iter().map(|&c| v[c]).collect();
        self.reduced.vec_mul(&cr) == v
    }
}

/// Matrix of `M` on the invariant subspace spanned by the rows of `basis`,
/// i.e. the `R` with `basis · M = R · basis`. `None` if the subspace is not
/// invariant.
pub fn restrict_to_subspace(basis: &Matrix, m: &Matrix) -> Option<Matrix> {
    let solver = SpanSolver::new(basis);
    restrict_with(&solver, basis, m)
}

pub fn restrict_with(solver: &SpanSolver, basis: &Matrix, m: &Matrix) -> Option<Matrix> {
    let image = basis.mul(m);
    let rows: Option<Vec<Vec<u64>>> = (0..image.rows()).map(|i| solver.coordinates(image.row(i))).collect();
    Some(Matrix::from_vectors(m.field(), basis.rows(), &rows?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fld(p: u64) -> FieldSpec {
        FieldSpec::module(p).unwrap()
    }

    fn m(p: u64, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(fld(p), &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    /// Rank by exhaustive span enumeration, independent of elimination.
    fn brute_rank(a: &Matrix) -> usize {
        let p = a.field().p();
        let k = a.rows();
        let mut span = std::collections::HashSet::new();
        let total = p.pow(k as u32);
        for idx in 0..total {
            let mut c = vec![0u64; k];
            let mut t = idx;
            for x in c.iter_mut() {
                *x = t % p;
                t /= p;
            }
            span.insert(a.transpose().transpose().vec_mul(&c));
        }
        let mut r = 0;
        while p.pow(r as u32) < span.len() as u64 {
            r += 1;
        }
        r
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(fld(3), 3);
        let rr = id.rref();
        assert_eq!(rr.reduced, id);
        assert_eq!(rr.rank, 3);
        assert_eq!(rr.pivots, vec![0, 1, 2]);

        let z = Matrix::zeros(fld(2), 2, 2);
        let rr = z.rref();
        assert_eq!((rr.rank, rr.pivots.len()), (0, 0));
        assert!(rr.reduced.is_zero());

        let a = m(5, &[&[1, 2], &[2, 4]]);
        assert_eq!(a.rank(), 1);
        assert_eq!(brute_rank(&a), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(fld(5), 3).left_kernel().is_empty());
        let z = Matrix::zeros(fld(3), 3, 3);
        assert_eq!(z.left_kernel(), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let a = m(2, &[&[1, 1], &[1, 1]]);
        let k = a.left_kernel();
        // Enumerate all four vectors of F_2^2 as the oracle.
        let zeroed: Vec<Vec<u64>> =
            (0..4u64).map(|i| vec![i & 1, i >> 1]).filter(|v| a.vec_mul(v).iter().all(|&x| x == 0)).collect();
        assert_eq!(zeroed, vec![vec![0, 0], vec![1, 1]]);
        assert_eq!(k, vec![vec![1, 1]]);
    }

    #[test]
    fn unipotent_partition_examples() {
        for p in [2u64, 3, 5] {
            assert_eq!(Matrix::identity(fld(p), 4).unipotent_partition().unwrap(), vec![1, 1, 1, 1]);
        }
        assert_eq!(Matrix::jordan_block(fld(3), 3).unipotent_partition().unwrap(), vec![3]);
        let j21 = Matrix::block_diagonal(fld(2), &[Matrix::jordan_block(fld(2), 2), Matrix::identity(fld(2), 1)]);
        // rank sequence: rank(N^0)=3, rank(N)=1, rank(N^2)=0
        let n = j21.sub(&Matrix::identity(fld(2), 3));
        assert_eq!(n.rank(), 1);
        assert!(n.mul(&n).is_zero());
        assert_eq!(j21.unipotent_partition().unwrap(), vec![2, 1]);
        let not_unipotent = m(3, &[&[2, 0], &[0, 1]]);
        assert_eq!(not_unipotent.unipotent_partition(), Err(LinalgError::NotUnipotent));
    }

    #[test]
    fn kronecker_examples() {
        let f = fld(2);
        assert_eq!(Matrix::identity(f, 2).kronecker(&Matrix::identity(f, 3)), Matrix::identity(f, 6));
        let c = Matrix::companion(&Poly::new(f, vec![1, 1, 1]));
        let j = Matrix::jordan_block(f, 2);
        let k = c.kronecker(&j);
        assert_eq!((k.rows(), k.cols()), (4, 4));
        // e0 ⊗ e0 = e_0 in the lexicographic tensor basis.
        let lhs = k.vec_mul(&[1, 0, 0, 0]);
        let x = c.vec_mul(&[1, 0]);
        let y = j.vec_mul(&[1, 0]);
        let expanded: Vec<u64> = x.iter().flat_map(|&a| y.iter().map(move |&b| a * b % 2)).collect();
        assert_eq!(lhs, expanded);
    }

    #[test]
    fn minimal_polynomial_examples() {
        let f5 = fld(5);
        assert_eq!(Matrix::identity(f5, 3).minimal_polynomial(), Poly::linear(f5, 1));
        let f2 = fld(2);
        assert_eq!(Matrix::jordan_block(f2, 2).minimal_polynomial(), Poly::new(f2, vec![1, 0, 1]));
        let target = Poly::new(f2, vec![1, 1, 1]);
        let c = Matrix::companion(&target);
        assert_eq!(c.minimal_polynomial(), target);
        // substitution check
        assert!(target.eval_matrix(&c).is_zero());
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(7, &[&[1, 2, 3], &[0, 1, 4], &[5, 6, 0]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_ne!(a.determinant(), 0);
        let s = m(7, &[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(LinalgError::Singular));
        assert_eq!(s.determinant(), 0);
    }

    #[test]
    fn restriction_to_invariant_subspace() {
        let f = fld(3);
        let a = Matrix::block_diagonal(f, &[m(3, &[&[0, 1], &[2, 0]]), Matrix::identity(f, 1)]);
        let basis = m(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let r = restrict_to_subspace(&basis, &a).unwrap();
        assert_eq!(r, m(3, &[&[0, 1], &[2, 0]]));
        let bad = m(3, &[&[1, 0, 1]]);
        assert!(restrict_to_subspace(&bad, &a).is_none());
    }

    fn arb_matrix(p: u64, n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(0..p, n * n).prop_map(move |d| Matrix::from_flat(fld(p), n, n, d))
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(a in arb_matrix(3, 4)) {
            let once = a.rref().reduced;
            prop_assert_eq!(once.rref().reduced, once.clone());
            prop_assert_eq!(a.rank(), brute_rank(&a));
        }

        #[test]
        fn kronecker_respects_products(a in arb_matrix(2, 2), b in arb_matrix(2, 3),
                                       c in arb_matrix(2, 2), d in arb_matrix(2, 3)) {
            prop_assert_eq!(a.kronecker(&b).mul(&c.kronecker(&d)), a.mul(&c).kronecker(&b.mul(&d)));
        }

        #[test]
        fn minimal_polynomial_annihilates_and_is_minimal(a in arb_matrix(3, 4)) {
            let mp = a.minimal_polynomial();
            prop_assert!(mp.eval_matrix(&a).is_zero());
            // no monic polynomial of smaller degree annihilates: the powers
            // I, A, ..., A^{deg-1} are independent
            let deg = mp.degree().unwrap();
            let flats: Vec<Vec<u64>> = (0..deg).map(|k| a.pow(k as u64).data().to_vec()).collect();
            let stacked = Matrix::from_vectors(a.field(), 16, &flats);
            prop_assert_eq!(stacked.rank(), deg);
        }

        #[test]
        fn left_kernel_is_kernel(a in arb_matrix(5, 4)) {
            let k = a.left_kernel();
            prop_assert_eq!(k.len() + a.rank(), 4);
            for v in k {
                prop_assert!(a.vec_mul(&v).iter().all(|&x| x == 0));
            }
        }

        #[test]
        fn unipotent_order_matches_partition(sizes in proptest::collection::vec(1usize..6, 1..4), pi in 0usize..2) {
            let p = [2u64, 3][pi];
            let f = fld(p);
            let blocks: Vec<Matrix> = sizes.iter().map(|&s| Matrix::jordan_block(f, s)).collect();
            let u = Matrix::block_diagonal(f, &blocks);
            let part = u.unipotent_partition().unwrap();
            prop_assert_eq!(part.iter().sum::<usize>(), u.rows());
            let mut sorted = sizes.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            prop_assert_eq!(&part, &sorted);
            let max = part[0] as u64;
            let mut expected = 1u64;
            while expected < max {
                expected *= p;
            }
            prop_assert_eq!(u.multiplicative_order(1000), Some(expected));
        }
    }
}
