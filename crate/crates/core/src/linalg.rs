//! Exact linear algebra over a [`FieldSpec`].
//!
//! Two representations live here. [`Matrix`] is a dense row-major matrix with
//! fraction-free (Bareiss) rank over `Q`, Gauss-Jordan kernels and row-space
//! sums. [`Echelon`] is an incremental sparse row echelon form used by the
//! inverse-system code, where contraction matrices have a handful of nonzeros
//! per row but thousands of rows. [`rank_mod_prime`] is a word-sized dense
//! elimination used for fast rank lower bounds.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::field::{FieldSpec, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("shape mismatch: {0} columns vs {1} columns")]
    ShapeMismatch(usize, usize),
    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },
}

/// Sparse vector: strictly increasing column indices, nonzero entries.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Dense matrix over a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::EntryCount { expected: rows * cols, got: entries.len() });
        }
        Ok(Matrix { field, rows, cols, entries })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_i64_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&z| field.from_i64(z))
            })
            .collect();
        Matrix { field, rows: rows.len(), cols, entries }
    }

    /// Empty matrix with the given column count.
    pub fn empty(field: FieldSpec, cols: usize) -> Self {
        Matrix { field, rows: 0, cols, entries: Vec::new() }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Stack `other` under `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch(self.cols, other.cols));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, entries })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Exact rank. Over `Q` rows are scaled to integers and reduced by
    /// Bareiss' fraction-free elimination; over `F_p` plain Gaussian
    /// elimination is used.
    pub fn rank(&self) -> usize {
        let r = match self.field {
            FieldSpec::Rationals => self.rank_bareiss(),
            FieldSpec::PrimeField(p) => {
                let mut rows: Vec<Vec<u32>> = (0..self.rows)
                    .map(|r| self.row(r).iter().map(|s| s.residue_mod(p).expect("residue")).collect())
                    .collect();
                rank_mod_prime(&mut rows, p)
            }
        };
        assert!(r <= self.rows.min(self.cols));
        r
    }

    fn rank_bareiss(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row.iter().fold(BigInt::one(), |acc, s| {
                    acc.lcm(s.as_rational().expect("rational entry").denom())
                });
                row.iter()
                    .map(|s| {
                        let q = s.as_rational().unwrap();
                        q.numer() * (&lcm / q.denom())
                    })
                    .collect()
            })
            .collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for i in rank + 1..rows {
                for j in c + 1..cols {
                    let num = &m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j];
                    let (quot, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss step must divide exactly");
                    m[i][j] = quot;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[rank][c].clone();
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.entries.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).invert().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&factor * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of the right null space, one vector per free column, read off the
    /// reduced row echelon form (so the basis is canonical).
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -rref.get(r, f);
                }
                v
            })
            .collect()
    }
}

/// Rank of a matrix.
pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// Right null space basis of a matrix.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    m.kernel_basis()
}

/// Dimension of `rowspace(a) + rowspace(b)`.
pub fn row_space_dim_of_union(a: &Matrix, b: &Matrix) -> Result<usize, LinalgError> {
    Ok(a.vstack(b)?.rank())
}

/// In-place Gaussian elimination over `F_p` on word-sized residues.
pub fn rank_mod_prime(rows: &mut [Vec<u32>], p: u32) -> usize {
    let p64 = p as u64;
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = modinv(rows[rank][c] as u64, p64);
        for x in &mut rows[rank][c..ncols] {
            *x = (*x as u64 * inv % p64) as u32;
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let f = row[c] as u64;
            if f == 0 {
                continue;
            }
            let neg = p64 - f;
            for j in c..ncols {
                let b = pivot_row[j] as u64;
                if b != 0 {
                    row[j] = ((row[j] as u64 + neg * b) % p64) as u32;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn modinv(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Incremental sparse row echelon form.
///
/// Stored rows are normalized so their leading entry is 1 and no two rows
/// share a leading column. Rows are not back-substituted against each other;
/// [`Echelon::reduce`] eliminates pivot columns in increasing column order,
/// which fully reduces any vector regardless.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: FieldSpec,
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(field: FieldSpec) -> Self {
        Echelon { field, rows: Vec::new(), pivot_row: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = v.iter().filter(|(_, s)| !s.is_zero()).cloned().collect();
        let mut out = Vec::new();
        while let Some((col, coeff)) = acc.pop_first() {
            match self.pivot_row.get(&col) {
                None => out.push((col, coeff)),
                Some(&r) => {
                    for (c, s) in &self.rows[r][1..] {
                        let delta = &coeff * s;
                        match acc.get_mut(c) {
                            Some(existing) => {
                                let next = &*existing - &delta;
                                if next.is_zero() {
                                    acc.remove(c);
                                } else {
                                    *existing = next;
                                }
                            }
                            None => {
                                acc.insert(*c, -&delta);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[(usize, Scalar)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, Scalar)]) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.invert().expect("nonzero lead");
        let row: SparseVec = r.into_iter().map(|(c, s)| (c, &s * &inv)).collect();
        self.pivot_row.insert(row[0].0, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Fully reduced rows sorted by pivot column (the RREF of the span).
    pub fn reduced_rows(&self) -> Vec<SparseVec> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r][0].0);
        order
            .into_iter()
            .map(|r| {
                let row = &self.rows[r];
                let mut out = vec![row[0].clone()];
                out.extend(self.reduce(&row[1..]));
                out
            })
            .collect()
    }

    /// Canonical basis of `{x : row · x = 0 for every row}` with `ncols`
    /// coordinates: one vector per non-pivot column `f`, equal to `e_f` minus
    /// the RREF entries in column `f`.
    pub fn kernel(&self, ncols: usize) -> Vec<SparseVec> {
        let rref = self.reduced_rows();
        let mut by_col: HashMap<usize, Vec<(usize, Scalar)>> = HashMap::new();
        for row in &rref {
            let lead = row[0].0;
            for (c, s) in &row[1..] {
                by_col.entry(*c).or_default().push((lead, s.clone()));
            }
        }
        (0..ncols)
            .filter(|c| !self.is_pivot(*c))
            .map(|f| {
                let mut v: SparseVec = by_col
                    .get(&f)
                    .map(|entries| entries.iter().map(|(lead, s)| (*lead, -s)).collect())
                    .unwrap_or_default();
                v.push((f, self.field.one()));
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect()
    }
}

/// Rank of a list of sparse rows.
pub fn sparse_rank(field: FieldSpec, rows: &[SparseVec]) -> usize {
    let mut e = Echelon::new(field);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn to_sparse(m: &Matrix) -> Vec<SparseVec> {
        (0..m.rows())
            .map(|r| {
                m.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| !s.is_zero())
                    .map(|(c, s)| (c, s.clone()))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(Matrix::identity(Q, 2).rank(), 2);
        assert_eq!(Matrix::from_i64_rows(Q, &[vec![1, 2], vec![2, 4]]).rank(), 1);
        let f2 = FieldSpec::PrimeField(2);
        assert_eq!(Matrix::from_i64_rows(f2, &[vec![1, 1], vec![1, 1]]).rank(), 1);
        assert_eq!(Matrix::empty(Q, 3).rank(), 0);
    }

    #[test]
    fn kernels() {
        assert!(Matrix::identity(Q, 3).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(Q, 2, 3).kernel_basis().len(), 3);
        let k = Matrix::from_i64_rows(Q, &[vec![1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![Q.from_i64(-1), Q.from_i64(1)]]);
    }

    #[test]
    fn row_space_unions() {
        let a = Matrix::from_i64_rows(Q, &[vec![1, 0]]);
        let b = Matrix::from_i64_rows(Q, &[vec![0, 1]]);
        assert_eq!(row_space_dim_of_union(&a, &b).unwrap(), 2);
        let c = Matrix::from_i64_rows(Q, &[vec![1, 1]]);
        assert_eq!(row_space_dim_of_union(&c, &c).unwrap(), 1);
        let e = Matrix::empty(Q, 3);
        let d = Matrix::from_i64_rows(Q, &[vec![1, 2, 3]]);
        assert_eq!(row_space_dim_of_union(&e, &d).unwrap(), 1);
        assert_eq!(row_space_dim_of_union(&a, &d), Err(LinalgError::ShapeMismatch(2, 3)));
    }

    #[test]
    fn sparse_kernel_matches_dense() {
        let m = Matrix::from_i64_rows(Q, &[vec![1, 2, 0, -1], vec![2, 4, 1, 0], vec![3, 6, 1, -1]]);
        let mut e = Echelon::new(Q);
        for r in to_sparse(&m) {
            e.insert(&r);
        }
        let dense = m.kernel_basis();
        let sparse = e.kernel(4);
        assert_eq!(dense.len(), sparse.len());
        for (d, s) in dense.iter().zip(&sparse) {
            let mut expanded = vec![Q.zero(); 4];
            for (c, v) in s {
                expanded[*c] = v.clone();
            }
            assert_eq!(d, &expanded);
        }
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-5i64..=5, c), r)
        })
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(rows in small_matrix()) {
            let m = Matrix::from_i64_rows(Q, &rows);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn sparse_and_dense_ranks_agree(rows in small_matrix()) {
            let m = Matrix::from_i64_rows(Q, &rows);
            prop_assert_eq!(m.rank(), sparse_rank(Q, &to_sparse(&m)));
            let f7 = FieldSpec::PrimeField(7);
            let m7 = Matrix::from_i64_rows(f7, &rows);
            prop_assert_eq!(m7.rank(), sparse_rank(f7, &to_sparse(&m7)));
        }

        #[test]
        fn kernel_vectors_are_annihilated(rows in small_matrix()) {
            let m = Matrix::from_i64_rows(Q, &rows);
            let k = m.kernel_basis();
            prop_assert_eq!(k.len(), m.cols() - m.rank());
            for v in k {
                prop_assert!(m.mul_vec(&v).iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn rational_rank_matches_large_prime(rows in small_matrix()) {
            // Rank over Q and over F_65521 agree unless 65521 divides every
            // maximal nonvanishing minor; for entries in [-5, 5] and at most
            // 6x6 the minors are bounded by 6! * 5^6 < 65521^2, so a
            // disagreement must come from a minor divisible by p.
            let rq = Matrix::from_i64_rows(Q, &rows).rank();
            let rp = Matrix::from_i64_rows(FieldSpec::PrimeField(65521), &rows).rank();
            prop_assert!(rp <= rq);
            if rp < rq {
                // Recorded exception: the nonsingular rq x rq minor picked out
                // by the pivots over Q must vanish mod p.
                let dense = Matrix::from_i64_rows(Q, &rows);
                let (_, pivot_cols) = dense.rref();
                let (_, pivot_rows) = dense.transpose().rref();
                let minor: Vec<Vec<i64>> = pivot_rows
                    .iter()
                    .map(|&r| pivot_cols.iter().map(|&c| rows[r][c]).collect())
                    .collect();
                prop_assert_eq!(Matrix::from_i64_rows(Q, &minor).rank(), rq);
                prop_assert!(Matrix::from_i64_rows(FieldSpec::PrimeField(65521), &minor).rank() < rq);
            }
        }
    }
}
