use std::fmt;

use crate::field::Field;
use crate::linalg::dense::DenseMat;

/// A sparse vector: `(index, value)` pairs, strictly increasing indices, no zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// Dense scratch space with a list of touched slots, reused across columns.
pub(crate) struct Accumulator<F: Field> {
    field: F,
    vals: Vec<F::Elem>,
    mark: Vec<bool>,
    touched: Vec<usize>,
}

impl<F: Field> Accumulator<F> {
    pub(crate) fn new(field: &F, len: usize) -> Self {
        Accumulator {
            field: field.clone(),
            vals: vec![field.zero(); len],
            mark: vec![false; len],
            touched: Vec::new(),
        }
    }

    fn touch(&mut self, i: usize) {
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(i);
        }
    }

    pub(crate) fn add(&mut self, i: usize, v: &F::Elem) {
        self.touch(i);
        self.vals[i] = self.field.add(&self.vals[i], v);
    }

    /// `self[i] += a * b`
    pub(crate) fn add_mul(&mut self, i: usize, a: &F::Elem, b: &F::Elem) {
        self.touch(i);
        self.field.add_mul_assign(&mut self.vals[i], a, b);
    }

    /// `self[i] -= a * b`
    pub(crate) fn sub_mul(&mut self, i: usize, a: &F::Elem, b: &F::Elem) {
        self.touch(i);
        self.field.sub_mul_assign(&mut self.vals[i], a, b);
    }

    /// Extracts the accumulated sparse vector and resets the scratch space.
    pub(crate) fn drain(&mut self) -> SparseVec<F::Elem> {
        self.touched.sort_unstable();
        let zero = self.field.zero();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.mark[i] = false;
            let v = std::mem::replace(&mut self.vals[i], zero.clone());
            if !self.field.is_zero(&v) {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

/// Sorts entries, merges duplicates and drops zeros.
pub(crate) fn normalize_entries<F: Field>(field: &F, mut v: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = field.add(y, &x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !field.is_zero(x));
    out
}

/// Converts a dense vector into sparse form.
pub fn sparse_from_dense<F: Field>(field: &F, v: &[F::Elem]) -> SparseVec<F::Elem> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !field.is_zero(x))
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Expands a sparse vector to a dense one of length `len`.
pub fn dense_from_sparse<F: Field>(field: &F, v: &[(usize, F::Elem)], len: usize) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Column-major sparse matrix over a field.
///
/// Each column is a [`SparseVec`] of row indices. The representation is
/// canonical, so derived equality is matrix equality.
#[derive(Clone, PartialEq)]
pub struct SparseMat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> fmt::Debug for SparseMat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMat {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        if self.rows * self.cols <= 400 {
            for i in 0..self.rows {
                let row: Vec<String> = (0..self.cols)
                    .map(|j| self.field.format_elem(&self.get(i, j)))
                    .collect();
                writeln!(f, "  [{}]", row.join(", "))?;
            }
        } else {
            writeln!(f, "  ({} nonzeros)", self.nnz())?;
        }
        Ok(())
    }
}

impl<F: Field> SparseMat<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        SparseMat { field: field.clone(), rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let columns = (0..n).map(|i| vec![(i, field.one())]).collect();
        SparseMat { field: field.clone(), rows: n, cols: n, columns }
    }

    /// Builds a matrix from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(
        field: &F,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, F::Elem)>,
    ) -> Self {
        let mut raw: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); cols];
        for (i, j, v) in triplets {
            assert!(i < rows && j < cols, "triplet ({i}, {j}) outside {rows}x{cols}");
            raw[j].push((i, v));
        }
        let columns = raw.into_iter().map(|c| normalize_entries(field, c)).collect();
        SparseMat { field: field.clone(), rows, cols, columns }
    }

    /// Builds a matrix from sparse columns (entries need not be sorted).
    pub fn from_columns(field: &F, rows: usize, columns: Vec<Vec<(usize, F::Elem)>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|c| {
                debug_assert!(c.iter().all(|(i, _)| *i < rows));
                normalize_entries(field, c)
            })
            .collect();
        SparseMat { field: field.clone(), rows, cols, columns }
    }

    pub fn from_dense_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let columns = columns
            .iter()
            .map(|c| {
                assert_eq!(c.len(), rows);
                sparse_from_dense(field, c)
            })
            .collect::<Vec<_>>();
        SparseMat { field: field.clone(), rows, cols: columns.len(), columns }
    }

    /// Builds a matrix from row-major nested data (handy in tests).
    pub fn from_rows(field: &F, data: &[Vec<F::Elem>]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        let triplets = data.iter().enumerate().flat_map(|(i, row)| {
            assert_eq!(row.len(), cols);
            row.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))
        });
        SparseMat::from_triplets(field, rows, cols, triplets)
    }

    pub fn from_i64_rows(field: &F, data: &[&[i64]]) -> Self {
        let rows: Vec<Vec<F::Elem>> =
            data.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        SparseMat::from_rows(field, &rows)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }
    pub fn column(&self, j: usize) -> &[(usize, F::Elem)] {
        &self.columns[j]
    }
    pub fn columns(&self) -> &[SparseVec<F::Elem>] {
        &self.columns
    }

    pub fn column_dense(&self, j: usize) -> Vec<F::Elem> {
        dense_from_sparse(&self.field, &self.columns[j], self.rows)
    }

    pub fn get(&self, i: usize, j: usize) -> F::Elem {
        match self.columns[j].binary_search_by_key(&i, |(r, _)| *r) {
            Ok(k) => self.columns[j][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    /// All nonzero entries as `(row, col, value)`, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &F::Elem)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Rows as sparse vectors (a transpose in disguise).
    pub fn row_vectors(&self) -> Vec<SparseVec<F::Elem>> {
        let mut rows: Vec<SparseVec<F::Elem>> = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                rows[*i].push((j, v.clone()));
            }
        }
        rows
    }

    pub fn transpose(&self) -> Self {
        SparseMat {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            columns: self.row_vectors(),
        }
    }

    /// Applies the matrix to a sparse vector, returning a sparse vector.
    pub fn apply_sparse(&self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let mut acc = Accumulator::new(&self.field, self.rows);
        for (k, x) in v {
            for (i, a) in &self.columns[*k] {
                acc.add_mul(*i, a, x);
            }
        }
        acc.drain()
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols, "vector length {} vs {} columns", v.len(), self.cols);
        let mut out = vec![self.field.zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if self.field.is_zero(x) {
                continue;
            }
            for (i, a) in &self.columns[k] {
                self.field.add_mul_assign(&mut out[*i], a, x);
            }
        }
        out
    }

    pub fn mul(&self, other: &SparseMat<F>) -> SparseMat<F> {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut acc = Accumulator::new(&self.field, self.rows);
        let columns = other
            .columns
            .iter()
            .map(|col| {
                for (k, x) in col {
                    for (i, a) in &self.columns[*k] {
                        acc.add_mul(*i, a, x);
                    }
                }
                acc.drain()
            })
            .collect();
        SparseMat { field: self.field.clone(), rows: self.rows, cols: other.cols, columns }
    }

    fn combine(&self, other: &SparseMat<F>, negate: bool) -> SparseMat<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sum");
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut v: Vec<(usize, F::Elem)> = a.clone();
                v.extend(b.iter().map(|(i, x)| {
                    (*i, if negate { self.field.neg(x) } else { x.clone() })
                }));
                normalize_entries(&self.field, v)
            })
            .collect();
        SparseMat { field: self.field.clone(), rows: self.rows, cols: self.cols, columns }
    }

    pub fn add(&self, other: &SparseMat<F>) -> SparseMat<F> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &SparseMat<F>) -> SparseMat<F> {
        self.combine(other, true)
    }

    pub fn scale(&self, c: &F::Elem) -> SparseMat<F> {
        if self.field.is_zero(c) {
            return SparseMat::zeros(&self.field, self.rows, self.cols);
        }
        let columns = self
            .columns
            .iter()
            .map(|col| col.iter().map(|(i, x)| (*i, self.field.mul(c, x))).collect())
            .collect();
        SparseMat { field: self.field.clone(), rows: self.rows, cols: self.cols, columns }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &SparseMat<F>) -> SparseMat<F> {
        assert_eq!(self.rows, other.rows);
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().cloned());
        SparseMat { field: self.field.clone(), rows: self.rows, cols: columns.len(), columns }
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &SparseMat<F>) -> SparseMat<F> {
        assert_eq!(self.cols, other.cols);
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut v = a.clone();
                v.extend(b.iter().map(|(i, x)| (i + self.rows, x.clone())));
                v
            })
            .collect();
        SparseMat { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, columns }
    }

    /// Stacks many blocks with the same column count on top of each other.
    pub fn vstack_all(field: &F, cols: usize, blocks: &[SparseMat<F>]) -> SparseMat<F> {
        let mut out = SparseMat::zeros(field, 0, cols);
        for b in blocks {
            out = out.vstack(b);
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> SparseMat<F> {
        let columns = idx.iter().map(|&j| self.columns[j].clone()).collect::<Vec<_>>();
        SparseMat { field: self.field.clone(), rows: self.rows, cols: columns.len(), columns }
    }

    /// Kronecker product `self ⊗ other` with index `(i, k) ↦ i * other.rows + k`.
    pub fn kron(&self, other: &SparseMat<F>) -> SparseMat<F> {
        let rows = self.rows * other.rows;
        let mut columns = Vec::with_capacity(self.cols * other.cols);
        for a in &self.columns {
            for b in &other.columns {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a {
                    for (k, y) in b {
                        col.push((i * other.rows + k, self.field.mul(x, y)));
                    }
                }
                columns.push(col);
            }
        }
        SparseMat { field: self.field.clone(), rows, cols: columns.len(), columns }
    }

    pub fn to_dense(&self) -> DenseMat<F> {
        let mut m = DenseMat::zeros(&self.field, self.rows, self.cols);
        for (i, j, v) in self.entries() {
            m.set(i, j, v.clone());
        }
        m
    }
}
