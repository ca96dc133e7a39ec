use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::field::Field;
use crate::linalg::dense::DenseMat;
use crate::linalg::sparse::{sparse_from_dense, Accumulator, SparseMat, SparseVec};

const NONE: usize = usize::MAX;

/// Incremental row-echelon basis of a subspace of `k^width`.
///
/// Rows are normalized (leading coefficient one) but not yet reduced against
/// each other; [`Echelon::into_rref`] finishes the back substitution.
pub struct Echelon<F: Field> {
    field: F,
    width: usize,
    rows: Vec<SparseVec<F::Elem>>,
    row_of_pivot: Vec<usize>,
    scratch: Vec<F::Elem>,
    mark: Vec<bool>,
    heap: BinaryHeap<Reverse<usize>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, width: usize) -> Self {
        Echelon {
            field: field.clone(),
            width,
            rows: Vec::new(),
            row_of_pivot: vec![NONE; width],
            scratch: vec![field.zero(); width],
            mark: vec![false; width],
            heap: BinaryHeap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    fn push_index(&mut self, i: usize) {
        if !self.mark[i] {
            self.mark[i] = true;
            self.heap.push(Reverse(i));
        }
    }

    /// Reduces `v` against the current rows; adds it as a new row when it is
    /// independent. Returns whether the rank grew.
    pub fn insert_sparse(&mut self, v: &[(usize, F::Elem)]) -> bool {
        let f = self.field.clone();
        for (i, x) in v {
            debug_assert!(*i < self.width);
            self.scratch[*i] = x.clone();
            self.push_index(*i);
        }
        while let Some(Reverse(c)) = self.heap.pop() {
            self.mark[c] = false;
            if f.is_zero(&self.scratch[c]) {
                continue;
            }
            let r = self.row_of_pivot[c];
            if r != NONE {
                let coef = std::mem::replace(&mut self.scratch[c], f.zero());
                let row = std::mem::take(&mut self.rows[r]);
                for (k, x) in row.iter().skip(1) {
                    self.push_index(*k);
                    f.sub_mul_assign(&mut self.scratch[*k], &coef, x);
                }
                self.rows[r] = row;
                continue;
            }
            // New pivot at c: every remaining nonzero lives in the heap.
            let inv = f.inv(&self.scratch[c]);
            let mut rest: Vec<usize> = std::iter::from_fn(|| self.heap.pop().map(|Reverse(i)| i)).collect();
            rest.sort_unstable();
            let mut row = Vec::with_capacity(rest.len() + 1);
            row.push((c, f.one()));
            self.scratch[c] = f.zero();
            for i in rest {
                self.mark[i] = false;
                let x = std::mem::replace(&mut self.scratch[i], f.zero());
                if !f.is_zero(&x) {
                    row.push((i, f.mul(&x, &inv)));
                }
            }
            self.row_of_pivot[c] = self.rows.len();
            self.rows.push(row);
            return true;
        }
        false
    }

    pub fn insert_dense(&mut self, v: &[F::Elem]) -> bool {
        let s = sparse_from_dense(&self.field, v);
        self.insert_sparse(&s)
    }

    /// Back-substitutes to the unique reduced row-echelon basis.
    pub fn into_rref(self) -> Rref<F> {
        let f = self.field;
        let width = self.width;
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        let pivots: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
        let mut row_of_pivot = vec![NONE; width];
        for (j, &p) in pivots.iter().enumerate() {
            row_of_pivot[p] = j;
        }
        let mut acc = Accumulator::new(&f, width);
        for j in (0..rows.len()).rev() {
            let needs = rows[j].iter().skip(1).any(|(c, _)| row_of_pivot[*c] != NONE);
            if !needs {
                continue;
            }
            let row = std::mem::take(&mut rows[j]);
            for (c, x) in &row {
                acc.add(*c, x);
            }
            for (c, x) in row.iter().skip(1) {
                let r = row_of_pivot[*c];
                if r != NONE {
                    // Rows below j are final: zero at every other pivot.
                    for (k, y) in &rows[r] {
                        acc.sub_mul(*k, x, y);
                    }
                }
            }
            rows[j] = acc.drain();
        }
        Rref { field: f, width, rows, pivots, row_of_pivot }
    }
}

/// Reduced row-echelon basis of a subspace of `k^width`.
///
/// Row `j` has a one at column `pivots[j]` and zeros at every other pivot
/// column. The basis is unique for the subspace, which makes every derived
/// coordinate system canonical.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F: Field> {
    field: F,
    width: usize,
    rows: Vec<SparseVec<F::Elem>>,
    pivots: Vec<usize>,
    row_of_pivot: Vec<usize>,
}

impl<F: Field> Rref<F> {
    pub fn zero_space(field: &F, width: usize) -> Self {
        Rref { field: field.clone(), width, rows: Vec::new(), pivots: Vec::new(), row_of_pivot: vec![NONE; width] }
    }

    /// The whole space `k^width` (identity rows).
    pub fn full_space(field: &F, width: usize) -> Self {
        Rref {
            field: field.clone(),
            width,
            rows: (0..width).map(|i| vec![(i, field.one())]).collect(),
            pivots: (0..width).collect(),
            row_of_pivot: (0..width).collect(),
        }
    }

    /// Row space of the given sparse rows.
    pub fn from_rows<'a>(field: &F, width: usize, rows: impl IntoIterator<Item = &'a SparseVec<F::Elem>>) -> Self
    where
        F::Elem: 'a,
    {
        let mut e = Echelon::new(field, width);
        for r in rows {
            e.insert_sparse(r);
        }
        e.into_rref()
    }

    /// Column space of a matrix, as a subspace of `k^rows`.
    pub fn column_space(m: &SparseMat<F>) -> Self {
        Rref::from_rows(m.field(), m.rows(), m.columns().iter())
    }

    /// Row space of a matrix, as a subspace of `k^cols`. Uses dense
    /// elimination for narrow matrices.
    pub fn row_space(m: &SparseMat<F>) -> Self {
        if m.cols() < super::DENSE_CUTOFF {
            let mut d = m.to_dense();
            let pivots = d.rref_in_place();
            return Rref::from_dense_rref(m.field(), &d, pivots);
        }
        let mut rows = m.row_vectors();
        rows.sort_by_key(Vec::len);
        Rref::from_rows(m.field(), m.cols(), rows.iter())
    }

    fn from_dense_rref(field: &F, d: &DenseMat<F>, pivots: Vec<usize>) -> Self {
        let mut row_of_pivot = vec![NONE; d.cols()];
        let rows = pivots
            .iter()
            .enumerate()
            .map(|(j, &p)| {
                row_of_pivot[p] = j;
                sparse_from_dense(field, d.row(j))
            })
            .collect();
        Rref { field: field.clone(), width: d.cols(), rows, pivots, row_of_pivot }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn width(&self) -> usize {
        self.width
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn rows(&self) -> &[SparseVec<F::Elem>] {
        &self.rows
    }
    pub fn is_pivot(&self, c: usize) -> bool {
        self.row_of_pivot[c] != NONE
    }

    pub fn row_dense(&self, j: usize) -> Vec<F::Elem> {
        super::dense_from_sparse(&self.field, &self.rows[j], self.width)
    }

    /// Basis vectors as the columns of a `width x rank` matrix.
    pub fn basis_matrix(&self) -> SparseMat<F> {
        SparseMat::from_columns(&self.field, self.width, self.rows.clone())
    }

    /// Columns that carry no pivot, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.width).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// Subtracts the pivot components: afterwards `v` vanishes on every pivot
    /// column and differs from the input by an element of the subspace.
    pub fn reduce(&self, v: &mut [F::Elem]) {
        let f = &self.field;
        for (j, &p) in self.pivots.iter().enumerate() {
            if f.is_zero(&v[p]) {
                continue;
            }
            let coef = v[p].clone();
            for (k, x) in &self.rows[j] {
                f.sub_mul_assign(&mut v[*k], &coef, x);
            }
        }
    }

    /// Coordinates of `v` in the row basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let coords: Vec<F::Elem> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        self.reduce(&mut r);
        r.iter().all(|x| self.field.is_zero(x)).then_some(coords)
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `Σ coords[j] · row_j`
    pub fn combination(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(coords.len(), self.rank());
        let mut out = vec![self.field.zero(); self.width];
        for (row, c) in self.rows.iter().zip(coords) {
            if self.field.is_zero(c) {
                continue;
            }
            for (k, x) in row {
                self.field.add_mul_assign(&mut out[*k], c, x);
            }
        }
        out
    }

    /// Canonical coordinates of `v` in the quotient `k^width / span(rows)`:
    /// the entries of the reduced vector at the free columns.
    pub fn quotient_coords(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut r = v.to_vec();
        self.reduce(&mut r);
        self.free_columns().into_iter().map(|c| r[c].clone()).collect()
    }

    /// Matrix of the quotient projection `k^width → k^width / span(rows)`.
    pub fn quotient_projection(&self) -> SparseMat<F> {
        let free = self.free_columns();
        let mut pos = vec![NONE; self.width];
        for (i, &c) in free.iter().enumerate() {
            pos[c] = i;
        }
        let f = &self.field;
        let mut cols: Vec<Vec<(usize, F::Elem)>> = Vec::with_capacity(self.width);
        for c in 0..self.width {
            if pos[c] != NONE {
                cols.push(vec![(pos[c], f.one())]);
            } else {
                let row = &self.rows[self.row_of_pivot[c]];
                cols.push(row.iter().skip(1).map(|(k, x)| (pos[*k], f.neg(x))).collect());
            }
        }
        SparseMat::from_columns(f, free.len(), cols)
    }

    /// Section of the quotient projection: free-column unit vectors.
    pub fn quotient_section(&self) -> SparseMat<F> {
        let free = self.free_columns();
        let cols = free.iter().map(|&c| vec![(c, self.field.one())]).collect();
        SparseMat::from_columns(&self.field, self.width, cols)
    }

    /// Reduced row-echelon form as a matrix of the original shape (`rows` is
    /// padded with zero rows).
    pub fn to_matrix(&self, rows: usize) -> SparseMat<F> {
        let triplets = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x.clone())));
        SparseMat::from_triplets(&self.field, rows.max(self.rank()), self.width, triplets)
    }

    /// Null-space basis of any matrix whose row space is `self`: one vector per
    /// free column `f`, equal to `e_f − Σ_j R[j,f] e_{pivot_j}`.
    pub fn kernel_basis(&self) -> SparseMat<F> {
        let f = &self.field;
        let free = self.free_columns();
        let mut pos = vec![NONE; self.width];
        for (i, &c) in free.iter().enumerate() {
            pos[c] = i;
        }
        let mut cols: Vec<Vec<(usize, F::Elem)>> = free.iter().map(|&c| vec![(c, f.one())]).collect();
        for (j, row) in self.rows.iter().enumerate() {
            let p = self.pivots[j];
            for (c, x) in row.iter().skip(1) {
                cols[pos[*c]].push((p, f.neg(x)));
            }
        }
        SparseMat::from_columns(f, self.width, cols)
    }
}
