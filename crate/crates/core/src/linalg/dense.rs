use crate::field::Field;
use crate::linalg::sparse::SparseMat;

/// Row-major dense matrix. Used for small blocks where sparse bookkeeping
/// costs more than it saves.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> DenseMat<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        DenseMat { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_sparse(&self) -> SparseMat<F> {
        let triplets = (0..self.rows).flat_map(|i| {
            (0..self.cols).filter_map(move |j| {
                let v = self.get(i, j);
                (!self.field.is_zero(v)).then(|| (i, j, v.clone()))
            })
        });
        SparseMat::from_triplets(&self.field, self.rows, self.cols, triplets)
    }

    /// In-place Gauss–Jordan elimination. Returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let coef = self.get(i, c).clone();
                if f.is_zero(&coef) {
                    continue;
                }
                for j in c..self.cols {
                    let mut v = self.get(i, j).clone();
                    f.sub_mul_assign(&mut v, &coef, self.get(r, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}
