//! Finite-dimensional unital associative algebras given by structure
//! constants `e_i · e_j = Σ_l c[i][j][l] e_l`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{kernel_basis, normalize_entries, SparseMat, SparseVec};

/// Default cap on the number of coordinates of any (co)chain space.
pub const DEFAULT_COORD_CAP: usize = 1 << 24;

#[derive(Clone, PartialEq)]
pub struct Algebra<F: Field> {
    field: F,
    labels: Vec<String>,
    unit: Vec<F::Elem>,
    /// `products[i * d + j]` is `e_i · e_j` as a sparse vector.
    products: Vec<SparseVec<F::Elem>>,
    /// `factorizations[l]` lists `(i, j, c)` with `c` the `e_l`-coefficient of `e_i e_j`.
    factorizations: Vec<Vec<(usize, usize, F::Elem)>>,
    coord_cap: usize,
}

impl<F: Field> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {} over {}, basis {:?})", self.dim(), self.field.spec(), self.labels)
    }
}

/// Failures found by [`Algebra::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraReport {
    /// Triples `(i, j, k)` with `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
    pub associativity: Vec<(usize, usize, usize)>,
    /// Basis indices `i` with `u e_i ≠ e_i` or `e_i u ≠ e_i`.
    pub unit: Vec<usize>,
}

impl AlgebraReport {
    pub fn is_valid(&self) -> bool {
        self.associativity.is_empty() && self.unit.is_empty()
    }
}

impl fmt::Display for AlgebraReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        let mut parts = Vec::new();
        if !self.associativity.is_empty() {
            let shown: Vec<String> =
                self.associativity.iter().take(8).map(|(i, j, k)| format!("({i},{j},{k})")).collect();
            let more = self.associativity.len().saturating_sub(8);
            let tail = if more > 0 { format!(" and {more} more") } else { String::new() };
            parts.push(format!("associativity fails at (i,j,k) = {}{tail}", shown.join(", ")));
        }
        if !self.unit.is_empty() {
            parts.push(format!("unit axiom fails for basis elements {:?}", self.unit));
        }
        write!(f, "{}", parts.join("; "))
    }
}

impl<F: Field> Algebra<F> {
    /// Builds and validates an algebra from structure quadruples `(i, j, l, c)`.
    /// Repeated quadruples for the same `(i, j, l)` are summed.
    pub fn new(
        field: &F,
        labels: Vec<String>,
        unit: Vec<F::Elem>,
        structure: impl IntoIterator<Item = (usize, usize, usize, F::Elem)>,
    ) -> Result<Self> {
        let a = Self::new_unchecked(field, labels, unit, structure)?;
        let report = a.validate();
        if report.is_valid() {
            Ok(a)
        } else {
            Err(Error::Validation(report.to_string()))
        }
    }

    /// Like [`Algebra::new`] but skips the associativity and unit checks.
    /// Index ranges and lengths are still checked.
    pub fn new_unchecked(
        field: &F,
        labels: Vec<String>,
        unit: Vec<F::Elem>,
        structure: impl IntoIterator<Item = (usize, usize, usize, F::Elem)>,
    ) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::Validation("algebra must have positive dimension".into()));
        }
        if unit.len() != d {
            return Err(Error::Validation(format!("unit has {} coordinates, expected {d}", unit.len())));
        }
        let mut raw: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); d * d];
        for (i, j, l, c) in structure {
            if i >= d || j >= d || l >= d {
                return Err(Error::Validation(format!("structure index ({i},{j},{l}) out of range for dimension {d}")));
            }
            raw[i * d + j].push((l, c));
        }
        let products: Vec<_> = raw.into_iter().map(|v| normalize_entries(field, v)).collect();
        let mut factorizations = vec![Vec::new(); d];
        for (ij, prod) in products.iter().enumerate() {
            for (l, c) in prod {
                factorizations[*l].push((ij / d, ij % d, c.clone()));
            }
        }
        Ok(Algebra {
            field: field.clone(),
            labels,
            unit,
            products,
            factorizations,
            coord_cap: DEFAULT_COORD_CAP,
        })
    }

    pub fn with_coord_cap(mut self, cap: usize) -> Self {
        self.coord_cap = cap;
        self
    }

    pub fn coord_cap(&self) -> usize {
        self.coord_cap
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }

    /// `e_i · e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.products[i * self.dim() + j]
    }

    /// Pairs `(i, j, c)` such that `e_l` occurs in `e_i e_j` with coefficient `c`.
    pub fn factorizations(&self, l: usize) -> &[(usize, usize, F::Elem)] {
        &self.factorizations[l]
    }

    /// Structure quadruples `(i, j, l, c)` with `c ≠ 0`, in lexicographic order.
    pub fn structure(&self) -> Vec<(usize, usize, usize, F::Elem)> {
        let d = self.dim();
        let mut out = Vec::new();
        for (ij, prod) in self.products.iter().enumerate() {
            for (l, c) in prod {
                out.push((ij / d, ij % d, *l, c.clone()));
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn multiply(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let d = self.dim();
        let mut out = vec![f.zero(); d];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !f.is_zero(x)) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !f.is_zero(y)) {
                let xy = f.mul(x, y);
                for (l, c) in self.product(i, j) {
                    f.add_mul_assign(&mut out[*l], &xy, c);
                }
            }
        }
        out
    }

    /// Lists every violated associativity triple and unit equation.
    pub fn validate(&self) -> AlgebraReport {
        let d = self.dim();
        let mut report = AlgebraReport::default();
        for i in 0..d {
            let ei = self.basis_vector(i);
            for j in 0..d {
                let eij = self.multiply(&ei, &self.basis_vector(j));
                for k in 0..d {
                    let ek = self.basis_vector(k);
                    let lhs = self.multiply(&eij, &ek);
                    let rhs = self.multiply(&ei, &self.multiply(&self.basis_vector(j), &ek));
                    if lhs != rhs {
                        report.associativity.push((i, j, k));
                    }
                }
            }
            if self.multiply(&self.unit, &ei) != ei || self.multiply(&ei, &self.unit) != ei {
                report.unit.push(i);
            }
        }
        report
    }

    /// Matrix of `b ↦ a·b`.
    pub fn left_mult(&self, a: &[F::Elem]) -> SparseMat<F> {
        let cols = (0..self.dim()).map(|j| self.multiply(a, &self.basis_vector(j))).collect::<Vec<_>>();
        SparseMat::from_dense_columns(&self.field, self.dim(), &cols)
    }

    /// Matrix of `b ↦ b·a`.
    pub fn right_mult(&self, a: &[F::Elem]) -> SparseMat<F> {
        let cols = (0..self.dim()).map(|j| self.multiply(&self.basis_vector(j), a)).collect::<Vec<_>>();
        SparseMat::from_dense_columns(&self.field, self.dim(), &cols)
    }

    /// The multiplication `A ⊗ A → A` as a `d × d²` matrix.
    pub fn multiplication_matrix(&self) -> SparseMat<F> {
        SparseMat::from_columns(&self.field, self.dim(), self.products.clone())
    }

    /// Basis (as matrix columns) of the center, the kernel of
    /// `z ↦ (z e_i − e_i z)_i`.
    pub fn center(&self) -> SparseMat<F> {
        let f = &self.field;
        let d = self.dim();
        let mut triplets = Vec::new();
        for k in 0..d {
            for i in 0..d {
                for (l, c) in self.product(k, i) {
                    triplets.push((i * d + l, k, c.clone()));
                }
                for (l, c) in self.product(i, k) {
                    triplets.push((i * d + l, k, f.neg(c)));
                }
            }
        }
        kernel_basis(&SparseMat::from_triplets(f, d * d, d, triplets))
    }

    pub fn is_central(&self, z: &[F::Elem]) -> bool {
        (0..self.dim()).all(|i| {
            let e = self.basis_vector(i);
            self.multiply(z, &e) == self.multiply(&e, z)
        })
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.product(i, j) == self.product(j, i)))
    }
}
