use std::sync::Arc;

use crate::algebra::Algebra;
use crate::bar::{alternating_merges, bar_differential, insert_unit_matrix, merge_matrix};
use crate::bimodule::Bimodule;
use crate::error::Result;
use crate::field::Field;
use crate::hochschild::{chain_boundary_matrix, chain_dim};
use crate::linalg::SparseMat;
use crate::tensor::pow;

/// The diagonal `Δ_{i,j} : Bar_{i+j} → Bar_i ⊗_A Bar_j` of the bar resolution.
///
/// `Bar_i ⊗_A Bar_j` is identified with `A^{⊗(i+j+3)}` by multiplying the last
/// factor of the left tensor into the first factor of the right one, so that
/// `Δ_{i,j}` inserts the unit after slot `i`.
#[derive(Clone, Debug)]
pub struct DiagonalMap<F: Field> {
    algebra: Arc<Algebra<F>>,
}

impl<F: Field> DiagonalMap<F> {
    pub fn new(algebra: &Arc<Algebra<F>>) -> Self {
        DiagonalMap { algebra: algebra.clone() }
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    /// `A^{⊗(i+j+2)} → A^{⊗(i+j+3)}`, `(a_0, …, a_{i+j+1}) ↦ (a_0, …, a_i, 1, a_{i+1}, …)`.
    pub fn matrix(&self, i: usize, j: usize) -> Result<SparseMat<F>> {
        insert_unit_matrix(&self.algebra, i + j + 2, i + 1)
    }

    /// `d_{i+1} ⊗ 1 : Bar_{i+1} ⊗_A Bar_j → Bar_i ⊗_A Bar_j`.
    pub fn left_differential(&self, i: usize, j: usize) -> Result<SparseMat<F>> {
        alternating_merges(&self.algebra, i + j + 4, 0..i + 2)
    }

    /// `1 ⊗ d_{j+1} : Bar_i ⊗_A Bar_{j+1} → Bar_i ⊗_A Bar_j`.
    pub fn right_differential(&self, i: usize, j: usize) -> Result<SparseMat<F>> {
        alternating_merges(&self.algebra, i + j + 4, i + 1..i + j + 3)
    }

    /// `Δ_{i,j} d_{i+j+1} = (d_{i+1} ⊗ 1) Δ_{i+1,j} + (−1)^i (1 ⊗ d_{j+1}) Δ_{i,j+1}`,
    /// and for `(0,0)` also `(d_0 ⊗ d_0) Δ_{0,0} = d_0`, as exact matrix identities.
    pub fn check_axioms(&self, i: usize, j: usize) -> Result<bool> {
        let f = self.algebra.field();
        let lhs = self.matrix(i, j)?.mul(&bar_differential(&self.algebra, i + j + 1)?);
        let first = self.left_differential(i, j)?.mul(&self.matrix(i + 1, j)?);
        let second = self.right_differential(i, j)?.mul(&self.matrix(i, j + 1)?);
        let rhs = first.add(&second.scale(&f.sign(i % 2 == 1)));
        if lhs != rhs {
            return Ok(false);
        }
        if i == 0 && j == 0 {
            // A^{⊗3} → A ⊗_A A ≅ A multiplies everything together.
            let d0d0 = merge_matrix(&self.algebra, 2, 0)?.mul(&merge_matrix(&self.algebra, 3, 0)?);
            return Ok(d0d0.mul(&self.matrix(0, 0)?) == bar_differential(&self.algebra, 0)?);
        }
        Ok(true)
    }
}

pub fn diagonal<F: Field>(algebra: &Arc<Algebra<F>>, i: usize, j: usize) -> Result<SparseMat<F>> {
    DiagonalMap::new(algebra).matrix(i, j)
}

pub fn check_diagonal_axioms<F: Field>(algebra: &Arc<Algebra<F>>, i: usize, j: usize) -> Result<bool> {
    DiagonalMap::new(algebra).check_axioms(i, j)
}

// The maps below live on `N ⊗_{A^e} (Bar_i ⊗_A Bar_j)`, written in reduced
// coordinates `N ⊗ A^{⊗(i+j+1)}` (outer factors absorbed into `N`).

/// `id_N ⊗ Δ_{i,j}` in reduced coordinates: `(x; a_1..a_{i+j}) ↦ (x; a_1..a_i, 1, a_{i+1}..)`.
pub fn reduced_diagonal<F: Field>(module: &Bimodule<F>, i: usize, j: usize) -> Result<SparseMat<F>> {
    chain_dim(module, i + j + 1)?;
    let id = SparseMat::identity(module.field(), module.dim());
    Ok(id.kron(&insert_unit_matrix(module.algebra(), i + j, i)?))
}

/// `id_N ⊗ d_{i+1} ⊗ id : N ⊗_{A^e} (Bar_{i+1} ⊗_A Bar_j) → N ⊗_{A^e} (Bar_i ⊗_A Bar_j)`.
pub fn reduced_first_differential<F: Field>(module: &Bimodule<F>, i: usize, j: usize) -> Result<SparseMat<F>> {
    let a = module.algebra();
    let f = a.field();
    let len = i + j + 2;
    chain_dim(module, len)?;
    let id = SparseMat::identity(f, module.dim());
    // The outer factor of Bar_{i+1} merges into N from the right.
    let mut acc = right_act_first(module, len)?;
    for k in 1..=i + 1 {
        let m = id.kron(&merge_matrix(a, len, k - 1)?);
        acc = if k % 2 == 1 { acc.sub(&m) } else { acc.add(&m) };
    }
    Ok(acc)
}

/// `id_N ⊗ id ⊗ d_{j+1} : N ⊗_{A^e} (Bar_i ⊗_A Bar_{j+1}) → N ⊗_{A^e} (Bar_i ⊗_A Bar_j)`.
pub fn reduced_second_differential<F: Field>(module: &Bimodule<F>, i: usize, j: usize) -> Result<SparseMat<F>> {
    let a = module.algebra();
    let f = a.field();
    let len = i + j + 2;
    chain_dim(module, len)?;
    let id = SparseMat::identity(f, module.dim());
    let mut acc = SparseMat::zeros(f, module.dim() * pow(a.dim(), len - 1), module.dim() * pow(a.dim(), len));
    for k in 0..=j {
        let m = id.kron(&merge_matrix(a, len, i + k)?);
        acc = if k % 2 == 0 { acc.add(&m) } else { acc.sub(&m) };
    }
    // The outer factor of Bar_{j+1} merges into N from the left.
    let last = left_act_last(module, len)?;
    Ok(if j % 2 == 0 { acc.sub(&last) } else { acc.add(&last) })
}

/// `(x; a_1, …, a_len) ↦ (x·a_1; a_2, …)`.
fn right_act_first<F: Field>(module: &Bimodule<F>, len: usize) -> Result<SparseMat<F>> {
    let d = module.algebra().dim();
    let cols = chain_dim(module, len)?;
    let tail = pow(d, len - 1);
    let columns = (0..cols)
        .map(|c| {
            let (x, a1, rest) = (c / (tail * d), (c / tail) % d, c % tail);
            module.right(a1).column(x).iter().map(|(y, v)| (y * tail + rest, v.clone())).collect()
        })
        .collect();
    Ok(SparseMat::from_columns(module.field(), module.dim() * tail, columns))
}

/// `(x; a_1, …, a_len) ↦ (a_len·x; a_1, …, a_{len-1})`.
fn left_act_last<F: Field>(module: &Bimodule<F>, len: usize) -> Result<SparseMat<F>> {
    let d = module.algebra().dim();
    let cols = chain_dim(module, len)?;
    let tail = pow(d, len - 1);
    let columns = (0..cols)
        .map(|c| {
            let (x, rest) = (c / (tail * d), c % (tail * d));
            module.left(rest % d).column(x).iter().map(|(y, v)| (y * tail + rest / d, v.clone())).collect()
        })
        .collect();
    Ok(SparseMat::from_columns(module.field(), module.dim() * tail, columns))
}

/// The diagonal identity pushed to `N ⊗_{A^e} (Bar_m ⊗_A Bar_{n−m−1})` after
/// reordering the factors:
/// `(1⊗1⊗d)(1⊗Δ_{m,n−m}) = (−1)^m (1⊗Δ_{m,n−m−1}) b_n + (−1)^{m+1} (1⊗d⊗1)(1⊗Δ_{m+1,n−m−1})`.
pub fn check_reordered_identity<F: Field>(module: &Bimodule<F>, n: usize, m: usize) -> Result<bool> {
    assert!(m < n, "the identity needs m < n");
    let f = module.field();
    let j = n - m - 1;
    let lhs = reduced_second_differential(module, m, j)?.mul(&reduced_diagonal(module, m, j + 1)?);
    let through_b = reduced_diagonal(module, m, j)?.mul(&chain_boundary_matrix(module, n)?);
    let through_first = reduced_first_differential(module, m, j)?.mul(&reduced_diagonal(module, m + 1, j)?);
    let rhs = through_b.scale(&f.sign(m % 2 == 1)).add(&through_first.scale(&f.sign(m % 2 == 0)));
    Ok(lhs == rhs)
}
