//! Tensor-power maps on `A^{⊗n}` used by the bar resolution `Bar_k = A^{⊗(k+2)}`:
//! multiplying adjacent factors, inserting the unit, and the bar differential.

use crate::algebra::Algebra;
use crate::error::Result;
use crate::field::Field;
use crate::linalg::SparseMat;
use crate::tensor::{guarded_dim, pow};

/// `A^{⊗len} → A^{⊗(len-1)}` multiplying factors `pos` and `pos + 1` (0-based).
pub fn merge_matrix<F: Field>(alg: &Algebra<F>, len: usize, pos: usize) -> Result<SparseMat<F>> {
    assert!(pos + 1 < len, "merge position {pos} out of range for length {len}");
    let d = alg.dim();
    let cols = guarded_dim(1, d, len, alg.coord_cap())?;
    let low_size = pow(d, len - pos - 2);
    let columns = (0..cols)
        .map(|t| {
            let low = t % low_size;
            let b = (t / low_size) % d;
            let a = (t / (low_size * d)) % d;
            let high = t / (low_size * d * d);
            alg.product(a, b).iter().map(|(l, c)| ((high * d + l) * low_size + low, c.clone())).collect()
        })
        .collect();
    Ok(SparseMat::from_columns(alg.field(), cols / d, columns))
}

/// `A^{⊗len} → A^{⊗(len+1)}` inserting the unit so that it becomes factor `pos`.
pub fn insert_unit_matrix<F: Field>(alg: &Algebra<F>, len: usize, pos: usize) -> Result<SparseMat<F>> {
    assert!(pos <= len);
    let d = alg.dim();
    let cols = guarded_dim(1, d, len, alg.coord_cap())?;
    guarded_dim(1, d, len + 1, alg.coord_cap())?;
    let f = alg.field();
    let low_size = pow(d, len - pos);
    let unit: Vec<(usize, F::Elem)> =
        alg.unit().iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(i, c)| (i, c.clone())).collect();
    let columns = (0..cols)
        .map(|t| {
            let (high, low) = (t / low_size, t % low_size);
            unit.iter().map(|(i, c)| ((high * d + i) * low_size + low, c.clone())).collect()
        })
        .collect();
    Ok(SparseMat::from_columns(f, cols * d, columns))
}

/// Alternating sum `Σ_{k ∈ range} (−1)^(k - range.start) merge(len, k)`.
pub fn alternating_merges<F: Field>(alg: &Algebra<F>, len: usize, positions: std::ops::Range<usize>) -> Result<SparseMat<F>> {
    let d = alg.dim();
    let f = alg.field();
    let mut acc = SparseMat::zeros(f, pow(d, len - 1), guarded_dim(1, d, len, alg.coord_cap())?);
    for (s, k) in positions.enumerate() {
        let m = merge_matrix(alg, len, k)?;
        acc = if s % 2 == 0 { acc.add(&m) } else { acc.sub(&m) };
    }
    Ok(acc)
}

/// `d_k : Bar_k = A^{⊗(k+2)} → A^{⊗(k+1)}`; `d_0` is the multiplication.
pub fn bar_differential<F: Field>(alg: &Algebra<F>, k: usize) -> Result<SparseMat<F>> {
    alternating_merges(alg, k + 2, 0..k + 1)
}

/// `A^{⊗k} → Bar_k`, `g ↦ 1 ⊗ g ⊗ 1`.
pub fn free_generators<F: Field>(alg: &Algebra<F>, k: usize) -> Result<SparseMat<F>> {
    let left = insert_unit_matrix(alg, k, 0)?;
    let right = insert_unit_matrix(alg, k + 1, k + 1)?;
    Ok(right.mul(&left))
}
