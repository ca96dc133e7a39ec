//! Exact linear algebra over [`Field`]s: sparse and dense matrices, reduced
//! row-echelon forms, kernels, linear solving and subquotient spaces.
//!
//! Everything here is deterministic. Reduced row-echelon bases are unique for
//! a given subspace, so coordinates derived from them do not depend on the
//! order in which vectors were inserted.

mod dense;
mod echelon;
mod sparse;
mod subquotient;

pub use dense::DenseMat;
pub use echelon::{Echelon, Rref};
pub use sparse::{dense_from_sparse, sparse_from_dense, SparseMat, SparseVec};
pub use subquotient::SubquotientSpace;

pub(crate) use sparse::normalize_entries;

use crate::field::Field;

/// Matrices narrower than this are reduced densely.
pub const DENSE_CUTOFF: usize = 64;

/// Reduced row-echelon form of `m` (same shape) and its pivot columns.
pub fn rref<F: Field>(m: &SparseMat<F>) -> (SparseMat<F>, Vec<usize>) {
    let r = Rref::row_space(m);
    (r.to_matrix(m.rows()), r.pivots().to_vec())
}

pub fn rank<F: Field>(m: &SparseMat<F>) -> usize {
    if m.rows() < m.cols() {
        Rref::column_space(m).rank()
    } else {
        Rref::row_space(m).rank()
    }
}

/// Basis of the null space of `m`, one column per free variable.
pub fn kernel_basis<F: Field>(m: &SparseMat<F>) -> SparseMat<F> {
    Rref::row_space(m).kernel_basis()
}

/// Some `x` with `m·x = b`, or `None` when the system is inconsistent.
///
/// The solution is the one read off the reduced row-echelon form of `[m | b]`
/// with every free variable set to zero.
pub fn solve<F: Field>(m: &SparseMat<F>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let rhs = SparseMat::from_dense_columns(m.field(), m.rows(), &[b.to_vec()]);
    solve_many(m, &rhs).pop().flatten()
}

/// Solves `m·x = b` for every column `b` of `rhs`, with the same
/// free-variables-zero convention as [`solve`].
pub fn solve_many<F: Field>(m: &SparseMat<F>, rhs: &SparseMat<F>) -> Vec<Option<Vec<F::Elem>>> {
    assert_eq!(m.rows(), rhs.rows(), "right-hand side has the wrong length");
    let field = m.field();
    let n = m.cols();
    let aug = m.hstack(rhs);
    let r = Rref::row_space(&aug);
    if r.pivots().iter().any(|&p| p >= n) {
        if rhs.cols() == 1 {
            return vec![None];
        }
        // At least one system is inconsistent; solve them one at a time.
        return (0..rhs.cols())
            .map(|k| solve_many(m, &rhs.select_columns(&[k])).pop().flatten())
            .collect();
    }
    let mut sols = vec![vec![field.zero(); n]; rhs.cols()];
    for (row, &p) in r.rows().iter().zip(r.pivots()) {
        for (c, x) in row {
            if *c >= n {
                sols[c - n][p] = x.clone();
            }
        }
    }
    sols.into_iter().map(Some).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> SparseMat<Rationals> {
        SparseMat::from_i64_rows(&Rationals, rows)
    }

    #[test]
    fn rref_examples() {
        let (r, p) = rref(&q(&[&[1, 0], &[0, 1]]));
        assert_eq!(r, q(&[&[1, 0], &[0, 1]]));
        assert_eq!(p, vec![0, 1]);

        let (r, p) = rref(&q(&[&[1, 2], &[2, 4]]));
        assert_eq!(r, q(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);

        let f2 = PrimeField::new(2).unwrap();
        let (r, p) = rref(&SparseMat::from_i64_rows(&f2, &[&[1, 1], &[1, 1]]));
        assert_eq!(r, SparseMat::from_i64_rows(&f2, &[&[1, 1], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&SparseMat::zeros(&Rationals, 3, 3)).cols(), 3);
        assert_eq!(kernel_basis(&SparseMat::identity(&Rationals, 4)).cols(), 0);
        let m = q(&[&[1, 2]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
        assert_eq!(k.column_dense(0), vec![Rationals.from_i64(-2), Rationals.from_i64(1)]);
    }

    #[test]
    fn solve_examples() {
        let f = Rationals;
        let b: Vec<_> = [3, -1, 7].iter().map(|&x| f.from_i64(x)).collect();
        assert_eq!(solve(&SparseMat::identity(&f, 3), &b), Some(b.clone()));
        let m = q(&[&[1, 2], &[2, 4]]);
        assert_eq!(solve(&m, &[f.from_i64(1), f.from_i64(3)]), None);
        let x = solve(&m, &[f.from_i64(1), f.from_i64(2)]).unwrap();
        assert_eq!(x, vec![f.from_i64(1), f.zero()]);
        assert_eq!(m.mul_vec(&x), vec![f.from_i64(1), f.from_i64(2)]);
    }

    #[test]
    fn solve_many_mixed_consistency() {
        let f = Rationals;
        let m = q(&[&[1, 2], &[2, 4]]);
        let rhs = q(&[&[1, 1], &[2, 3]]);
        let sols = solve_many(&m, &rhs);
        assert!(sols[0].is_some());
        assert!(sols[1].is_none());
        assert_eq!(m.mul_vec(sols[0].as_ref().unwrap()), vec![f.from_i64(1), f.from_i64(2)]);
    }

    fn arb_matrix(max_r: usize, max_c: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1..=max_r, 1..=max_c).prop_flat_map(|(r, c)| {
            proptest::collection::vec(
                proptest::collection::vec(prop_oneof![4 => Just(0i64), 3 => -3i64..=3], c),
                r,
            )
        })
    }

    fn to_q(data: &[Vec<i64>]) -> SparseMat<Rationals> {
        let rows: Vec<&[i64]> = data.iter().map(|r| r.as_slice()).collect();
        q(&rows)
    }

    proptest! {
        #[test]
        fn rank_nullity(data in arb_matrix(7, 9)) {
            let m = to_q(&data);
            let k = kernel_basis(&m);
            prop_assert_eq!(rank(&m) + k.cols(), m.cols());
            prop_assert!(m.mul(&k).is_zero());
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }

        #[test]
        fn rref_is_idempotent(data in arb_matrix(7, 9)) {
            let m = to_q(&data);
            let (r, p) = rref(&m);
            let (r2, p2) = rref(&r);
            prop_assert_eq!(&r, &r2);
            prop_assert_eq!(&p, &p2);
            prop_assert!(p.windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn sparse_and_dense_elimination_agree(data in arb_matrix(8, 8)) {
            let m = to_q(&data);
            let dense = Rref::row_space(&m);
            let sparse = Rref::from_rows(m.field(), m.cols(), m.row_vectors().iter());
            prop_assert_eq!(dense, sparse);
        }

        #[test]
        fn solutions_are_exact(data in arb_matrix(6, 6), xs in proptest::collection::vec(-4i64..=4, 6)) {
            let m = to_q(&data);
            let f = Rationals;
            let x: Vec<_> = xs.iter().take(m.cols()).map(|&v| f.from_i64(v)).chain(std::iter::repeat(f.zero())).take(m.cols()).collect();
            let b = m.mul_vec(&x);
            let sol = solve(&m, &b).expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&sol), b);
        }
    }
}
