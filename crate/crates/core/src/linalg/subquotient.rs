use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Echelon, Rref, SparseMat};

/// A subquotient `Z / B` of `k^ambient` with canonical coset coordinates.
///
/// `boundaries` is the reduced basis of `B`. `complement` is the reduced basis
/// of `{ v ∈ Z : v vanishes on the pivot columns of B }`, a complement of `B`
/// in `Z` that depends only on the two subspaces. The canonical coordinates of
/// a cycle are read off the complement pivots after reducing modulo `B`.
#[derive(Clone, Debug, PartialEq)]
pub struct SubquotientSpace<F: Field> {
    boundaries: Rref<F>,
    complement: Rref<F>,
}

impl<F: Field> SubquotientSpace<F> {
    /// `span(z) / span(b)`; every column of `b` must lie in `span(z)`.
    pub fn new(z: &SparseMat<F>, b: &SparseMat<F>) -> Result<Self> {
        if z.rows() != b.rows() {
            return Err(Error::Dimension(format!(
                "cycle matrix has {} rows, boundary matrix {}",
                z.rows(),
                b.rows()
            )));
        }
        let cycles = Rref::column_space(z);
        for j in 0..b.cols() {
            if !cycles.contains(&b.column_dense(j)) {
                return Err(Error::InclusionViolation { column: j });
            }
        }
        let boundaries = Rref::column_space(b);
        let mut residues = Echelon::new(z.field(), z.rows());
        for row in cycles.rows() {
            let mut v = super::dense_from_sparse(z.field(), row, z.rows());
            boundaries.reduce(&mut v);
            residues.insert_dense(&v);
        }
        Ok(SubquotientSpace { boundaries, complement: residues.into_rref() })
    }

    /// Assembles a subquotient from precomputed parts. The caller guarantees
    /// that `complement` vanishes on the pivot columns of `boundaries`.
    pub(crate) fn from_parts(boundaries: Rref<F>, complement: Rref<F>) -> Self {
        debug_assert!(complement
            .rows()
            .iter()
            .all(|r| r.iter().all(|(c, _)| !boundaries.is_pivot(*c))));
        SubquotientSpace { boundaries, complement }
    }

    pub fn field(&self) -> &F {
        self.boundaries.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.boundaries.width()
    }

    pub fn dim(&self) -> usize {
        self.complement.rank()
    }

    pub fn boundary_basis(&self) -> &Rref<F> {
        &self.boundaries
    }

    pub fn complement_basis(&self) -> &Rref<F> {
        &self.complement
    }

    /// Basis of the cycle space: boundary basis followed by the complement.
    pub fn cycle_basis(&self) -> SparseMat<F> {
        self.boundaries.basis_matrix().hstack(&self.complement.basis_matrix())
    }

    /// Canonical coordinates of the coset `v + B`.
    pub fn coset_reduce(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.ambient_dim() {
            return Err(Error::Dimension(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient_dim()
            )));
        }
        let mut r = v.to_vec();
        self.boundaries.reduce(&mut r);
        self.complement.coordinates(&r).ok_or(Error::NotACycle)
    }

    /// Whether `v` lies in the cycle space.
    pub fn is_cycle(&self, v: &[F::Elem]) -> bool {
        self.coset_reduce(v).is_ok()
    }

    /// Whether `v` lies in the boundary space.
    pub fn is_boundary(&self, v: &[F::Elem]) -> bool {
        self.boundaries.contains(v)
    }

    /// The canonical representative `Σ coords[j] · complement_j`.
    pub fn representative(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        self.complement.combination(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> SparseMat<Rationals> {
        SparseMat::from_i64_rows(&Rationals, rows)
    }

    #[test]
    fn dimension_examples() {
        let id = SparseMat::identity(&Rationals, 2);
        let empty = SparseMat::zeros(&Rationals, 2, 0);
        assert_eq!(SubquotientSpace::new(&id, &empty).unwrap().dim(), 2);
        assert_eq!(SubquotientSpace::new(&id, &id).unwrap().dim(), 0);
        assert_eq!(SubquotientSpace::new(&id, &q(&[&[1], &[1]])).unwrap().dim(), 1);
    }

    #[test]
    fn inclusion_is_checked() {
        let z = q(&[&[1], &[0]]);
        let b = q(&[&[0], &[1]]);
        assert_eq!(SubquotientSpace::new(&z, &b), Err(Error::InclusionViolation { column: 0 }));
    }

    #[test]
    fn coset_reduce_examples() {
        let f = Rationals;
        let z = SparseMat::identity(&f, 3);
        let b = q(&[&[1], &[1], &[0]]);
        let s = SubquotientSpace::new(&z, &b).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.coset_reduce(&b.column_dense(0)).unwrap().iter().all(|x| x.is_zero()));
        let v = vec![f.from_i64(2), f.from_i64(-1), f.from_i64(5)];
        let vb: Vec<_> = v.iter().zip(b.column_dense(0)).map(|(x, y)| x.add(&y)).collect();
        assert_eq!(s.coset_reduce(&v).unwrap(), s.coset_reduce(&vb).unwrap());
        // Fixed generator, fixed coordinates.
        let z1 = q(&[&[1], &[0], &[0]]);
        let b1 = SparseMat::zeros(&f, 3, 0);
        let s1 = SubquotientSpace::new(&z1, &b1).unwrap();
        assert_eq!(s1.coset_reduce(&z1.column_dense(0)).unwrap(), vec![f.one()]);
        assert_eq!(s1.coset_reduce(&[f.zero(), f.one(), f.zero()]), Err(Error::NotACycle));
    }

    proptest! {
        #[test]
        fn coset_reduce_is_linear(
            zs in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 5), 1..5),
            nb in 0usize..3,
            a in -3i64..=3, b in -3i64..=3,
            cu in proptest::collection::vec(-3i64..=3, 5),
            cv in proptest::collection::vec(-3i64..=3, 5),
        ) {
            let f = Rationals;
            let zcols: Vec<Vec<_>> = zs.iter().map(|c| c.iter().map(|&x| f.from_i64(x)).collect()).collect();
            let z = SparseMat::from_dense_columns(&f, 5, &zcols);
            let bcols: Vec<Vec<_>> = zcols.iter().take(nb).cloned().collect();
            let bm = SparseMat::from_dense_columns(&f, 5, &bcols);
            let s = SubquotientSpace::new(&z, &bm).unwrap();
            let comb = |c: &[i64]| -> Vec<_> {
                let coeffs: Vec<_> = c.iter().take(z.cols()).map(|&x| f.from_i64(x)).collect();
                let mut out = vec![f.zero(); 5];
                for (j, k) in coeffs.iter().enumerate() {
                    for (i, x) in z.column(j) { out[*i] = out[*i].add(&x.mul(k)); }
                }
                out
            };
            let (u, v) = (comb(&cu), comb(&cv));
            let (fa, fb) = (f.from_i64(a), f.from_i64(b));
            let w: Vec<_> = u.iter().zip(&v).map(|(x, y)| fa.mul(x).add(&fb.mul(y))).collect();
            let (ru, rv, rw) = (s.coset_reduce(&u).unwrap(), s.coset_reduce(&v).unwrap(), s.coset_reduce(&w).unwrap());
            let expect: Vec<_> = ru.iter().zip(&rv).map(|(x, y)| fa.mul(x).add(&fb.mul(y))).collect();
            prop_assert_eq!(rw, expect);
            prop_assert_eq!(s.dim() + s.boundary_basis().rank(), crate::linalg::rank(&z));
        }
    }
}
