use std::sync::Arc;

use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Echelon, Rref, SparseMat, SubquotientSpace};
use crate::tensor::pow;

use super::{chain_boundary_matrix, chain_dim, cochain_codifferential_matrix, ChainVector, CochainMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variance {
    Homology,
    Cohomology,
}

/// `H_n(A,N)` or `H^m(A,M)` presented as cycles modulo boundaries of the
/// reduced (co)chain complex.
#[derive(Clone, Debug)]
pub struct HomologySpace<F: Field> {
    module: Bimodule<F>,
    variance: Variance,
    degree: usize,
    space: SubquotientSpace<F>,
}

/// `ker(outgoing) / im(incoming)`, computed without materializing a cycle
/// basis first: the complement is the kernel of `outgoing` restricted to
/// vectors vanishing on the boundary pivots.
fn kernel_mod_image<F: Field>(field: &F, ambient: usize, outgoing: Option<&SparseMat<F>>, incoming: Option<&SparseMat<F>>) -> SubquotientSpace<F> {
    let boundaries = match incoming {
        Some(m) => Rref::column_space(m),
        None => Rref::zero_space(field, ambient),
    };
    let mut constraints = Echelon::new(field, ambient);
    for &p in boundaries.pivots() {
        constraints.insert_sparse(&[(p, field.one())]);
    }
    if let Some(m) = outgoing {
        let mut rows = m.row_vectors();
        rows.sort_by_key(Vec::len);
        for r in &rows {
            if !r.is_empty() {
                constraints.insert_sparse(r);
            }
        }
    }
    let complement = Rref::column_space(&constraints.into_rref().kernel_basis());
    SubquotientSpace::from_parts(boundaries, complement)
}

/// `H_n(A, N)`; degree 0 is `N / im b_1`.
pub fn homology<F: Field>(module: &Bimodule<F>, n: usize) -> Result<Arc<HomologySpace<F>>> {
    let ambient = chain_dim(module, n)?;
    chain_dim(module, n + 1)?;
    let outgoing = if n > 0 { Some(chain_boundary_matrix(module, n)?) } else { None };
    let incoming = chain_boundary_matrix(module, n + 1)?;
    let space = kernel_mod_image(module.field(), ambient, outgoing.as_ref(), Some(&incoming));
    Ok(Arc::new(HomologySpace { module: module.clone(), variance: Variance::Homology, degree: n, space }))
}

/// `H^m(A, M)`; degree 0 is `ker δ^0 = M^A`.
pub fn cohomology<F: Field>(module: &Bimodule<F>, m: usize) -> Result<Arc<HomologySpace<F>>> {
    let ambient = chain_dim(module, m)?;
    let outgoing = cochain_codifferential_matrix(module, m)?;
    let incoming = if m > 0 { Some(cochain_codifferential_matrix(module, m - 1)?) } else { None };
    let space = kernel_mod_image(module.field(), ambient, Some(&outgoing), incoming.as_ref());
    Ok(Arc::new(HomologySpace { module: module.clone(), variance: Variance::Cohomology, degree: m, space }))
}

impl<F: Field> HomologySpace<F> {
    pub fn module(&self) -> &Bimodule<F> {
        &self.module
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &SubquotientSpace<F> {
        &self.space
    }

    pub fn field(&self) -> &F {
        self.module.field()
    }

    fn not_closed(&self) -> Error {
        match self.variance {
            Variance::Homology => Error::NotACycle,
            Variance::Cohomology => Error::NotACocycle,
        }
    }

    /// Canonical coordinates of the class of a (co)cycle given by its coordinates.
    pub fn reduce(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.space.coset_reduce(v).map_err(|e| match e {
            Error::NotACycle => self.not_closed(),
            other => other,
        })
    }

    pub fn class_of(self: &Arc<Self>, v: &[F::Elem]) -> Result<HomologyClass<F>> {
        Ok(HomologyClass { space: self.clone(), coords: self.reduce(v)? })
    }

    pub fn class_of_chain(self: &Arc<Self>, c: &ChainVector<F>) -> Result<HomologyClass<F>> {
        if self.variance != Variance::Homology || c.degree() != self.degree || c.module() != &self.module {
            return Err(Error::Dimension("chain does not belong to this homology group".into()));
        }
        self.class_of(c.coords())
    }

    pub fn class_of_cochain(self: &Arc<Self>, t: &CochainMap<F>) -> Result<HomologyClass<F>> {
        if self.variance != Variance::Cohomology || t.degree() != self.degree || t.module() != &self.module {
            return Err(Error::Dimension("cochain does not belong to this cohomology group".into()));
        }
        self.class_of(t.values())
    }

    pub fn class_from_coords(self: &Arc<Self>, coords: Vec<F::Elem>) -> Result<HomologyClass<F>> {
        if coords.len() != self.dim() {
            return Err(Error::Dimension(format!("{} coordinates for a space of dimension {}", coords.len(), self.dim())));
        }
        Ok(HomologyClass { space: self.clone(), coords })
    }

    pub fn zero_class(self: &Arc<Self>) -> HomologyClass<F> {
        HomologyClass { space: self.clone(), coords: vec![self.field().zero(); self.dim()] }
    }

    /// The `i`-th canonical basis class.
    pub fn basis_class(self: &Arc<Self>, i: usize) -> HomologyClass<F> {
        let mut coords = vec![self.field().zero(); self.dim()];
        coords[i] = self.field().one();
        HomologyClass { space: self.clone(), coords }
    }

    pub fn basis_classes(self: &Arc<Self>) -> Vec<HomologyClass<F>> {
        (0..self.dim()).map(|i| self.basis_class(i)).collect()
    }

    /// Canonical representative with the given coordinates.
    pub fn representative(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        self.space.representative(coords)
    }

    /// Matrix, in canonical coordinates, of the map on (co)homology induced by
    /// a chain-level map `chain_map` into the ambient space of `target`.
    pub fn induced_matrix(&self, chain_map: &SparseMat<F>, target: &HomologySpace<F>) -> Result<SparseMat<F>> {
        let mut cols = Vec::with_capacity(self.dim());
        for j in 0..self.dim() {
            let rep = self.space.complement_basis().row_dense(j);
            cols.push(target.reduce(&chain_map.mul_vec(&rep))?);
        }
        Ok(SparseMat::from_dense_columns(self.field(), target.dim(), &cols))
    }
}

/// A (co)homology class in canonical coordinates.
#[derive(Clone, Debug)]
pub struct HomologyClass<F: Field> {
    space: Arc<HomologySpace<F>>,
    coords: Vec<F::Elem>,
}

impl<F: Field> PartialEq for HomologyClass<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
            && (Arc::ptr_eq(&self.space, &other.space)
                || (self.space.variance == other.space.variance
                    && self.space.degree == other.space.degree
                    && self.space.module == other.space.module))
    }
}

impl<F: Field> HomologyClass<F> {
    pub fn space(&self) -> &Arc<HomologySpace<F>> {
        &self.space
    }

    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|x| self.space.field().is_zero(x))
    }

    pub fn representative(&self) -> Vec<F::Elem> {
        self.space.representative(&self.coords)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !Arc::ptr_eq(&self.space, &other.space) && self.space.module != other.space.module {
            return Err(Error::Dimension("classes live in different spaces".into()));
        }
        let f = self.space.field();
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| f.add(a, b)).collect();
        Ok(HomologyClass { space: self.space.clone(), coords })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = self.space.field();
        HomologyClass { space: self.space.clone(), coords: self.coords.iter().map(|a| f.mul(a, c)).collect() }
    }
}

/// `ψ : H_0(A,N) → N/[N,A]`, canonical coordinates of the quotient.
pub fn psi_iso<F: Field>(class: &HomologyClass<F>) -> Result<Vec<F::Elem>> {
    let s = class.space();
    if s.variance() != Variance::Homology || s.degree() != 0 {
        return Err(Error::Degree("ψ is defined on degree-0 homology".into()));
    }
    Ok(s.module().commutator_subspace().quotient_coords(&class.representative()))
}

/// `φ : H^0(A,M) → M^A`, the value of the representing 0-cocycle.
pub fn phi_iso<F: Field>(class: &HomologyClass<F>) -> Result<Vec<F::Elem>> {
    let s = class.space();
    if s.variance() != Variance::Cohomology || s.degree() != 0 {
        return Err(Error::Degree("φ is defined on degree-0 cohomology".into()));
    }
    let t = class.representative();
    if !s.module().is_invariant(&t) {
        return Err(Error::NotInvariant);
    }
    Ok(t)
}

/// Matrix of `z·−` on `C_n(A,N)` or `C^m(A,M)`.
pub fn z_action_matrix<F: Field>(space: &HomologySpace<F>, z: &[F::Elem]) -> Result<SparseMat<F>> {
    let m = space.module();
    let a = m.algebra();
    if !a.is_central(z) {
        return Err(Error::NotCentral);
    }
    let lz = m.left_action(z);
    let id = SparseMat::identity(a.field(), pow(a.dim(), space.degree()));
    Ok(match space.variance() {
        Variance::Homology => lz.kron(&id),
        Variance::Cohomology => id.kron(&lz),
    })
}

/// `z·γ` for central `z`.
pub fn z_action<F: Field>(z: &[F::Elem], class: &HomologyClass<F>) -> Result<HomologyClass<F>> {
    let m = z_action_matrix(class.space(), z)?;
    class.space().class_of(&m.mul_vec(&class.representative()))
}
