use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::algebra::Algebra;
use crate::bimodule::{Bimodule, BimoduleMorphism, TensorProduct};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hochschild::{
    chain_boundary_matrix, chain_dim, cochain_codifferential_matrix, cohomology, homology, ChainVector, CochainMap,
    HomologyClass, HomologySpace, Variance,
};
use crate::linalg::{sparse_from_dense, SparseMat};
use crate::tensor::pow;

/// `∩ : C_n(A,N) ⊗ C^m(A,M) → C_{n−m}(A, N ⊗_A M)`,
/// `(x; a_1..a_n) ∩ T = (x ⊗ T(a_1..a_m); a_{m+1}..a_n)`.
///
/// With `collapse` the result is pushed along `N ⊗_A A → N` (only possible
/// when `M` is the regular bimodule).
#[derive(Debug)]
pub struct CapProduct<F: Field> {
    tensor: TensorProduct<F>,
    collapse: Option<BimoduleMorphism<F>>,
    targets: Mutex<BTreeMap<usize, Arc<HomologySpace<F>>>>,
}

impl<F: Field> CapProduct<F> {
    /// Values in `N ⊗_A M`.
    pub fn new(n: &Bimodule<F>, m: &Bimodule<F>) -> Result<Self> {
        Ok(CapProduct { tensor: n.tensor_over_a(m)?, collapse: None, targets: Mutex::new(BTreeMap::new()) })
    }

    /// Values in `N`, through `N ⊗_A A ≅ N`.
    pub fn collapsed(n: &Bimodule<F>) -> Result<Self> {
        let tensor = n.tensor_over_a(&Bimodule::regular(n.algebra()))?;
        let collapse = Some(tensor.right_unitor()?);
        Ok(CapProduct { tensor, collapse, targets: Mutex::new(BTreeMap::new()) })
    }

    /// The Hochschild case `N = M = A`, with values in `A`.
    pub fn hochschild(algebra: &Arc<Algebra<F>>) -> Result<Self> {
        Self::collapsed(&Bimodule::regular(algebra))
    }

    /// Picks [`CapProduct::hochschild`] when both modules are regular.
    pub fn for_modules(n: &Bimodule<F>, m: &Bimodule<F>) -> Result<Self> {
        let regular = Bimodule::regular(n.algebra());
        if n.same_algebra(m) && *n == regular && *m == regular {
            Self::collapsed(n)
        } else {
            Self::new(n, m)
        }
    }

    pub fn chain_module(&self) -> &Bimodule<F> {
        self.tensor.left_factor()
    }

    pub fn cochain_module(&self) -> &Bimodule<F> {
        self.tensor.right_factor()
    }

    pub fn tensor(&self) -> &TensorProduct<F> {
        &self.tensor
    }

    /// Where the product takes values.
    pub fn target_module(&self) -> &Bimodule<F> {
        match &self.collapse {
            Some(c) => c.target(),
            None => self.tensor.module(),
        }
    }

    /// `N ⊗ M → target`.
    fn value_map(&self) -> SparseMat<F> {
        match &self.collapse {
            Some(c) => c.matrix().mul(self.tensor.projection()),
            None => self.tensor.projection().clone(),
        }
    }

    /// The matrix of `− ∩ T` from `C_n(A,N)` to `C_{n−m}(A, target)`.
    pub fn chain_matrix(&self, t: &CochainMap<F>, n: usize) -> Result<SparseMat<F>> {
        if t.module() != self.cochain_module() {
            return Err(Error::Dimension("cochain has the wrong coefficient module".into()));
        }
        let m = t.degree();
        if m > n {
            return Err(Error::Degree(format!("cannot cap a degree-{n} chain with a degree-{m} cochain")));
        }
        let nm = self.chain_module();
        let a = nm.algebra();
        let f = a.field();
        let d = a.dim();
        let (rn, rm) = (nm.dim(), t.module().dim());
        let target = self.target_module();
        chain_dim(nm, n)?;
        chain_dim(target, n - m)?;
        let proj = self.value_map();
        let (head, tail) = (pow(d, m), pow(d, n - m));
        let mut columns = vec![Vec::new(); rn * head * tail];
        for x in 0..rn {
            for h in 0..head {
                let value = &t.values()[h * rm..(h + 1) * rm];
                let pure: Vec<(usize, F::Elem)> =
                    value.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(y, c)| (x * rm + y, c.clone())).collect();
                let w = proj.apply_sparse(&pure);
                if w.is_empty() {
                    continue;
                }
                for s in 0..tail {
                    columns[(x * head + h) * tail + s] = w.iter().map(|(z, c)| (z * tail + s, c.clone())).collect();
                }
            }
        }
        Ok(SparseMat::from_columns(f, target.dim() * tail, columns))
    }

    pub fn chain(&self, xi: &ChainVector<F>, t: &CochainMap<F>) -> Result<ChainVector<F>> {
        if xi.module() != self.chain_module() {
            return Err(Error::Dimension("chain has the wrong coefficient module".into()));
        }
        let m = self.chain_matrix(t, xi.degree())?;
        ChainVector::new(self.target_module(), xi.degree() - t.degree(), m.mul_vec(xi.coords()))
    }

    /// `H_k(A, target)`, computed once per degree.
    pub fn target_homology(&self, k: usize) -> Result<Arc<HomologySpace<F>>> {
        let mut cache = self.targets.lock().expect("cap cache poisoned");
        if let Some(h) = cache.get(&k) {
            return Ok(h.clone());
        }
        let h = homology(self.target_module(), k)?;
        cache.insert(k, h.clone());
        Ok(h)
    }

    /// Class of `ξ ∩ T` for a cycle `ξ` and a cocycle `T`.
    pub fn class_of(&self, xi: &ChainVector<F>, t: &CochainMap<F>) -> Result<HomologyClass<F>> {
        if xi.degree() > 0 && !chain_boundary_matrix(xi.module(), xi.degree())?.apply_sparse(&sparse(xi.module().field(), xi.coords())).is_empty() {
            return Err(Error::NotACycle);
        }
        if !cochain_codifferential_matrix(t.module(), t.degree())?.apply_sparse(&sparse(t.module().field(), t.values())).is_empty() {
            return Err(Error::NotACocycle);
        }
        let c = self.chain(xi, t)?;
        self.target_homology(c.degree())?.class_of_chain(&c)
    }

    /// `γ ∩ ε` on canonical representatives.
    pub fn homology(&self, gamma: &HomologyClass<F>, eps: &HomologyClass<F>) -> Result<HomologyClass<F>> {
        let (gs, es) = (gamma.space(), eps.space());
        if gs.variance() != Variance::Homology || es.variance() != Variance::Cohomology {
            return Err(Error::Dimension("expected a homology class and a cohomology class".into()));
        }
        let xi = ChainVector::new(gs.module(), gs.degree(), gamma.representative())?;
        let t = CochainMap::new(es.module(), es.degree(), eps.representative())?;
        self.class_of(&xi, &t)
    }

    /// Cap products of all pairs of canonical basis classes.
    pub fn table(&self, n: usize, m: usize) -> Result<CapTable<F>> {
        if m > n {
            return Err(Error::Degree(format!("cannot cap degree {n} with degree {m}")));
        }
        let hn = homology(self.chain_module(), n)?;
        let hm = cohomology(self.cochain_module(), m)?;
        let target = self.target_homology(n - m)?;
        let mut entries = Vec::with_capacity(hn.dim());
        for g in hn.basis_classes() {
            let mut row = Vec::with_capacity(hm.dim());
            for e in hm.basis_classes() {
                row.push(self.homology(&g, &e)?.coords().to_vec());
            }
            entries.push(row);
        }
        Ok(CapTable { n, m, homology_dim: hn.dim(), cohomology_dim: hm.dim(), target_dim: target.dim(), entries })
    }
}

fn sparse<F: Field>(f: &F, v: &[F::Elem]) -> Vec<(usize, F::Elem)> {
    sparse_from_dense(f, v)
}

/// Rows indexed by the basis of `H_n`, columns by the basis of `H^m`, each entry
/// the canonical coordinates of the product in `H_{n−m}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CapTable<F: Field> {
    pub n: usize,
    pub m: usize,
    pub homology_dim: usize,
    pub cohomology_dim: usize,
    pub target_dim: usize,
    pub entries: Vec<Vec<Vec<F::Elem>>>,
}

/// `ξ ∩ T`; for `N = M = A` the value is taken in `A` rather than `A ⊗_A A`.
pub fn cap_chain<F: Field>(xi: &ChainVector<F>, t: &CochainMap<F>) -> Result<ChainVector<F>> {
    if !xi.module().same_algebra(t.module()) {
        return Err(Error::AlgebraMismatch);
    }
    if t.degree() > xi.degree() {
        return Err(Error::Degree(format!("cannot cap a degree-{} chain with a degree-{} cochain", xi.degree(), t.degree())));
    }
    CapProduct::for_modules(xi.module(), t.module())?.chain(xi, t)
}

/// `γ ∩ ε`, with the same convention for `N = M = A` as [`cap_chain`].
pub fn cap_homology<F: Field>(gamma: &HomologyClass<F>, eps: &HomologyClass<F>) -> Result<HomologyClass<F>> {
    let (n, m) = (gamma.space().module(), eps.space().module());
    if !n.same_algebra(m) {
        return Err(Error::AlgebraMismatch);
    }
    CapProduct::for_modules(n, m)?.homology(gamma, eps)
}

/// Cap products of basis classes for `N = M = A`.
pub fn cap_table<F: Field>(algebra: &Arc<Algebra<F>>, n: usize, m: usize) -> Result<CapTable<F>> {
    CapProduct::hochschild(algebra)?.table(n, m)
}
