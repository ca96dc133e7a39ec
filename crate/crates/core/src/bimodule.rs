//! Finite-dimensional bimodules, their morphisms, and the constructions used
//! by the cap product and its characterization: `[N,A]`, `M^A`, `N ⊗_A M`,
//! the coinduced module `Hom_k(A,M)` and the induced module `A ⊗ V`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{kernel_basis, normalize_entries, Echelon, Rref, SparseMat, SparseVec};

#[derive(Clone, PartialEq)]
struct BimoduleData<F: Field> {
    algebra: Arc<Algebra<F>>,
    dim: usize,
    left: Vec<SparseMat<F>>,
    right: Vec<SparseMat<F>>,
    name: String,
}

/// An `A`-bimodule of dimension `r`, given by the matrices `L_i` and `R_i`
/// of `v ↦ e_i·v` and `v ↦ v·e_i`. Cloning is cheap.
#[derive(Clone)]
pub struct Bimodule<F: Field>(Arc<BimoduleData<F>>);

impl<F: Field> PartialEq for Bimodule<F> {
    /// Structural equality: same algebra, same action matrices. Names are ignored.
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.dim == other.0.dim
                && self.0.left == other.0.left
                && self.0.right == other.0.right
                && (Arc::ptr_eq(&self.0.algebra, &other.0.algebra) || self.0.algebra == other.0.algebra))
    }
}

impl<F: Field> fmt::Debug for Bimodule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bimodule({}, dim {})", self.0.name, self.0.dim)
    }
}

impl<F: Field> Bimodule<F> {
    /// Validated bimodule from action matrices, one per algebra basis element.
    pub fn new(algebra: &Arc<Algebra<F>>, left: Vec<SparseMat<F>>, right: Vec<SparseMat<F>>) -> Result<Self> {
        let m = Self::new_unchecked(algebra, left, right)?;
        let failures = m.validation_failures();
        if failures.is_empty() {
            Ok(m)
        } else {
            Err(Error::Validation(failures.join("; ")))
        }
    }

    /// Checks shapes only.
    pub fn new_unchecked(algebra: &Arc<Algebra<F>>, left: Vec<SparseMat<F>>, right: Vec<SparseMat<F>>) -> Result<Self> {
        let d = algebra.dim();
        if left.len() != d || right.len() != d {
            return Err(Error::Validation(format!(
                "expected {d} left and right action matrices, got {} and {}",
                left.len(),
                right.len()
            )));
        }
        let r = left[0].rows();
        for (i, m) in left.iter().chain(&right).enumerate() {
            if m.rows() != r || m.cols() != r {
                return Err(Error::Validation(format!(
                    "action matrix {} is {}x{}, expected {r}x{r}",
                    i % d,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Bimodule(Arc::new(BimoduleData { algebra: algebra.clone(), dim: r, left, right, name: String::from("N") })))
    }

    pub fn named(self, name: impl Into<String>) -> Self {
        let mut data = Arc::unwrap_or_clone(self.0);
        data.name = name.into();
        Bimodule(Arc::new(data))
    }

    /// The regular bimodule `A`.
    pub fn regular(algebra: &Arc<Algebra<F>>) -> Self {
        let d = algebra.dim();
        let left = (0..d).map(|i| algebra.left_mult(&algebra.basis_vector(i))).collect();
        let right = (0..d).map(|i| algebra.right_mult(&algebra.basis_vector(i))).collect();
        Self::new_unchecked(algebra, left, right).expect("shapes are consistent").named("A")
    }

    /// The zero bimodule.
    pub fn zero(algebra: &Arc<Algebra<F>>) -> Self {
        let z = SparseMat::zeros(algebra.field(), 0, 0);
        let d = algebra.dim();
        Self::new_unchecked(algebra, vec![z.clone(); d], vec![z; d]).expect("shapes are consistent").named("0")
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.0.algebra
    }

    pub fn field(&self) -> &F {
        self.0.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn left(&self, i: usize) -> &SparseMat<F> {
        &self.0.left[i]
    }

    pub fn right(&self, i: usize) -> &SparseMat<F> {
        &self.0.right[i]
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(self.algebra(), other.algebra()) || self.algebra() == other.algebra()
    }

    fn combine(&self, mats: &[SparseMat<F>], a: &[F::Elem]) -> SparseMat<F> {
        let f = self.field();
        let mut acc = SparseMat::zeros(f, self.dim(), self.dim());
        for (i, c) in a.iter().enumerate() {
            if !f.is_zero(c) {
                acc = acc.add(&mats[i].scale(c));
            }
        }
        acc
    }

    /// Matrix of `v ↦ a·v`.
    pub fn left_action(&self, a: &[F::Elem]) -> SparseMat<F> {
        self.combine(&self.0.left, a)
    }

    /// Matrix of `v ↦ v·a`.
    pub fn right_action(&self, a: &[F::Elem]) -> SparseMat<F> {
        self.combine(&self.0.right, a)
    }

    /// Every failed bimodule identity, described in words; empty iff valid.
    pub fn validation_failures(&self) -> Vec<String> {
        let a = self.algebra();
        let d = a.dim();
        let f = self.field();
        let id = SparseMat::identity(f, self.dim());
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let mut prod = vec![f.zero(); d];
                for (l, c) in a.product(i, j) {
                    prod[*l] = c.clone();
                }
                if self.left(i).mul(self.left(j)) != self.left_action(&prod) {
                    out.push(format!("L(e{i} e{j}) != L(e{i}) L(e{j})"));
                }
                if self.right(j).mul(self.right(i)) != self.right_action(&prod) {
                    out.push(format!("R(e{i} e{j}) != R(e{j}) R(e{i})"));
                }
                if self.left(i).mul(self.right(j)) != self.right(j).mul(self.left(i)) {
                    out.push(format!("L(e{i}) and R(e{j}) do not commute"));
                }
            }
        }
        if self.left_action(a.unit()) != id {
            out.push("unit does not act as identity on the left".into());
        }
        if self.right_action(a.unit()) != id {
            out.push("unit does not act as identity on the right".into());
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validation_failures().is_empty()
    }

    /// Stacked `L_i − R_i` over all basis elements (a `d·r × r` matrix).
    fn commutator_matrix(&self) -> SparseMat<F> {
        let blocks: Vec<_> = (0..self.algebra().dim()).map(|i| self.left(i).sub(self.right(i))).collect();
        SparseMat::vstack_all(self.field(), self.dim(), &blocks)
    }

    /// `[N, A]`, spanned by the `a·x − x·a`.
    pub fn commutator_subspace(&self) -> Rref<F> {
        let f = self.field();
        let mut rows: Vec<SparseVec<F::Elem>> = Vec::new();
        for i in 0..self.algebra().dim() {
            let c = self.left(i).sub(self.right(i));
            rows.extend(c.columns().iter().cloned());
        }
        Rref::from_rows(f, self.dim(), rows.iter())
    }

    /// `M^A = { m : a·m = m·a for all a }`.
    pub fn invariants_subspace(&self) -> Rref<F> {
        Rref::column_space(&kernel_basis(&self.commutator_matrix()))
    }

    pub fn is_invariant(&self, v: &[F::Elem]) -> bool {
        (0..self.algebra().dim()).all(|i| self.left(i).mul_vec(v) == self.right(i).mul_vec(v))
    }

    /// Restricts the actions to an invariant subspace. Returns the inclusion
    /// of the sub-bimodule, whose basis is the reduced basis of `span`.
    pub fn sub_bimodule(&self, span: &Rref<F>) -> Result<BimoduleMorphism<F>> {
        let basis = span.basis_matrix();
        let restrict = |m: &SparseMat<F>| -> Result<SparseMat<F>> {
            let mut cols = Vec::with_capacity(span.rank());
            for j in 0..span.rank() {
                let image = m.mul_vec(&span.row_dense(j));
                let coords = span
                    .coordinates(&image)
                    .ok_or_else(|| Error::Validation("subspace is not closed under the actions".into()))?;
                cols.push(coords);
            }
            Ok(SparseMat::from_dense_columns(self.field(), span.rank(), &cols))
        };
        let d = self.algebra().dim();
        let left = (0..d).map(|i| restrict(self.left(i))).collect::<Result<Vec<_>>>()?;
        let right = (0..d).map(|i| restrict(self.right(i))).collect::<Result<Vec<_>>>()?;
        let sub = Bimodule::new_unchecked(self.algebra(), left, right)?;
        Ok(BimoduleMorphism { source: sub.named(format!("sub({})", self.name())), target: self.clone(), matrix: basis })
    }

    /// Quotient by an invariant subspace. Returns the projection; quotient
    /// coordinates are the free (non-pivot) coordinates of `span`.
    pub fn quotient(&self, span: &Rref<F>) -> Result<BimoduleMorphism<F>> {
        let d = self.algebra().dim();
        for i in 0..d {
            for j in 0..span.rank() {
                let v = span.row_dense(j);
                if !span.contains(&self.left(i).mul_vec(&v)) || !span.contains(&self.right(i).mul_vec(&v)) {
                    return Err(Error::Validation("subspace is not closed under the actions".into()));
                }
            }
        }
        let proj = span.quotient_projection();
        let sect = span.quotient_section();
        let induced = |m: &SparseMat<F>| proj.mul(&m.mul(&sect));
        let quotient = Bimodule::new_unchecked(
            self.algebra(),
            (0..d).map(|i| induced(self.left(i))).collect(),
            (0..d).map(|i| induced(self.right(i))).collect(),
        )?;
        Ok(BimoduleMorphism { source: self.clone(), target: quotient.named(format!("{}/sub", self.name())), matrix: proj })
    }

    /// `N ⊕ M` with coordinates of `N` first.
    pub fn direct_sum(&self, other: &Self) -> Result<DirectSum<F>> {
        if !self.same_algebra(other) {
            return Err(Error::AlgebraMismatch);
        }
        let f = self.field();
        let (r1, r2) = (self.dim(), other.dim());
        let block = |a: &SparseMat<F>, b: &SparseMat<F>| {
            let top = a.hstack(&SparseMat::zeros(f, r1, r2));
            let bottom = SparseMat::zeros(f, r2, r1).hstack(b);
            top.vstack(&bottom)
        };
        let d = self.algebra().dim();
        let sum = Bimodule::new_unchecked(
            self.algebra(),
            (0..d).map(|i| block(self.left(i), other.left(i))).collect(),
            (0..d).map(|i| block(self.right(i), other.right(i))).collect(),
        )?
        .named(format!("{}+{}", self.name(), other.name()));
        let i1 = SparseMat::identity(f, r1).vstack(&SparseMat::zeros(f, r2, r1));
        let i2 = SparseMat::zeros(f, r1, r2).vstack(&SparseMat::identity(f, r2));
        let p1 = SparseMat::identity(f, r1).hstack(&SparseMat::zeros(f, r1, r2));
        let p2 = SparseMat::zeros(f, r2, r1).hstack(&SparseMat::identity(f, r2));
        Ok(DirectSum {
            inclusion_left: BimoduleMorphism { source: self.clone(), target: sum.clone(), matrix: i1 },
            inclusion_right: BimoduleMorphism { source: other.clone(), target: sum.clone(), matrix: i2 },
            projection_left: BimoduleMorphism { source: sum.clone(), target: self.clone(), matrix: p1 },
            projection_right: BimoduleMorphism { source: sum.clone(), target: other.clone(), matrix: p2 },
            module: sum,
        })
    }

    /// `N ⊗_A M` as the cokernel of `x⊗a⊗y ↦ xa⊗y − x⊗ay`, coordinates of
    /// `N ⊗ M` being `x·r_M + y`.
    pub fn tensor_over_a(&self, other: &Self) -> Result<TensorProduct<F>> {
        if !self.same_algebra(other) {
            return Err(Error::AlgebraMismatch);
        }
        let f = self.field();
        let (rn, rm) = (self.dim(), other.dim());
        crate::tensor::guarded_dim(rn, rm, 1, self.algebra().coord_cap())?;
        let d = self.algebra().dim();
        let mut relations = Echelon::new(f, rn * rm);
        for a in 0..d {
            let (ra, la) = (self.right(a), other.left(a));
            for x in 0..rn {
                for y in 0..rm {
                    let mut v: Vec<(usize, F::Elem)> = ra.column(x).iter().map(|(x2, c)| (x2 * rm + y, c.clone())).collect();
                    v.extend(la.column(y).iter().map(|(y2, c)| (x * rm + y2, f.neg(c))));
                    let v = normalize_entries(f, v);
                    if !v.is_empty() {
                        relations.insert_sparse(&v);
                    }
                }
            }
        }
        let relations = relations.into_rref();
        let projection = relations.quotient_projection();
        let section = relations.quotient_section();
        let id_n = SparseMat::identity(f, rn);
        let id_m = SparseMat::identity(f, rm);
        let left = (0..d).map(|i| projection.mul(&self.left(i).kron(&id_m).mul(&section))).collect();
        let right = (0..d).map(|i| projection.mul(&id_n.kron(other.right(i)).mul(&section))).collect();
        let module = Bimodule::new_unchecked(self.algebra(), left, right)?;
        Ok(TensorProduct {
            module: module.named(format!("{}(x){}", self.name(), other.name())),
            left: self.clone(),
            right: other.clone(),
            projection,
            section,
        })
    }

    /// `E = Hom_k(A, M)` with `(a·φ·b)(x) = a·φ(b·x)`, the inclusion
    /// `ι(m)(x) = m·x` and the projection onto `C(M) = E / ι(M)`.
    /// Coordinates of `E` are `j·r + k` for the `k`-th coordinate of `φ(e_j)`.
    pub fn coinduced(&self) -> Result<Coinduced<F>> {
        let a = self.algebra();
        let f = self.field();
        let (d, r) = (a.dim(), self.dim());
        crate::tensor::guarded_dim(r, d, 1, a.coord_cap())?;
        let id_d = SparseMat::identity(f, d);
        let id_r = SparseMat::identity(f, r);
        let left = (0..d).map(|i| id_d.kron(self.left(i))).collect();
        let right = (0..d).map(|i| a.left_mult(&a.basis_vector(i)).transpose().kron(&id_r)).collect();
        let e = Bimodule::new_unchecked(a, left, right)?.named(format!("Hom(A,{})", self.name()));
        let iota = SparseMat::vstack_all(f, r, &(0..d).map(|j| self.right(j).clone()).collect::<Vec<_>>());
        let inclusion = BimoduleMorphism { source: self.clone(), target: e.clone(), matrix: iota };
        let image = inclusion.image();
        let projection = e.quotient(&image)?;
        let projection = BimoduleMorphism {
            target: projection.target.clone().named(format!("C({})", self.name())),
            ..projection
        };
        Ok(Coinduced { inclusion, projection })
    }

    /// `P = A ⊗ V` with `a·(b⊗v)·c = ab ⊗ v·c`, the action map
    /// `π(b⊗v) = b·v` and the inclusion of `K(V) = ker π`. Coordinates of `P`
    /// are `b·r + v`.
    pub fn induced(&self) -> Result<Induced<F>> {
        let a = self.algebra();
        let f = self.field();
        let (d, r) = (a.dim(), self.dim());
        crate::tensor::guarded_dim(r, d, 1, a.coord_cap())?;
        let id_d = SparseMat::identity(f, d);
        let id_r = SparseMat::identity(f, r);
        let left = (0..d).map(|i| a.left_mult(&a.basis_vector(i)).kron(&id_r)).collect();
        let right = (0..d).map(|i| id_d.kron(self.right(i))).collect();
        let p = Bimodule::new_unchecked(a, left, right)?.named(format!("A(x){}", self.name()));
        let mut pi = SparseMat::zeros(f, r, 0);
        for b in 0..d {
            pi = pi.hstack(self.left(b));
        }
        let augmentation = BimoduleMorphism { source: p, target: self.clone(), matrix: pi };
        let kernel = augmentation.kernel();
        let inclusion = augmentation.source.sub_bimodule(&kernel)?;
        let inclusion = BimoduleMorphism {
            source: inclusion.source.clone().named(format!("K({})", self.name())),
            ..inclusion
        };
        Ok(Induced { inclusion, augmentation })
    }
}

/// A bimodule map, stored as a `target.dim × source.dim` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct BimoduleMorphism<F: Field> {
    pub(crate) source: Bimodule<F>,
    pub(crate) target: Bimodule<F>,
    pub(crate) matrix: SparseMat<F>,
}

impl<F: Field> BimoduleMorphism<F> {
    /// Validated morphism: the matrix must intertwine both actions.
    pub fn new(source: &Bimodule<F>, target: &Bimodule<F>, matrix: SparseMat<F>) -> Result<Self> {
        if !source.same_algebra(target) {
            return Err(Error::AlgebraMismatch);
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::NotAMorphism(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        for i in 0..source.algebra().dim() {
            if matrix.mul(source.left(i)) != target.left(i).mul(&matrix) {
                return Err(Error::NotAMorphism(format!("does not commute with the left action of e{i}")));
            }
            if matrix.mul(source.right(i)) != target.right(i).mul(&matrix) {
                return Err(Error::NotAMorphism(format!("does not commute with the right action of e{i}")));
            }
        }
        Ok(BimoduleMorphism { source: source.clone(), target: target.clone(), matrix })
    }

    pub fn identity(m: &Bimodule<F>) -> Self {
        BimoduleMorphism { source: m.clone(), target: m.clone(), matrix: SparseMat::identity(m.field(), m.dim()) }
    }

    pub fn source(&self) -> &Bimodule<F> {
        &self.source
    }

    pub fn target(&self) -> &Bimodule<F> {
        &self.target
    }

    pub fn matrix(&self) -> &SparseMat<F> {
        &self.matrix
    }

    /// Re-runs the intertwining checks.
    pub fn is_valid(&self) -> bool {
        Self::new(&self.source, &self.target, self.matrix.clone()).is_ok()
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Self) -> Result<Self> {
        if self.target != next.source {
            return Err(Error::NotAMorphism("morphisms are not composable".into()));
        }
        Ok(BimoduleMorphism { source: self.source.clone(), target: next.target.clone(), matrix: next.matrix.mul(&self.matrix) })
    }

    pub fn image(&self) -> Rref<F> {
        Rref::column_space(&self.matrix)
    }

    pub fn kernel(&self) -> Rref<F> {
        Rref::column_space(&kernel_basis(&self.matrix))
    }

    pub fn is_injective(&self) -> bool {
        self.image().rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().rank() == self.target.dim()
    }
}

/// `N ⊕ M` with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum<F: Field> {
    pub module: Bimodule<F>,
    pub inclusion_left: BimoduleMorphism<F>,
    pub inclusion_right: BimoduleMorphism<F>,
    pub projection_left: BimoduleMorphism<F>,
    pub projection_right: BimoduleMorphism<F>,
}

/// `N ⊗_A M` together with the projection from `N ⊗ M` and a linear section.
#[derive(Clone, Debug)]
pub struct TensorProduct<F: Field> {
    module: Bimodule<F>,
    left: Bimodule<F>,
    right: Bimodule<F>,
    projection: SparseMat<F>,
    section: SparseMat<F>,
}

impl<F: Field> TensorProduct<F> {
    pub fn module(&self) -> &Bimodule<F> {
        &self.module
    }

    pub fn left_factor(&self) -> &Bimodule<F> {
        &self.left
    }

    pub fn right_factor(&self) -> &Bimodule<F> {
        &self.right
    }

    /// `N ⊗ M → N ⊗_A M`.
    pub fn projection(&self) -> &SparseMat<F> {
        &self.projection
    }

    /// A linear right inverse of [`TensorProduct::projection`].
    pub fn section(&self) -> &SparseMat<F> {
        &self.section
    }

    /// Class of `x ⊗ y`.
    pub fn pure_tensor(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.module.field();
        let rm = self.right.dim();
        let mut v = vec![f.zero(); self.left.dim() * rm];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !f.is_zero(a)) {
            for (j, b) in y.iter().enumerate() {
                v[i * rm + j] = f.mul(a, b);
            }
        }
        self.projection.mul_vec(&v)
    }

    /// `φ ⊗ χ : N ⊗_A M → N' ⊗_A M'` where `target` is `N' ⊗_A M'`.
    pub fn map(&self, target: &TensorProduct<F>, phi: &BimoduleMorphism<F>, chi: &BimoduleMorphism<F>) -> Result<BimoduleMorphism<F>> {
        if phi.source != self.left || chi.source != self.right || phi.target != target.left || chi.target != target.right {
            return Err(Error::NotAMorphism("tensor factors do not match the morphisms".into()));
        }
        let m = target.projection.mul(&phi.matrix.kron(&chi.matrix).mul(&self.section));
        Ok(BimoduleMorphism { source: self.module.clone(), target: target.module.clone(), matrix: m })
    }

    /// `N ⊗_A A → N`, `x ⊗ a ↦ x·a`; requires the right factor to be regular.
    pub fn right_unitor(&self) -> Result<BimoduleMorphism<F>> {
        let a = self.left.algebra();
        if self.right != Bimodule::regular(a) {
            return Err(Error::Validation("right factor is not the regular bimodule".into()));
        }
        let (rn, d) = (self.left.dim(), a.dim());
        let f = a.field();
        let cols = (0..rn * d).map(|c| self.left.right(c % d).column(c / d).to_vec()).collect();
        let act = SparseMat::from_columns(f, rn, cols);
        Ok(BimoduleMorphism { source: self.module.clone(), target: self.left.clone(), matrix: act.mul(&self.section) })
    }
}

/// `0 → M → Hom_k(A,M) → C(M) → 0`.
#[derive(Clone, Debug)]
pub struct Coinduced<F: Field> {
    pub inclusion: BimoduleMorphism<F>,
    pub projection: BimoduleMorphism<F>,
}

impl<F: Field> Coinduced<F> {
    pub fn module(&self) -> &Bimodule<F> {
        &self.inclusion.target
    }

    pub fn cokernel(&self) -> &Bimodule<F> {
        &self.projection.target
    }
}

/// `0 → K(V) → A ⊗ V → V → 0`.
#[derive(Clone, Debug)]
pub struct Induced<F: Field> {
    pub inclusion: BimoduleMorphism<F>,
    pub augmentation: BimoduleMorphism<F>,
}

impl<F: Field> Induced<F> {
    pub fn module(&self) -> &Bimodule<F> {
        &self.augmentation.source
    }

    pub fn kernel(&self) -> &Bimodule<F> {
        &self.inclusion.source
    }
}
