//! Short exact sequences of bimodules and the connecting homomorphisms of the
//! induced long exact sequences in Hochschild homology and cohomology.

use std::sync::Arc;

use crate::bimodule::{Bimodule, BimoduleMorphism};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hochschild::{
    chain_boundary_matrix, chain_pushforward, cochain_codifferential_matrix, cochain_pushforward, cohomology, homology,
    HomologyClass, HomologySpace, Variance,
};
use crate::linalg::{rank, solve_many, sparse_from_dense, SparseMat};

/// `0 → N₁ --f--> N₂ --g--> N₃ → 0`, validated, together with a linear section
/// `σ` of `g` and a linear retraction `ρ` of `f` used by the snake lemma.
#[derive(Clone, Debug)]
pub struct ShortExactSeq<F: Field> {
    f: BimoduleMorphism<F>,
    g: BimoduleMorphism<F>,
    section: SparseMat<F>,
    retraction: SparseMat<F>,
}

pub fn make_ses<F: Field>(f: &BimoduleMorphism<F>, g: &BimoduleMorphism<F>) -> Result<ShortExactSeq<F>> {
    if f.target() != g.source() {
        return Err(Error::NotExact("f and g are not composable".into()));
    }
    if !f.source().same_algebra(g.target()) {
        return Err(Error::AlgebraMismatch);
    }
    let field = f.source().field();
    let (r1, r2, r3) = (f.source().dim(), f.target().dim(), g.target().dim());
    let rf = rank(f.matrix());
    if rf != r1 {
        return Err(Error::NotExact(format!("f is not injective: rank {rf}, source dimension {r1}")));
    }
    let rg = rank(g.matrix());
    if rg != r3 {
        return Err(Error::NotExact(format!("g is not surjective: rank {rg}, target dimension {r3}")));
    }
    if !g.matrix().mul(f.matrix()).is_zero() || rf + rg != r2 {
        return Err(Error::NotExact("im f differs from ker g".into()));
    }
    let section = solved(field, r2, solve_many(g.matrix(), &SparseMat::identity(field, r3)))?;
    let complement = SparseMat::identity(field, r2).sub(&section.mul(g.matrix()));
    let retraction = solved(field, r1, solve_many(f.matrix(), &complement))?;
    Ok(ShortExactSeq { f: f.clone(), g: g.clone(), section, retraction })
}

fn solved<F: Field>(field: &F, rows: usize, sols: Vec<Option<Vec<F::Elem>>>) -> Result<SparseMat<F>> {
    let columns = sols
        .into_iter()
        .map(|s| s.map(|v| sparse_from_dense(field, &v)).ok_or_else(|| Error::LiftFailed("no preimage over the field".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(SparseMat::from_columns(field, rows, columns))
}

impl<F: Field> ShortExactSeq<F> {
    pub fn first(&self) -> &Bimodule<F> {
        self.f.source()
    }

    pub fn middle(&self) -> &Bimodule<F> {
        self.f.target()
    }

    pub fn last(&self) -> &Bimodule<F> {
        self.g.target()
    }

    pub fn f(&self) -> &BimoduleMorphism<F> {
        &self.f
    }

    pub fn g(&self) -> &BimoduleMorphism<F> {
        &self.g
    }

    pub fn section(&self) -> &SparseMat<F> {
        &self.section
    }

    pub fn retraction(&self) -> &SparseMat<F> {
        &self.retraction
    }

    /// The same sequence with another linear section of `g`.
    pub fn with_section(&self, section: SparseMat<F>) -> Result<Self> {
        let id = SparseMat::identity(self.last().field(), self.last().dim());
        if section.rows() != self.middle().dim() || section.cols() != self.last().dim() || self.g.matrix().mul(&section) != id {
            return Err(Error::Dimension("not a section of g".into()));
        }
        Ok(ShortExactSeq { section, ..self.clone() })
    }

    /// `0 → N₁ → N₁ ⊕ N₃ → N₃ → 0`.
    pub fn split(n1: &Bimodule<F>, n3: &Bimodule<F>) -> Result<Self> {
        let sum = n1.direct_sum(n3)?;
        make_ses(&sum.inclusion_left, &sum.projection_right)
    }

    /// `0 → M → Hom_k(A,M) → C(M) → 0`.
    pub fn coinduced(m: &Bimodule<F>) -> Result<Self> {
        let c = m.coinduced()?;
        make_ses(&c.inclusion, &c.projection)
    }

    /// `0 → K(V) → A ⊗ V → V → 0`.
    pub fn induced(v: &Bimodule<F>) -> Result<Self> {
        let i = v.induced()?;
        make_ses(&i.inclusion, &i.augmentation)
    }
}

/// Outcome of tensoring a sequence with a bimodule.
#[derive(Clone, Debug)]
pub enum Tensored<F: Field> {
    Exact(ShortExactSeq<F>),
    NotExact(String),
}

impl<F: Field> Tensored<F> {
    pub fn exact(&self) -> Option<&ShortExactSeq<F>> {
        match self {
            Tensored::Exact(s) => Some(s),
            Tensored::NotExact(_) => None,
        }
    }

    pub fn diagnostic(&self) -> Option<&str> {
        match self {
            Tensored::Exact(_) => None,
            Tensored::NotExact(d) => Some(d),
        }
    }
}

fn finish<F: Field>(f: Result<BimoduleMorphism<F>>, g: Result<BimoduleMorphism<F>>, label: &str) -> Result<Tensored<F>> {
    match make_ses(&f?, &g?) {
        Ok(s) => Ok(Tensored::Exact(s)),
        Err(Error::NotExact(why)) => Ok(Tensored::NotExact(format!("{label}: {why}"))),
        Err(e) => Err(e),
    }
}

/// `0 → N₁ ⊗_A M → N₂ ⊗_A M → N₃ ⊗_A M → 0`, if exact.
pub fn tensor_ses_right<F: Field>(s: &ShortExactSeq<F>, m: &Bimodule<F>) -> Result<Tensored<F>> {
    let t: Vec<_> = [s.first(), s.middle(), s.last()].iter().map(|n| n.tensor_over_a(m)).collect::<Result<_>>()?;
    let id = BimoduleMorphism::identity(m);
    finish(t[0].map(&t[1], s.f(), &id), t[1].map(&t[2], s.g(), &id), &format!("(-) (x)_A {}", m.name()))
}

/// `0 → N ⊗_A M₁ → N ⊗_A M₂ → N ⊗_A M₃ → 0`, if exact.
pub fn tensor_ses_left<F: Field>(n: &Bimodule<F>, s: &ShortExactSeq<F>) -> Result<Tensored<F>> {
    let t: Vec<_> = [s.first(), s.middle(), s.last()].iter().map(|m| n.tensor_over_a(m)).collect::<Result<_>>()?;
    let id = BimoduleMorphism::identity(n);
    finish(t[0].map(&t[1], &id, s.f()), t[1].map(&t[2], &id, s.g()), &format!("{} (x)_A (-)", n.name()))
}

/// `δ : H_n(A,N₃) → H_{n−1}(A,N₁)`: lift a cycle through `g`, apply `b`, pull
/// back through `f`.
pub fn connecting_homology<F: Field>(s: &ShortExactSeq<F>, gamma: &HomologyClass<F>) -> Result<HomologyClass<F>> {
    let space = gamma.space();
    if space.variance() != Variance::Homology || space.module() != s.last() {
        return Err(Error::Dimension("class is not in the homology of the last term".into()));
    }
    let n = space.degree();
    if n == 0 {
        return Err(Error::Degree("the connecting map starts in degree 1".into()));
    }
    let target = homology(s.first(), n - 1)?;
    connecting_homology_into(s, gamma, &target)
}

fn connecting_homology_into<F: Field>(
    s: &ShortExactSeq<F>,
    gamma: &HomologyClass<F>,
    target: &Arc<HomologySpace<F>>,
) -> Result<HomologyClass<F>> {
    let n = gamma.space().degree();
    let field = s.first().field();
    let tail = s.first().algebra().dim().pow(n as u32);
    let id = SparseMat::identity(field, tail);
    let y = s.section.kron(&id).mul_vec(&gamma.representative());
    let by = chain_boundary_matrix(s.middle(), n)?.mul_vec(&y);
    let id = SparseMat::identity(field, tail / s.first().algebra().dim());
    let z = s.retraction.kron(&id).mul_vec(&by);
    if chain_pushforward(s.f(), n - 1)?.mul_vec(&z) != by {
        return Err(Error::LiftFailed("boundary of the lift is not in the image of f".into()));
    }
    target.class_of(&z)
}

/// `∂ : H^m(A,M₃) → H^{m+1}(A,M₁)`: solve `g∘T₂ = T₃`, then `f∘T₁ = δT₂`.
pub fn connecting_cohomology<F: Field>(s: &ShortExactSeq<F>, eps: &HomologyClass<F>) -> Result<HomologyClass<F>> {
    let space = eps.space();
    if space.variance() != Variance::Cohomology || space.module() != s.last() {
        return Err(Error::Dimension("class is not in the cohomology of the last term".into()));
    }
    let target = cohomology(s.first(), space.degree() + 1)?;
    connecting_cohomology_into(s, eps, &target)
}

fn connecting_cohomology_into<F: Field>(
    s: &ShortExactSeq<F>,
    eps: &HomologyClass<F>,
    target: &Arc<HomologySpace<F>>,
) -> Result<HomologyClass<F>> {
    let m = eps.space().degree();
    let field = s.first().field();
    let d = s.first().algebra().dim();
    let t2 = SparseMat::identity(field, d.pow(m as u32)).kron(&s.section).mul_vec(&eps.representative());
    let dt2 = cochain_codifferential_matrix(s.middle(), m)?.mul_vec(&t2);
    let t1 = SparseMat::identity(field, d.pow(m as u32 + 1)).kron(&s.retraction).mul_vec(&dt2);
    if cochain_pushforward(s.f(), m + 1)?.mul_vec(&t1) != dt2 {
        return Err(Error::LiftFailed("coboundary of the lift is not in the image of f".into()));
    }
    target.class_of(&t1)
}

/// Matrix of `δ : H_n(A,N₃) → H_{n−1}(A,N₁)` in canonical coordinates.
pub fn connecting_homology_matrix<F: Field>(s: &ShortExactSeq<F>, n: usize) -> Result<SparseMat<F>> {
    if n == 0 {
        return Err(Error::Degree("the connecting map starts in degree 1".into()));
    }
    let source = homology(s.last(), n)?;
    let target = homology(s.first(), n - 1)?;
    let cols = source
        .basis_classes()
        .iter()
        .map(|g| Ok(connecting_homology_into(s, g, &target)?.coords().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    Ok(SparseMat::from_dense_columns(s.first().field(), target.dim(), &cols))
}

/// Matrix of `∂ : H^m(A,M₃) → H^{m+1}(A,M₁)` in canonical coordinates.
pub fn connecting_cohomology_matrix<F: Field>(s: &ShortExactSeq<F>, m: usize) -> Result<SparseMat<F>> {
    let source = cohomology(s.last(), m)?;
    let target = cohomology(s.first(), m + 1)?;
    let cols = source
        .basis_classes()
        .iter()
        .map(|e| Ok(connecting_cohomology_into(s, e, &target)?.coords().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    Ok(SparseMat::from_dense_columns(s.first().field(), target.dim(), &cols))
}

/// One term of a long exact sequence with the ranks of the maps around it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesNode {
    pub variance: Variance,
    /// 1, 2 or 3 for `N₁`, `N₂`, `N₃`.
    pub position: usize,
    pub degree: usize,
    pub dim: usize,
    pub incoming_rank: usize,
    pub outgoing_rank: usize,
    pub composite_zero: bool,
}

impl LesNode {
    /// `im(in) = ker(out)`.
    pub fn is_exact(&self) -> bool {
        self.composite_zero && self.incoming_rank + self.outgoing_rank == self.dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesReport {
    pub nodes: Vec<LesNode>,
    /// `(degree, rank)` of each connecting map δ_n (homology) and ∂^m (cohomology).
    pub connecting_ranks: Vec<(Variance, usize, usize)>,
}

impl LesReport {
    pub fn is_exact(&self) -> bool {
        self.nodes.iter().all(LesNode::is_exact)
    }
}

/// Exactness of both long exact sequences at every term of degree `≤ max_degree`.
pub fn verify_les<F: Field>(s: &ShortExactSeq<F>, max_degree: usize) -> Result<LesReport> {
    let field = s.first().field();
    let mut nodes = Vec::new();
    let mut connecting_ranks = Vec::new();
    let zero = |rows: usize, cols: usize| SparseMat::zeros(field, rows, cols);

    // Homology: … → H_n(N₁) → H_n(N₂) → H_n(N₃) → H_{n−1}(N₁) → … → H_0(N₃) → 0.
    let h: Vec<[Arc<HomologySpace<F>>; 3]> = (0..=max_degree + 1)
        .map(|n| Ok([homology(s.first(), n)?, homology(s.middle(), n)?, homology(s.last(), n)?]))
        .collect::<Result<_>>()?;
    let fs: Vec<SparseMat<F>> =
        (0..=max_degree).map(|n| h[n][0].induced_matrix(&chain_pushforward(s.f(), n)?, &h[n][1])).collect::<Result<_>>()?;
    let gs: Vec<SparseMat<F>> =
        (0..=max_degree).map(|n| h[n][1].induced_matrix(&chain_pushforward(s.g(), n)?, &h[n][2])).collect::<Result<_>>()?;
    // deltas[n] : H_n(N₃) → H_{n−1}(N₁); deltas[0] is the zero map to 0.
    let deltas: Vec<SparseMat<F>> = (0..=max_degree + 1)
        .map(|n| if n == 0 { Ok(zero(0, h[0][2].dim())) } else { connecting_homology_matrix(s, n) })
        .collect::<Result<_>>()?;
    for n in 1..=max_degree + 1 {
        connecting_ranks.push((Variance::Homology, n, rank(&deltas[n])));
    }
    for n in 0..=max_degree {
        nodes.push(node(Variance::Homology, 1, n, h[n][0].dim(), &deltas[n + 1], &fs[n]));
        nodes.push(node(Variance::Homology, 2, n, h[n][1].dim(), &fs[n], &gs[n]));
        nodes.push(node(Variance::Homology, 3, n, h[n][2].dim(), &gs[n], &deltas[n]));
    }

    // Cohomology: 0 → H^0(M₁) → H^0(M₂) → H^0(M₃) → H^1(M₁) → ….
    let c: Vec<[Arc<HomologySpace<F>>; 3]> = (0..=max_degree + 1)
        .map(|m| Ok([cohomology(s.first(), m)?, cohomology(s.middle(), m)?, cohomology(s.last(), m)?]))
        .collect::<Result<_>>()?;
    let fs: Vec<SparseMat<F>> = (0..=max_degree)
        .map(|m| c[m][0].induced_matrix(&cochain_pushforward(s.f(), m)?, &c[m][1]))
        .collect::<Result<_>>()?;
    let gs: Vec<SparseMat<F>> = (0..=max_degree)
        .map(|m| c[m][1].induced_matrix(&cochain_pushforward(s.g(), m)?, &c[m][2]))
        .collect::<Result<_>>()?;
    let partials: Vec<SparseMat<F>> = (0..=max_degree).map(|m| connecting_cohomology_matrix(s, m)).collect::<Result<_>>()?;
    for (m, p) in partials.iter().enumerate() {
        connecting_ranks.push((Variance::Cohomology, m, rank(p)));
    }
    for m in 0..=max_degree {
        let incoming = if m == 0 { zero(c[0][0].dim(), 0) } else { partials[m - 1].clone() };
        nodes.push(node(Variance::Cohomology, 1, m, c[m][0].dim(), &incoming, &fs[m]));
        nodes.push(node(Variance::Cohomology, 2, m, c[m][1].dim(), &fs[m], &gs[m]));
        nodes.push(node(Variance::Cohomology, 3, m, c[m][2].dim(), &gs[m], &partials[m]));
    }
    Ok(LesReport { nodes, connecting_ranks })
}

fn node<F: Field>(variance: Variance, position: usize, degree: usize, dim: usize, incoming: &SparseMat<F>, outgoing: &SparseMat<F>) -> LesNode {
    LesNode {
        variance,
        position,
        degree,
        dim,
        incoming_rank: rank(incoming),
        outgoing_rank: rank(outgoing),
        composite_zero: outgoing.mul(incoming).is_zero(),
    }
}
