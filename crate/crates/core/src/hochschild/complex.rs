use crate::bar::bar_differential;
use crate::bimodule::{Bimodule, BimoduleMorphism};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Echelon, Rref, SparseMat};
use crate::tensor::{guarded_dim, pow};

use super::chain_dim;

/// `b_n : C_n(A,N) → C_{n-1}(A,N)`,
/// `b(x; a_1..a_n) = (x a_1; a_2..) + Σ (−1)^i (x; .., a_i a_{i+1}, ..) + (−1)^n (a_n x; a_1..a_{n-1})`.
pub fn chain_boundary_matrix<F: Field>(module: &Bimodule<F>, n: usize) -> Result<SparseMat<F>> {
    if n == 0 {
        return Err(Error::Degree("the chain boundary starts in degree 1".into()));
    }
    let a = module.algebra();
    let f = a.field();
    let d = a.dim();
    let cols = chain_dim(module, n)?;
    let tail = pow(d, n - 1);
    let rows = module.dim() * tail;
    let last_sign = n % 2 == 1;
    let columns = (0..cols)
        .map(|col| {
            let (x, t) = (col / (tail * d), col % (tail * d));
            let mut entries = Vec::new();
            let a1 = t / tail;
            for (y, c) in module.right(a1).column(x) {
                entries.push((y * tail + t % tail, c.clone()));
            }
            for i in 1..n {
                // Merge slots i and i+1 (1-based) of the n-tuple.
                let low_size = pow(d, n - i - 1);
                let low = t % low_size;
                let ai1 = (t / low_size) % d;
                let ai = (t / (low_size * d)) % d;
                let high = t / (low_size * d * d);
                for (l, c) in a.product(ai, ai1) {
                    let row = x * tail + (high * d + l) * low_size + low;
                    entries.push((row, if i % 2 == 1 { f.neg(c) } else { c.clone() }));
                }
            }
            let an = t % d;
            for (y, c) in module.left(an).column(x) {
                entries.push((y * tail + t / d, if last_sign { f.neg(c) } else { c.clone() }));
            }
            entries
        })
        .collect();
    Ok(SparseMat::from_columns(f, rows, columns))
}

/// `δ^m : C^m(A,M) → C^{m+1}(A,M)`,
/// `(δT)(a_1..a_{m+1}) = a_1 T(a_2..) + Σ (−1)^i T(.., a_i a_{i+1}, ..) + (−1)^{m+1} T(..a_m) a_{m+1}`.
pub fn cochain_codifferential_matrix<F: Field>(module: &Bimodule<F>, m: usize) -> Result<SparseMat<F>> {
    let a = module.algebra();
    let f = a.field();
    let (d, r) = (a.dim(), module.dim());
    let cols = chain_dim(module, m)?;
    let rows = chain_dim(module, m + 1)?;
    let block = pow(d, m);
    let last_neg = m % 2 == 0;
    let mut triplets = Vec::new();
    for s in 0..block * d {
        let s1 = s / block;
        let tail_code = s % block;
        for (y, k, c) in module.left(s1).entries() {
            triplets.push((s * r + y, tail_code * r + k, c.clone()));
        }
        for i in 1..=m {
            let low_size = pow(d, m - i);
            let low = s % low_size;
            let si1 = (s / low_size) % d;
            let si = (s / (low_size * d)) % d;
            let high = s / (low_size * d * d);
            for (l, c) in a.product(si, si1) {
                let merged = (high * d + l) * low_size + low;
                let c = if i % 2 == 1 { f.neg(c) } else { c.clone() };
                for y in 0..r {
                    triplets.push((s * r + y, merged * r + y, c.clone()));
                }
            }
        }
        let (head, last) = (s / d, s % d);
        for (y, k, c) in module.right(last).entries() {
            triplets.push((s * r + y, head * r + k, if last_neg { f.neg(c) } else { c.clone() }));
        }
    }
    Ok(SparseMat::from_triplets(f, rows, cols, triplets))
}

/// `φ ⊗ id : C_n(A,N) → C_n(A,N')`.
pub fn chain_pushforward<F: Field>(phi: &BimoduleMorphism<F>, n: usize) -> Result<SparseMat<F>> {
    let a = phi.source().algebra();
    guarded_dim(phi.source().dim().max(phi.target().dim()), a.dim(), n, a.coord_cap())?;
    Ok(phi.matrix().kron(&SparseMat::identity(a.field(), pow(a.dim(), n))))
}

/// `T ↦ φ ∘ T : C^m(A,M) → C^m(A,M')`.
pub fn cochain_pushforward<F: Field>(phi: &BimoduleMorphism<F>, m: usize) -> Result<SparseMat<F>> {
    let a = phi.source().algebra();
    guarded_dim(phi.source().dim().max(phi.target().dim()), a.dim(), m, a.coord_cap())?;
    Ok(SparseMat::identity(a.field(), pow(a.dim(), m)).kron(phi.matrix()))
}

/// `id_N ⊗ d_n : N ⊗ A^{⊗(n+2)} → N ⊗ A^{⊗(n+1)}`, the differential of
/// `N ⊗ Bar(A)` before dividing out the `A^e`-balancing relations.
pub fn unreduced_boundary<F: Field>(module: &Bimodule<F>, n: usize) -> Result<SparseMat<F>> {
    let a = module.algebra();
    chain_dim(module, n + 2)?;
    Ok(SparseMat::identity(a.field(), module.dim()).kron(&bar_differential(a, n)?))
}

/// The relations `(b·x·a) ⊗ p − x ⊗ (a·p·b)` in `N ⊗ A^{⊗(n+2)}`, whose
/// quotient is `N ⊗_{A^e} Bar_n`.
pub fn balanced_relations<F: Field>(module: &Bimodule<F>, n: usize) -> Result<Rref<F>> {
    let a = module.algebra();
    let f = a.field();
    let (d, r) = (a.dim(), module.dim());
    let width = chain_dim(module, n + 2)?;
    let mid = pow(d, n);
    let mut e = Echelon::new(f, width);
    for x in 0..r {
        for ea in 0..d {
            for eb in 0..d {
                // b·x·a
                let bxa = module.left(eb).mul(module.right(ea));
                for p in 0..pow(d, n + 2) {
                    let (p0, rest) = (p / (mid * d), p % (mid * d));
                    let (pm, plast) = (rest / d, rest % d);
                    let mut v = Vec::new();
                    for (y, c) in bxa.column(x) {
                        v.push((y * mid * d * d + p, c.clone()));
                    }
                    for (l0, c0) in a.product(ea, p0) {
                        for (l1, c1) in a.product(plast, eb) {
                            let code = (l0 * mid + pm) * d + l1;
                            v.push((x * mid * d * d + code, f.neg(&f.mul(c0, c1))));
                        }
                    }
                    let v = crate::linalg::normalize_entries(f, v);
                    if !v.is_empty() {
                        e.insert_sparse(&v);
                    }
                }
            }
        }
    }
    Ok(e.into_rref())
}

/// `x ⊗ (a_0, …, a_{n+1}) ↦ (a_{n+1}·x·a_0; a_1, …, a_n)`.
pub fn unreduced_to_reduced<F: Field>(module: &Bimodule<F>, n: usize) -> Result<SparseMat<F>> {
    let a = module.algebra();
    let d = a.dim();
    let cols = chain_dim(module, n + 2)?;
    let mid = pow(d, n);
    let full = mid * d * d;
    let columns = (0..cols)
        .map(|col| {
            let (x, p) = (col / full, col % full);
            let (a0, rest) = (p / (mid * d), p % (mid * d));
            let (pm, alast) = (rest / d, rest % d);
            let act = module.left(alast).mul(module.right(a0));
            act.column(x).iter().map(|(y, c)| (y * mid + pm, c.clone())).collect()
        })
        .collect();
    Ok(SparseMat::from_columns(a.field(), module.dim() * mid, columns))
}
