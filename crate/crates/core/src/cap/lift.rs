use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::bar::{bar_differential, free_generators};
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hochschild::{chain_dim, cochain_codifferential_matrix, unreduced_to_reduced, ChainVector, CochainMap};
use crate::linalg::{normalize_entries, solve_many, sparse_from_dense, SparseMat};
use crate::tensor::pow;

/// A lift `t_• : Bar_{m+•} → Bar_•` of a cocycle `t : Bar_m → A`.
///
/// `t_i` is stored through its values on the free generators `1 ⊗ g ⊗ 1` of
/// `Bar_{m+i}`: a `d^{i+2} × d^{m+i}` matrix. The shifted complex `Bar_{m+•}`
/// carries the differential `(−1)^m d`, so the squares read
/// `d_0 t_0 = t` and `d_i t_i = (−1)^m t_{i−1} d_{m+i}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainMapLift<F: Field> {
    cocycle: CochainMap<F>,
    maps: Vec<SparseMat<F>>,
}

impl<F: Field> ChainMapLift<F> {
    /// Wraps user-supplied maps; run [`ChainMapLift::check`] to validate them.
    pub fn from_maps(cocycle: &CochainMap<F>, maps: Vec<SparseMat<F>>) -> Result<Self> {
        regular_cocycle(cocycle)?;
        let d = cocycle.module().algebra().dim();
        let m = cocycle.degree();
        for (i, t) in maps.iter().enumerate() {
            if t.rows() != pow(d, i + 2) || t.cols() != pow(d, m + i) {
                return Err(Error::Dimension(format!("t_{i} has shape {}x{}", t.rows(), t.cols())));
            }
        }
        Ok(ChainMapLift { cocycle: cocycle.clone(), maps })
    }

    pub fn cocycle(&self) -> &CochainMap<F> {
        &self.cocycle
    }

    pub fn degree(&self) -> usize {
        self.cocycle.degree()
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        self.cocycle.module().algebra()
    }

    /// Largest `i` for which `t_i` is available.
    pub fn up_to(&self) -> usize {
        self.maps.len() - 1
    }

    pub fn maps(&self) -> &[SparseMat<F>] {
        &self.maps
    }

    pub fn map(&self, i: usize) -> &SparseMat<F> {
        &self.maps[i]
    }

    /// `t_i` on all of `Bar_{m+i} = A^{⊗(m+i+2)}`.
    pub fn full_map(&self, i: usize) -> SparseMat<F> {
        extend_bilinearly(self.algebra(), &self.maps[i], i)
    }

    /// Verifies every square of the lift; returns the first failing index.
    pub fn check(&self) -> Result<std::result::Result<(), usize>> {
        let a = self.algebra();
        let m = self.degree();
        if bar_differential(a, 0)?.mul(&self.maps[0]) != cochain_matrix(&self.cocycle) {
            return Ok(Err(0));
        }
        let sign = a.field().sign(m % 2 == 1);
        for i in 1..self.maps.len() {
            let lhs = bar_differential(a, i)?.mul(&self.maps[i]);
            if lhs != square_rhs(a, &self.maps[i - 1], m, i)?.scale(&sign) {
                return Ok(Err(i));
            }
        }
        Ok(Ok(()))
    }

    pub fn is_valid(&self) -> bool {
        matches!(self.check(), Ok(Ok(())))
    }
}

fn regular_cocycle<F: Field>(t: &CochainMap<F>) -> Result<()> {
    if *t.module() != Bimodule::regular(t.module().algebra()) {
        return Err(Error::Validation("lifts are defined for cochains with values in A".into()));
    }
    Ok(())
}

fn check_cocycle<F: Field>(t: &CochainMap<F>) -> Result<()> {
    regular_cocycle(t)?;
    let delta = cochain_codifferential_matrix(t.module(), t.degree())?;
    if !delta.apply_sparse(&sparse_from_dense(t.module().field(), t.values())).is_empty() {
        return Err(Error::NotACocycle);
    }
    Ok(())
}

/// `T` as the `d × d^m` matrix of its values.
fn cochain_matrix<F: Field>(t: &CochainMap<F>) -> SparseMat<F> {
    let f = t.module().field();
    let d = t.module().dim();
    let columns = t.values().chunks(d).map(|v| sparse_from_dense(f, v)).collect();
    SparseMat::from_columns(f, d, columns)
}

/// `t_{i−1} d_{m+i}` on the free generators of `Bar_{m+i}`.
fn square_rhs<F: Field>(a: &Algebra<F>, prev: &SparseMat<F>, m: usize, i: usize) -> Result<SparseMat<F>> {
    let full = extend_bilinearly(a, prev, i - 1);
    Ok(full.mul(&bar_differential(a, m + i)?.mul(&free_generators(a, m + i)?)))
}

/// Extends a map given on free generators of `Bar_k` to an `A^e`-linear map
/// `A^{⊗(k+2)} → A^{⊗(i+2)}`: `a ⊗ g ⊗ b ↦ a·t(g)·b`.
fn extend_bilinearly<F: Field>(a: &Algebra<F>, t: &SparseMat<F>, i: usize) -> SparseMat<F> {
    let f = a.field();
    let d = a.dim();
    let gens = t.cols();
    let mid = pow(d, i);
    let columns = (0..d * gens * d)
        .map(|c| {
            let (a0, g, al) = (c / (gens * d), (c / d) % gens, c % d);
            let mut out = Vec::new();
            for (row, v) in t.column(g) {
                let (p0, rest) = (row / (mid * d), row % (mid * d));
                let (pm, pl) = (rest / d, rest % d);
                for (l0, c0) in a.product(a0, p0) {
                    let vc = f.mul(v, c0);
                    for (l1, c1) in a.product(pl, al) {
                        out.push(((l0 * mid + pm) * d + l1, f.mul(&vc, c1)));
                    }
                }
            }
            normalize_entries(f, out)
        })
        .collect();
    SparseMat::from_columns(f, t.rows(), columns)
}

/// `t_i(1 ⊗ g_1..g_{m+i} ⊗ 1) = T(g_1..g_m) ⊗ g_{m+1}..g_{m+i} ⊗ 1`.
pub fn explicit_lift<F: Field>(t: &CochainMap<F>, up_to: usize) -> Result<ChainMapLift<F>> {
    check_cocycle(t)?;
    let a = t.module().algebra();
    let f = a.field();
    let d = a.dim();
    let m = t.degree();
    chain_dim(t.module(), m + up_to + 2)?;
    let unit = sparse_from_dense(f, a.unit());
    let maps = (0..=up_to)
        .map(|i| {
            let (head, tail) = (pow(d, m), pow(d, i));
            let columns = (0..head * tail)
                .map(|c| {
                    let (h, s) = (c / tail, c % tail);
                    let mut out = Vec::new();
                    for (k, v) in t.values()[h * d..(h + 1) * d].iter().enumerate().filter(|(_, v)| !f.is_zero(v)) {
                        for (u, cu) in &unit {
                            out.push(((k * tail + s) * d + u, f.mul(v, cu)));
                        }
                    }
                    out
                })
                .collect();
            SparseMat::from_columns(f, pow(d, i + 2), columns)
        })
        .collect();
    Ok(ChainMapLift { cocycle: t.clone(), maps })
}

/// Solves the lifting squares one at a time. Each particular solution is
/// then moved by `d_{i+1} h_i` for a sparse random `h_i` drawn from `seed`,
/// so different seeds give different (homotopic) lifts.
pub fn solve_lift<F: Field>(t: &CochainMap<F>, up_to: usize, seed: u64) -> Result<ChainMapLift<F>> {
    check_cocycle(t)?;
    let a = t.module().algebra();
    let f = a.field();
    let d = a.dim();
    let m = t.degree();
    chain_dim(t.module(), m + up_to + 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sign = f.sign(m % 2 == 1);
    let mut maps: Vec<SparseMat<F>> = Vec::with_capacity(up_to + 1);
    for i in 0..=up_to {
        let rhs = if i == 0 { cochain_matrix(t) } else { square_rhs(a, &maps[i - 1], m, i)?.scale(&sign) };
        let di = bar_differential(a, i)?;
        let mut columns = Vec::with_capacity(rhs.cols());
        for (g, sol) in solve_many(&di, &rhs).into_iter().enumerate() {
            let sol = sol.ok_or_else(|| Error::Unsolvable(format!("lifting square {i} has no solution at generator {g}")))?;
            columns.push(sparse_from_dense(f, &sol));
        }
        let particular = SparseMat::from_columns(f, pow(d, i + 2), columns);
        let h = random_sparse(f, &mut rng, pow(d, i + 3), rhs.cols());
        maps.push(particular.add(&bar_differential(a, i + 1)?.mul(&h)));
    }
    Ok(ChainMapLift { cocycle: t.clone(), maps })
}

fn random_sparse<F: Field>(f: &F, rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> SparseMat<F> {
    let columns = (0..cols)
        .map(|_| {
            let mut col = Vec::new();
            for _ in 0..2 {
                let v = rng.gen_range(-2i64..=2);
                col.push((rng.gen_range(0..rows), f.from_i64(v)));
            }
            normalize_entries(f, col)
        })
        .collect();
    SparseMat::from_columns(f, rows, columns)
}

/// A lift of `δS` with `t_j = 0` for `j ≥ 1`: `t_0 = s̃ d_m` where
/// `s̃(1 ⊗ g ⊗ 1) = S(g) ⊗ 1`.
pub fn coboundary_lift<F: Field>(s: &CochainMap<F>, up_to: usize) -> Result<ChainMapLift<F>> {
    regular_cocycle(s)?;
    let module = s.module();
    let a = module.algebra();
    let f = a.field();
    let d = a.dim();
    let k = s.degree();
    let m = k + 1;
    chain_dim(module, m + up_to + 2)?;
    let delta = cochain_codifferential_matrix(module, k)?;
    let t = CochainMap::new(module, m, delta.mul_vec(s.values()))?;
    let unit = sparse_from_dense(f, a.unit());
    let columns = s
        .values()
        .chunks(d)
        .map(|v| {
            let mut out = Vec::new();
            for (j, c) in v.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
                for (u, cu) in &unit {
                    out.push((j * d + u, f.mul(c, cu)));
                }
            }
            out
        })
        .collect();
    let s_tilde = extend_bilinearly(a, &SparseMat::from_columns(f, d * d, columns), 0);
    let t0 = s_tilde.mul(&bar_differential(a, m)?.mul(&free_generators(a, m)?));
    let mut maps = vec![t0];
    for i in 1..=up_to {
        maps.push(SparseMat::zeros(f, pow(d, i + 2), pow(d, m + i)));
    }
    Ok(ChainMapLift { cocycle: t, maps })
}

/// `(a ⊗_{A^e} p) ∩̃ t = a ⊗_{A^e} t_{n−m}(p)` in reduced coordinates.
pub fn cap_via_lift<F: Field>(xi: &ChainVector<F>, lift: &ChainMapLift<F>) -> Result<ChainVector<F>> {
    let a = lift.algebra();
    let regular = Bimodule::regular(a);
    if *xi.module() != regular {
        return Err(Error::Validation("the lifted cap takes chains with values in A".into()));
    }
    let (n, m) = (xi.degree(), lift.degree());
    if m > n {
        return Err(Error::Degree(format!("cannot cap a degree-{n} chain with a degree-{m} cochain")));
    }
    let i = n - m;
    if i > lift.up_to() {
        return Err(Error::Degree(format!("lift is only computed up to t_{}", lift.up_to())));
    }
    let id = SparseMat::identity(a.field(), a.dim());
    let map = unreduced_to_reduced(&regular, i)?.mul(&id.kron(lift.map(i)));
    ChainVector::new(&regular, i, map.mul_vec(xi.coords()))
}
