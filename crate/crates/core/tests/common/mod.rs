#![allow(dead_code)]

use hochcap::hochschild::{cohomology, homology, ChainVector, CochainMap};
use hochcap::linalg::SparseMat;
use hochcap::{Bimodule, Field};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Roughly half the entries nonzero, values in [-2, 2].
pub fn random_vec<F: Field>(f: &F, rng: &mut ChaCha8Rng, len: usize) -> Vec<F::Elem> {
    (0..len).map(|_| if rng.gen_bool(0.5) { f.from_i64(rng.gen_range(-2..=2)) } else { f.zero() }).collect()
}

pub fn random_combination<F: Field>(f: &F, rng: &mut ChaCha8Rng, basis: &SparseMat<F>) -> Vec<F::Elem> {
    let coeffs = random_vec(f, rng, basis.cols());
    basis.mul_vec(&coeffs)
}

pub fn random_chain<F: Field>(module: &Bimodule<F>, n: usize, rng: &mut ChaCha8Rng) -> ChainVector<F> {
    let len = module.dim() * module.algebra().dim().pow(n as u32);
    ChainVector::new(module, n, random_vec(module.field(), rng, len)).unwrap()
}

pub fn random_cochain<F: Field>(module: &Bimodule<F>, m: usize, rng: &mut ChaCha8Rng) -> CochainMap<F> {
    let len = module.dim() * module.algebra().dim().pow(m as u32);
    CochainMap::new(module, m, random_vec(module.field(), rng, len)).unwrap()
}

/// A random cycle (boundaries included).
pub fn random_cycle<F: Field>(module: &Bimodule<F>, n: usize, rng: &mut ChaCha8Rng) -> ChainVector<F> {
    let h = homology(module, n).unwrap();
    let v = random_combination(module.field(), rng, &h.space().cycle_basis());
    ChainVector::new(module, n, v).unwrap()
}

pub fn random_cocycle<F: Field>(module: &Bimodule<F>, m: usize, rng: &mut ChaCha8Rng) -> CochainMap<F> {
    let h = cohomology(module, m).unwrap();
    let v = random_combination(module.field(), rng, &h.space().cycle_basis());
    CochainMap::new(module, m, v).unwrap()
}

/// Highest chain degree exercised for an algebra of dimension `d`.
pub fn max_degree(d: usize) -> usize {
    if d >= 4 {
        3
    } else {
        4
    }
}
