use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::tensor::{encode, guarded_dim};

/// Number of coordinates of `N ⊗ A^{⊗n}` (and of `Hom_k(A^{⊗n}, N)`), checked
/// against the algebra's coordinate cap.
pub fn chain_dim<F: Field>(module: &Bimodule<F>, n: usize) -> Result<usize> {
    let a = module.algebra();
    guarded_dim(module.dim(), a.dim(), n, a.coord_cap())
}

/// An element of `C_n(A, N) = N ⊗ A^{⊗n}`. The coordinate of
/// `x_i ⊗ e_{a_1} ⊗ … ⊗ e_{a_n}` is `i·d^n + code(a_1, …, a_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainVector<F: Field> {
    module: Bimodule<F>,
    degree: usize,
    coords: Vec<F::Elem>,
}

impl<F: Field> ChainVector<F> {
    pub fn new(module: &Bimodule<F>, degree: usize, coords: Vec<F::Elem>) -> Result<Self> {
        let len = chain_dim(module, degree)?;
        if coords.len() != len {
            return Err(Error::Dimension(format!("chain of degree {degree} needs {len} coordinates, got {}", coords.len())));
        }
        Ok(ChainVector { module: module.clone(), degree, coords })
    }

    pub fn zero(module: &Bimodule<F>, degree: usize) -> Result<Self> {
        let len = chain_dim(module, degree)?;
        Ok(ChainVector { module: module.clone(), degree, coords: vec![module.field().zero(); len] })
    }

    /// The basis chain `(x_i; e_{a_1}, …, e_{a_n})`.
    pub fn basis(module: &Bimodule<F>, x: usize, tuple: &[usize]) -> Result<Self> {
        let mut c = Self::zero(module, tuple.len())?;
        let d = module.algebra().dim();
        if x >= module.dim() || tuple.iter().any(|&a| a >= d) {
            return Err(Error::Dimension("basis index out of range".into()));
        }
        let idx = x * crate::tensor::pow(d, tuple.len()) + encode(d, tuple);
        c.coords[idx] = module.field().one();
        Ok(c)
    }

    pub fn module(&self) -> &Bimodule<F> {
        &self.module
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<F::Elem> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        let f = self.module.field();
        self.coords.iter().all(|x| f.is_zero(x))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree || self.module != other.module {
            return Err(Error::Dimension("chains live in different spaces".into()));
        }
        let f = self.module.field();
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| f.add(a, b)).collect();
        Ok(ChainVector { module: self.module.clone(), degree: self.degree, coords })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = self.module.field();
        let coords = self.coords.iter().map(|a| f.mul(a, c)).collect();
        ChainVector { module: self.module.clone(), degree: self.degree, coords }
    }
}

/// A reduced cochain `T : A^{⊗m} → M`. The coordinate of the `k`-th
/// component of `T(e_{a_1}, …, e_{a_m})` is `code(a_1, …, a_m)·r + k`.
#[derive(Clone, Debug, PartialEq)]
pub struct CochainMap<F: Field> {
    module: Bimodule<F>,
    degree: usize,
    values: Vec<F::Elem>,
}

impl<F: Field> CochainMap<F> {
    pub fn new(module: &Bimodule<F>, degree: usize, values: Vec<F::Elem>) -> Result<Self> {
        let len = chain_dim(module, degree)?;
        if values.len() != len {
            return Err(Error::Dimension(format!("cochain of degree {degree} needs {len} coordinates, got {}", values.len())));
        }
        Ok(CochainMap { module: module.clone(), degree, values })
    }

    pub fn zero(module: &Bimodule<F>, degree: usize) -> Result<Self> {
        let len = chain_dim(module, degree)?;
        Ok(CochainMap { module: module.clone(), degree, values: vec![module.field().zero(); len] })
    }

    /// Tabulates `T` from its values on basis tuples.
    pub fn from_fn(module: &Bimodule<F>, degree: usize, mut value: impl FnMut(&[usize]) -> Vec<F::Elem>) -> Result<Self> {
        let len = chain_dim(module, degree)?;
        let (d, r) = (module.algebra().dim(), module.dim());
        let mut values = Vec::with_capacity(len);
        for t in 0..len / r.max(1) {
            let v = value(&crate::tensor::decode(d, degree, t));
            if v.len() != r {
                return Err(Error::Dimension(format!("cochain value has length {}, expected {r}", v.len())));
            }
            values.extend(v);
        }
        Ok(CochainMap { module: module.clone(), degree, values })
    }

    /// The 0-cochain with value `m`.
    pub fn constant(module: &Bimodule<F>, m: Vec<F::Elem>) -> Result<Self> {
        Self::new(module, 0, m)
    }

    pub fn module(&self) -> &Bimodule<F> {
        &self.module
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[F::Elem] {
        &self.values
    }

    pub fn into_values(self) -> Vec<F::Elem> {
        self.values
    }

    /// `T(e_{a_1}, …, e_{a_m})`.
    pub fn value(&self, tuple: &[usize]) -> &[F::Elem] {
        let r = self.module.dim();
        let t = encode(self.module.algebra().dim(), tuple);
        &self.values[t * r..(t + 1) * r]
    }

    pub fn is_zero(&self) -> bool {
        let f = self.module.field();
        self.values.iter().all(|x| f.is_zero(x))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree || self.module != other.module {
            return Err(Error::Dimension("cochains live in different spaces".into()));
        }
        let f = self.module.field();
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f.add(a, b)).collect();
        Ok(CochainMap { module: self.module.clone(), degree: self.degree, values })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = self.module.field();
        let values = self.values.iter().map(|a| f.mul(a, c)).collect();
        CochainMap { module: self.module.clone(), degree: self.degree, values }
    }
}
