//! Exact Hochschild homology and cohomology of finite-dimensional algebras,
//! the cap product `H_n(A,N) ⊗ H^m(A,M) → H_{n-m}(A, N ⊗_A M)`, and a
//! verification harness for its axiomatic characterization.

pub mod algebra;
pub mod bar;
pub mod bimodule;
pub mod cap;
pub mod error;
pub mod field;
pub mod hochschild;
pub mod io;
pub mod les;
pub mod linalg;
pub mod tensor;
pub mod verify;
pub mod zoo;

pub use algebra::Algebra;
pub use bimodule::{Bimodule, BimoduleMorphism, TensorProduct};
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rat, Rationals};
pub use io::{AlgebraFile, AnyAlgebra};
pub use hochschild::{ChainVector, CochainMap, HomologyClass, HomologySpace};
