//! Small algebras shipped with the crate, as embedded JSON and as
//! field-generic constructors.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::io::{parse_algebra, AnyAlgebra};
use crate::linalg::SparseMat;

pub const NAMES: [&str; 7] = [
    "rationals",
    "dual_numbers",
    "truncated_cubic",
    "q_times_q",
    "two_by_two_matrices",
    "upper_triangular",
    "f2_c2",
];

pub fn json(name: &str) -> Option<&'static str> {
    Some(match name {
        "rationals" => include_str!("../zoo/rationals.json"),
        "dual_numbers" => include_str!("../zoo/dual_numbers.json"),
        "truncated_cubic" => include_str!("../zoo/truncated_cubic.json"),
        "q_times_q" => include_str!("../zoo/q_times_q.json"),
        "two_by_two_matrices" => include_str!("../zoo/two_by_two_matrices.json"),
        "upper_triangular" => include_str!("../zoo/upper_triangular.json"),
        "f2_c2" => include_str!("../zoo/f2_c2.json"),
        _ => return None,
    })
}

pub fn description(name: &str) -> Option<&'static str> {
    Some(match name {
        "rationals" => "the ground field Q",
        "dual_numbers" => "Q[x]/(x^2)",
        "truncated_cubic" => "Q[x]/(x^3)",
        "q_times_q" => "Q x Q, two orthogonal idempotents",
        "two_by_two_matrices" => "M_2(Q) with matrix units",
        "upper_triangular" => "upper triangular 2x2 matrices over Q (path algebra of A_2)",
        "f2_c2" => "group algebra F_2[C_2], isomorphic to F_2[x]/(x^2)",
        _ => return None,
    })
}

/// Parses a zoo entry.
pub fn load(name: &str) -> Result<AnyAlgebra> {
    let text = json(name).ok_or_else(|| Error::Validation(format!("no zoo algebra named {name:?}")))?;
    parse_algebra(text)
}

fn build<F: Field>(field: &F, labels: &[&str], unit: &[i64], structure: &[(usize, usize, usize)]) -> Algebra<F> {
    Algebra::new(
        field,
        labels.iter().map(|s| s.to_string()).collect(),
        unit.iter().map(|&u| field.from_i64(u)).collect(),
        structure.iter().map(|&(i, j, l)| (i, j, l, field.one())),
    )
    .expect("zoo algebras are valid")
}

/// The ground field as a one-dimensional algebra.
pub fn rationals<F: Field>(field: &F) -> Algebra<F> {
    build(field, &["1"], &[1], &[(0, 0, 0)])
}

/// `k[x]/(x²)` with basis `(e, x)`.
pub fn dual_numbers<F: Field>(field: &F) -> Algebra<F> {
    build(field, &["e", "x"], &[1, 0], &[(0, 0, 0), (0, 1, 1), (1, 0, 1)])
}

/// `k[x]/(x³)` with basis `(1, x, x²)`.
pub fn truncated_cubic<F: Field>(field: &F) -> Algebra<F> {
    let s: Vec<_> = (0..3).flat_map(|i| (0..3 - i).map(move |j| (i, j, i + j))).collect();
    build(field, &["1", "x", "x2"], &[1, 0, 0], &s)
}

/// `k × k`.
pub fn q_times_q<F: Field>(field: &F) -> Algebra<F> {
    build(field, &["e1", "e2"], &[1, 1], &[(0, 0, 0), (1, 1, 1)])
}

/// `M₂(k)` with basis `e11, e12, e21, e22`.
pub fn two_by_two_matrices<F: Field>(field: &F) -> Algebra<F> {
    let mut s = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for d in 0..2 {
                s.push((2 * a + b, 2 * b + d, 2 * a + d));
            }
        }
    }
    build(field, &["e11", "e12", "e21", "e22"], &[1, 0, 0, 1], &s)
}

/// Upper triangular `2×2` matrices with basis `e11, e12, e22`.
pub fn upper_triangular<F: Field>(field: &F) -> Algebra<F> {
    build(field, &["e11", "e12", "e22"], &[1, 0, 1], &[(0, 0, 0), (0, 1, 1), (1, 2, 1), (2, 2, 2)])
}

/// The group algebra of the cyclic group of order two, basis `(1, g)`.
pub fn group_algebra_c2<F: Field>(field: &F) -> Algebra<F> {
    build(field, &["1", "g"], &[1, 0], &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)])
}

/// The one-dimensional bimodule of the dual numbers on which `x` acts by zero.
pub fn dual_numbers_simple<F: Field>(algebra: &Arc<Algebra<F>>) -> Result<Bimodule<F>> {
    let f = algebra.field();
    let one = SparseMat::identity(f, 1);
    let zero = SparseMat::zeros(f, 1, 1);
    Ok(Bimodule::new(algebra, vec![one.clone(), zero.clone()], vec![one, zero])?.named("simple"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::with_algebra;

    #[test]
    fn embedded_files_match_constructors() {
        let q = Rationals;
        let f2 = PrimeField::new(2).unwrap();
        let expect = |name: &str| -> Option<Algebra<Rationals>> {
            Some(match name {
                "rationals" => rationals(&q),
                "dual_numbers" => dual_numbers(&q),
                "truncated_cubic" => truncated_cubic(&q),
                "q_times_q" => q_times_q(&q),
                "two_by_two_matrices" => two_by_two_matrices(&q),
                "upper_triangular" => upper_triangular(&q),
                _ => return None,
            })
        };
        for name in NAMES {
            match load(name).unwrap() {
                AnyAlgebra::Rational(file) => assert_eq!(*file.algebra, expect(name).unwrap(), "{name}"),
                AnyAlgebra::Prime(file) => {
                    assert_eq!(name, "f2_c2");
                    assert_eq!(*file.algebra, group_algebra_c2(&f2));
                }
            }
            assert!(description(name).is_some());
        }
        assert!(load("octonions").is_err());
    }

    #[test]
    fn simple_module_matches_file() {
        let AnyAlgebra::Rational(file) = load("dual_numbers").unwrap() else { panic!() };
        assert_eq!(file.module("simple").unwrap(), dual_numbers_simple(&file.algebra).unwrap());
    }

    #[test]
    fn every_zoo_algebra_validates() {
        for name in NAMES {
            let any = load(name).unwrap();
            with_algebra!(&any, file => {
                assert!(file.algebra.validate().is_valid(), "{name}");
                assert!(Bimodule::regular(&file.algebra).is_valid(), "{name}");
            });
        }
    }
}
