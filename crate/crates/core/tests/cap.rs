mod common;

use std::sync::Arc;

use hochcap::bar::free_generators;
use hochcap::cap::*;
use hochcap::hochschild::*;
use hochcap::linalg::SparseMat;
use hochcap::tensor::{decode, encode, pow};
use hochcap::{with_algebra, zoo, Algebra, Bimodule, Error, Field, Rationals};

fn dual() -> Arc<Algebra<Rationals>> {
    Arc::new(zoo::dual_numbers(&Rationals))
}

/// The 1-cocycle `E` on `D = Q[x]/(x²)` with `E(e) = 0`, `E(x) = x`.
fn derivation(r: &Bimodule<Rationals>) -> CochainMap<Rationals> {
    let f = Rationals;
    CochainMap::from_fn(r, 1, |t| if t[0] == 1 { vec![f.zero(), f.one()] } else { vec![f.zero(), f.zero()] }).unwrap()
}

fn unit_cocycle<F: Field>(r: &Bimodule<F>) -> CochainMap<F> {
    CochainMap::constant(r, r.algebra().unit().to_vec()).unwrap()
}

#[test]
fn diagonal_examples() {
    let f = Rationals;
    let a = dual();
    let delta = diagonal(&a, 1, 1).unwrap();
    let col = encode(2, &[0, 1, 1, 0]);
    assert_eq!(delta.column(col), &[(encode(2, &[0, 1, 0, 1, 0]), f.one())]);
    let d00 = diagonal(&a, 0, 0).unwrap();
    assert_eq!(d00.column(encode(2, &[1, 1])), &[(encode(2, &[1, 0, 1]), f.one())]);
    let q = Arc::new(zoo::rationals(&f));
    for (i, j) in [(0, 0), (1, 2), (3, 1)] {
        assert_eq!(diagonal(&q, i, j).unwrap(), SparseMat::identity(&f, 1));
    }
    // The unit of Q×Q is e1 + e2, so Δ_{0,0} has two entries per column.
    let qq = Arc::new(zoo::q_times_q(&f));
    assert_eq!(diagonal(&qq, 0, 0).unwrap().column(0).len(), 2);
}

#[test]
fn diagonal_axioms_hold_on_the_zoo() {
    for name in zoo::NAMES {
        with_algebra!(&zoo::load(name).unwrap(), file => {
            let total = if file.algebra.dim() >= 4 { 3 } else { 4 };
            for s in 0..=total {
                for i in 0..=s {
                    assert!(check_diagonal_axioms(&file.algebra, i, s - i).unwrap(), "{name}: ({i},{})", s - i);
                }
            }
        });
    }
}

#[test]
fn a_misplaced_unit_breaks_the_axioms() {
    // Inserting the unit in front instead of after slot 0.
    let a = dual();
    let map = DiagonalMap::new(&a);
    let d1 = hochcap::bar::bar_differential(&a, 1).unwrap();
    let rhs = map.left_differential(0, 0).unwrap().mul(&map.matrix(1, 0).unwrap());
    let rhs = rhs.add(&map.right_differential(0, 0).unwrap().mul(&map.matrix(0, 1).unwrap()));
    assert_eq!(map.matrix(0, 0).unwrap().mul(&d1), rhs);
    let wrong = hochcap::bar::insert_unit_matrix(&a, 2, 0).unwrap();
    assert_ne!(wrong.mul(&d1), rhs);
}

#[test]
fn reordered_identity_in_reduced_coordinates() {
    for name in zoo::NAMES {
        with_algebra!(&zoo::load(name).unwrap(), file => {
            let r = Bimodule::regular(&file.algebra);
            for n in 1..=4 {
                for m in 0..n {
                    assert!(check_reordered_identity(&r, n, m).unwrap(), "{name}: n={n}, m={m}");
                }
            }
        });
    }
    let a = dual();
    let simple = zoo::dual_numbers_simple(&a).unwrap();
    let coinduced = Bimodule::regular(&a).coinduced().unwrap();
    for module in [simple, coinduced.module().clone()] {
        for n in 1..=4 {
            for m in 0..n {
                assert!(check_reordered_identity(&module, n, m).unwrap());
            }
        }
    }
}

#[test]
fn cap_chain_examples() {
    let f = Rationals;
    let a = dual();
    let r = Bimodule::regular(&a);
    let xi = ChainVector::basis(&r, 0, &[1]).unwrap();
    let c = cap_chain(&xi, &derivation(&r)).unwrap();
    assert_eq!(c.degree(), 0);
    assert_eq!(c.coords(), &[f.zero(), f.one()]);
    let mut rng = common::rng(3);
    for n in 0..4 {
        let xi = common::random_chain(&r, n, &mut rng);
        assert_eq!(cap_chain(&xi, &unit_cocycle(&r)).unwrap(), xi);
        let zero = CochainMap::zero(&r, n.min(1)).unwrap();
        assert!(cap_chain(&xi, &zero).unwrap().is_zero());
    }
    let zero = ChainVector::zero(&r, 2).unwrap();
    assert!(cap_chain(&zero, &derivation(&r)).unwrap().is_zero());
    let low = ChainVector::basis(&r, 0, &[]).unwrap();
    assert!(matches!(cap_chain(&low, &derivation(&r)), Err(Error::Degree(_))));
}

#[test]
fn cap_chain_with_general_coefficients() {
    // N = simple module k of D, M = Hom(A, A): values live in k ⊗_A Hom(A,A).
    let f = Rationals;
    let a = dual();
    let n = zoo::dual_numbers_simple(&a).unwrap();
    let m = Bimodule::regular(&a).coinduced().unwrap().module().clone();
    let cap = CapProduct::new(&n, &m).unwrap();
    assert_eq!(cap.target_module().dim(), cap.tensor().module().dim());
    let mut rng = common::rng(11);
    let t = common::random_cochain(&m, 1, &mut rng);
    let xi = ChainVector::basis(&n, 0, &[1, 0]).unwrap();
    let c = cap.chain(&xi, &t).unwrap();
    // (1; x, e) ∩ T = (1 ⊗ T(x); e).
    let value = t.value(&[1]).to_vec();
    let expected = cap.tensor().pure_tensor(&[f.one()], &value);
    let got: Vec<_> = (0..cap.target_module().dim()).map(|z| c.coords()[z * 2].clone()).collect();
    assert_eq!(got, expected);
    assert!((0..cap.target_module().dim()).all(|z| f.is_zero(&c.coords()[z * 2 + 1])));
}

/// `b(ξ ∩ T) = (−1)^m (bξ) ∩ T + (−1)^{m+1} ξ ∩ δT` on arbitrary chains and cochains.
fn descent_holds<F: Field>(n_mod: &Bimodule<F>, m_mod: &Bimodule<F>, max: usize, trials: usize, seed: u64) {
    let f = n_mod.field();
    let cap = CapProduct::new(n_mod, m_mod).unwrap();
    let target = cap.target_module().clone();
    let mut rng = common::rng(seed);
    for n in 1..=max {
        for m in 0..n {
            let cap_t = |t: &CochainMap<F>, k: usize| cap.chain_matrix(t, k).unwrap();
            for _ in 0..trials {
                let xi = common::random_chain(n_mod, n, &mut rng);
                let t = common::random_cochain(m_mod, m, &mut rng);
                let dt = CochainMap::new(m_mod, m + 1, cochain_codifferential_matrix(m_mod, m).unwrap().mul_vec(t.values())).unwrap();
                let bxi = chain_boundary_matrix(n_mod, n).unwrap().mul_vec(xi.coords());
                let capped = cap_t(&t, n).mul_vec(xi.coords());
                let lhs = if n - m >= 1 {
                    chain_boundary_matrix(&target, n - m).unwrap().mul_vec(&capped)
                } else {
                    Vec::new()
                };
                let first = cap_t(&t, n - 1).mul_vec(&bxi);
                let second = cap_t(&dt, n).mul_vec(xi.coords());
                let rhs: Vec<F::Elem> = first
                    .iter()
                    .zip(&second)
                    .map(|(p, q)| f.add(&f.mul(&f.sign(m % 2 == 1), p), &f.mul(&f.sign(m % 2 == 0), q)))
                    .collect();
                assert_eq!(lhs, rhs, "n={n}, m={m}");
            }
        }
    }
}

#[test]
fn descent_identity() {
    for name in zoo::NAMES {
        with_algebra!(&zoo::load(name).unwrap(), file => {
            let r = Bimodule::regular(&file.algebra);
            descent_holds(&r, &r, common::max_degree(file.algebra.dim()), 3, 5);
        });
    }
    let a = dual();
    let simple = zoo::dual_numbers_simple(&a).unwrap();
    let coinduced = Bimodule::regular(&a).coinduced().unwrap();
    descent_holds(&simple, coinduced.module(), 3, 3, 6);
    descent_holds(coinduced.cokernel(), &simple, 3, 3, 7);
}

#[test]
fn cap_is_evaluation_on_the_front_factor_of_the_diagonal() {
    // ξ ∩ T = (id ⊗ T ⊗ id)(id ⊗ Δ_{m,n−m})(ξ): evaluate T on the first m
    // slots, multiply the value by the inserted slot, keep the rest.
    let a = dual();
    let f = Rationals;
    let n_mod = zoo::dual_numbers_simple(&a).unwrap();
    let m_mod = Bimodule::regular(&a).coinduced().unwrap().module().clone();
    let cap = CapProduct::new(&n_mod, &m_mod).unwrap();
    let d = a.dim();
    let mut rng = common::rng(21);
    for n in 0..=3 {
        for m in 0..=n {
            let t = common::random_cochain(&m_mod, m, &mut rng);
            let ins = reduced_diagonal(&n_mod, m, n - m).unwrap();
            let tail = pow(d, n - m);
            let mut cols = Vec::new();
            for c in 0..n_mod.dim() * pow(d, n + 1) {
                let x = c / pow(d, n + 1);
                let digits = decode(d, n + 1, c % pow(d, n + 1));
                let value = m_mod.right(digits[m]).mul_vec(t.value(&digits[..m]));
                let mut ex = vec![f.zero(); n_mod.dim()];
                ex[x] = f.one();
                let w = cap.tensor().pure_tensor(&ex, &value);
                let rest = encode(d, &digits[m + 1..]);
                let mut col = vec![f.zero(); w.len() * tail];
                for (z, v) in w.into_iter().enumerate() {
                    col[z * tail + rest] = v;
                }
                cols.push(col);
            }
            let eval = SparseMat::from_dense_columns(&f, cap.target_module().dim() * tail, &cols);
            assert_eq!(eval.mul(&ins), cap.chain_matrix(&t, n).unwrap(), "n={n}, m={m}");
        }
    }
}

#[test]
fn both_orderings_of_the_triple_tensor_agree() {
    // α ⊗_A β ⊗_{A^e} (c_0..c_{j+1}) and α ⊗_{A^e} β ⊗_A (c_0..c_{j+1}) have
    // the same reduced coordinates.
    let f = Rationals;
    for a in [dual(), Arc::new(zoo::upper_triangular(&f))] {
        let n_mod = Bimodule::regular(&a);
        let m_mod = Bimodule::regular(&a).coinduced().unwrap().module().clone();
        let tp = n_mod.tensor_over_a(&m_mod).unwrap();
        let d = a.dim();
        let basis = |len: usize, i: usize| -> Vec<_> { (0..len).map(|k| if k == i { f.one() } else { f.zero() }).collect() };
        for alpha in 0..n_mod.dim() {
            for beta in 0..m_mod.dim() {
                for j in 0..2 {
                    for code in 0..pow(d, j + 2) {
                        let c = decode(d, j + 2, code);
                        let (c0, cl) = (c[0], c[j + 1]);
                        let pure = tp.pure_tensor(&basis(n_mod.dim(), alpha), &basis(m_mod.dim(), beta));
                        let first = tp.module().left(cl).mul_vec(&tp.module().right(c0).mul_vec(&pure));
                        let a2 = n_mod.left(cl).mul_vec(&basis(n_mod.dim(), alpha));
                        let b2 = m_mod.right(c0).mul_vec(&basis(m_mod.dim(), beta));
                        let second = tp.pure_tensor(&a2, &b2);
                        assert_eq!(first, second);
                    }
                }
            }
        }
    }
}

#[test]
fn cap_homology_examples() {
    let f = Rationals;
    let a = dual();
    let r = Bimodule::regular(&a);
    let h1 = homology(&r, 1).unwrap();
    let hh1 = cohomology(&r, 1).unwrap();
    let h0 = homology(&r, 0).unwrap();
    let gamma = h1.class_of_chain(&ChainVector::basis(&r, 0, &[1]).unwrap()).unwrap();
    let eps = hh1.class_of_cochain(&derivation(&r)).unwrap();
    let product = cap_homology(&gamma, &eps).unwrap();
    let x = h0.class_of_chain(&ChainVector::new(&r, 0, vec![f.zero(), f.one()]).unwrap()).unwrap();
    assert_eq!(product, x);
    assert!(!product.is_zero());
    assert!(cap_homology(&h1.zero_class(), &eps).unwrap().is_zero());
    assert!(cap_homology(&gamma, &hh1.zero_class()).unwrap().is_zero());
    let mut bad = derivation(&r).into_values();
    bad[0] = f.one();
    let cap = CapProduct::hochschild(&a).unwrap();
    let xi = ChainVector::basis(&r, 0, &[1]).unwrap();
    let bad = CochainMap::new(&r, 1, bad).unwrap();
    assert_eq!(cap.class_of(&xi, &bad), Err(Error::NotACocycle));
    let not_cycle = ChainVector::basis(&r, 0, &[1, 0]).unwrap();
    assert_eq!(cap.class_of(&not_cycle, &derivation(&r)), Err(Error::NotACycle));
}

#[test]
fn unit_class_acts_as_identity() {
    for name in zoo::NAMES {
        with_algebra!(&zoo::load(name).unwrap(), file => {
            let r = Bimodule::regular(&file.algebra);
            let one = cohomology(&r, 0).unwrap().class_of_cochain(&unit_cocycle(&r)).unwrap();
            for n in 0..=common::max_degree(file.algebra.dim()) {
                for g in homology(&r, n).unwrap().basis_classes() {
                    assert_eq!(cap_homology(&g, &one).unwrap(), g, "{name}, degree {n}");
                }
            }
        });
    }
}

#[test]
fn cap_homology_ignores_representatives() {
    for name in ["dual_numbers", "truncated_cubic", "f2_c2", "upper_triangular"] {
        with_algebra!(&zoo::load(name).unwrap(), file => {
            let r = Bimodule::regular(&file.algebra);
            let cap = CapProduct::hochschild(&file.algebra).unwrap();
            let f = file.algebra.field();
            let mut rng = common::rng(77);
            for trial in 0..20 {
                let n = 1 + trial % 3;
                let m = trial % (n + 1);
                let hn = homology(&r, n).unwrap();
                let hm = cohomology(&r, m).unwrap();
                let xi = common::random_cycle(&r, n, &mut rng);
                let t = common::random_cocycle(&r, m, &mut rng);
                let base = cap.class_of(&xi, &t).unwrap();
                let db = common::random_combination(f, &mut rng, &hn.space().boundary_basis().basis_matrix());
                let dc = common::random_combination(f, &mut rng, &hm.space().boundary_basis().basis_matrix());
                let xi2 = xi.add(&ChainVector::new(&r, n, db).unwrap()).unwrap();
                let t2 = t.add(&CochainMap::new(&r, m, dc).unwrap()).unwrap();
                assert_eq!(cap.class_of(&xi2, &t2).unwrap(), base, "{name}: trial {trial}");
            }
        });
    }
}

#[test]
fn cap_table_for_dual_numbers() {
    let a = dual();
    let table = cap_table(&a, 1, 1).unwrap();
    assert_eq!((table.homology_dim, table.cohomology_dim), (1, 1));
    let r = Bimodule::regular(&a);
    let x = homology(&r, 0).unwrap().class_of(&[Rationals.zero(), Rationals.one()]).unwrap();
    assert_eq!(table.entries[0][0], x.coords());
    assert!(cap_table(&Arc::new(zoo::two_by_two_matrices(&Rationals)), 2, 1).unwrap().entries.is_empty());
    assert!(matches!(cap_table(&a, 1, 2), Err(Error::Degree(_))));
}

#[test]
fn explicit_lift_is_a_chain_map() {
    let f = Rationals;
    let a = dual();
    let r = Bimodule::regular(&a);
    let e = derivation(&r);
    let lift = explicit_lift(&e, 3).unwrap();
    assert_eq!(lift.check().unwrap(), Ok(()));
    // t_0(1 ⊗ x ⊗ 1) = E(x) ⊗ 1 = x ⊗ e.
    assert_eq!(lift.map(0).column(1), &[(encode(2, &[1, 0]), f.one())]);
    let unit = explicit_lift(&unit_cocycle(&r), 3).unwrap();
    for i in 0..=3 {
        assert_eq!(unit.full_map(i), SparseMat::identity(&f, pow(2, i + 2)));
        assert_eq!(unit.map(i), &free_generators(&a, i).unwrap());
    }
    let q = Arc::new(zoo::rationals(&f));
    let rq = Bimodule::regular(&q);
    let t = CochainMap::new(&rq, 2, vec![f.from_i64(3)]).unwrap();
    for m in explicit_lift(&t, 3).unwrap().maps() {
        assert_eq!(m, &SparseMat::identity(&f, 1).scale(&f.from_i64(3)));
    }
    let mut bad = e.clone().into_values();
    bad[0] = f.one();
    assert_eq!(explicit_lift(&CochainMap::new(&r, 1, bad).unwrap(), 1), Err(Error::NotACocycle));
}

#[test]
fn explicit_lift_reproduces_the_chain_formula() {
    for name in zoo::NAMES {
        with_algebra!(&zoo::load(name).unwrap(), file => {
            let r = Bimodule::regular(&file.algebra);
            let max = common::max_degree(file.algebra.dim());
            let mut rng = common::rng(13);
            for m in 0..=max {
                let t = common::random_cocycle(&r, m, &mut rng);
                let lift = explicit_lift(&t, max - m).unwrap();
                assert!(lift.is_valid(), "{name}: m={m}");
                for n in m..=max {
                    let xi = common::random_chain(&r, n, &mut rng);
                    assert_eq!(cap_via_lift(&xi, &lift).unwrap(), cap_chain(&xi, &t).unwrap(), "{name}: n={n}, m={m}");
                }
            }
        });
    }
}

#[test]
fn solved_lifts_differ_but_agree_in_homology() {
    let a = dual();
    let r = Bimodule::regular(&a);
    let e = derivation(&r);
    let l1 = solve_lift(&e, 3, 1).unwrap();
    let l2 = solve_lift(&e, 3, 2).unwrap();
    assert!(l1.is_valid() && l2.is_valid());
    assert_ne!(l1.maps(), l2.maps());
    assert_eq!(solve_lift(&e, 3, 1).unwrap(), l1);
    for n in 1..=4 {
        let h = homology(&r, n).unwrap();
        let target = homology(&r, n - 1).unwrap();
        for g in h.basis_classes() {
            let xi = ChainVector::new(&r, n, g.representative()).unwrap();
            let c1 = target.class_of_chain(&cap_via_lift(&xi, &l1).unwrap()).unwrap();
            let c2 = target.class_of_chain(&cap_via_lift(&xi, &l2).unwrap()).unwrap();
            assert_eq!(c1, c2);
            assert_eq!(c1, cap_homology(&g, &cohomology(&r, 1).unwrap().class_of_cochain(&e).unwrap()).unwrap());
        }
    }
}

#[test]
fn lifts_of_coboundaries_give_boundaries() {
    for name in ["dual_numbers", "truncated_cubic", "upper_triangular", "f2_c2"] {
        with_algebra!(&zoo::load(name).unwrap(), file => {
            let r = Bimodule::regular(&file.algebra);
            let mut rng = common::rng(31);
            for k in 0..3 {
                let s = common::random_cochain(&r, k, &mut rng);
                let lift = coboundary_lift(&s, 4 - (k + 1)).unwrap();
                assert!(lift.is_valid(), "{name}: k={k}");
                assert!(lift.maps()[1..].iter().all(SparseMat::is_zero));
                for n in k + 1..=4 {
                    let xi = common::random_cycle(&r, n, &mut rng);
                    let c = cap_via_lift(&xi, &lift).unwrap();
                    assert!(homology(&r, n - k - 1).unwrap().space().is_boundary(c.coords()), "{name}: n={n}, k={k}");
                }
            }
        });
    }
}

#[test]
fn lifted_cap_sends_boundaries_to_boundaries() {
    let a = dual();
    let r = Bimodule::regular(&a);
    let lift = solve_lift(&derivation(&r), 3, 9).unwrap();
    let mut rng = common::rng(4);
    for n in 1..=3 {
        let y = common::random_chain(&r, n + 1, &mut rng);
        let b = ChainVector::new(&r, n, chain_boundary_matrix(&r, n + 1).unwrap().mul_vec(y.coords())).unwrap();
        let c = cap_via_lift(&b, &lift).unwrap();
        assert!(homology(&r, n - 1).unwrap().space().is_boundary(c.coords()));
    }
}

#[test]
fn shifted_squares_are_required() {
    // Dropping the (−1)^m of the shifted complex breaks the explicit lift of an odd cocycle.
    let a = dual();
    let r = Bimodule::regular(&a);
    let lift = explicit_lift(&derivation(&r), 1).unwrap();
    let (t0, t1) = (lift.map(0), lift.map(1));
    let d1 = hochcap::bar::bar_differential(&a, 1).unwrap();
    let rhs = lift.full_map(0).mul(&hochcap::bar::bar_differential(&a, 2).unwrap().mul(&free_generators(&a, 2).unwrap()));
    assert_ne!(d1.mul(t1), rhs);
    assert_eq!(d1.mul(t1), rhs.scale(&Rationals.from_i64(-1)));
    assert!(!t0.is_zero());
}
