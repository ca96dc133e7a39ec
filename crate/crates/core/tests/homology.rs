mod oracle;

use std::sync::Arc;

use hochcap::hochschild::*;
use hochcap::linalg::{rank, SparseMat};
use hochcap::{with_algebra, zoo, Bimodule, Error, Field, PrimeField, Rationals};
use oracle::OracleAlgebra;

fn max_degree(d: usize) -> usize {
    if d >= 4 {
        3
    } else {
        4
    }
}

#[test]
fn dimensions_agree_with_brute_force() {
    for name in zoo::NAMES {
        let any = zoo::load(name).unwrap();
        let oracle = OracleAlgebra::from_json(zoo::json(name).unwrap());
        with_algebra!(&any, file => {
            let r = Bimodule::regular(&file.algebra);
            let max = max_degree(file.algebra.dim());
            let hom: Vec<usize> = (0..=max).map(|n| homology(&r, n).unwrap().dim()).collect();
            let coh: Vec<usize> = (0..=max).map(|n| cohomology(&r, n).unwrap().dim()).collect();
            assert_eq!(hom, oracle.homology_dims(max), "homology of {name}");
            assert_eq!(coh, oracle.cohomology_dims(max), "cohomology of {name}");
        });
    }
}

#[test]
fn frozen_dimension_tables() {
    let q = Rationals;
    let dims = |a: hochcap::Algebra<Rationals>, max: usize, co: bool| -> Vec<usize> {
        let r = Bimodule::regular(&Arc::new(a));
        (0..=max)
            .map(|n| if co { cohomology(&r, n).unwrap().dim() } else { homology(&r, n).unwrap().dim() })
            .collect()
    };
    assert_eq!(dims(zoo::dual_numbers(&q), 4, false), vec![2, 1, 1, 1, 1]);
    assert_eq!(dims(zoo::dual_numbers(&q), 4, true), vec![2, 1, 1, 1, 1]);
    assert_eq!(dims(zoo::q_times_q(&q), 4, false), vec![2, 0, 0, 0, 0]);
    assert_eq!(dims(zoo::two_by_two_matrices(&q), 3, false), vec![1, 0, 0, 0]);
    assert_eq!(dims(zoo::upper_triangular(&q), 3, false), vec![2, 0, 0, 0]);
    assert_eq!(dims(zoo::upper_triangular(&q), 3, true), vec![1, 0, 0, 0]);
    assert_eq!(dims(zoo::truncated_cubic(&q), 3, false), vec![3, 2, 2, 2]);
    let f2 = PrimeField::new(2).unwrap();
    let r = Bimodule::regular(&Arc::new(zoo::group_algebra_c2(&f2)));
    let hom: Vec<usize> = (0..=4).map(|n| homology(&r, n).unwrap().dim()).collect();
    assert_eq!(hom, vec![2, 2, 2, 2, 2]);
    let r = Bimodule::regular(&Arc::new(zoo::dual_numbers(&f2)));
    let hom: Vec<usize> = (0..=4).map(|n| homology(&r, n).unwrap().dim()).collect();
    assert_eq!(hom, vec![2, 2, 2, 2, 2]);
}

#[test]
fn boundary_examples() {
    let q = Rationals;
    let d = Arc::new(zoo::dual_numbers(&q));
    let r = Bimodule::regular(&d);
    assert!(matches!(chain_boundary_matrix(&r, 0), Err(Error::Degree(_))));
    // b_1 vanishes on a commutative algebra.
    assert!(chain_boundary_matrix(&r, 1).unwrap().is_zero());
    // Over the ground field b_n is 0 for odd n and invertible for even n.
    let k = Bimodule::regular(&Arc::new(zoo::rationals(&q)));
    for n in 1..6 {
        let b = chain_boundary_matrix(&k, n).unwrap();
        if n % 2 == 1 {
            assert!(b.is_zero());
        } else {
            assert_eq!(b, SparseMat::identity(&q, 1));
        }
    }
    // b_1(x; a) = xa − ax column by column.
    let m2 = Arc::new(zoo::two_by_two_matrices(&q));
    let r = Bimodule::regular(&m2);
    let b1 = chain_boundary_matrix(&r, 1).unwrap();
    for x in 0..4 {
        for a in 0..4 {
            let col = b1.column_dense(x * 4 + a);
            let expect = r.right(a).sub(r.left(a)).column_dense(x);
            assert_eq!(col, expect);
        }
    }
}

#[test]
fn codifferential_examples() {
    let q = Rationals;
    let d = Arc::new(zoo::dual_numbers(&q));
    let r = Bimodule::regular(&d);
    // δ^0 T = (a ↦ aT − Ta); its kernel is M^A.
    let d0 = cochain_codifferential_matrix(&r, 0).unwrap();
    assert_eq!(2 - rank(&d0), r.invariants_subspace().rank());
    let m2 = Bimodule::regular(&Arc::new(zoo::two_by_two_matrices(&q)));
    let d0 = cochain_codifferential_matrix(&m2, 0).unwrap();
    assert_eq!(4 - rank(&d0), 1);
    // 1-cocycles with values in A are derivations; on D they kill e and send x to a multiple of x.
    let z1 = 4 - rank(&cochain_codifferential_matrix(&r, 1).unwrap());
    assert_eq!(z1, 1);
    for m in 0..4 {
        let dd = cochain_codifferential_matrix(&r, m + 1).unwrap().mul(&cochain_codifferential_matrix(&r, m).unwrap());
        assert!(dd.is_zero());
    }
}

#[test]
fn unreduced_complex_agrees() {
    let q = Rationals;
    for a in [zoo::dual_numbers(&q), zoo::q_times_q(&q)] {
        let a = Arc::new(a);
        let r = Bimodule::regular(&a);
        for module in [r] {
            // Quotient complex Q_n = N ⊗ A^{⊗(n+2)} / relations and its induced differential.
            let rel: Vec<_> = (0..=4).map(|n| balanced_relations(&module, n).unwrap()).collect();
            let diff = |n: usize| -> SparseMat<Rationals> {
                let proj = rel[n - 1].quotient_projection();
                let sect = rel[n].quotient_section();
                proj.mul(&unreduced_boundary(&module, n).unwrap()).mul(&sect)
            };
            for n in 0..=3 {
                let conv = unreduced_to_reduced(&module, n).unwrap();
                // The conversion kills the relations and is an isomorphism on the quotient.
                for row in rel[n].rows() {
                    assert!(conv.apply_sparse(row).is_empty());
                }
                let qdim = rel[n].width() - rel[n].rank();
                assert_eq!(qdim, chain_dim(&module, n).unwrap());
                assert_eq!(rank(&conv.mul(&rel[n].quotient_section())), qdim);
                let rk_out = if n == 0 { 0 } else { rank(&diff(n)) };
                let rk_in = rank(&diff(n + 1));
                assert_eq!(qdim - rk_out - rk_in, homology(&module, n).unwrap().dim());
                if n > 0 {
                    // The conversion is a chain map.
                    let lhs = unreduced_to_reduced(&module, n - 1).unwrap().mul(&unreduced_boundary(&module, n).unwrap());
                    let rhs = chain_boundary_matrix(&module, n).unwrap().mul(&conv);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn degree_zero_isomorphisms() {
    let q = Rationals;
    let d = Arc::new(zoo::dual_numbers(&q));
    let r = Bimodule::regular(&d);
    let h0 = homology(&r, 0).unwrap();
    let x = vec![q.zero(), q.one()];
    let cls = h0.class_of(&x).unwrap();
    assert_eq!(psi_iso(&cls).unwrap(), x);
    assert_eq!(psi_iso(&h0.zero_class()).unwrap(), vec![q.zero(); 2]);
    let c0 = cohomology(&r, 0).unwrap();
    assert_eq!(phi_iso(&c0.class_of(&x).unwrap()).unwrap(), x);
    assert_eq!(phi_iso(&c0.class_of(d.unit()).unwrap()).unwrap(), d.unit().to_vec());
    assert!(matches!(psi_iso(&c0.zero_class()), Err(Error::Degree(_))));

    let m2 = Arc::new(zoo::two_by_two_matrices(&q));
    let r = Bimodule::regular(&m2);
    let h0 = homology(&r, 0).unwrap();
    assert_eq!(h0.dim(), 1);
    // e11 and e22 have the same trace, hence the same image.
    let e11 = psi_iso(&h0.class_of(&m2.basis_vector(0)).unwrap()).unwrap();
    let e22 = psi_iso(&h0.class_of(&m2.basis_vector(3)).unwrap()).unwrap();
    assert_eq!(e11, e22);
    assert_eq!(psi_iso(&h0.class_of(&m2.basis_vector(1)).unwrap()).unwrap(), vec![q.zero()]);
    let c0 = cohomology(&r, 0).unwrap();
    assert_eq!(c0.dim(), 1);
    let t = phi_iso(&c0.basis_class(0)).unwrap();
    assert!(r.invariants_subspace().contains(&t));

    // Bijectivity in degree 0 for every zoo algebra.
    for name in zoo::NAMES {
        let any = zoo::load(name).unwrap();
        with_algebra!(&any, file => {
            for module in file.module_names() {
                let n = file.module(&module).unwrap();
                assert_eq!(homology(&n, 0).unwrap().dim(), n.dim() - n.commutator_subspace().rank(), "{name}");
                assert_eq!(cohomology(&n, 0).unwrap().dim(), n.invariants_subspace().rank(), "{name}");
            }
        });
    }
}

#[test]
fn center_action() {
    let q = Rationals;
    let d = Arc::new(zoo::dual_numbers(&q));
    let r = Bimodule::regular(&d);
    let h1 = homology(&r, 1).unwrap();
    assert_eq!(h1.dim(), 1);
    let g = h1.basis_class(0);
    assert_eq!(z_action(d.unit(), &g).unwrap(), g);
    assert!(z_action(&[q.zero(), q.zero()], &g).unwrap().is_zero());
    let x = vec![q.zero(), q.one()];
    let xg = z_action(&x, &g).unwrap();
    let xx = ChainVector::basis(&r, 1, &[1]).unwrap();
    assert_eq!(xg, h1.class_of_chain(&xx).unwrap());
    // (x; x) = b(e; x, x)/2 is a boundary over Q.
    assert!(xg.is_zero());
    let m2 = Arc::new(zoo::two_by_two_matrices(&q));
    let hm = homology(&Bimodule::regular(&m2), 0).unwrap();
    assert_eq!(z_action(&m2.basis_vector(1), &hm.basis_class(0)), Err(Error::NotCentral));

    // Linearity and compatibility with products in the center.
    let t = Arc::new(zoo::truncated_cubic(&q));
    let rt = Bimodule::regular(&t);
    for n in 0..3 {
        for space in [homology(&rt, n).unwrap(), cohomology(&rt, n).unwrap()] {
            for g in space.basis_classes() {
                for z1 in 0..3 {
                    for z2 in 0..3 {
                        let (a, b) = (t.basis_vector(z1), t.basis_vector(z2));
                        let lhs = z_action(&t.multiply(&a, &b), &g).unwrap();
                        let rhs = z_action(&a, &z_action(&b, &g).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                        let sum: Vec<_> = a.iter().zip(&b).map(|(u, v)| q.add(u, v)).collect();
                        let lhs = z_action(&sum, &g).unwrap();
                        let rhs = z_action(&a, &g).unwrap().add(&z_action(&b, &g).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

#[test]
fn classes_are_canonical() {
    let q = Rationals;
    let d = Arc::new(zoo::dual_numbers(&q));
    let r = Bimodule::regular(&d);
    let h1 = homology(&r, 1).unwrap();
    let ex = ChainVector::basis(&r, 0, &[1]).unwrap();
    let c = h1.class_of_chain(&ex).unwrap();
    assert_eq!(c.coords(), &[q.one()]);
    // Adding a boundary does not change the class.
    let b2 = chain_boundary_matrix(&r, 2).unwrap();
    let bnd = b2.column_dense(3);
    let shifted: Vec<_> = ex.coords().iter().zip(&bnd).map(|(a, b)| q.add(a, b)).collect();
    assert_eq!(h1.class_of(&shifted).unwrap(), c);
    // b(e; x, e) = (x; e) ≠ 0.
    let h2 = homology(&r, 2).unwrap();
    let v = ChainVector::basis(&r, 0, &[1, 0]).unwrap();
    assert_eq!(h2.class_of_chain(&v), Err(Error::NotACycle));
    let c1 = cohomology(&r, 1).unwrap();
    let t = CochainMap::from_fn(&r, 1, |_| vec![q.one(), q.zero()]).unwrap();
    assert_eq!(c1.class_of_cochain(&t), Err(Error::NotACocycle));
}

#[test]
fn resource_guard() {
    let q = Rationals;
    let m2 = Arc::new(zoo::two_by_two_matrices(&q).with_coord_cap(1000));
    let r = Bimodule::regular(&m2);
    assert!(homology(&r, 2).is_ok());
    assert!(matches!(homology(&r, 4), Err(Error::ResourceGuard { .. })));
    assert!(matches!(cohomology(&r, 5), Err(Error::ResourceGuard { .. })));
}
