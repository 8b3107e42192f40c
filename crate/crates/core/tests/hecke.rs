use posalg::algebra::*;
use posalg::dilation::{a_lambda, classify_2dim, TwoDimClass};
use posalg::hecke::algebra::tau_basis_two_algebra;
use posalg::hecke::*;
use posalg::scalars::rational::{int, rat};
use posalg::scalars::Rational;

fn grid() -> Vec<Rational> {
    vec![rat(1, 2), int(1), int(2), int(3), rat(5, 2)]
}

#[test]
fn validate_and_stochastic_on_grid() {
    for n in 2..=4 {
        for q in grid() {
            let h = build_hecke(n, &q).unwrap();
            let a = hecke_two_algebra(&h);
            assert!(validate_2_algebra(&a).unwrap().is_holds(), "n={n} q={q}");
            let mut all_nonneg = true;
            for i in 0..a.dim {
                for j in 0..a.dim {
                    let row = a.mult.slice_ij(i, j);
                    let sum = row.iter().fold(int(0), |s, (_, c)| s + c);
                    assert_eq!(sum, int(1), "n={n} q={q} ({i},{j})");
                    all_nonneg &= row.iter().all(|(_, c)| *c >= int(0));
                }
            }
            assert_eq!(all_nonneg, q >= int(1), "n={n} q={q}");
        }
    }
}

#[test]
fn positivity_iff_q_at_least_one() {
    for n in 2..=3 {
        for q in grid() {
            let a = hecke_two_algebra(&build_hecke(n, &q).unwrap());
            let v = check_positive_2_algebra(&a).unwrap();
            assert_eq!(v.is_holds(), q >= int(1), "n={n} q={q}: {}", v.notes);
            assert_eq!(v.is_fails(), q < int(1), "n={n} q={q}");
        }
    }
}

#[test]
fn tau_square_witness_at_half() {
    let h = build_hecke(2, &rat(1, 2)).unwrap();
    let (m, _) = check_positivity(&tau_basis_two_algebra(&h)).unwrap();
    assert!(m.is_fails());
    let w = m.witness.unwrap();
    assert_eq!(w.indices, vec![1, 1, 1]);
    assert_eq!(w.values, vec!["-1/2".to_string()]);
    // τ² = (q−1)τ + q·1 at q = 1/2
    assert_eq!(h.mult.get(1, 1, 1), rat(-1, 2));
    assert_eq!(h.mult.get(1, 1, 0), rat(1, 2));
}

#[test]
fn diagonal_tau_comultiplication_is_not_a_homomorphism() {
    let h = build_hecke(2, &int(2)).unwrap();
    assert!(is_bialgebra(&tau_basis_two_algebra(&h)).unwrap().is_fails());
}

#[test]
fn q_one_is_the_symmetric_group_algebra() {
    for n in 2..=4 {
        let h = build_hecke(n, &int(1)).unwrap();
        let a = hecke_two_algebra(&h);
        // oracle: composition of permutations in the Hecke basis order
        let d = h.dim();
        let entries = (0..d).flat_map(|i| {
            let h = &h;
            (0..d).map(move |j| (i, j, h.index[&h.basis[i].compose(&h.basis[j])], int(1)))
        });
        let mult = StructureTensor::from_entries(d, entries).unwrap();
        assert_eq!(a.mult, mult, "n={n}");
        assert!(is_bialgebra(&a).unwrap().is_holds());
        assert!(check_involutive(&a).unwrap().is_holds());
    }
}

#[test]
fn two_dimensional_hecke_is_a_lambda() {
    for q in [int(1), int(2), int(3), rat(5, 2), int(7)] {
        let a = hecke_two_algebra(&build_hecke(2, &q).unwrap());
        let l = q.recip();
        assert_eq!(classify_2dim(&a).unwrap(), TwoDimClass::Lambda { lambda: l.clone() });
        assert_eq!(a.mult, a_lambda(&l).unwrap().mult, "q={q}");
    }
}

#[test]
fn iwahori_small_cases() {
    for (p, l) in [(2u64, rat(1, 2)), (3, rat(1, 3)), (5, rat(1, 5))] {
        let r = iwahori_check(2, p).unwrap();
        assert!(r.verdict.is_holds(), "p={p}: {}", r.verdict.notes);
        let a = hecke_two_algebra(&build_hecke(2, &int(p as i64)).unwrap());
        assert_eq!(classify_2dim(&a).unwrap(), TwoDimClass::Lambda { lambda: l });
    }
}
