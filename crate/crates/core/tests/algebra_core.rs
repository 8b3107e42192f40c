use posalg::algebra::*;
use posalg::scalars::rational::{int, rat};
use posalg::semigroup::catalog::full_catalog;
use posalg::semigroup::*;

fn group_algebra(spec: GroupSpec) -> TwoAlgebra {
    semigroup_bialgebra(&InverseSemigroup::new(build_group(&spec).unwrap()).unwrap()).unwrap()
}

fn truncated_polynomial() -> TwoAlgebra {
    // basis {1, x}, x² = 0, with the comultiplication of functions on ℤ₂ so
    // that the coalgebra side is well formed
    let mult = StructureTensor::from_entries(
        2,
        vec![(0, 0, 0, int(1)), (0, 1, 1, int(1)), (1, 0, 1, int(1))],
    )
    .unwrap();
    let comult = StructureTensor::from_entries(2, vec![(0, 0, 0, int(1)), (1, 1, 1, int(1))]).unwrap();
    TwoAlgebra::new(
        2,
        mult,
        vec![int(1), int(0)],
        comult,
        vec![int(1), int(1)],
        AntilinearMap::conjugation(2),
        AntilinearMap::conjugation(2),
    )
    .unwrap()
}

#[test]
fn validate_examples() {
    let z2 = group_algebra(GroupSpec::Cyclic { m: 2 });
    assert!(validate_2_algebra(&z2).unwrap().is_holds());
    let mut bad = z2.clone();
    bad.mult = StructureTensor::from_entries(
        2,
        vec![(0, 0, 0, int(1)), (0, 1, 1, int(2)), (1, 0, 1, int(1)), (1, 1, 0, int(1))],
    )
    .unwrap();
    let v = validate_2_algebra(&bad).unwrap();
    assert!(v.is_fails());
    assert!(v.witness.unwrap().description.starts_with("unit law"), "{}", v.notes);
    let mut short = z2.clone();
    short.unit.pop();
    assert!(validate_2_algebra(&short).is_err());
}

#[test]
fn involutive_examples() {
    let s3 = group_algebra(GroupSpec::Symmetric { n: 3 });
    assert!(check_involutive(&s3).unwrap().is_holds());
    let mut conj_only = s3.clone();
    conj_only.invol = AntilinearMap::conjugation(6);
    let v = check_involutive(&conj_only).unwrap();
    assert!(v.is_fails());
    let w = v.witness.unwrap();
    let (a, b) = (w.indices[0], w.indices[1]);
    let labels = s3.labels.clone().unwrap();
    assert!(labels[a].len() == 5 && labels[b].len() == 5, "{} {}", labels[a], labels[b]);
    assert_ne!(s3.basis_product(a, b), s3.basis_product(b, a));
}

#[test]
fn bialgebra_examples() {
    assert!(is_bialgebra(&group_algebra(GroupSpec::Cyclic { m: 4 })).unwrap().is_holds());
    let i12 = semigroup_bialgebra(&matrix_unit_semigroup(2).unwrap()).unwrap();
    assert!(i12.weakened);
    assert!(is_bialgebra(&i12).unwrap().is_holds());
    // the counit of the dual is not a character when S has no unit
    let d = dual(&i12).unwrap();
    assert!(is_bialgebra(&d).unwrap().is_fails());
    let i2 = semigroup_bialgebra(&symmetric_inverse_semigroup(2).unwrap()).unwrap();
    assert!(is_bialgebra(&dual(&i2).unwrap()).unwrap().is_holds());
}

#[test]
fn semisimplicity_and_wedderburn() {
    let s3 = group_algebra(GroupSpec::Symmetric { n: 3 });
    assert!(is_semisimple(&s3, Side::Algebra).unwrap().is_holds());
    let t = truncated_polynomial();
    let v = is_semisimple(&t, Side::Algebra).unwrap();
    assert!(v.is_fails());
    assert_eq!(v.witness.unwrap().indices, vec![1]);
    let i2 = semigroup_bialgebra(&symmetric_inverse_semigroup(2).unwrap()).unwrap();
    assert!(is_semisimple(&i2, Side::Algebra).unwrap().is_holds());
    assert!(is_semisimple(&i2, Side::Coalgebra).unwrap().is_holds());

    let mut d = wedderburn_dims(&s3).unwrap();
    d.sort();
    assert_eq!(d, vec![1, 1, 4]);
    assert_eq!(wedderburn_dims(&group_algebra(GroupSpec::Cyclic { m: 4 })).unwrap(), vec![1, 1, 1, 1]);
    for (n, big) in [(2, 4), (3, 9)] {
        let a = semigroup_bialgebra(&matrix_unit_semigroup(n).unwrap()).unwrap();
        assert_eq!(wedderburn_dims(&a).unwrap(), vec![big, 1]);
    }
    let mut d = wedderburn_dims(&i2).unwrap();
    d.sort();
    assert_eq!(d, vec![1, 1, 1, 4]);
    let q8 = group_algebra(GroupSpec::Dicyclic { n: 2 });
    let mut d = wedderburn_dims(&q8).unwrap();
    d.sort();
    assert_eq!(d, vec![1, 1, 1, 1, 4]);
}

#[test]
fn dual_bookkeeping() {
    let s3 = group_algebra(GroupSpec::Symmetric { n: 3 });
    assert_eq!(dual(&dual(&s3).unwrap()).unwrap(), s3);
    let d = dual(&s3).unwrap();
    assert!(d.is_commutative());
    assert!(validate_2_algebra(&d).unwrap().is_holds());
    assert_eq!(d.counit, s3.unit);
    let _ = rat(1, 2);
}

#[test]
fn theorem_one_over_catalog() {
    for amb in full_catalog() {
        let s = amb.build().unwrap();
        let a = semigroup_bialgebra(&s).unwrap();
        assert!(is_bialgebra(&a).unwrap().is_holds(), "{}", amb.name());
        assert!(check_involutive(&a).unwrap().is_holds(), "{}", amb.name());
        let (m, c) = check_positivity(&a).unwrap();
        assert!(m.is_holds() && c.is_holds(), "{}: {:?} {:?}", amb.name(), m, c);
        let (t2m, t2c) = positivity_tier2(&a);
        if let Some((t1m, t1c)) = positivity_tier1(&a) {
            if let Some(v) = t2m {
                assert_eq!(v.status, t1m.status);
            }
            if let Some(v) = t2c {
                assert_eq!(v.status, t1c.status);
            }
        }
    }
}

#[test]
fn theorem_two_and_recovery() {
    for amb in full_catalog() {
        let s = amb.build().unwrap();
        let a = semigroup_bialgebra(&s).unwrap();
        assert!(a.is_cocommutative());
        let r = recover_semigroup(&a).unwrap();
        assert!(posalg::semigroup::bialgebra::isomorphic_as_labeled(&s, &r), "{}", amb.name());
        assert!(almost_antipode_check(&s).unwrap().is_holds(), "{}", amb.name());
    }
}

#[test]
fn inverse_semigroup_examples() {
    let t2 = posalg::semigroup::monoid::full_transformation_monoid_2();
    let (v, inv) = is_inverse(&t2);
    assert!(v.is_fails() && inv.is_none());
    let w = v.witness.unwrap();
    assert_eq!(w.indices, vec![2, 2, 3]);
}
