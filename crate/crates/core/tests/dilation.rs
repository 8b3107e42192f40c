use posalg::algebra::*;
use posalg::dilation::*;
use posalg::dilation::stable::block_sum;
use posalg::scalars::rational::{int, rat};
use posalg::semigroup::catalog::full_catalog;
use posalg::semigroup::structure::{all_subgroups, automorphisms};
use posalg::semigroup::*;

fn small_catalog() -> Vec<posalg::semigroup::catalog::AmbientSpec> {
    full_catalog().into_iter().filter(|a| a.order() <= 8).collect()
}

#[test]
fn induced_algebras_are_homogeneous_positive() {
    let mut count = 0;
    for amb in small_catalog() {
        let s = amb.build().unwrap();
        let a = semigroup_bialgebra(&s).unwrap();
        for cert in enumerate_stable_partitions(&s, 3).unwrap().certs {
            let name = format!("{} {}", amb.name(), cert.partition.display(None));
            let Ok((induced, norm)) = induced_two_algebra(&a, &cert) else {
                assert!(!amb.is_group(), "{name}: groups always normalize");
                continue;
            };
            let (m, c) = check_positivity(&induced).unwrap();
            assert!(m.is_holds() && c.is_holds(), "{name}: {} {}", m.notes, c.notes);
            // nonunital ambients are only weakened bialgebras: Δ(1) ≠ 1⊗1 there
            if !a.weakened {
                let p2 = check_positive_2_algebra(&induced).unwrap();
                assert!(p2.is_holds(), "{name}: {}", p2.notes);
                assert!(check_homogeneity(&induced).unwrap().is_holds(), "{name}");
            }
            if amb.is_group() {
                let sizes: Vec<_> = cert.partition.blocks().iter().map(|b| int(b.len() as i64)).collect();
                assert_eq!(norm, sizes, "{name}");
            }
            count += 1;
        }
    }
    assert!(count > 50, "{count}");
}

#[test]
fn double_cosets_and_orbits_are_stable() {
    for amb in full_catalog().into_iter().filter(|a| a.is_group() && a.order() <= 12) {
        let g = amb.build().unwrap().base;
        let a = semigroup_bialgebra(&amb.build().unwrap()).unwrap();
        let subs = all_subgroups(&g);
        for h in &subs {
            let p = double_coset_partition(&g, h, h).unwrap();
            assert!(is_stable_partition(&a, &p).unwrap().0.is_holds(), "{} H={h:?}", amb.name());
        }
        let auts = automorphisms(&g, 2000).unwrap();
        for aut in auts.iter().take(20) {
            let p = automorphism_orbit_partition(&g, std::slice::from_ref(aut)).unwrap();
            assert!(is_stable_partition(&a, &p).unwrap().0.is_holds(), "{} {aut:?}", amb.name());
        }
        let p = automorphism_orbit_partition(&g, &auts).unwrap();
        assert!(is_stable_partition(&a, &p).unwrap().0.is_holds(), "{}", amb.name());
    }
}

#[test]
fn quasicharacter_rows_are_convex() {
    for amb in small_catalog().into_iter().filter(|a| a.is_group()) {
        let s = amb.build().unwrap();
        if !s.base.is_commutative() {
            continue;
        }
        let a = semigroup_bialgebra(&s).unwrap();
        for cert in enumerate_stable_partitions(&s, 3).unwrap().certs {
            let (induced, _) = induced_two_algebra(&a, &cert).unwrap();
            if let Ok(q) = quasicharacter_matrix(&induced) {
                QuasiCharacterMatrix::new(q.entries.clone()).unwrap();
                let back = algebra_from_quasicharacters(&q).unwrap();
                assert_eq!(back.dim, induced.dim);
            }
        }
    }
}

#[test]
fn witnesses_reverify_from_scratch() {
    let catalog: Vec<_> = full_catalog().into_iter().filter(|a| a.order() <= 6).collect();
    for l in [rat(1, 2), rat(1, 3), rat(1, 5)] {
        let target = a_lambda(&l).unwrap();
        let search = strict_dilation_search(&target, &catalog).unwrap();
        assert!(!search.witnesses.is_empty(), "λ={l}");
        for w in &search.witnesses {
            let s = w.ambient.build().unwrap();
            let a = semigroup_bialgebra(&s).unwrap();
            let (v, cert) = is_stable_partition(&a, &w.partition).unwrap();
            assert!(v.is_holds());
            let sums: Vec<_> = (0..w.partition.num_blocks()).map(|b| block_sum(&w.partition, b)).collect();
            assert!(is_strict_subobject(&a, &sums).unwrap().is_holds());
            let (induced, _) = induced_two_algebra(&a, &cert.unwrap()).unwrap();
            assert_eq!(posalg::dilation::search::permute_basis(&induced, &w.iso), target);
        }
    }
    for l in [int(1), rat(1, 2), rat(1, 3), rat(1, 4)] {
        let q = QuasiCharacterMatrix::from_rationals(&[vec![int(1), int(1)], vec![int(1), -l.clone()]]).unwrap();
        let w = coarse_grain_search(&q, 8).unwrap().unwrap();
        let nw = nonstrict_from_coarse_grain(&w, &q).unwrap();
        assert!(verify_nonstrict_witness(&nw).unwrap().is_holds(), "λ={l}");
    }
}

#[test]
fn non_subalgebra_and_nilpotent_controls() {
    let z4 = semigroup_bialgebra(&InverseSemigroup::new(build_group(&GroupSpec::Cyclic { m: 4 }).unwrap()).unwrap()).unwrap();
    let p = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
    let (v, _) = is_stable_partition(&z4, &p).unwrap();
    assert!(v.is_fails());
    let sums = vec![block_sum(&p, 0), block_sum(&p, 1)];
    assert!(is_strict_subobject(&z4, &sums).unwrap().is_fails());

    let mut nil = a_lambda(&rat(1, 2)).unwrap();
    nil.mult = StructureTensor::from_entries(2, vec![(0, 0, 0, int(1)), (0, 1, 1, int(1)), (1, 0, 1, int(1))]).unwrap();
    assert_eq!(classify_2dim(&nil).unwrap(), TwoDimClass::NotSemisimple);
}
