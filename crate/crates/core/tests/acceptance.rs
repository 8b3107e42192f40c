//! Acceptance criteria 1–9. Each criterion prints one PASS/FAIL line; the
//! run then checks that the failing set is exactly the documented one and
//! that the command line honors its exit-code contract.

use std::collections::BTreeSet;
use std::time::Instant;

use posalg::algebra::*;
use posalg::cli;
use posalg::dilation::stable::block_sum;
use posalg::dilation::*;
use posalg::hecke::algebra::tau_basis_two_algebra;
use posalg::hecke::*;
use posalg::io::{emit_2alg, parse_2alg};
use posalg::scalars::rational::{int, rat};
use posalg::scalars::Rational;
use posalg::semigroup::bialgebra::isomorphic_as_labeled;
use posalg::semigroup::catalog::{ambient_catalog, full_catalog, AmbientSpec};
use posalg::semigroup::monoid::full_transformation_monoid_2;
use posalg::semigroup::*;

/// Criteria whose exact wording cannot be met, with the reason.
const KNOWN_FAILURES: &[(u32, &str)] =
    &[(7, "{0,2},{1,3} is the double-coset partition of the subgroup {0,2} and is stable")];

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn group_algebra(spec: GroupSpec) -> TwoAlgebra {
    semigroup_bialgebra(&InverseSemigroup::new(build_group(&spec).unwrap()).unwrap()).unwrap()
}

fn criterion_1() -> Outcome {
    let cat = full_catalog();
    let names: BTreeSet<String> = cat.iter().map(AmbientSpec::name).collect();
    for n in ["S3", "S4", "D4", "Q8", "I1", "I2", "I3", "I1_1", "I1_2", "I1_3"] {
        check(names.contains(n), format!("{n} missing from the catalog"))?;
    }
    check(cat.iter().filter(|a| a.is_group() && a.order() <= 16).count() >= 27, "too few groups")?;
    for amb in &cat {
        let a = semigroup_bialgebra(&amb.build().unwrap()).unwrap();
        let (m, c) = check_positivity(&a).unwrap();
        check(m.is_holds() && c.is_holds(), format!("{}: {} / {}", amb.name(), m.notes, c.notes))?;
    }
    Ok(format!("{} catalog bialgebras positive on both sides", cat.len()))
}

fn criterion_2() -> Outcome {
    let cat = full_catalog();
    for amb in &cat {
        let s = amb.build().unwrap();
        let a = semigroup_bialgebra(&s).unwrap();
        let n = amb.name();
        check(is_bialgebra(&a).unwrap().is_holds(), format!("{n}: is_bialgebra"))?;
        check(check_involutive(&a).unwrap().is_holds(), format!("{n}: check_involutive"))?;
        check(is_semisimple(&a, Side::Algebra).unwrap().is_holds(), format!("{n}: algebra side"))?;
        check(is_semisimple(&a, Side::Coalgebra).unwrap().is_holds(), format!("{n}: coalgebra side"))?;
        check(a.is_cocommutative(), format!("{n}: cocommutative"))?;
        let r = recover_semigroup(&a).map_err(|e| format!("{n}: {e}"))?;
        check(isomorphic_as_labeled(&s, &r), format!("{n}: recovery"))?;
    }
    for (k, big) in [(2, 4), (3, 9)] {
        let a = semigroup_bialgebra(&matrix_unit_semigroup(k).unwrap()).unwrap();
        let d = wedderburn_dims(&a).unwrap();
        check(d == vec![big, 1], format!("wedderburn_dims(I1_{k}) = {d:?}"))?;
    }
    Ok(format!("{} members; wedderburn I1_2 = {{4,1}}, I1_3 = {{9,1}}", cat.len()))
}

fn criterion_3() -> Outcome {
    let grid = [rat(1, 2), int(1), int(2), int(3), rat(5, 2)];
    for n in 2..=4 {
        for q in &grid {
            let a = hecke_two_algebra(&build_hecke(n, q).unwrap());
            check(validate_2_algebra(&a).unwrap().is_holds(), format!("H_{n}({q}) invalid"))?;
            for i in 0..a.dim {
                for j in 0..a.dim {
                    let sum = a.mult.slice_ij(i, j).iter().fold(int(0), |s, (_, c)| s + c);
                    check(sum == int(1), format!("H_{n}({q}): row ({i},{j}) sums to {sum}"))?;
                }
            }
            let pos = check_positive_2_algebra(&a).unwrap();
            check(pos.is_holds() == (*q >= int(1)), format!("H_{n}({q}) positivity: {}", pos.notes))?;
        }
        let h = build_hecke(n, &int(1)).unwrap();
        let d = h.dim();
        let sn = StructureTensor::from_entries(
            d,
            (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| {
                (i, j, h.index[&h.basis[i].compose(&h.basis[j])], int(1))
            }),
        )
        .unwrap();
        check(hecke_two_algebra(&h).mult == sn, format!("H_{n}(1) differs from C[S_{n}]"))?;
    }
    Ok("n ≤ 4 on the q grid: valid, stochastic, positive iff q ≥ 1, H_n(1) = C[S_n]".into())
}

fn criterion_4() -> Outcome {
    let mut parts = Vec::new();
    for (n, p) in [(2, 2), (2, 3), (2, 5), (3, 2)] {
        let t = Instant::now();
        let r = iwahori_check(n, p).unwrap();
        let secs = t.elapsed().as_secs_f64();
        check(r.verdict.is_holds(), format!("({n},{p}): {}", r.verdict.notes))?;
        check(r.mismatches == 0, format!("({n},{p}): {} mismatches", r.mismatches))?;
        if n == 3 {
            check(r.identities == 216, format!("(3,2) compared {} identities", r.identities))?;
            check(secs < 120.0, format!("(3,2) took {secs:.1}s"))?;
        }
        parts.push(format!("({n},{p}) {:.2}s", secs));
    }
    Ok(format!("Holds for {}; 216 identities at (3,2)", parts.join(", ")))
}

fn criterion_5() -> Outcome {
    let c = lambda_census(8, &ambient_catalog(8, true)).unwrap();
    // independent oracle: {e}, G∖{e} in Z_{n+1} realizes 1/n, and only 1/n occur
    let expected: Vec<Rational> = (1..=7).map(|n| rat(1, n)).collect();
    let mut got = c.strict_lambdas();
    got.sort();
    let mut exp = expected.clone();
    exp.sort();
    check(got == exp, format!("strict λ = {got:?}"))?;
    for row in &c.strict {
        check(row.predicted.is_some(), format!("λ = {} not predicted", row.lambda))?;
        for w in &row.witnesses {
            let a = semigroup_bialgebra(&w.ambient.build().unwrap()).unwrap();
            let sums: Vec<_> = (0..w.partition.num_blocks()).map(|b| block_sum(&w.partition, b)).collect();
            check(is_strict_subobject(&a, &sums).unwrap().is_holds(), format!("{} fails re-verification", w.describe()))?;
        }
    }
    check(
        c.discrepancies.iter().any(|d| d.contains("A_1/3") && d.contains("Z4 {0},{1,2,3}")),
        "A_1/3 discrepancy missing",
    )?;
    Ok(format!("strict λ = 1/n for n ≤ 7, all re-verified; {} discrepancy line(s)", c.discrepancies.len()))
}

fn criterion_6() -> Outcome {
    let mut found = Vec::new();
    for l in [int(1), rat(1, 2), rat(1, 3), rat(1, 4)] {
        let q = QuasiCharacterMatrix::from_rationals(&[vec![int(1), int(1)], vec![int(1), -l.clone()]]).unwrap();
        let w = coarse_grain_search(&q, 8).unwrap().ok_or(format!("no coarse grain for λ = {l}"))?;
        let v = verify_nonstrict_witness(&nonstrict_from_coarse_grain(&w, &q).unwrap()).unwrap();
        check(v.is_holds(), format!("λ = {l}: {}", v.notes))?;
        found.push(format!("{l} in {}", w.group_name()));
    }
    let mut cat = ambient_catalog(16, true);
    cat.retain(|a| a.order() <= 16);
    let s = strict_dilation_search(&a_lambda(&rat(2, 5)).unwrap(), &cat).unwrap();
    check(s.witnesses.is_empty(), "A_2/5 has a strict witness")?;
    check(s.runs.iter().all(|r| r.mode == EnumerationMode::Exhaustive), "search not exhaustive")?;
    check(theorem3_predicate(&rat(2, 5)).unwrap().is_none(), "predicate predicts 2/5")?;
    Ok(format!("coarse grains {}; A_2/5: none among {} members (exhaustive)", found.join(", "), s.runs.len()))
}

fn set_partitions(n: usize) -> Vec<Partition> {
    fn rec(i: usize, n: usize, labels: &mut Vec<usize>, max: usize, out: &mut Vec<Partition>) {
        if i == n {
            out.push(Partition::from_labels(labels));
            return;
        }
        for l in 0..=max + 1 {
            labels.push(l);
            rec(i + 1, n, labels, max.max(l), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, &mut vec![0], 0, &mut out);
    out
}

/// Stability from the table alone: the number of ways to write g as xy with
/// x, y in given blocks is constant on the block of g, and inversion maps
/// blocks to blocks. For groups a ♯-closed subalgebra of C[G] is a finite
/// dimensional C*-algebra, so it has an identity of its own.
fn oracle_stable(g: &FiniteMonoid, p: &Partition) -> bool {
    let n = g.size;
    let e = g.unit.unwrap();
    let inv: Vec<usize> = (0..n).map(|x| (0..n).find(|&y| g.mul(x, y) == e).unwrap()).collect();
    let blocks = p.blocks();
    for b in blocks {
        let ib = p.block_of(inv[b[0]]);
        if b.iter().any(|&x| p.block_of(inv[x]) != ib) {
            return false;
        }
    }
    for ba in blocks {
        for bb in blocks {
            let mut count = vec![0usize; n];
            for &x in ba {
                for &y in bb {
                    count[g.mul(x, y)] += 1;
                }
            }
            if blocks.iter().any(|c| c.iter().any(|&z| count[z] != count[c[0]])) {
                return false;
            }
        }
    }
    true
}

fn criterion_7() -> Outcome {
    let groups: Vec<AmbientSpec> = full_catalog().into_iter().filter(|a| a.is_group() && a.order() <= 6).collect();
    let mut total = 0;
    for amb in &groups {
        let s = amb.build().unwrap();
        let a = semigroup_bialgebra(&s).unwrap();
        let n = s.size();
        let all = set_partitions(n);
        let brute: BTreeSet<Vec<Vec<usize>>> = all
            .iter()
            .filter(|p| is_stable_partition(&a, p).unwrap().0.is_holds())
            .map(|p| p.blocks().to_vec())
            .collect();
        let oracle: BTreeSet<Vec<Vec<usize>>> =
            all.iter().filter(|p| oracle_stable(&s.base, p)).map(|p| p.blocks().to_vec()).collect();
        let enumerated: BTreeSet<Vec<Vec<usize>>> =
            enumerate_stable_partitions(&s, n).unwrap().certs.iter().map(|c| c.partition.blocks().to_vec()).collect();
        check(enumerated == brute, format!("{}: enumeration differs from brute force", amb.name()))?;
        check(oracle == brute, format!("{}: oracle differs from is_stable_partition", amb.name()))?;
        total += brute.len();
    }
    let z4 = InverseSemigroup::new(build_group(&GroupSpec::Cyclic { m: 4 }).unwrap()).unwrap();
    let mut two: Vec<String> = enumerate_stable_partitions(&z4, 2)
        .unwrap()
        .certs
        .iter()
        .filter(|c| c.partition.num_blocks() == 2)
        .map(|c| c.partition.display(None))
        .collect();
    let mut oracle_two: Vec<String> = set_partitions(4)
        .into_iter()
        .filter(|p| p.num_blocks() == 2 && oracle_stable(&z4.base, p))
        .map(|p| p.display(None))
        .collect();
    two.sort();
    oracle_two.sort();
    check(two == oracle_two, format!("Z4 two-block: {two:?} vs oracle {oracle_two:?}"))?;
    check(
        two == vec!["{0},{1,2,3}".to_string()],
        format!(
            "enumeration = brute force = oracle on {} groups ({total} stable partitions), but Z4 two-block stable partitions are {}",
            groups.len(),
            two.join(" and ")
        ),
    )?;
    Ok("enumeration, brute force and oracle agree; Z4 two-block = {0},{1,2,3}".into())
}

fn criterion_8() -> Outcome {
    let mut algebras: Vec<(String, TwoAlgebra)> = Vec::new();
    for amb in full_catalog() {
        let a = semigroup_bialgebra(&amb.build().unwrap()).unwrap();
        algebras.push((format!("{}*", amb.name()), dual(&a).unwrap()));
        algebras.push((amb.name(), a));
    }
    for n in 2..=3 {
        for q in [rat(1, 2), int(1), int(2), rat(5, 2)] {
            algebras.push((format!("H_{n}({q})"), hecke_two_algebra(&build_hecke(n, &q).unwrap())));
        }
    }
    for l in [int(0), rat(1, 3), rat(2, 5), int(1)] {
        algebras.push((format!("A_{l}"), a_lambda(&l).unwrap()));
    }
    for (name, a) in &algebras {
        check(dual(&dual(a).unwrap()).unwrap() == *a, format!("{name}: dual∘dual"))?;
        let text = emit_2alg(a);
        let b = parse_2alg(&text).map_err(|e| format!("{name}: {e}"))?;
        check(b == *a && b.labels == a.labels, format!("{name}: parse∘emit"))?;
        check(emit_2alg(&b) == text, format!("{name}: emit not canonical"))?;
    }
    Ok(format!("{} algebras: dual∘dual = id and parse∘emit = id", algebras.len()))
}

fn criterion_9() -> Outcome {
    let h = build_hecke(2, &rat(1, 2)).unwrap();
    let (m, _) = check_positivity(&tau_basis_two_algebra(&h)).unwrap();
    let w = m.witness.ok_or("H_2(1/2): no witness")?;
    check(w.indices == vec![1, 1, 1] && w.values == vec!["-1/2"], format!("τ² witness {w:?}"))?;

    let mut z2 = group_algebra(GroupSpec::Cyclic { m: 2 });
    z2.mult = StructureTensor::from_entries(
        2,
        vec![(0, 0, 0, int(1)), (0, 1, 1, int(2)), (1, 0, 1, int(1)), (1, 1, 0, int(1))],
    )
    .unwrap();
    let v = validate_2_algebra(&z2).unwrap();
    check(v.is_fails() && v.notes.starts_with("unit law"), format!("perturbed Z2: {}", v.notes))?;

    let mut eps = a_lambda(&rat(1, 2)).unwrap();
    eps.counit[1] = rat(-1, 2);
    let v = validate_2_algebra(&eps).unwrap();
    check(v.is_fails() && v.notes.contains("counit"), format!("ε(u) = −1/2: {}", v.notes))?;

    let z4 = group_algebra(GroupSpec::Cyclic { m: 4 });
    let p = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
    let (v, _) = is_stable_partition(&z4, &p).unwrap();
    check(v.is_fails(), "Z4 {0,1},{2,3} stable")?;
    // (x₀+x₁)² = x₀ + 2x₁ + x₂: coefficient 1 on x₀ and 2 on x₁ in one block
    let sq = z4.product(&block_sum(&p, 0), &block_sum(&p, 0));
    check(sq == vec![int(1), int(2), int(1), int(0)], format!("(x0+x1)² = {sq:?}"))?;
    let sums = vec![block_sum(&p, 0), block_sum(&p, 1)];
    check(is_strict_subobject(&z4, &sums).unwrap().is_fails(), "non-subalgebra accepted")?;

    let (v, inv) = is_inverse(&full_transformation_monoid_2());
    check(v.is_fails() && inv.is_none(), "T2 accepted as inverse")?;
    check(InverseSemigroup::new(full_transformation_monoid_2()).is_err(), "T2 constructed")?;
    Ok(format!("τ² = -1/2 τ + 1/2; unit law; counit law; Z4 {{0,1}},{{2,3}}; T2 ({})", v.notes))
}

fn acceptance() {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = BTreeSet::new();
    for (n, f) in criteria {
        let t = Instant::now();
        match f() {
            Ok(msg) => println!("criterion {n}: PASS ({:.1}s) {msg}", t.elapsed().as_secs_f64()),
            Err(msg) => {
                println!("criterion {n}: FAIL ({:.1}s) {msg}", t.elapsed().as_secs_f64());
                failed.insert(n);
            }
        }
    }
    for (n, why) in KNOWN_FAILURES {
        if failed.contains(n) {
            println!("criterion {n}: known failure: {why}");
        }
    }
    let known: BTreeSet<u32> = KNOWN_FAILURES.iter().map(|(n, _)| *n).collect();
    assert_eq!(failed, known, "failing criteria differ from the documented ones");
}

fn cli_exit_codes() {
    let dir = std::env::temp_dir().join(format!("posalg-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = |name: &str| dir.join(name).to_string_lossy().into_owned();
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/z4.2alg");
    let run = |args: &[&str]| cli::run(std::iter::once("posalg").chain(args.iter().copied()));

    assert_eq!(run(&["verify", fixture, "--all", "--out", &out("verify.json")]), 0);
    let report = std::fs::read_to_string(out("verify.json")).unwrap();
    assert!(report.starts_with("{\n  \"schema_version\": 1"));
    assert!(!report.contains("\"Fails\"") && !report.contains("\"Inconclusive\""));

    let strict = out("strict.json");
    assert_eq!(run(&["dilate", "strict", "--target", "a_lambda:2/5", "--max-order", "16", "--out", &strict]), 1);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&strict).unwrap()).unwrap();
    assert_eq!(v["result"]["witnesses"], serde_json::json!([]));
    assert_eq!(v["command"]["command"]["dilate"]["strict"]["max_order"], 16);

    let iw = out("iwahori.json");
    assert_eq!(run(&["hecke", "iwahori", "-n", "3", "-p", "2", "--out", &iw]), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&iw).unwrap()).unwrap();
    assert_eq!(v["result"]["identities"], 216);

    assert_eq!(run(&["dilate", "coarse", "--lambda", "1/3", "--max-order", "8", "--out", &out("c.json")]), 0);
    assert_eq!(run(&["dilate", "strict", "--target", "a_lambda:1/3", "--max-order", "4", "--out", &out("s.json")]), 0);
    assert_eq!(run(&["hecke", "build", "-n", "2", "-q", "1/2", "--out", &out("h.2alg")]), 0);
    assert_eq!(run(&["verify", &out("h.2alg"), "--out", &out("h.json")]), 1);
    assert_eq!(run(&["build", "I1_2", "--out", &out("i12.2alg")]), 0);
    assert_eq!(run(&["recover", &out("i12.2alg"), "--out", &out("i12.json")]), 0);
    assert_eq!(run(&["dual", fixture, "--out", &out("d.2alg")]), 0);
    assert_eq!(run(&["verify", fixture, "--bogus"]), 3);
    assert_eq!(run(&["frobnicate"]), 3);
    assert_eq!(run(&["verify", &out("missing.2alg")]), 3);

    let bad = out("bad.2alg");
    std::fs::write(&bad, std::fs::read_to_string(fixture).unwrap().replacen("[0,0,0,\"1\"]", "[0,0,0,\"1/0\"]", 1)).unwrap();
    assert_eq!(run(&["verify", &bad]), 3);
    let _ = std::fs::remove_dir_all(&dir);
}

fn main() {
    acceptance();
    cli_exit_codes();
    println!("cli exit codes: PASS");
}
