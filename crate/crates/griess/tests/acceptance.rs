//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use griess::data;
use griess::verify::{self, Status, Target, VerifyOptions};
use griess_core::algebra::{Element, StructureAlgebra};
use griess_core::niemeier::{lagrangian_extension_count, table1_consistency, table2_consistency, F2QuadSpace};
use griess_core::rational::q;
use griess_core::{BPlusAlgebra, PhiMap, Rational, RootAlgebra, RootSystem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_2024;
const RANDOM_CHECKS: usize = 500;

type Outcome = Result<String, String>;

fn rs(spec: &str) -> RootSystem {
    RootSystem::from_spec(spec).unwrap()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn family_list() -> Vec<&'static str> {
    vec!["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8", "A24"]
}

fn lemma21() -> Outcome {
    let specs: Vec<String> = family_list().iter().map(|s| s.to_string()).collect();
    let reports = verify::run(Target::Lemma21, &specs, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    for r in &reports {
        ensure(r.passed, format!("{:?} failed", r.spec))?;
    }
    Ok(format!("{} root systems", reports.len()))
}

fn identities() -> Outcome {
    for spec in family_list() {
        let a = RootAlgebra::build_a(rs(spec));
        let solved = a.algebra().find_identity().ok_or(format!("A({spec}) has no identity"))?;
        ensure(solved == a.delta().map_err(|e| e.to_string())?, format!("A({spec}): delta differs"))?;
        ensure(a.algebra().central_charge(&solved).unwrap() == Rational::from(rs(spec).rank()), format!("c(delta) on {spec}"))?;
        let t = RootAlgebra::build_t(rs(spec));
        let solved = t.algebra().find_identity().ok_or(format!("T({spec}) has no identity"))?;
        ensure(solved == t.epsilon(), format!("T({spec}): epsilon differs"))?;
    }
    Ok("delta and epsilon equal the solved identities".into())
}

fn expected_charges(l: i64) -> Vec<Rational> {
    let mut v: Vec<Rational> = (1..=l).map(|i| q(1, 1) - q(6, (i + 2) * (i + 3))).collect();
    v.push(q(2 * l, l + 3));
    v
}

fn charges() -> Outcome {
    for l in 1..=24i64 {
        let r = RootAlgebra::build_a(rs(&format!("A{l}"))).coset_chain_decompose().map_err(|e| e.to_string())?;
        ensure(r.charges == expected_charges(l), format!("A{l}: charges {:?}", r.charges))?;
        ensure(r.checks.all(), format!("A{l}: checks {:?}", r.checks))?;
    }
    Ok("A1..A24".into())
}

fn thm27() -> Outcome {
    let a2 = RootAlgebra::build_a(rs("A2")).coset_chain_decompose().map_err(|e| e.to_string())?;
    ensure(a2.charges == [q(1, 2), q(7, 10), q(4, 5)], "A2 charges")?;
    ensure(a2.checks.all(), "A2 checks")?;
    let a24 = RootAlgebra::build_a(rs("A24")).coset_chain_decompose().map_err(|e| e.to_string())?;
    ensure(a24.checks.all(), format!("A24 checks {:?}", a24.checks))?;
    ensure(a24.charges.len() == 25, "A24 has 25 idempotents")?;
    ensure(a24.charges[23] == q(116, 117), "e_24 charge 116/117")?;
    ensure(a24.charges[24] == q(16, 9), "e_25 charge 16/9")?;
    let total: Rational = a24.charges.iter().sum();
    ensure(total == q(24, 1), "A24 charges sum to 24")?;
    Ok("A2: 1/2, 7/10, 4/5; A24 ends 116/117, 16/9".into())
}

fn thm31() -> Outcome {
    for spec in ["A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5", "E6"] {
        let ra = RootAlgebra::build_a(rs(spec));
        let bp = BPlusAlgebra::build(rs(spec));
        let phi = PhiMap::build(&ra, &bp).map_err(|e| e.to_string())?;
        let r = phi.verify_theorem_3_1();
        ensure(r.passed(), format!("{spec}: {r:?}"))?;
        ensure(r.kernel_is_radical, format!("{spec}: kernel is not the radical"))?;
        if spec.starts_with('A') {
            ensure(r.kernel_dim == 0 && r.map_rank == bp.dim(), format!("{spec}: not bijective"))?;
        }
        if spec == "D4" {
            ensure(r.kernel_dim == 2, "D4 kernel dimension 2")?;
        }
    }
    Ok("A1..A6, D4, D5, E6; D4 kernel 2 = radical".into())
}

fn lemma42() -> Outcome {
    let entries: Vec<_> = data::catalog().into_iter().filter(|e| !e.is_leech()).collect();
    ensure(entries.len() == 23, "23 root systems")?;
    let mut dims = Vec::new();
    for e in &entries {
        let r = e.lemma_4_2_subalgebra().map_err(|err| format!("{}: {err}", e.name()))?;
        ensure(r.passed(), format!("{}: dimension {} checks {:?}", e.name(), r.dimension, r.report.checks))?;
        dims.push((e.name().to_string(), r.dimension));
    }
    let dim_of = |n: &str| dims.iter().find(|(m, _)| m == n).map(|d| d.1);
    ensure(dim_of("A1^24") == Some(48), "A1^24 gives 48")?;
    ensure(dim_of("A2^12") == Some(36), "A2^12 gives 36")?;
    Ok("23 entries; A1^24 -> 48, A2^12 -> 36".into())
}

fn f2_counts() -> Outcome {
    let mut got = Vec::new();
    for dim in [2usize, 4, 6, 8] {
        let n = F2QuadSpace::new(dim).unwrap().brute_force_lagrangians().map_err(|e| e.to_string())?;
        ensure(lagrangian_extension_count(dim as u32 / 2) == n.into(), format!("dim {dim}: formula"))?;
        got.push(n);
    }
    ensure(got == [2, 6, 30, 270], format!("{got:?}"))?;
    Ok("2, 6, 30, 270".into())
}

fn table1() -> Outcome {
    let r = table1_consistency(&data::catalog());
    ensure(r.rows.len() == 24, "24 rows")?;
    ensure(r.all_integral(), "non-integral orbit count")?;
    ensure(r.sum_matches(), format!("{} != {}", r.total, r.expected_total))?;
    Ok(format!("sum {}", r.total))
}

fn table2() -> Outcome {
    let (_, rows) = data::table2();
    let r = table2_consistency(&rows);
    for (p, c) in [("A_1", "0"), ("A_2", "A_1"), ("A_3", "A_2")] {
        ensure(r.edge_passed(p, c), format!("edge {p} -> {c}"))?;
    }
    let n = r.edges.len();
    let k = r.passed_count();
    ensure(10 * k >= 9 * n, format!("{k}/{n} edges"))?;
    let via_cli = verify::run(Target::Table2, &[], &VerifyOptions::default()).map_err(|e| e.to_string())?;
    ensure(via_cli.iter().all(|x| x.clauses.iter().all(|c| c.status == Status::Pass)), "verify table2")?;
    Ok(format!("{k}/{n} edges"))
}

fn random_element(rng: &mut ChaCha8Rng, dim: usize) -> Element {
    let pairs = (0..rng.gen_range(1..=4)).map(|_| (rng.gen_range(0..dim), q(rng.gen_range(-9..=9), rng.gen_range(1..=6))));
    Element::from_pairs(dim, pairs).unwrap()
}

fn random_checks() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let a = RootAlgebra::build_a(rs("D4"));
    let t = RootAlgebra::build_t(rs("D4"));
    let b = BPlusAlgebra::build(rs("D4"));
    let algebras: [(&str, &StructureAlgebra); 3] = [("A(D4)", a.algebra()), ("T(D4)", t.algebra()), ("B+(D4)", b.algebra())];
    for (name, alg) in algebras {
        for _ in 0..RANDOM_CHECKS {
            let (x, y) = (random_element(&mut rng, alg.dim()), random_element(&mut rng, alg.dim()));
            ensure(alg.multiply(&x, &y).unwrap() == alg.multiply(&y, &x).unwrap(), format!("{name} not commutative"))?;
        }
    }
    let bp = b.algebra();
    for _ in 0..RANDOM_CHECKS {
        let (x, y, z) = (random_element(&mut rng, bp.dim()), random_element(&mut rng, bp.dim()), random_element(&mut rng, bp.dim()));
        ensure(bp.form_invariance_defect(&x, &y, &z).unwrap() == Rational::zero(), "B+ form not invariant")?;
    }
    let r = RootAlgebra::build_a(rs("A6")).coset_chain_decompose().map_err(|e| e.to_string())?;
    let alg = RootAlgebra::build_a(rs("A6")).algebra().clone();
    for _ in 0..RANDOM_CHECKS {
        let mask: u32 = rng.gen_range(1..1 << r.idempotents.len());
        let mut sum = alg.zero();
        let mut total = Rational::zero();
        for (i, e) in r.idempotents.iter().enumerate() {
            if mask >> i & 1 == 1 {
                sum = &sum + e;
                total += &r.charges[i];
            }
        }
        ensure(alg.central_charge(&sum).unwrap() == total, format!("charge not additive for mask {mask:#b}"))?;
    }
    Ok(format!("seed {SEED:#x}, {RANDOM_CHECKS} draws per check"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("neighbour count 2h-4 and 2N = sum l h", lemma21),
        ("closed-form identities of A and T", identities),
        ("coset-chain charges for A1..A24", charges),
        ("orthogonal decomposition for A2 and A24", thm27),
        ("phi: homomorphism, isometry, onto; kernel = radical", thm31),
        ("associative subalgebras for the 23 Niemeier systems", lemma42),
        ("Lagrangian counts by brute force", f2_counts),
        ("Niemeier orbit counts sum", table1),
        ("double counting in the subspace table", table2),
        ("seeded random commutativity, invariance, additivity", random_checks),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {:>2}  {name}  [{detail}]  ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}  {name}  [{why}]  ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
