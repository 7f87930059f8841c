//! Checks against values computed independently of the library code paths.

use griess_core::algebra::Element;
use griess_core::niemeier::{lagrangian_extension_count, F2QuadSpace};
use griess_core::rational::q;
use griess_core::{BPlusAlgebra, PhiMap, Rational, RootAlgebra, RootSystem, SimpleType};

fn rs(spec: &str) -> RootSystem {
    RootSystem::from_spec(spec).unwrap()
}

/// Ambient coordinates doubled, so E-type half-integers become integers.
fn doubled(c: &[Rational]) -> Vec<i64> {
    c.iter()
        .map(|x| {
            let y = x * &Rational::from(2i64);
            i64::try_from(y.to_integer().expect("half-integral")).unwrap()
        })
        .collect()
}

/// Textbook Gaussian elimination, kept separate from the library's elimination.
fn naive_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = m[rank][c].recip();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] * &inv;
                let pivot = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn positive_root_counts() {
    for l in 1..=12usize {
        assert_eq!(rs(&format!("A{l}")).num_positive(), l * (l + 1) / 2);
    }
    for l in 4..=10usize {
        assert_eq!(rs(&format!("D{l}")).num_positive(), l * (l - 1));
    }
    assert_eq!(rs("E6").num_positive(), 36);
    assert_eq!(rs("E7").num_positive(), 63);
    assert_eq!(rs("E8").num_positive(), 120);
}

#[test]
fn e8_roots_match_coordinate_enumeration() {
    let mut expected = std::collections::BTreeSet::new();
    for i in 0..8 {
        for j in i + 1..8 {
            for si in [-2i64, 2] {
                for sj in [-2i64, 2] {
                    let mut v = vec![0i64; 8];
                    v[i] = si;
                    v[j] = sj;
                    expected.insert(v);
                }
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            expected.insert((0..8).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    assert_eq!(expected.len(), 240);
    let e8 = rs("E8");
    let mut got = std::collections::BTreeSet::new();
    for r in e8.roots() {
        let v = doubled(r.coords());
        got.insert(v.iter().map(|x| -x).collect::<Vec<_>>());
        got.insert(v);
    }
    assert_eq!(got, expected);
}

#[test]
fn neighbours_of_each_root_from_coordinates() {
    for spec in ["A1", "A2", "A5", "A8", "D4", "D6", "D8", "E6", "E7", "E8"] {
        let sys = rs(spec);
        let h = sys.components()[0].coxeter_number();
        for a in sys.roots() {
            let n = sys.roots().iter().filter(|b| *b != a && !a.dot(b).is_zero()).count();
            assert_eq!(n, 2 * h - 4, "{spec}");
        }
    }
}

#[test]
fn d4_triples_are_unique() {
    let sys = rs("D4");
    let n = sys.num_positive();
    for a in 0..n {
        for b in 0..n {
            if a == b || sys.root(a).dot(sys.root(b)).is_zero() {
                continue;
            }
            let (ca, cb) = (doubled(sys.root(a).coords()), doubled(sys.root(b).coords()));
            let sum: Vec<i64> = ca.iter().zip(&cb).map(|(x, y)| x + y).collect();
            let diff: Vec<i64> = ca.iter().zip(&cb).map(|(x, y)| x - y).collect();
            let hits: Vec<usize> = (0..n)
                .filter(|&g| {
                    let cg = doubled(sys.root(g).coords());
                    let neg: Vec<i64> = cg.iter().map(|x| -x).collect();
                    [&sum, &diff].iter().any(|v| **v == cg || **v == neg)
                })
                .collect();
            assert_eq!(hits.len(), 1);
            assert_eq!(sys.triple(a, b).unwrap(), hits[0]);
        }
    }
}

#[test]
fn a2_products_by_hand() {
    let sys = rs("A2");
    let (a, b, g) = (sys.index_of(&[1, 0]).unwrap(), sys.index_of(&[0, 1]).unwrap(), sys.index_of(&[1, 1]).unwrap());
    let ra = RootAlgebra::build_a(sys);
    let alg = ra.algebra();
    let t = |i| ra.t(i);
    let u = |i| ra.u(i).unwrap();
    let mul = |x: &Element, y: &Element| alg.multiply(x, y).unwrap();

    assert_eq!(mul(&t(a), &t(a)), t(a).scale(&q(8, 1)));
    assert_eq!(mul(&u(g), &u(g)), u(g).scale(&q(8, 1)));
    assert!(mul(&t(a), &u(a)).is_zero());
    assert_eq!(mul(&t(a), &t(b)), &(&t(a) + &t(b)) - &t(g));
    assert_eq!(mul(&u(a), &u(b)), &(&u(a) + &u(b)) - &t(g));
    assert_eq!(mul(&t(a), &u(b)), &(&t(a) + &u(b)) - &u(g));
    assert_eq!(mul(&u(b), &t(a)), &(&u(b) + &t(a)) - &u(g));

    let form = |x: &Element, y: &Element| alg.form(x, y).unwrap();
    assert_eq!(form(&t(a), &t(a)), q(4, 1));
    assert_eq!(form(&u(a), &u(a)), q(4, 1));
    assert_eq!(form(&t(a), &t(b)), q(1, 2));
    assert_eq!(form(&t(a), &u(g)), q(1, 2));
    assert_eq!(form(&t(a), &u(a)), Rational::zero());
}

#[test]
fn a2_identity_by_hand() {
    // 1/(4h) = 1/12 on every basis vector.
    let ra = RootAlgebra::build_a(rs("A2"));
    let alg = ra.algebra();
    let delta = Element::from_dense(&vec![q(1, 12); 6]);
    for i in 0..6 {
        assert_eq!(alg.multiply(&delta, &alg.basis(i)).unwrap(), alg.basis(i));
    }
    assert_eq!(alg.central_charge(&delta).unwrap(), q(2, 1));
    assert_eq!(ra.delta().unwrap(), delta);
}

#[test]
fn t_a2_identity_is_one_tenth_not_one_twelfth() {
    let ra = RootAlgebra::build_t(rs("A2"));
    let alg = ra.algebra();
    let twelfth = Element::from_dense(&vec![q(1, 12); 3]);
    let tenth = Element::from_dense(&vec![q(1, 10); 3]);
    assert_ne!(alg.multiply(&twelfth, &alg.basis(0)).unwrap(), alg.basis(0));
    for i in 0..3 {
        assert_eq!(alg.multiply(&tenth, &alg.basis(i)).unwrap(), alg.basis(i));
    }
    assert_eq!(alg.find_identity().unwrap(), tenth);
    assert_eq!(alg.central_charge(&tenth).unwrap(), q(6, 5));
}

#[test]
fn closed_form_identities_match_solver() {
    for spec in ["A1", "A3", "A5", "D4", "D5", "E6", "A2+A3", "A1+D4"] {
        let a = RootAlgebra::build_a(rs(spec));
        assert_eq!(a.algebra().find_identity().unwrap(), a.delta().unwrap(), "{spec}");
        let t = RootAlgebra::build_t(rs(spec));
        assert_eq!(t.algebra().find_identity().unwrap(), t.epsilon(), "{spec}");
    }
}

#[test]
fn type_a_charges_match_formula() {
    for l in 1..=9i64 {
        let r = RootAlgebra::build_a(rs(&format!("A{l}"))).coset_chain_decompose().unwrap();
        let mut expected: Vec<Rational> = (1..=l).map(|i| q(1, 1) - q(6, (i + 2) * (i + 3))).collect();
        expected.push(q(2 * l, l + 3));
        assert_eq!(r.charges, expected);
        assert!(r.checks.all());
    }
}

#[test]
fn root_algebra_form_is_invariant() {
    for spec in ["A1", "A2", "A3", "D4"] {
        let ra = RootAlgebra::build_a(rs(spec));
        let alg = ra.algebra();
        let n = alg.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let d = alg.form_invariance_defect(&alg.basis(i), &alg.basis(j), &alg.basis(k)).unwrap();
                    assert!(d.is_zero(), "{spec}: {i} {j} {k}");
                }
            }
        }
    }
}

#[test]
fn d4_bplus_gram_rank_and_kernel() {
    let ra = RootAlgebra::build_a(rs("D4"));
    let bp = BPlusAlgebra::build(rs("D4"));
    assert_eq!(bp.dim(), 10 + 12);
    let g = bp.algebra().gram_matrix();
    let rows: Vec<Vec<Rational>> = (0..g.rows()).map(|i| g.row(i).to_vec()).collect();
    assert_eq!(naive_rank(rows), 22);
    assert_eq!(bp.form_rank(), 22);

    let phi = PhiMap::build(&ra, &bp).unwrap();
    let m = phi.matrix();
    let rows: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    assert_eq!(naive_rank(rows), 22);
    let rep = phi.verify_theorem_3_1();
    assert!(rep.passed());
    assert_eq!((rep.kernel_dim, rep.radical_dim, rep.kernel_is_radical), (2, 2, true));
}

#[test]
fn bplus_dimensions() {
    for (spec, dim) in [("A1", 2), ("A2", 6), ("D4", 22), ("E8", 36 + 120), ("A24", 300 + 300)] {
        assert_eq!(BPlusAlgebra::build(rs(spec)).dim(), dim, "{spec}");
    }
}

#[test]
fn lagrangian_counts_match_brute_force() {
    for (dim, count) in [(2usize, 2u64), (4, 6), (6, 30), (8, 270)] {
        assert_eq!(F2QuadSpace::new(dim).unwrap().brute_force_lagrangians().unwrap(), count);
        assert_eq!(lagrangian_extension_count(dim as u32 / 2), count.into());
    }
}

#[test]
fn mixed_component_dimensions() {
    let sys = RootSystem::build(&[SimpleType::a(2), SimpleType::d(4), SimpleType::e(6)]).unwrap();
    assert_eq!(sys.rank(), 12);
    assert_eq!(sys.num_positive(), 3 + 12 + 36);
}
