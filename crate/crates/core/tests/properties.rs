use std::sync::OnceLock;

use griess_core::algebra::{Element, StructureAlgebra};
use griess_core::exactlin::{sparse_rank, F2Matrix, QMatrix, SparseVec};
use griess_core::niemeier::F2QuadSpace;
use griess_core::rational::q;
use griess_core::{BPlusAlgebra, Rational, RootAlgebra, RootSystem};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

/// Includes values far outside the machine-word fast path.
fn any_rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        small_rational(),
        (any::<i64>(), 1i64..=i64::MAX).prop_map(|(n, d)| q(n, d)),
        (any::<i64>(), any::<i64>(), 1i64..1000).prop_map(|(a, b, d)| {
            Rational::from_bigints(BigInt::from(a) * BigInt::from(b) * 7919, BigInt::from(d))
        }),
    ]
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(prop::collection::vec(small_rational(), cols), rows).prop_map(QMatrix::from_rows)
}

fn element(dim: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec(small_rational(), dim).prop_map(|v| Element::from_dense(&v))
}

fn a_d4() -> &'static RootAlgebra {
    static A: OnceLock<RootAlgebra> = OnceLock::new();
    A.get_or_init(|| RootAlgebra::build_a(RootSystem::from_spec("D4").unwrap()))
}

fn a_a3() -> &'static (RootAlgebra, Element) {
    static A: OnceLock<(RootAlgebra, Element)> = OnceLock::new();
    A.get_or_init(|| {
        let ra = RootAlgebra::build_a(RootSystem::from_spec("A3").unwrap());
        let id = ra.algebra().find_identity().unwrap();
        (ra, id)
    })
}

fn bplus_a3() -> &'static BPlusAlgebra {
    static B: OnceLock<BPlusAlgebra> = OnceLock::new();
    B.get_or_init(|| BPlusAlgebra::build(RootSystem::from_spec("A3").unwrap()))
}

fn a4_chain() -> &'static (StructureAlgebra, Vec<Element>) {
    static C: OnceLock<(StructureAlgebra, Vec<Element>)> = OnceLock::new();
    C.get_or_init(|| {
        let ra = RootAlgebra::build_a(RootSystem::from_spec("A4").unwrap());
        let r = ra.coset_chain_decompose().unwrap();
        (ra.algebra().clone(), r.idempotents)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in any_rational(), b in any_rational(), c in any_rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip()).is_one());
        }
    }

    #[test]
    fn rational_parse_round_trip(a in any_rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn rref_is_idempotent(m in matrix(5, 6)) {
        let r = m.rref();
        prop_assert_eq!(&r.matrix.rref().matrix, &r.matrix);
        prop_assert_eq!(m.rank(), m.rank_bareiss());
        prop_assert_eq!(m.rank(), r.pivots.len());
    }

    #[test]
    fn kernel_is_annihilated(m in matrix(4, 7)) {
        let ker = m.kernel_basis();
        prop_assert_eq!(ker.len() + m.rank(), 7);
        for v in ker {
            prop_assert!(m.mul_vec(&v).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn sparse_rank_matches_dense(m in matrix(6, 5)) {
        let rows = (0..m.rows()).map(|i| SparseVec::from_dense(m.row(i)));
        prop_assert_eq!(sparse_rank(5, rows), m.rank());
    }

    #[test]
    fn root_algebra_is_commutative(a in element(24), b in element(24)) {
        let alg = a_d4().algebra();
        prop_assert_eq!(alg.multiply(&a, &b).unwrap(), alg.multiply(&b, &a).unwrap());
    }

    #[test]
    fn identity_fixes_everything(a in element(12)) {
        let (ra, id) = a_a3();
        prop_assert_eq!(ra.algebra().multiply(id, &a).unwrap(), a);
    }

    #[test]
    fn root_algebra_form_invariant(a in element(12), b in element(12), c in element(12)) {
        let (ra, _) = a_a3();
        prop_assert!(ra.algebra().form_invariance_defect(&a, &b, &c).unwrap().is_zero());
    }

    #[test]
    fn bplus_form_invariant(a in element(12), b in element(12), c in element(12)) {
        let alg = bplus_a3().algebra();
        prop_assert!(alg.form_invariance_defect(&a, &b, &c).unwrap().is_zero());
        prop_assert_eq!(alg.multiply(&a, &b).unwrap(), alg.multiply(&b, &a).unwrap());
    }

    #[test]
    fn charges_add_over_orthogonal_idempotents(mask in 1u32..32) {
        let (alg, es) = a4_chain();
        let mut sum = alg.zero();
        let mut total = Rational::zero();
        for (i, e) in es.iter().enumerate() {
            if mask >> i & 1 == 1 {
                sum = &sum + e;
                total += alg.central_charge(e).unwrap();
            }
        }
        prop_assert!(alg.is_idempotent(&sum).unwrap());
        prop_assert_eq!(alg.central_charge(&sum).unwrap(), total);
    }

    #[test]
    fn f2_span_has_two_to_the_rank(rows in prop::collection::vec(0u64..1 << 10, 0..8)) {
        let m = F2Matrix::new(10, rows).unwrap();
        let members = m.row_space_members().unwrap();
        prop_assert_eq!(members.len(), 1usize << m.rank());
        let space = F2QuadSpace::new(10).unwrap();
        prop_assert_eq!(space.span(m.rows()).len(), members.len());
    }

    #[test]
    fn bplus_dimension_formula(l in 1usize..=9, family in 0usize..3) {
        let spec = match family {
            0 => format!("A{l}"),
            1 => format!("D{}", l.max(4)),
            _ => format!("E{}", 6 + l % 3),
        };
        let sys = RootSystem::from_spec(&spec).unwrap();
        let (r, n) = (sys.rank(), sys.num_positive());
        prop_assert_eq!(BPlusAlgebra::build(sys).dim(), r * (r + 1) / 2 + n);
    }
}

#[test]
fn large_rationals_stay_exact() {
    let big = q(i64::MAX, 3);
    let r = &(&big * &big) / &big;
    assert_eq!(r, big);
    assert!((&q(1, i64::MAX) * &Rational::from(i64::MAX)).is_one());
    assert_eq!(Rational::one() + Rational::one(), q(2, 1));
}
