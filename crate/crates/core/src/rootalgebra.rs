//! The algebras `A(Phi)` and `T(Phi)` spanned by `t(alpha)`, `u(alpha)` over
//! the positive roots, and their chains of orthogonal idempotents.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{AlgebraBuilder, AlgebraError, DecompositionReport, Element, StructureAlgebra};
use crate::exactlin::SparseVec;
use crate::rational::{q, Rational};
use crate::rootsys::{Family, RootSystem, RootSystemError, SubSystem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootAlgebraError {
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("component {0} is not of type A")]
    NotTypeA(String),
    #[error("operation needs the u-block, but this is T(Phi)")]
    TOnly,
    #[error("chain is not nested at position {0}")]
    NotNested(usize),
}

/// `A(Phi)` (basis `t(alpha)` then `u(alpha)`) or its subalgebra `T(Phi)`.
#[derive(Debug, Clone)]
pub struct RootAlgebra {
    rs: RootSystem,
    alg: StructureAlgebra,
    t_only: bool,
}

impl RootAlgebra {
    pub fn build_a(rs: RootSystem) -> Self {
        Self::build(rs, false)
    }

    pub fn build_t(rs: RootSystem) -> Self {
        Self::build(rs, true)
    }

    fn build(rs: RootSystem, t_only: bool) -> Self {
        let n = rs.num_positive();
        let mut labels: Vec<String> = (0..n).map(|a| format!("t{a}")).collect();
        if !t_only {
            labels.extend((0..n).map(|a| format!("u{a}")));
        }
        let mut b = AlgebraBuilder::new(labels);
        let (t, u) = (|a: usize| a, |a: usize| n + a);
        let eight = Rational::from(8);
        let half = q(1, 2);
        let lin = |terms: [(usize, i64); 3]| SparseVec::from_pairs(terms.map(|(i, c)| (i, Rational::from(c))));
        for a in 0..n {
            b.set_product(t(a), t(a), SparseVec::from_pairs([(t(a), eight.clone())]));
            b.set_form(t(a), t(a), Rational::from(4));
            if !t_only {
                b.set_product(u(a), u(a), SparseVec::from_pairs([(u(a), eight.clone())]));
                b.set_form(u(a), u(a), Rational::from(4));
            }
            for c in a + 1..n {
                if !rs.adjacent(a, c) {
                    continue;
                }
                let g = rs.triple(a, c).expect("adjacent roots have a third root");
                b.set_product(t(a), t(c), lin([(t(a), 1), (t(c), 1), (t(g), -1)]));
                b.set_form(t(a), t(c), half.clone());
                if t_only {
                    continue;
                }
                b.set_product(u(a), u(c), lin([(u(a), 1), (u(c), 1), (t(g), -1)]));
                b.set_product(u(a), t(c), lin([(u(a), 1), (t(c), 1), (u(g), -1)]));
                b.set_product(t(a), u(c), lin([(t(a), 1), (u(c), 1), (u(g), -1)]));
                b.set_form(u(a), u(c), half.clone());
                b.set_form(u(a), t(c), half.clone());
                b.set_form(t(a), u(c), half.clone());
            }
        }
        let alg = b.build().expect("indices are in range by construction");
        RootAlgebra { rs, alg, t_only }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.alg
    }

    pub fn is_t_only(&self) -> bool {
        self.t_only
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn t_index(&self, alpha: usize) -> usize {
        alpha
    }

    pub fn u_index(&self, alpha: usize) -> Result<usize, RootAlgebraError> {
        if self.t_only {
            Err(RootAlgebraError::TOnly)
        } else {
            Ok(self.rs.num_positive() + alpha)
        }
    }

    pub fn t(&self, alpha: usize) -> Element {
        self.alg.basis(alpha)
    }

    pub fn u(&self, alpha: usize) -> Result<Element, RootAlgebraError> {
        Ok(self.alg.basis(self.u_index(alpha)?))
    }

    /// `sum_{alpha in roots} coef * t(alpha)` (and `u(alpha)` too if `with_u`).
    fn root_sum(&self, roots: impl Iterator<Item = usize>, coef: &Rational, with_u: bool) -> SparseVec {
        let n = self.rs.num_positive();
        let mut pairs = Vec::new();
        for a in roots {
            pairs.push((a, coef.clone()));
            if with_u {
                pairs.push((n + a, coef.clone()));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    fn element(&self, v: SparseVec) -> Element {
        Element::from_sparse(self.dim(), v).expect("indices in range")
    }

    /// Closed-form identity of the `A`-block of component `c`: `(1/4h) sum (t + u)`.
    pub fn delta_of_component(&self, c: usize) -> Result<Element, RootAlgebraError> {
        if self.t_only {
            return Err(RootAlgebraError::TOnly);
        }
        let h = self.rs.components()[c].coxeter_number() as i64;
        Ok(self.element(self.root_sum(self.rs.component_roots(c), &q(1, 4 * h), true)))
    }

    /// Closed-form identity `delta` of `A(Phi)`, per component.
    pub fn delta(&self) -> Result<Element, RootAlgebraError> {
        let mut d = self.alg.zero();
        for c in 0..self.rs.components().len() {
            d = &d + &self.delta_of_component(c)?;
        }
        Ok(d)
    }

    /// Closed-form identity `epsilon` of `T(Phi)`: `(1/(2h+4)) sum t`, per component.
    pub fn epsilon(&self) -> Element {
        let mut v = SparseVec::new();
        for (c, ty) in self.rs.components().iter().enumerate() {
            let h = ty.coxeter_number() as i64;
            v = v.add(&self.root_sum(self.rs.component_roots(c), &q(1, 2 * h + 4), false));
        }
        self.element(v)
    }

    /// Identity of `T(Psi)` for a sub-system `Psi` spanned by simple roots.
    pub fn epsilon_of(&self, sub: &SubSystem) -> Element {
        let mut v = SparseVec::new();
        for comp in &sub.components {
            let h = comp.coxeter_number() as i64;
            v = v.add(&self.root_sum(comp.roots.iter().copied(), &q(1, 2 * h + 4), false));
        }
        self.element(v)
    }

    /// Per type-A component of rank `l`: `e_i = eps_i - eps_{i-1}` for the prefix
    /// chain and `e_{l+1} = delta - eps_l`. Also checks the charge formulas
    /// `1 - 6/((i+2)(i+3))` and `2l/(l+3)`.
    pub fn coset_chain_decompose(&self) -> Result<DecompositionReport, RootAlgebraError> {
        if let Some(ty) = self.rs.components().iter().find(|t| t.family() != Family::A) {
            return Err(RootAlgebraError::NotTypeA(format!("{ty}")));
        }
        let mut expected = Vec::new();
        for ty in self.rs.components() {
            let l = ty.rank() as i64;
            expected.extend((1..=l).map(|i| Rational::one() - q(6, (i + 2) * (i + 3))));
            expected.push(q(2 * l, l + 3));
        }
        let mut report = self.component_chain_decompose()?;
        report.checks.charge_formula = Some(report.charges == expected);
        Ok(report)
    }

    /// Identities `eps_1, ..., eps_l` of `T` along the prefix chain of component `c`.
    pub fn prefix_epsilons(&self, c: usize) -> Result<Vec<Element>, RootAlgebraError> {
        self.rs
            .prefix_chain(c)
            .iter()
            .map(|subset| Ok(self.epsilon_of(&self.rs.subsystem(subset)?)))
            .collect()
    }

    /// Prefix-chain idempotents of component `c`, ending with `delta_c - eps_top`.
    pub fn component_chain(&self, c: usize) -> Result<Vec<Element>, RootAlgebraError> {
        let mut out = Vec::new();
        let mut prev = self.alg.zero();
        for eps in self.prefix_epsilons(c)? {
            out.push(&eps - &prev);
            prev = eps;
        }
        out.push(&self.delta_of_component(c)? - &prev);
        Ok(out)
    }

    /// The prefix-chain idempotents of every component, of any type. Charges
    /// are reported but not compared with a formula.
    pub fn component_chain_decompose(&self) -> Result<DecompositionReport, RootAlgebraError> {
        let mut idempotents = Vec::new();
        for c in 0..self.rs.components().len() {
            idempotents.extend(self.component_chain(c)?);
        }
        let description = format!("prefix chain per component of {}", self.rs);
        Ok(DecompositionReport::assemble(&self.alg, &self.delta()?, idempotents, description)?)
    }

    /// Idempotents `eps_i - eps_{i-1}` along a user-supplied nested chain of
    /// simple-root subsets, followed by `delta - eps_top`. Empty subsets
    /// contribute nothing. Charges are reported, not checked against a formula.
    pub fn generalized_chain_decompose(&self, chain: &[Vec<usize>]) -> Result<DecompositionReport, RootAlgebraError> {
        let mut prev_set: BTreeSet<usize> = BTreeSet::new();
        let mut prev = self.alg.zero();
        let mut idempotents = Vec::new();
        let mut names = Vec::new();
        for (pos, subset) in chain.iter().enumerate() {
            let set: BTreeSet<usize> = subset.iter().copied().collect();
            if !prev_set.is_subset(&set) {
                return Err(RootAlgebraError::NotNested(pos));
            }
            let sub = self.rs.subsystem(subset)?;
            if set.is_empty() || set == prev_set {
                prev_set = set;
                continue;
            }
            let eps = self.epsilon_of(&sub);
            idempotents.push(&eps - &prev);
            names.push(sub.name());
            prev = eps;
            prev_set = set;
        }
        idempotents.push(&self.delta()? - &prev);
        names.push(format!("{}", self.rs));
        let description = names.join(" < ");
        Ok(DecompositionReport::assemble(&self.alg, &self.delta()?, idempotents, description)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn a_of(spec: &str) -> RootAlgebra {
        RootAlgebra::build_a(RootSystem::from_spec(spec).unwrap())
    }

    #[test]
    fn a1_table() {
        let ra = a_of("A1");
        assert_eq!(ra.dim(), 2);
        let (t, u) = (ra.t(0), ra.u(0).unwrap());
        let alg = ra.algebra();
        assert_eq!(alg.multiply(&t, &t).unwrap(), t.scale(&Rational::from(8)));
        assert_eq!(alg.multiply(&u, &u).unwrap(), u.scale(&Rational::from(8)));
        assert!(alg.multiply(&t, &u).unwrap().is_zero());
        assert_eq!(alg.form(&t, &u).unwrap(), Rational::zero());
        assert_eq!(alg.form(&t, &t).unwrap(), Rational::from(4));
    }

    #[test]
    fn a2_delta_matches_solver() {
        let ra = a_of("A2");
        let d = ra.delta().unwrap();
        assert!(d.coeffs().iter().all(|(_, c)| *c == q(1, 12)));
        assert_eq!(d.coeffs().nnz(), 6);
        assert_eq!(ra.algebra().find_identity().unwrap(), d);
    }

    #[test]
    fn t_algebra_identity() {
        let rt = RootAlgebra::build_t(RootSystem::from_spec("A2").unwrap());
        assert_eq!(rt.dim(), 3);
        let e = rt.epsilon();
        assert_eq!(rt.algebra().find_identity().unwrap(), e);
        assert_eq!(rt.algebra().central_charge(&e).unwrap(), q(6, 5));
        assert!(matches!(rt.delta(), Err(RootAlgebraError::TOnly)));
    }

    #[test]
    fn a2_chain_charges() {
        let r = a_of("A2").coset_chain_decompose().unwrap();
        assert_eq!(r.charges, [q(1, 2), q(7, 10), q(4, 5)]);
        assert!(r.checks.all());
    }

    #[test]
    fn mixed_semisimple_delta() {
        let ra = a_of("A1+A2");
        let d = ra.delta().unwrap();
        assert_eq!(d.coeff(0), q(1, 8));
        assert_eq!(d.coeff(1), q(1, 12));
        assert_eq!(ra.algebra().find_identity().unwrap(), d);
    }

    #[test]
    fn empty_chain_gives_delta() {
        let ra = a_of("A2");
        let r = ra.generalized_chain_decompose(&[Vec::new()]).unwrap();
        assert_eq!(r.idempotents, [ra.delta().unwrap()]);
        assert_eq!(r.charges, [Rational::from(2)]);
    }

    #[test]
    fn chain_in_d4() {
        let ra = a_of("D4");
        let r = ra.generalized_chain_decompose(&[vec![0]]).unwrap();
        assert!(r.checks.all());
        let total: Rational = r.charges.iter().sum();
        assert_eq!(total, Rational::from(4));
    }

    #[test]
    fn non_nested_chain_rejected() {
        let ra = a_of("A3");
        assert!(matches!(
            ra.generalized_chain_decompose(&[vec![0], vec![1]]),
            Err(RootAlgebraError::NotNested(1))
        ));
        assert!(matches!(ra.generalized_chain_decompose(&[vec![7]]), Err(RootAlgebraError::RootSystem(_))));
    }

    #[test]
    fn coset_chain_rejects_d() {
        assert!(matches!(a_of("D4").coset_chain_decompose(), Err(RootAlgebraError::NotTypeA(_))));
    }
}
