//! The algebra `B^+ = S^2(H) ⊕ ⊕ ℚ x_alpha` and the map `phi: A(Phi) -> B^+`.
//!
//! `S^2(H)` uses the monomials `h_i h_j` (`i <= j`) in the simple roots, with
//! `(h_i, h_j)` the Cartan matrix. Products of monomials come from the rule on
//! squares by polarization:
//!
//! ```text
//! (ab)(cd) = (a,c)bd + (a,d)bc + (b,c)ad + (b,d)ac
//! <ab, cd> = (a,c)(b,d) + (a,d)(b,c)
//! (ab) x_alpha = 2 (a,alpha)(b,alpha) x_alpha
//! ```

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{AlgebraBuilder, Element, StructureAlgebra};
use crate::exactlin::{same_row_space, sparse_rank, QMatrix, SparseVec};
use crate::rational::{q, Rational};
use crate::rootalgebra::RootAlgebra;
use crate::rootsys::RootSystem;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BPlusError {
    #[error("root systems differ: {domain} vs {codomain}")]
    MismatchedRootSystems { domain: String, codomain: String },
    #[error("phi needs A(Phi), not T(Phi)")]
    NeedsFullAlgebra,
}

#[derive(Debug, Clone)]
pub struct BPlusAlgebra {
    rs: RootSystem,
    alg: StructureAlgebra,
}

impl BPlusAlgebra {
    pub fn build(rs: RootSystem) -> Self {
        let l = rs.rank();
        let n = rs.num_positive();
        let s2 = l * (l + 1) / 2;
        let mut labels = Vec::with_capacity(s2 + n);
        for i in 0..l {
            for j in i..l {
                labels.push(format!("h{i}h{j}"));
            }
        }
        labels.extend((0..n).map(|a| format!("x{a}")));
        let mut b = AlgebraBuilder::new(labels);
        let cartan = rs.cartan();
        let ip = |a: usize, c: usize| Rational::from(cartan[a][c]);
        let mono = |a: usize, c: usize| sym_index(l, a.min(c), a.max(c));
        let monomials: Vec<(usize, usize)> = (0..l).flat_map(|i| (i..l).map(move |j| (i, j))).collect();

        for (m1, &(a, bb)) in monomials.iter().enumerate() {
            for (m2, &(c, d)) in monomials.iter().enumerate().skip(m1) {
                let terms = [
                    (ip(a, c), mono(bb, d)),
                    (ip(a, d), mono(bb, c)),
                    (ip(bb, c), mono(a, d)),
                    (ip(bb, d), mono(a, c)),
                ];
                b.set_product(m1, m2, SparseVec::from_pairs(terms.into_iter().map(|(x, k)| (k, x))));
                let f = ip(a, c) * ip(bb, d) + ip(a, d) * ip(bb, c);
                b.set_form(m1, m2, f);
            }
            for alpha in 0..n {
                let f = Rational::from(2 * rs.simple_pairing(a, alpha) * rs.simple_pairing(bb, alpha));
                b.set_product(m1, s2 + alpha, SparseVec::from_pairs([(s2 + alpha, f)]));
            }
        }
        for alpha in 0..n {
            b.set_product(s2 + alpha, s2 + alpha, root_square(&rs, alpha).scale(&Rational::from(2)));
            b.set_form(s2 + alpha, s2 + alpha, Rational::from(2));
            for beta in alpha + 1..n {
                if rs.adjacent(alpha, beta) {
                    let g = rs.triple(alpha, beta).expect("adjacent roots have a third root");
                    b.set_product(s2 + alpha, s2 + beta, SparseVec::unit(s2 + g));
                }
            }
        }
        let alg = b.build().expect("indices are in range by construction");
        BPlusAlgebra { rs, alg }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// Dimension of the `S^2(H)` block, `l(l+1)/2`.
    pub fn sym_dim(&self) -> usize {
        let l = self.rs.rank();
        l * (l + 1) / 2
    }

    /// Index of the monomial `h_i h_j`.
    pub fn sym_index(&self, i: usize, j: usize) -> usize {
        sym_index(self.rs.rank(), i.min(j), i.max(j))
    }

    pub fn x_index(&self, alpha: usize) -> usize {
        self.sym_dim() + alpha
    }

    /// `alpha^2` in the monomial basis.
    pub fn root_square(&self, alpha: usize) -> Element {
        Element::from_sparse(self.dim(), root_square(&self.rs, alpha)).expect("in range")
    }

    pub fn x(&self, alpha: usize) -> Element {
        self.alg.basis(self.x_index(alpha))
    }

    /// Rank of the form. The Gram matrix is block diagonal with `2 I` on the
    /// `x` block, so only the `S^2` block is reduced.
    pub fn form_rank(&self) -> usize {
        let s2 = self.sym_dim();
        let block = QMatrix::from_fn(s2, s2, |i, j| self.alg.basis_form(i, j));
        block.rank() + self.rs.num_positive()
    }
}

fn sym_index(l: usize, i: usize, j: usize) -> usize {
    // rows 0..i hold l + (l-1) + ... + (l-i+1) monomials
    i * l - i * i.saturating_sub(1) / 2 + (j - i)
}

fn root_square(rs: &RootSystem, alpha: usize) -> SparseVec {
    let l = rs.rank();
    let c = rs.root(alpha).coeffs();
    let mut pairs = Vec::new();
    for i in 0..l {
        if c[i] == 0 {
            continue;
        }
        pairs.push((sym_index(l, i, i), Rational::from(c[i] * c[i])));
        for j in i + 1..l {
            if c[j] != 0 {
                pairs.push((sym_index(l, i, j), Rational::from(2 * c[i] * c[j])));
            }
        }
    }
    SparseVec::from_pairs(pairs)
}

/// Outcome of one clause of [`PhiMap::verify_theorem_3_1`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl Clause {
    fn pass() -> Self {
        Clause { passed: true, counterexample: None }
    }

    fn fail(msg: String) -> Self {
        Clause { passed: false, counterexample: Some(msg) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem31Report {
    pub homomorphism: Clause,
    pub isometry: Clause,
    pub surjective: Clause,
    pub map_rank: usize,
    pub kernel_dim: usize,
    pub radical_dim: usize,
    /// `ker phi` equals the radical of the form on `A(Phi)`.
    pub kernel_is_radical: bool,
}

impl Theorem31Report {
    pub fn passed(&self) -> bool {
        self.homomorphism.passed && self.isometry.passed && self.surjective.passed
    }
}

/// `phi(t(alpha)) = alpha^2/2 - x_alpha`, `phi(u(alpha)) = alpha^2/2 + x_alpha`.
#[derive(Debug, Clone)]
pub struct PhiMap<'a> {
    domain: &'a RootAlgebra,
    codomain: &'a BPlusAlgebra,
    images: Vec<Element>,
}

impl<'a> PhiMap<'a> {
    pub fn build(domain: &'a RootAlgebra, codomain: &'a BPlusAlgebra) -> Result<Self, BPlusError> {
        if domain.is_t_only() {
            return Err(BPlusError::NeedsFullAlgebra);
        }
        if domain.root_system().components() != codomain.rs.components() {
            return Err(BPlusError::MismatchedRootSystems {
                domain: format!("{}", domain.root_system()),
                codomain: format!("{}", codomain.rs),
            });
        }
        let n = codomain.rs.num_positive();
        let half = q(1, 2);
        let mut images = Vec::with_capacity(2 * n);
        let squares: Vec<Element> = (0..n).map(|a| codomain.root_square(a).scale(&half)).collect();
        for (a, s) in squares.iter().enumerate() {
            images.push(s - &codomain.x(a));
        }
        for (a, s) in squares.iter().enumerate() {
            images.push(s + &codomain.x(a));
        }
        Ok(PhiMap { domain, codomain, images })
    }

    pub fn image(&self, i: usize) -> &Element {
        &self.images[i]
    }

    pub fn apply(&self, a: &Element) -> Element {
        let pairs = a
            .coeffs()
            .iter()
            .flat_map(|(i, c)| self.images[i].coeffs().iter().map(move |(k, v)| (k, c * v)));
        Element::from_sparse(self.codomain.dim(), SparseVec::from_pairs(pairs)).expect("in range")
    }

    /// Matrix of `phi`: column `i` is the image of the `i`-th basis vector.
    pub fn matrix(&self) -> QMatrix {
        let mut m = QMatrix::zeros(self.codomain.dim(), self.images.len());
        for (i, img) in self.images.iter().enumerate() {
            for (k, v) in img.coeffs().iter() {
                m[(k, i)] = v.clone();
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        sparse_rank(self.codomain.dim(), self.images.iter().map(|e| e.coeffs().clone()))
    }

    fn check_homomorphism(&self) -> Clause {
        let n = self.domain.root_system().num_positive();
        let (a_alg, b_alg) = (self.domain.algebra(), &self.codomain.alg);
        let half = q(1, 2);
        let sq: Vec<Element> = (0..n).map(|a| self.codomain.root_square(a).scale(&half)).collect();
        let label = |i: usize| if i < n { format!("t{i}") } else { format!("u{}", i - n) };
        for a in 0..n {
            for b in a..n {
                // phi(t(a)) = S_a - X_a, phi(u(a)) = S_a + X_a
                let p1 = b_alg.mul_unchecked(&sq[a], &sq[b]);
                let p2 = b_alg.mul_unchecked(&sq[a], &self.codomain.x(b));
                let p3 = b_alg.mul_unchecked(&self.codomain.x(a), &sq[b]);
                let p4 = b_alg.mul_unchecked(&self.codomain.x(a), &self.codomain.x(b));
                let combos = [
                    (a, b, &(&(&p1 - &p2) - &p3) + &p4),
                    (a, n + b, &(&(&p1 + &p2) - &p3) - &p4),
                    (n + a, b, &(&(&p1 - &p2) + &p3) - &p4),
                    (n + a, n + b, &(&(&p1 + &p2) + &p3) + &p4),
                ];
                for (i, j, lhs) in combos {
                    let ab = a_alg.mul_unchecked(&a_alg.basis(i), &a_alg.basis(j));
                    if self.apply(&ab) != lhs {
                        return Clause::fail(format!("phi({0} {1}) != phi({0}) phi({1})", label(i), label(j)));
                    }
                }
            }
        }
        Clause::pass()
    }

    fn check_isometry(&self) -> Clause {
        let (a_alg, b_alg) = (self.domain.algebra(), &self.codomain.alg);
        for i in 0..self.images.len() {
            for j in i..self.images.len() {
                if b_alg.form_unchecked(&self.images[i], &self.images[j]) != a_alg.basis_form(i, j) {
                    return Clause::fail(format!("<phi(b{i}), phi(b{j})> != <b{i}, b{j}>"));
                }
            }
        }
        Clause::pass()
    }

    /// Checks the homomorphism and isometry properties over all basis pairs,
    /// surjectivity by rank, and compares the kernel with the radical of the form.
    pub fn verify_theorem_3_1(&self) -> Theorem31Report {
        let homomorphism = self.check_homomorphism();
        let isometry = self.check_isometry();
        let map_rank = self.rank();
        let dim_b = self.codomain.dim();
        let surjective = if map_rank == dim_b {
            Clause::pass()
        } else {
            Clause::fail(format!("rank {map_rank} < dim B^+ = {dim_b}"))
        };
        let a_alg = self.domain.algebra();
        let dim_a = a_alg.dim();
        let gram_rank = sparse_rank(dim_a, (0..dim_a).map(|i| a_alg.form_row(i).clone()));
        let kernel_dim = dim_a - map_rank;
        let radical_dim = dim_a - gram_rank;
        let kernel_is_radical = kernel_dim == radical_dim
            && (kernel_dim == 0 || {
                let ker = QMatrix::from_rows(self.matrix().kernel_basis());
                let rad = QMatrix::from_rows(a_alg.gram_matrix().kernel_basis());
                same_row_space(&ker, &rad)
            });
        Theorem31Report { homomorphism, isometry, surjective, map_rank, kernel_dim, radical_dim, kernel_is_radical }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(spec: &str) -> BPlusAlgebra {
        BPlusAlgebra::build(RootSystem::from_spec(spec).unwrap())
    }

    #[test]
    fn sym_index_is_lexicographic() {
        let l = 4;
        let mut k = 0;
        for i in 0..l {
            for j in i..l {
                assert_eq!(sym_index(l, i, j), k);
                k += 1;
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(bp("A1").dim(), 2);
        assert_eq!(bp("A2").dim(), 6);
        assert_eq!(bp("D4").dim(), 22);
    }

    #[test]
    fn a1_relations() {
        let b = bp("A1");
        let (s, x) = (b.root_square(0), b.x(0));
        let alg = b.algebra();
        assert_eq!(alg.multiply(&x, &x).unwrap(), s.scale(&Rational::from(2)));
        assert_eq!(alg.multiply(&s, &s).unwrap(), s.scale(&Rational::from(8)));
        assert_eq!(alg.form(&s, &s).unwrap(), Rational::from(8));
        assert_eq!(alg.form(&s, &x).unwrap(), Rational::zero());
    }

    #[test]
    fn d4_kernel() {
        let rs = RootSystem::from_spec("D4").unwrap();
        let ra = RootAlgebra::build_a(rs.clone());
        let b = BPlusAlgebra::build(rs);
        let phi = PhiMap::build(&ra, &b).unwrap();
        let r = phi.verify_theorem_3_1();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.kernel_dim, 2);
        assert!(r.kernel_is_radical);
        assert_eq!(b.form_rank(), 22);
    }

    #[test]
    fn mismatched_systems() {
        let ra = RootAlgebra::build_a(RootSystem::from_spec("A2").unwrap());
        let b = bp("A3");
        assert!(matches!(PhiMap::build(&ra, &b), Err(BPlusError::MismatchedRootSystems { .. })));
        let rt = RootAlgebra::build_t(RootSystem::from_spec("A3").unwrap());
        assert!(matches!(PhiMap::build(&rt, &b), Err(BPlusError::NeedsFullAlgebra)));
    }
}
