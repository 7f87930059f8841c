//! Finite-dimensional commutative (not necessarily associative) algebras over
//! the rationals, given by sparse structure constants and a symmetric form.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use crate::exactlin::{Pushed, QMatrix, SparseSystem, SparseVec};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("element of dimension {got} used in algebra of dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("elements are linearly dependent (relation coefficients {relation:?})")]
    Dependent { relation: Vec<Rational> },
}

/// An element of a [`StructureAlgebra`], as sparse coordinates in its basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    dim: usize,
    coeffs: SparseVec,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element { dim, coeffs: SparseVec::new() }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index out of range");
        Element { dim, coeffs: SparseVec::unit(i) }
    }

    pub fn from_sparse(dim: usize, coeffs: SparseVec) -> Result<Self, AlgebraError> {
        match coeffs.max_index() {
            Some(m) if m >= dim => Err(AlgebraError::IndexOutOfRange { index: m, dim }),
            _ => Ok(Element { dim, coeffs }),
        }
    }

    pub fn from_pairs(dim: usize, pairs: impl IntoIterator<Item = (usize, Rational)>) -> Result<Self, AlgebraError> {
        Self::from_sparse(dim, SparseVec::from_pairs(pairs))
    }

    pub fn from_dense(coeffs: &[Rational]) -> Self {
        Element { dim: coeffs.len(), coeffs: SparseVec::from_dense(coeffs) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &SparseVec {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i)
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        self.coeffs.to_dense(self.dim)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Element {
        Element { dim: self.dim, coeffs: self.coeffs.scale(s) }
    }

    fn same_dim(&self, other: &Element) {
        assert_eq!(self.dim, other.dim, "elements from algebras of different dimension");
    }
}

impl Add for &Element {
    type Output = Element;
    /// Panics if the dimensions differ.
    fn add(self, rhs: &Element) -> Element {
        self.same_dim(rhs);
        Element { dim: self.dim, coeffs: self.coeffs.add(&rhs.coeffs) }
    }
}

impl Sub for &Element {
    type Output = Element;
    /// Panics if the dimensions differ.
    fn sub(self, rhs: &Element) -> Element {
        self.same_dim(rhs);
        Element { dim: self.dim, coeffs: self.coeffs.sub(&rhs.coeffs) }
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-Rational::one())
    }
}

/// Collects products `b_i b_j` and form values `<b_i, b_j>` for `i <= j`.
#[derive(Debug, Clone, Default)]
pub struct AlgebraBuilder {
    labels: Vec<String>,
    products: BTreeMap<(usize, usize), SparseVec>,
    form: BTreeMap<(usize, usize), Rational>,
}

impl AlgebraBuilder {
    pub fn new(labels: Vec<String>) -> Self {
        AlgebraBuilder { labels, ..Default::default() }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Sets `b_i b_j = b_j b_i = v`, replacing any earlier value.
    pub fn set_product(&mut self, i: usize, j: usize, v: SparseVec) {
        let key = (i.min(j), i.max(j));
        if v.is_zero() {
            self.products.remove(&key);
        } else {
            self.products.insert(key, v);
        }
    }

    pub fn set_form(&mut self, i: usize, j: usize, v: Rational) {
        let key = (i.min(j), i.max(j));
        if v.is_zero() {
            self.form.remove(&key);
        } else {
            self.form.insert(key, v);
        }
    }

    pub fn build(self) -> Result<StructureAlgebra, AlgebraError> {
        let dim = self.labels.len();
        let check = |index: usize| {
            if index < dim {
                Ok(())
            } else {
                Err(AlgebraError::IndexOutOfRange { index, dim })
            }
        };
        let mut table: Vec<Vec<(usize, SparseVec)>> = vec![Vec::new(); dim];
        for ((i, j), v) in self.products {
            check(j)?;
            if let Some(m) = v.max_index() {
                check(m)?;
            }
            if i != j {
                table[j].push((i, v.clone()));
            }
            table[i].push((j, v));
        }
        for row in &mut table {
            row.sort_by_key(|(j, _)| *j);
        }
        let mut gram: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim];
        for ((i, j), v) in self.form {
            check(j)?;
            if i != j {
                gram[j].push((i, v.clone()));
            }
            gram[i].push((j, v));
        }
        let gram = gram.into_iter().map(SparseVec::from_pairs).collect();
        Ok(StructureAlgebra { labels: self.labels, table, gram })
    }
}

/// A commutative algebra with a labelled basis, sparse structure constants and
/// a symmetric bilinear form.
#[derive(Debug, Clone)]
pub struct StructureAlgebra {
    labels: Vec<String>,
    // table[i] = sorted (j, b_i b_j) with nonzero products; symmetric
    table: Vec<Vec<(usize, SparseVec)>>,
    gram: Vec<SparseVec>,
}

/// Result of [`StructureAlgebra::is_associative_span`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanReport {
    pub dimension: usize,
    pub closed: bool,
    pub associative: bool,
    /// First failing pair or triple, as indices into the spanning list.
    pub counterexample: Option<String>,
}

impl SpanReport {
    pub fn passed(&self) -> bool {
        self.closed && self.associative
    }
}

impl StructureAlgebra {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim())
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    /// Nonzero structure constants `b_i b_j` for `j` in row `i`.
    pub fn product_row(&self, i: usize) -> &[(usize, SparseVec)] {
        &self.table[i]
    }

    /// `b_i b_j` in the basis.
    pub fn basis_product(&self, i: usize, j: usize) -> SparseVec {
        match self.table[i].binary_search_by_key(&j, |(k, _)| *k) {
            Ok(p) => self.table[i][p].1.clone(),
            Err(_) => SparseVec::new(),
        }
    }

    pub fn form_row(&self, i: usize) -> &SparseVec {
        &self.gram[i]
    }

    pub fn basis_form(&self, i: usize, j: usize) -> Rational {
        self.gram[i].get(j)
    }

    /// Iterates over the stored products `(i, j, b_i b_j)` with `i <= j`.
    pub fn products_upper(&self) -> impl Iterator<Item = (usize, usize, &SparseVec)> {
        self.table
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().filter(move |(j, _)| *j >= i).map(move |(j, v)| (i, *j, v)))
    }

    fn check(&self, a: &Element) -> Result<(), AlgebraError> {
        if a.dim == self.dim() {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch { expected: self.dim(), got: a.dim })
        }
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &Element, b: &Element) -> Element {
        let n = self.dim();
        if a.is_zero() || b.is_zero() {
            return Element::zero(n);
        }
        // scan the rows of whichever factor touches fewer structure constants
        let cost = |x: &Element| x.coeffs.iter().map(|(i, _)| self.table[i].len()).sum::<usize>();
        let (x, y) = if cost(a) <= cost(b) { (a, b) } else { (b, a) };
        let mut ypos = vec![u32::MAX; n];
        for (p, (j, _)) in y.coeffs.entries().iter().enumerate() {
            ypos[*j] = p as u32;
        }
        let mut acc = vec![Rational::zero(); n];
        for (i, xi) in x.coeffs.iter() {
            for (j, prod) in &self.table[i] {
                let p = ypos[*j];
                if p == u32::MAX {
                    continue;
                }
                let c = xi * &y.coeffs.entries()[p as usize].1;
                for (k, v) in prod.iter() {
                    acc[k] += &(&c * v);
                }
            }
        }
        Element { dim: n, coeffs: SparseVec::drain_dense(&mut acc) }
    }

    pub fn form(&self, a: &Element, b: &Element) -> Result<Rational, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.form_unchecked(a, b))
    }

    pub(crate) fn form_unchecked(&self, a: &Element, b: &Element) -> Rational {
        let mut acc = Rational::zero();
        let (x, y) = if a.coeffs.nnz() <= b.coeffs.nnz() { (a, b) } else { (b, a) };
        for (i, xi) in x.coeffs.iter() {
            let d = self.gram[i].dot(&y.coeffs);
            if !d.is_zero() {
                acc += &(xi * &d);
            }
        }
        acc
    }

    /// `c(a) = 8 <a, a>`.
    pub fn central_charge(&self, a: &Element) -> Result<Rational, AlgebraError> {
        Ok(Rational::from(8) * self.form(a, a)?)
    }

    pub fn is_idempotent(&self, a: &Element) -> Result<bool, AlgebraError> {
        Ok(&self.multiply(a, a)? == a)
    }

    /// `a b = 0` and `<a, b> = 0`.
    pub fn are_orthogonal(&self, a: &Element, b: &Element) -> Result<bool, AlgebraError> {
        Ok(self.multiply(a, b)?.is_zero() && self.form(a, b)?.is_zero())
    }

    /// `<ab, c> - <a, bc>`; zero for every triple iff the form is invariant.
    pub fn form_invariance_defect(&self, a: &Element, b: &Element, c: &Element) -> Result<Rational, AlgebraError> {
        let ab = self.multiply(a, b)?;
        let bc = self.multiply(b, c)?;
        Ok(self.form(&ab, c)? - self.form(a, &bc)?)
    }

    pub fn gram_matrix(&self) -> QMatrix {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for (i, row) in self.gram.iter().enumerate() {
            for (j, v) in row.iter() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    /// Dimension of the radical of the form.
    pub fn radical_dimension(&self) -> usize {
        self.dim() - self.gram_matrix().rank()
    }

    /// Solves `x b_i = b_i` for every basis vector and returns the unique
    /// solution, or `None` if there is no identity or it is not unique.
    pub fn find_identity(&self) -> Option<Element> {
        let n = self.dim();
        let mut sys = SparseSystem::new(n);
        // equations from basis vector i: sum_j x_j (b_j b_i)_k = [k == i]
        'outer: for i in 0..n {
            let mut by_k: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
            by_k.entry(i).or_default();
            for (j, prod) in &self.table[i] {
                for (k, v) in prod.iter() {
                    by_k.entry(k).or_default().push((*j, v.clone()));
                }
            }
            for (k, coeffs) in by_k {
                let rhs = if k == i { Rational::one() } else { Rational::zero() };
                match sys.push(SparseVec::from_pairs(coeffs), rhs) {
                    Pushed::Inconsistent => return None,
                    _ if sys.is_full_rank() => break 'outer,
                    _ => {}
                }
            }
        }
        let x = Element::from_dense(&sys.solve_unique()?);
        // remaining equations: check the candidate directly
        (0..n).all(|i| self.mul_unchecked(&x, &self.basis(i)) == self.basis(i)).then_some(x)
    }

    /// Checks whether the span of `elements` is an associative subalgebra:
    /// closed under the product and `(xy)z = x(yz)` on all spanning triples.
    pub fn is_associative_span(&self, elements: &[Element]) -> Result<SpanReport, AlgebraError> {
        for e in elements {
            self.check(e)?;
        }
        let k = elements.len();
        let mut products = vec![vec![None; k]; k];
        for i in 0..k {
            for j in i..k {
                let p = self.mul_unchecked(&elements[i], &elements[j]);
                products[i][j] = Some(p.clone());
                products[j][i] = Some(p);
            }
        }
        let products: Vec<Vec<Element>> =
            products.into_iter().map(|r| r.into_iter().map(Option::unwrap).collect()).collect();
        self.span_report(elements, &products)
    }

    /// As [`Self::is_associative_span`], with `products[i][j] = e_i e_j` supplied.
    pub fn span_report(&self, elements: &[Element], products: &[Vec<Element>]) -> Result<SpanReport, AlgebraError> {
        let k = elements.len();
        let coords = SpanCoordinates::new(elements, self.dim())?;
        // structure constants of the span: e_i e_j = sum_m c[i][j][m] e_m
        let mut c: Vec<Vec<Vec<Rational>>> = vec![vec![Vec::new(); k]; k];
        for i in 0..k {
            for j in i..k {
                match coords.express(&products[i][j]) {
                    Some(v) => {
                        c[i][j] = v.clone();
                        c[j][i] = v;
                    }
                    None => {
                        return Ok(SpanReport {
                            dimension: k,
                            closed: false,
                            associative: false,
                            counterexample: Some(format!("product of elements {i} and {j} leaves the span")),
                        })
                    }
                }
            }
        }
        let combine = |coef: &[Rational], right: usize, left_first: bool| {
            let mut out = vec![Rational::zero(); k];
            for (m, cm) in coef.iter().enumerate() {
                if cm.is_zero() {
                    continue;
                }
                let row = if left_first { &c[m][right] } else { &c[right][m] };
                for (n, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        out[n] += &(cm * v);
                    }
                }
            }
            out
        };
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    // (e_i e_j) e_l  vs  e_i (e_j e_l)
                    let left = combine(&c[i][j], l, true);
                    let right = combine(&c[j][l], i, false);
                    if left != right {
                        return Ok(SpanReport {
                            dimension: k,
                            closed: true,
                            associative: false,
                            counterexample: Some(format!("(e{i} e{j}) e{l} != e{i} (e{j} e{l})")),
                        });
                    }
                }
            }
        }
        Ok(SpanReport { dimension: k, closed: true, associative: true, counterexample: None })
    }
}

/// Coordinates with respect to a list of independent vectors.
struct SpanCoordinates {
    // rref rows of the element matrix, with pivot columns
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    // transform[r] expresses rows[r] in terms of the original elements
    transform: Vec<Vec<Rational>>,
}

impl SpanCoordinates {
    fn new(elements: &[Element], dim: usize) -> Result<Self, AlgebraError> {
        let k = elements.len();
        let mut a = QMatrix::zeros(k, dim + k);
        for (i, e) in elements.iter().enumerate() {
            for (j, v) in e.coeffs().iter() {
                a[(i, j)] = v.clone();
            }
            a[(i, dim + i)] = Rational::one();
        }
        let r = a.rref();
        let main: Vec<usize> = r.pivots.iter().copied().filter(|&p| p < dim).collect();
        if main.len() < k {
            // the first row whose pivot lies in the identity block is a relation
            let row = main.len();
            let relation = (0..k).map(|i| r.matrix[(row, dim + i)].clone()).collect();
            return Err(AlgebraError::Dependent { relation });
        }
        let rows = (0..k).map(|i| SparseVec::from_dense(&r.matrix.row(i)[..dim])).collect();
        let transform = (0..k).map(|i| r.matrix.row(i)[dim..].to_vec()).collect();
        Ok(SpanCoordinates { rows, pivots: main, transform })
    }

    fn express(&self, v: &Element) -> Option<Vec<Rational>> {
        let k = self.rows.len();
        let mut residual = v.coeffs().clone();
        let mut out = vec![Rational::zero(); k];
        for (r, &p) in self.pivots.iter().enumerate() {
            let f = residual.get(p);
            if f.is_zero() {
                continue;
            }
            residual = residual.axpy(&-&f, &self.rows[r]);
            for (o, t) in out.iter_mut().zip(&self.transform[r]) {
                if !t.is_zero() {
                    *o += &(&f * t);
                }
            }
        }
        residual.is_zero().then_some(out)
    }
}

/// Pairwise orthogonal idempotents decomposing an identity, with their central charges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub idempotents: Vec<Element>,
    pub charges: Vec<Rational>,
    pub chain_description: String,
    pub checks: DecompositionChecks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DecompositionChecks {
    pub sum_to_identity: bool,
    pub idempotent: bool,
    pub products_orthogonal: bool,
    pub form_orthogonal: bool,
    pub associative_span: bool,
    /// Whether the charges match a closed formula, when one is known.
    pub charge_formula: Option<bool>,
}

impl DecompositionChecks {
    pub fn all(&self) -> bool {
        self.sum_to_identity
            && self.idempotent
            && self.products_orthogonal
            && self.form_orthogonal
            && self.associative_span
            && self.charge_formula != Some(false)
    }
}

impl DecompositionReport {
    /// Computes charges and runs every check exactly.
    pub fn assemble(
        alg: &StructureAlgebra,
        identity: &Element,
        idempotents: Vec<Element>,
        chain_description: String,
    ) -> Result<Self, AlgebraError> {
        for e in &idempotents {
            alg.check(e)?;
        }
        alg.check(identity)?;
        let k = idempotents.len();
        let mut checks = DecompositionChecks::default();
        let total = idempotents.iter().fold(alg.zero(), |acc, e| &acc + e);
        checks.sum_to_identity = &total == identity;
        let mut products: Vec<Vec<Element>> = vec![Vec::with_capacity(k); k];
        let (mut idem, mut orth, mut form_orth) = (true, true, true);
        for i in 0..k {
            for j in 0..k {
                if j < i {
                    let p: Element = products[j][i].clone();
                    products[i].push(p);
                    continue;
                }
                let p = alg.mul_unchecked(&idempotents[i], &idempotents[j]);
                if i == j {
                    idem &= p == idempotents[i];
                } else {
                    orth &= p.is_zero();
                    form_orth &= alg.form_unchecked(&idempotents[i], &idempotents[j]).is_zero();
                }
                products[i].push(p);
            }
        }
        checks.idempotent = idem;
        checks.products_orthogonal = orth;
        checks.form_orthogonal = form_orth;
        checks.associative_span = match alg.span_report(&idempotents, &products) {
            Ok(r) => r.passed(),
            Err(AlgebraError::Dependent { .. }) => false,
            Err(e) => return Err(e),
        };
        let charges = idempotents
            .iter()
            .map(|e| Rational::from(8) * alg.form_unchecked(e, e))
            .collect();
        Ok(DecompositionReport { idempotents, charges, chain_description, checks })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use alloc::string::ToString;

    fn one_dim(square: i64, norm: i64) -> StructureAlgebra {
        let mut b = AlgebraBuilder::new(vec!["b".to_string()]);
        b.set_product(0, 0, SparseVec::from_pairs([(0, Rational::from(square))]));
        b.set_form(0, 0, Rational::from(norm));
        b.build().unwrap()
    }

    #[test]
    fn rescaled_idempotent_is_identity() {
        let alg = one_dim(8, 4);
        let id = alg.find_identity().unwrap();
        assert_eq!(id.coeff(0), q(1, 8));
        assert!(alg.is_idempotent(&id).unwrap());
        assert_eq!(alg.central_charge(&id).unwrap(), q(1, 2));
        assert_eq!(alg.radical_dimension(), 0);
    }

    #[test]
    fn zero_products() {
        let alg = one_dim(8, 4);
        let z = alg.zero();
        let b = alg.basis(0);
        assert!(alg.multiply(&z, &b).unwrap().is_zero());
        assert_eq!(alg.central_charge(&z).unwrap(), Rational::zero());
    }

    #[test]
    fn no_identity_in_null_algebra() {
        let mut b = AlgebraBuilder::new(vec!["a".into(), "b".into()]);
        b.set_product(0, 0, SparseVec::unit(0));
        let alg = b.build().unwrap();
        assert!(alg.find_identity().is_none());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let alg = one_dim(1, 1);
        let e = Element::basis(2, 1);
        assert!(matches!(
            alg.multiply(&e, &e),
            Err(AlgebraError::DimensionMismatch { expected: 1, got: 2 })
        ));
        assert!(Element::from_pairs(2, [(5, Rational::one())]).is_err());
    }

    #[test]
    fn dependent_span_reports_relation() {
        let alg = one_dim(1, 1);
        let b = alg.basis(0);
        let err = alg.is_associative_span(&[b.clone(), b.scale(&Rational::from(2))]).unwrap_err();
        let AlgebraError::Dependent { relation } = err else { panic!() };
        // relation[0] b + relation[1] (2b) = 0
        assert!(!relation[0].is_zero());
        assert_eq!(&relation[0] + &(&relation[1] * &Rational::from(2)), Rational::zero());
    }

    #[test]
    fn span_of_identity_is_associative() {
        let alg = one_dim(1, 1);
        let r = alg.is_associative_span(&[alg.basis(0)]).unwrap();
        assert!(r.passed());
        assert_eq!(r.dimension, 1);
    }

    #[test]
    fn non_associative_span_detected() {
        // a^2 = b, ab = 0, b^2 = 0: (aa)a = ba = 0 = a(aa). Make it fail: ab = a.
        let mut bld = AlgebraBuilder::new(vec!["a".into(), "b".into()]);
        bld.set_product(0, 0, SparseVec::unit(1));
        bld.set_product(0, 1, SparseVec::unit(0));
        let alg = bld.build().unwrap();
        // (a a) b = b b = 0, a (a b) = a a = b
        let r = alg.is_associative_span(&[alg.basis(0), alg.basis(1)]).unwrap();
        assert!(r.closed && !r.associative);
        let only_a = alg.is_associative_span(&[alg.basis(0)]).unwrap();
        assert!(!only_a.closed);
    }
}
