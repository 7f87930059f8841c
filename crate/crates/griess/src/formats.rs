//! JSON representations of rationals, algebras and decompositions.

use griess_core::algebra::{AlgebraBuilder, AlgebraError, DecompositionChecks, DecompositionReport, Element, StructureAlgebra};
use griess_core::exactlin::SparseVec;
use griess_core::niemeier::NiemeierError;
use griess_core::rootsys::RootSystemError;
use griess_core::Rational;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("invalid rational {0:?}")]
    Rational(String),
    #[error("invalid integer {0:?}")]
    Integer(String),
    #[error("malformed algebra: {0}")]
    Schema(String),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Niemeier(#[from] NiemeierError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Sparse coefficients as `[[index, "p/q"], ...]`.
pub type SparseJson = Vec<(usize, String)>;

pub fn sparse_to_json(v: &SparseVec) -> SparseJson {
    v.iter().map(|(i, x)| (i, x.to_string())).collect()
}

pub fn sparse_from_json(v: &SparseJson) -> Result<SparseVec, FormatError> {
    let pairs = v
        .iter()
        .map(|(i, s)| Ok((*i, parse_rational(s)?)))
        .collect::<Result<Vec<_>, FormatError>>()?;
    Ok(SparseVec::from_pairs(pairs))
}

pub fn parse_rational(s: &str) -> Result<Rational, FormatError> {
    s.parse().map_err(|_| FormatError::Rational(s.to_string()))
}

/// `{ "basis": [...], "products": [[i, j, [[k, "p/q"], ...]], ...], "gram": [[...]] }`
/// with only `i <= j` products listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub basis: Vec<String>,
    pub products: Vec<(usize, usize, SparseJson)>,
    pub gram: Vec<Vec<String>>,
}

pub fn algebra_to_json(alg: &StructureAlgebra) -> AlgebraJson {
    let products = alg.products_upper().map(|(i, j, v)| (i, j, sparse_to_json(v))).collect();
    let n = alg.dim();
    let gram = (0..n).map(|i| (0..n).map(|j| alg.basis_form(i, j).to_string()).collect()).collect();
    AlgebraJson { basis: alg.labels().to_vec(), products, gram }
}

pub fn algebra_from_json(a: &AlgebraJson) -> Result<StructureAlgebra, FormatError> {
    let n = a.basis.len();
    if a.gram.len() != n || a.gram.iter().any(|r| r.len() != n) {
        return Err(FormatError::Schema(format!("gram must be {n} x {n}")));
    }
    let mut b = AlgebraBuilder::new(a.basis.clone());
    for (i, j, v) in &a.products {
        if *i > *j || *j >= n {
            return Err(FormatError::Schema(format!("bad product index pair ({i}, {j})")));
        }
        b.set_product(*i, *j, sparse_from_json(v)?);
    }
    for i in 0..n {
        for j in i..n {
            let x = parse_rational(&a.gram[i][j])?;
            if x != parse_rational(&a.gram[j][i])? {
                return Err(FormatError::Schema(format!("gram not symmetric at ({i}, {j})")));
            }
            b.set_form(i, j, x);
        }
    }
    Ok(b.build()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksJson {
    pub sum_to_identity: bool,
    pub idempotent: bool,
    pub products_orthogonal: bool,
    pub form_orthogonal: bool,
    pub associative_span: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub charge_formula: Option<bool>,
}

impl From<&DecompositionChecks> for ChecksJson {
    fn from(c: &DecompositionChecks) -> Self {
        ChecksJson {
            sum_to_identity: c.sum_to_identity,
            idempotent: c.idempotent,
            products_orthogonal: c.products_orthogonal,
            form_orthogonal: c.form_orthogonal,
            associative_span: c.associative_span,
            charge_formula: c.charge_formula,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub chain: String,
    pub idempotents: Vec<SparseJson>,
    pub charges: Vec<String>,
    pub checks: ChecksJson,
}

pub fn decomposition_to_json(r: &DecompositionReport) -> DecompositionJson {
    DecompositionJson {
        chain: r.chain_description.clone(),
        idempotents: r.idempotents.iter().map(|e| sparse_to_json(e.coeffs())).collect(),
        charges: r.charges.iter().map(Rational::to_string).collect(),
        checks: (&r.checks).into(),
    }
}

pub fn element_to_json(e: &Element) -> SparseJson {
    sparse_to_json(e.coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use griess_core::{RootAlgebra, RootSystem};

    #[test]
    fn algebra_round_trip() {
        let ra = RootAlgebra::build_a(RootSystem::from_spec("A2").unwrap());
        let j = algebra_to_json(ra.algebra());
        let text = serde_json::to_string(&j).unwrap();
        let back: AlgebraJson = serde_json::from_str(&text).unwrap();
        let alg = algebra_from_json(&back).unwrap();
        assert_eq!(algebra_to_json(&alg), j);
        assert_eq!(alg.find_identity(), ra.algebra().find_identity());
    }

    #[test]
    fn rejects_asymmetric_gram() {
        let j = AlgebraJson {
            basis: vec!["a".into(), "b".into()],
            products: vec![],
            gram: vec![vec!["1".into(), "1/2".into()], vec!["0".into(), "1".into()]],
        };
        assert!(matches!(algebra_from_json(&j), Err(FormatError::Schema(_))));
    }

    #[test]
    fn decomposition_json_shape() {
        let ra = RootAlgebra::build_a(RootSystem::from_spec("A2").unwrap());
        let j = decomposition_to_json(&ra.coset_chain_decompose().unwrap());
        assert_eq!(j.charges, ["1/2", "7/10", "4/5"]);
        let v = serde_json::to_value(&j).unwrap();
        assert_eq!(v["checks"]["sum_to_identity"], true);
    }
}
