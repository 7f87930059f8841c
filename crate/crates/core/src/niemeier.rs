//! Niemeier root systems, their associative subalgebras of `B^+`, and the
//! counting identities for Lagrangian subspaces of `F_2` quadratic spaces.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{AlgebraError, DecompositionReport};
use crate::bplus::{BPlusAlgebra, BPlusError, PhiMap};
use crate::exactlin::{f2_span, F2Matrix};
use crate::rational::Rational;
use crate::rootalgebra::{RootAlgebra, RootAlgebraError};
use crate::rootsys::{format_components, RootSystem, RootSystemError, SimpleType};

/// Largest quadratic-space dimension accepted by [`F2QuadSpace::brute_force_lagrangians`].
pub const MAX_BRUTE_FORCE_DIM: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NiemeierError {
    #[error("{name}: component ranks sum to {total}, not 24")]
    RankSum { name: String, total: usize },
    #[error("{name}: components have different Coxeter numbers")]
    MixedCoxeter { name: String },
    #[error("the Leech lattice has no roots")]
    Leech,
    #[error("idempotent {index} of component {component} maps to zero in B^+")]
    IdempotentKilled { component: usize, index: usize },
    #[error("quadratic space dimension {0} must be positive and even")]
    OddDimension(usize),
    #[error("brute force limited to dimension {max}, got {dim}")]
    TooLarge { dim: usize, max: usize },
    #[error("isotropic subspace contains the non-singular vector {0:#b}")]
    NotSingular(u64),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    RootAlgebra(#[from] RootAlgebraError),
    #[error(transparent)]
    BPlus(#[from] BPlusError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// One row of the catalog: a Niemeier root system (empty for Leech) and its mass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiemeierEntry {
    name: String,
    components: Vec<SimpleType>,
    mass: Rational,
}

impl NiemeierEntry {
    /// Checks that the ranks sum to 24 and the Coxeter numbers agree
    /// (unless `components` is empty, for the Leech lattice).
    pub fn new(name: impl Into<String>, components: Vec<SimpleType>, mass: Rational) -> Result<Self, NiemeierError> {
        let name = name.into();
        if !components.is_empty() {
            let total: usize = components.iter().map(SimpleType::rank).sum();
            if total != 24 {
                return Err(NiemeierError::RankSum { name, total });
            }
            let h = components[0].coxeter_number();
            if components.iter().any(|c| c.coxeter_number() != h) {
                return Err(NiemeierError::MixedCoxeter { name });
            }
        }
        Ok(NiemeierEntry { name, components, mass })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn components(&self) -> &[SimpleType] {
        &self.components
    }

    pub fn mass(&self) -> &Rational {
        &self.mass
    }

    pub fn is_leech(&self) -> bool {
        self.components.is_empty()
    }

    pub fn coxeter_number(&self) -> Option<usize> {
        self.components.first().map(SimpleType::coxeter_number)
    }

    /// Number of simple components `k`.
    pub fn k(&self) -> usize {
        self.components.len()
    }

    pub fn root_system(&self) -> Result<RootSystem, NiemeierError> {
        if self.is_leech() {
            return Err(NiemeierError::Leech);
        }
        Ok(RootSystem::build(&self.components)?)
    }

    /// Maps the chain idempotents of every component (prefix chain in Bourbaki
    /// order, ending with the component identity) into `B^+` through `phi`, and
    /// checks that they span an associative subalgebra of dimension `24 + k`.
    pub fn lemma_4_2_subalgebra(&self) -> Result<Lemma42Report, NiemeierError> {
        let rs = self.root_system()?;
        let ra = RootAlgebra::build_a(rs.clone());
        let bp = BPlusAlgebra::build(rs);
        let phi = PhiMap::build(&ra, &bp)?;
        let mut images = Vec::new();
        for c in 0..self.components.len() {
            for (index, e) in ra.component_chain(c)?.iter().enumerate() {
                let img = phi.apply(e);
                if img.is_zero() {
                    return Err(NiemeierError::IdempotentKilled { component: c, index });
                }
                images.push(img);
            }
        }
        let identity = phi.apply(&ra.delta()?);
        let description = format!("phi of the prefix-chain idempotents of {}", format_components(&self.components));
        let report = DecompositionReport::assemble(bp.algebra(), &identity, images, description)?;
        Ok(Lemma42Report {
            name: self.name.clone(),
            dimension: report.idempotents.len(),
            expected_dimension: 24 + self.k(),
            bplus_dim: bp.dim(),
            report,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma42Report {
    pub name: String,
    pub dimension: usize,
    pub expected_dimension: usize,
    pub bplus_dim: usize,
    pub report: DecompositionReport,
}

impl Lemma42Report {
    pub fn passed(&self) -> bool {
        self.dimension == self.expected_dimension && self.report.checks.all()
    }
}

/// `prod_{i=0}^{n-1} (2^i + 1)`, which is 1 for `n = 0`.
pub fn lagrangian_extension_count(n: u32) -> BigUint {
    (0..n).fold(BigUint::one(), |acc, i| acc * ((BigUint::one() << i) + 1u32))
}

/// `|Co_1| = 2^21 3^9 5^4 7^2 11 13 23`.
pub fn conway_order() -> BigUint {
    [(2u32, 21u32), (3, 9), (5, 4), (7, 2), (11, 1), (13, 1), (23, 1)]
        .iter()
        .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
}

/// `F_2^{2m}` with the plus-type form `q(x) = sum_i x_{2i} x_{2i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct F2QuadSpace {
    dim: usize,
}

impl F2QuadSpace {
    pub fn new(dim: usize) -> Result<Self, NiemeierError> {
        if dim == 0 || dim % 2 == 1 {
            return Err(NiemeierError::OddDimension(dim));
        }
        if dim > 64 {
            return Err(NiemeierError::TooLarge { dim, max: 64 });
        }
        Ok(F2QuadSpace { dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn witt_index(&self) -> usize {
        self.dim / 2
    }

    pub fn q(&self, x: u64) -> bool {
        let even = x & 0x5555_5555_5555_5555;
        let odd = (x >> 1) & 0x5555_5555_5555_5555;
        (even & odd).count_ones() % 2 == 1
    }

    /// `b(x, y) = q(x + y) - q(x) - q(y)`.
    pub fn bilinear(&self, x: u64, y: u64) -> bool {
        self.q(x ^ y) ^ self.q(x) ^ self.q(y)
    }

    /// Counts maximal totally singular subspaces by growing isotropic bases
    /// in increasing order and deduplicating by reduced echelon form.
    pub fn brute_force_lagrangians(&self) -> Result<u64, NiemeierError> {
        if self.dim > MAX_BRUTE_FORCE_DIM {
            return Err(NiemeierError::TooLarge { dim: self.dim, max: MAX_BRUTE_FORCE_DIM });
        }
        let singular: Vec<u64> = (1u64..1 << self.dim).filter(|&v| !self.q(v)).collect();
        let mut found: BTreeSet<Vec<u64>> = BTreeSet::new();
        let mut basis = Vec::new();
        let mut members = alloc::vec![0u64];
        self.extend(&singular, 0, &mut basis, &mut members, &mut found)?;
        Ok(found.len() as u64)
    }

    fn extend(
        &self,
        singular: &[u64],
        start: usize,
        basis: &mut Vec<u64>,
        members: &mut Vec<u64>,
        found: &mut BTreeSet<Vec<u64>>,
    ) -> Result<(), NiemeierError> {
        if basis.len() == self.witt_index() {
            let m = F2Matrix::new(self.dim, basis.clone()).expect("dim <= 64");
            found.insert(m.rref().rows().to_vec());
            return Ok(());
        }
        for (pos, &v) in singular.iter().enumerate().skip(start) {
            if members.contains(&v) || basis.iter().any(|&b| self.bilinear(v, b)) {
                continue;
            }
            let old = members.len();
            for i in 0..old {
                let w = members[i] ^ v;
                if self.q(w) {
                    return Err(NiemeierError::NotSingular(w));
                }
                members.push(w);
            }
            basis.push(v);
            self.extend(singular, pos + 1, basis, members, found)?;
            basis.pop();
            members.truncate(old);
        }
        Ok(())
    }

    /// Every vector of the span of `basis`.
    pub fn span(&self, basis: &[u64]) -> Vec<u64> {
        let m = F2Matrix::new(self.dim, basis.to_vec()).expect("dim <= 64");
        f2_span(m.rref().rows())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub name: String,
    /// `mass * |Co_1|`, when it is an integer.
    pub count: Option<BigUint>,
    pub positive_integer: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Report {
    pub rows: Vec<Table1Row>,
    pub total: BigUint,
    pub expected_total: BigUint,
}

impl Table1Report {
    pub fn all_integral(&self) -> bool {
        self.rows.iter().all(|r| r.positive_integer)
    }

    pub fn sum_matches(&self) -> bool {
        self.total == self.expected_total
    }

    pub fn passed(&self) -> bool {
        self.all_integral() && self.sum_matches()
    }
}

/// Orbit counts `mass * |Co_1|` and their sum against the number of Lagrangian
/// subspaces of the 24-dimensional plus-type space.
pub fn table1_consistency(entries: &[NiemeierEntry]) -> Table1Report {
    let co1 = Rational::from(num_bigint::BigInt::from(conway_order()));
    let mut total = BigUint::zero();
    let mut rows = Vec::new();
    for e in entries {
        let c = e.mass() * &co1;
        let count = c.to_integer().and_then(|n| n.to_biguint());
        let positive_integer = c.is_positive() && count.is_some();
        if let Some(n) = &count {
            total += n;
        }
        rows.push(Table1Row { name: e.name().to_string(), count, positive_integer });
    }
    Table1Report { rows, total, expected_total: lagrangian_extension_count(12) }
}

/// `x:y(C)` in row `P`: a `C` extends to `x` spaces of type `P`, and a `P`
/// contains `y` spaces of type `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2Edge {
    pub extensions: u64,
    pub containments: u64,
    pub child: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2Row {
    pub symbol: String,
    pub dim: usize,
    pub stabilizer_order: Option<BigUint>,
    pub edges: Vec<Table2Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCheck {
    pub parent: String,
    pub child: String,
    /// `N(P) * containments`
    pub lhs: Option<BigUint>,
    /// `N(C) * extensions`
    pub rhs: Option<BigUint>,
    /// `None` when an orbit size is unavailable.
    pub passed: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2Report {
    pub edges: Vec<EdgeCheck>,
    pub warnings: Vec<String>,
    /// Orbit sizes `|Co_1| / |stabilizer|` that came out integral.
    pub orbit_sizes: BTreeMap<String, BigUint>,
}

impl Table2Report {
    pub fn passed_count(&self) -> usize {
        self.edges.iter().filter(|e| e.passed == Some(true)).count()
    }

    pub fn edge_passed(&self, parent: &str, child: &str) -> bool {
        self.edges.iter().any(|e| e.parent == parent && e.child == child && e.passed == Some(true))
    }
}

/// Double counting `N(P) * containments = N(C) * extensions` for every edge,
/// with `N(X) = |Co_1| / |stabilizer(X)|`.
pub fn table2_consistency(rows: &[Table2Row]) -> Table2Report {
    let co1 = conway_order();
    let mut warnings = Vec::new();
    let mut orbit_sizes = BTreeMap::new();
    for r in rows {
        match &r.stabilizer_order {
            None => warnings.push(format!("{}: no stabilizer order, row skipped", r.symbol)),
            Some(s) if s.is_zero() => warnings.push(format!("{}: zero stabilizer order", r.symbol)),
            Some(s) => {
                let (n, rem) = co1.div_rem(s);
                if rem.is_zero() {
                    orbit_sizes.insert(r.symbol.clone(), n);
                } else {
                    warnings.push(format!("{}: stabilizer order does not divide |Co_1|", r.symbol));
                }
            }
        }
    }
    let mut edges = Vec::new();
    for r in rows {
        for e in &r.edges {
            let lhs = orbit_sizes.get(&r.symbol).map(|n| n * e.containments);
            let rhs = orbit_sizes.get(&e.child).map(|n| n * e.extensions);
            let passed = match (&lhs, &rhs) {
                (Some(a), Some(b)) => Some(a == b),
                _ => None,
            };
            if !orbit_sizes.contains_key(&e.child) && !rows.iter().any(|x| x.symbol == e.child) {
                warnings.push(format!("{}: unknown child {}", r.symbol, e.child));
            }
            edges.push(EdgeCheck { parent: r.symbol.clone(), child: e.child.clone(), lhs, rhs, passed });
        }
    }
    Table2Report { edges, warnings, orbit_sizes }
}
