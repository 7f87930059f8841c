//! Simply-laced root systems (types A, D, E and direct sums of them).
//!
//! Roots are stored both as integer coefficient vectors in the simple-root
//! basis (global across components) and as exact coordinates in a fixed
//! ambient space: `A_l` lives in `Q^{l+1}` with roots `e_i - e_j`, `D_l` in
//! `Q^l` with roots `±e_i ± e_j`, and `E_6 ⊂ E_7 ⊂ E_8` in `Q^8` (even
//! coordinate model, half-integers allowed). Components of a semisimple
//! system occupy orthogonal blocks of the ambient space.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use crate::rational::{q, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootSystemError {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("cannot parse root system spec {0:?}")]
    Parse(String),
    #[error("empty root system")]
    Empty,
    #[error("root index {0} out of range")]
    NoSuchRoot(usize),
    #[error("simple root index {0} out of range")]
    NoSuchSimpleRoot(usize),
    #[error("roots {0} and {1} are not adjacent (orthogonal or equal)")]
    NotAdjacent(usize, usize),
    #[error("roots {0} and {1} lie in different components")]
    DifferentComponents(usize, usize),
    #[error("operation requires a simple system of type A, got {0}")]
    NotTypeA(String),
    #[error("root system invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        })
    }
}

/// An irreducible simply-laced type such as `A_5` or `E_8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(RootSystemError::InvalidRank { family, rank })
        }
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).expect("valid A rank")
    }

    pub fn d(rank: usize) -> Self {
        Self::new(Family::D, rank).expect("valid D rank")
    }

    pub fn e(rank: usize) -> Self {
        Self::new(Family::E, rank).expect("valid E rank")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coxeter_number(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l + 1,
            Family::D => 2 * l - 2,
            Family::E => match l {
                6 => 12,
                7 => 18,
                _ => 30,
            },
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        self.rank * self.coxeter_number() / 2
    }

    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::D => self.rank,
            Family::E => 8,
        }
    }

    /// Simple roots in Bourbaki order, in ambient coordinates.
    pub fn simple_root_coords(&self) -> Vec<Vec<Rational>> {
        let n = self.ambient_dim();
        let l = self.rank;
        let unit = |pairs: &[(usize, Rational)]| {
            let mut v = vec![Rational::zero(); n];
            for (i, x) in pairs {
                v[*i] = x.clone();
            }
            v
        };
        let one = Rational::one;
        let m1 = || -Rational::one();
        match self.family {
            Family::A => (0..l).map(|i| unit(&[(i, one()), (i + 1, m1())])).collect(),
            Family::D => {
                let mut s: Vec<_> = (0..l - 1).map(|i| unit(&[(i, one()), (i + 1, m1())])).collect();
                s.push(unit(&[(l - 2, one()), (l - 1, one())]));
                s
            }
            Family::E => {
                let half = q(1, 2);
                let mut a1 = vec![-&half; 8];
                a1[0] = half.clone();
                a1[7] = half;
                let mut s = vec![a1, unit(&[(0, one()), (1, one())])];
                for i in 0..6 {
                    s.push(unit(&[(i, m1()), (i + 1, one())]));
                }
                s.truncate(l);
                s
            }
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = RootSystemError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || RootSystemError::Parse(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => Family::A,
            'D' => Family::D,
            'E' => Family::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| bad())?;
        SimpleType::new(family, rank)
    }
}

/// Parses a component list such as `"A2"`, `"A1^24"`, `"A2*12+E6"` or `"A5^4D4"`.
pub fn parse_components(spec: &str) -> Result<Vec<SimpleType>, RootSystemError> {
    let bad = || RootSystemError::Parse(spec.to_string());
    let s: Vec<char> = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| {
        let start = *i;
        while *i < s.len() && s[*i].is_ascii_digit() {
            *i += 1;
        }
        s[start..*i].iter().collect::<String>()
    };
    while i < s.len() {
        if s[i] == '+' {
            i += 1;
            continue;
        }
        let letter = s[i];
        i += 1;
        if i < s.len() && s[i] == '_' {
            i += 1;
        }
        let rank = digits(&mut i);
        let ty: SimpleType = format!("{letter}{rank}").parse()?;
        let mut mult = 1usize;
        if i < s.len() && (s[i] == '^' || s[i] == '*') {
            i += 1;
            mult = digits(&mut i).parse().map_err(|_| bad())?;
        }
        if mult == 0 {
            return Err(bad());
        }
        out.extend(core::iter::repeat_n(ty, mult));
    }
    if out.is_empty() {
        return Err(RootSystemError::Empty);
    }
    Ok(out)
}

/// A positive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    component: usize,
    coeffs: Vec<i64>,
    coords: Vec<Rational>,
}

impl Root {
    pub fn component(&self) -> usize {
        self.component
    }

    /// Coefficients in the global simple-root basis.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Exact ambient coordinates.
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Euclidean inner product of ambient coordinates.
    pub fn dot(&self, other: &Root) -> Rational {
        self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum()
    }
}

/// The split of the positive roots relative to a fixed positive root `alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaPartition {
    /// `alpha` itself.
    pub delta0: usize,
    /// Positive roots `beta != alpha` with `(alpha, beta) != 0`.
    pub delta1: Vec<usize>,
    /// Positive roots orthogonal to `alpha`.
    pub delta2: Vec<usize>,
}

/// A semisimple simply-laced root system with its positive roots in canonical order.
#[derive(Debug, Clone)]
pub struct RootSystem {
    components: Vec<SimpleType>,
    roots: Vec<Root>,
    simple: Vec<usize>,
    component_roots: Vec<Range<usize>>,
    rank_offset: Vec<usize>,
    cartan: Vec<Vec<i64>>,
    // N x N inner products of positive roots
    ip: Vec<i8>,
    lookup: BTreeMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn build(components: &[SimpleType]) -> Result<Self, RootSystemError> {
        if components.is_empty() {
            return Err(RootSystemError::Empty);
        }
        let rank: usize = components.iter().map(SimpleType::rank).sum();
        let ambient: usize = components.iter().map(SimpleType::ambient_dim).sum();
        let mut roots = Vec::new();
        let mut simple = vec![0; rank];
        let mut component_roots = Vec::new();
        let mut rank_offset = Vec::new();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let (mut roff, mut aoff) = (0, 0);
        for (ci, ty) in components.iter().enumerate() {
            let l = ty.rank();
            let simple_coords = ty.simple_root_coords();
            let local_cartan: Vec<Vec<i64>> = simple_coords
                .iter()
                .map(|a| {
                    simple_coords
                        .iter()
                        .map(|b| {
                            let d: Rational = a.iter().zip(b).map(|(x, y)| x * y).sum();
                            d.to_integer()
                                .and_then(|v| i64::try_from(v).ok())
                                .expect("integral Cartan entry")
                        })
                        .collect()
                })
                .collect();
            for i in 0..l {
                for j in 0..l {
                    cartan[roff + i][roff + j] = local_cartan[i][j];
                }
            }
            let mut local = positive_roots_from_cartan(&local_cartan);
            local.sort();
            if local.len() != ty.num_positive_roots() {
                return Err(RootSystemError::Invariant(format!(
                    "{ty}: enumerated {} positive roots, expected {}",
                    local.len(),
                    ty.num_positive_roots()
                )));
            }
            let start = roots.len();
            for c in local {
                let mut coeffs = vec![0i64; rank];
                coeffs[roff..roff + l].copy_from_slice(&c);
                let mut coords = vec![Rational::zero(); ambient];
                for (k, &ck) in c.iter().enumerate() {
                    if ck == 0 {
                        continue;
                    }
                    let ck = Rational::from(ck);
                    for (x, s) in coords[aoff..aoff + ty.ambient_dim()].iter_mut().zip(&simple_coords[k]) {
                        *x += &(&ck * s);
                    }
                }
                if let Some(k) = c.iter().position(|&x| x == 1) {
                    if c.iter().sum::<i64>() == 1 {
                        simple[roff + k] = roots.len();
                    }
                }
                roots.push(Root { component: ci, coeffs, coords });
            }
            component_roots.push(start..roots.len());
            rank_offset.push(roff);
            roff += l;
            aoff += ty.ambient_dim();
        }

        let n = roots.len();
        let mut ip = vec![0i8; n * n];
        for (ci, range) in component_roots.iter().enumerate() {
            let (ro, l) = (rank_offset[ci], components[ci].rank());
            let weights: Vec<Vec<i64>> = range
                .clone()
                .map(|a| {
                    (0..l)
                        .map(|i| (0..l).map(|j| cartan[ro + i][ro + j] * roots[a].coeffs[ro + j]).sum())
                        .collect()
                })
                .collect();
            for a in range.clone() {
                for b in range.clone() {
                    let v: i64 = (0..l).map(|i| roots[a].coeffs[ro + i] * weights[b - range.start][i]).sum();
                    ip[a * n + b] = v as i8;
                }
            }
        }
        let lookup = roots.iter().enumerate().map(|(i, r)| (r.coeffs.clone(), i)).collect();
        let rs = RootSystem {
            components: components.to_vec(),
            roots,
            simple,
            component_roots,
            rank_offset,
            cartan,
            ip,
            lookup,
        };
        rs.check_invariants()?;
        Ok(rs)
    }

    pub fn from_spec(spec: &str) -> Result<Self, RootSystemError> {
        Self::build(&parse_components(spec)?)
    }

    fn check_invariants(&self) -> Result<(), RootSystemError> {
        let fail = |m: String| Err(RootSystemError::Invariant(m));
        for (ci, ty) in self.components.iter().enumerate() {
            let n = self.component_roots[ci].len();
            if 2 * n != ty.rank() * ty.coxeter_number() {
                return fail(format!("{ty}: 2N != lh"));
            }
        }
        for (a, r) in self.roots.iter().enumerate() {
            if r.dot(r) != Rational::from(2) {
                return fail(format!("root {a} does not have norm 2"));
            }
            if self.ip(a, a) != 2 {
                return fail(format!("Cartan pairing of root {a} with itself is not 2"));
            }
            let h = self.components[r.component].coxeter_number();
            let d1 = self.component_roots[r.component].clone().filter(|&b| b != a && self.ip(a, b) != 0).count();
            if d1 != 2 * h - 4 {
                return fail(format!("root {a}: |Delta_1| = {d1}, expected {}", 2 * h - 4));
            }
        }
        Ok(())
    }

    pub fn components(&self) -> &[SimpleType] {
        &self.components
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    /// Total rank `l`.
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Number of positive roots `N`.
    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    /// Root index of the `i`-th simple root (global Bourbaki order).
    pub fn simple_root(&self, i: usize) -> usize {
        self.simple[i]
    }

    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn component_roots(&self, c: usize) -> Range<usize> {
        self.component_roots[c].clone()
    }

    /// Global simple-root indices belonging to component `c`.
    pub fn component_simple_range(&self, c: usize) -> Range<usize> {
        let o = self.rank_offset[c];
        o..o + self.components[c].rank()
    }

    pub fn coxeter_number_of(&self, root: usize) -> usize {
        self.components[self.roots[root].component].coxeter_number()
    }

    /// `(alpha, beta)` for positive roots, always in `{-1, 0, 1, 2}`.
    #[inline]
    pub fn ip(&self, a: usize, b: usize) -> i64 {
        self.ip[a * self.roots.len() + b] as i64
    }

    /// `alpha ~ beta`: distinct and not orthogonal.
    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.ip(a, b) != 0
    }

    /// `(h_i, alpha)` where `h_i` is the `i`-th simple root.
    pub fn simple_pairing(&self, i: usize, root: usize) -> i64 {
        let c = &self.roots[root].coeffs;
        self.cartan[i].iter().zip(c).map(|(x, y)| x * y).sum()
    }

    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.lookup.get(coeffs).copied()
    }

    fn check_root(&self, a: usize) -> Result<(), RootSystemError> {
        if a < self.roots.len() {
            Ok(())
        } else {
            Err(RootSystemError::NoSuchRoot(a))
        }
    }

    pub fn delta_partition(&self, alpha: usize) -> Result<DeltaPartition, RootSystemError> {
        self.check_root(alpha)?;
        let (mut delta1, mut delta2) = (Vec::new(), Vec::new());
        for b in 0..self.roots.len() {
            if b == alpha {
                continue;
            }
            if self.ip(alpha, b) != 0 {
                delta1.push(b);
            } else {
                delta2.push(b);
            }
        }
        Ok(DeltaPartition { delta0: alpha, delta1, delta2 })
    }

    /// The unique positive root `gamma` with `alpha ~ gamma ~ beta`, for `alpha ~ beta`.
    pub fn triple(&self, alpha: usize, beta: usize) -> Result<usize, RootSystemError> {
        self.check_root(alpha)?;
        self.check_root(beta)?;
        if self.roots[alpha].component != self.roots[beta].component {
            return Err(RootSystemError::DifferentComponents(alpha, beta));
        }
        if !self.adjacent(alpha, beta) {
            return Err(RootSystemError::NotAdjacent(alpha, beta));
        }
        let (a, b) = (&self.roots[alpha].coeffs, &self.roots[beta].coeffs);
        let cand: Vec<i64> = if self.ip(alpha, beta) < 0 {
            a.iter().zip(b).map(|(x, y)| x + y).collect()
        } else {
            let d: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
            if d.iter().all(|&x| x >= 0) {
                d
            } else {
                d.iter().map(|x| -x).collect()
            }
        };
        self.index_of(&cand)
            .ok_or_else(|| RootSystemError::Invariant(format!("no third root for ({alpha}, {beta})")))
    }

    /// The sub-system spanned by a set of simple roots (global indices).
    pub fn subsystem(&self, simple_subset: &[usize]) -> Result<SubSystem, RootSystemError> {
        let set: BTreeSet<usize> = simple_subset.iter().copied().collect();
        if let Some(&bad) = set.iter().find(|&&i| i >= self.rank()) {
            return Err(RootSystemError::NoSuchSimpleRoot(bad));
        }
        // connected components of the Dynkin sub-diagram
        let mut seen = BTreeSet::new();
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for &s in &set {
            if seen.contains(&s) {
                continue;
            }
            let mut stack = vec![s];
            let mut comp = Vec::new();
            seen.insert(s);
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &y in &set {
                    if !seen.contains(&y) && self.cartan[x][y] != 0 {
                        seen.insert(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort();
            comps.push(comp);
        }
        comps.sort();
        let support_in = |r: &Root, s: &[usize]| {
            r.coeffs.iter().enumerate().all(|(i, &c)| c == 0 || s.binary_search(&i).is_ok())
        };
        let mut components = Vec::new();
        for simple in comps {
            let roots: Vec<usize> =
                (0..self.roots.len()).filter(|&a| support_in(&self.roots[a], &simple)).collect();
            let kind = classify_dynkin(&simple, &self.cartan)?;
            if roots.len() != kind.num_positive_roots() {
                return Err(RootSystemError::Invariant(format!(
                    "sub-system {kind} has {} positive roots",
                    roots.len()
                )));
            }
            components.push(SubComponent { simple, roots, kind });
        }
        let simple: Vec<usize> = set.into_iter().collect();
        let mut roots: Vec<usize> = components.iter().flat_map(|c| c.roots.iter().copied()).collect();
        roots.sort();
        Ok(SubSystem { simple, roots, components })
    }

    /// `Phi_1 ⊂ Phi_2 ⊂ ... ⊂ Phi_l` for a simple system of type A, where `Phi_i`
    /// is spanned by the first `i` simple roots.
    pub fn subsystem_chain(&self) -> Result<Vec<SubSystem>, RootSystemError> {
        if !self.is_simple() || self.components[0].family() != Family::A {
            return Err(RootSystemError::NotTypeA(self.to_string()));
        }
        (1..=self.rank()).map(|i| self.subsystem(&(0..i).collect::<Vec<_>>())).collect()
    }

    /// Prefix chain of component `c` in Bourbaki order: `{s_0}, {s_0,s_1}, ...`,
    /// ending with the whole component.
    pub fn prefix_chain(&self, c: usize) -> Vec<Vec<usize>> {
        let r = self.component_simple_range(c);
        (r.start + 1..=r.end).map(|e| (r.start..e).collect()).collect()
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_components(&self.components))
    }
}

/// Compact name such as `A1^24` or `A5^4+D4`.
pub fn format_components(components: &[SimpleType]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < components.len() {
        let mut j = i;
        while j < components.len() && components[j] == components[i] {
            j += 1;
        }
        let m = j - i;
        parts.push(if m == 1 { components[i].to_string() } else { format!("{}^{m}", components[i]) });
        i = j;
    }
    parts.join("+")
}

/// An irreducible piece of a [`SubSystem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubComponent {
    pub simple: Vec<usize>,
    pub roots: Vec<usize>,
    pub kind: SimpleType,
}

impl SubComponent {
    pub fn coxeter_number(&self) -> usize {
        self.kind.coxeter_number()
    }
}

/// A closed sub-system spanned by simple roots; its roots are indices into the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubSystem {
    pub simple: Vec<usize>,
    pub roots: Vec<usize>,
    pub components: Vec<SubComponent>,
}

impl SubSystem {
    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    pub fn name(&self) -> String {
        if self.components.is_empty() {
            return "0".into();
        }
        let kinds: Vec<SimpleType> = self.components.iter().map(|c| c.kind).collect();
        let mut sorted = kinds.clone();
        sorted.sort_by(|a, b| b.cmp(a));
        format_components(&sorted)
    }
}

fn positive_roots_from_cartan(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = cartan.len();
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..l {
        let mut e = vec![0; l];
        e[i] = 1;
        found.insert(e.clone());
        queue.push(e);
    }
    while let Some(r) = queue.pop() {
        for i in 0..l {
            let pairing: i64 = (0..l).map(|j| r[j] * cartan[j][i]).sum();
            if pairing == -1 {
                let mut s = r.clone();
                s[i] += 1;
                if found.insert(s.clone()) {
                    queue.push(s);
                }
            }
        }
    }
    found.into_iter().collect()
}

fn classify_dynkin(simple: &[usize], cartan: &[Vec<i64>]) -> Result<SimpleType, RootSystemError> {
    let n = simple.len();
    let nbrs = |x: usize| simple.iter().copied().filter(move |&y| y != x && cartan[x][y] != 0);
    let branch: Vec<usize> = simple.iter().copied().filter(|&x| nbrs(x).count() >= 3).collect();
    match branch.as_slice() {
        [] => SimpleType::new(Family::A, n),
        [b] => {
            let mut arms: Vec<usize> = nbrs(*b)
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (*b, start, 1);
                    loop {
                        let next: Vec<usize> = nbrs(cur).filter(|&y| y != prev).collect();
                        match next.as_slice() {
                            [nx] => {
                                prev = cur;
                                cur = *nx;
                                len += 1;
                            }
                            _ => break len,
                        }
                    }
                })
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, _] => SimpleType::new(Family::D, n),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => SimpleType::new(Family::E, n),
                _ => Err(RootSystemError::Invariant(format!("unexpected Dynkin arms {arms:?}"))),
            }
        }
        _ => Err(RootSystemError::Invariant("Dynkin diagram with two branch nodes".into())),
    }
}
