//! Based rings with duality and their ring-theoretic invariants.

mod equiv;
mod fpdim;
mod json;
mod partial;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::numeric::{Cyclotomic, RealInterval};

pub use equiv::{fusion_signature, grothendieck_equivalent, MAX_EQUIVALENCE_RANK};
pub use fpdim::{characteristic_polynomial, perron_root, FpCertificate, FpDim};
pub use partial::PartialFusionRing;

/// A fusion ring: basis labels (index 0 is the unit), a duality involution
/// and nonnegative structure constants N_{a,b}^c.
#[derive(Clone, Debug)]
pub struct FusionRing {
    labels: Vec<String>,
    dual: Vec<usize>,
    tensor: Vec<u32>,
    products: Vec<Vec<(usize, u32)>>,
    dims: OnceLock<Vec<FpDim>>,
}

impl PartialEq for FusionRing {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.dual == other.dual && self.tensor == other.tensor
    }
}

impl Eq for FusionRing {}

/// One violated axiom instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: &'static str,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
    /// Violations found beyond the ones recorded.
    pub truncated: usize,
}

impl AxiomReport {
    const LIMIT: usize = 64;

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, axiom: &'static str, witness: String) {
        if self.violations.len() < Self::LIMIT {
            self.violations.push(AxiomViolation { axiom, witness });
        } else {
            self.truncated += 1;
        }
    }
}

/// A fusion-closed, duality-closed set of basis elements with its ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubRing {
    /// Indices into the parent ring, ascending, starting with the unit.
    pub members: Vec<usize>,
    pub ring: FusionRing,
}

/// A finite group given by its multiplication table on ring elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    /// Ring indices of the group elements; position 0 is the identity.
    pub elements: Vec<usize>,
    /// `mul[i][j]` is the position of elements[i]·elements[j].
    pub mul: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.mul[i][j] == self.mul[j][i]))
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut x = i;
        while x != 0 {
            x = self.mul[x][i];
            k += 1;
        }
        k
    }

    /// Sorted element orders, a cheap isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order()).map(|i| self.element_order(i)).collect();
        v.sort_unstable();
        v
    }
}

/// The universal grading: components of basis elements and the group law on
/// components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub component_of: Vec<usize>,
    /// Members of each component; component 0 contains the unit.
    pub components: Vec<Vec<usize>>,
    pub table: Vec<Vec<usize>>,
    /// Whether every component has the same total FPdim²; `None` when the
    /// dimensions are not all exact and the enclosures do not decide it.
    pub equidimensional: Option<bool>,
}

impl FusionRing {
    /// Builds a ring from sparse entries (a, b, c, N_{a,b}^c). No axioms are
    /// checked; call [`FusionRing::validate`].
    pub fn from_entries(
        labels: Vec<String>,
        dual: Vec<usize>,
        entries: impl IntoIterator<Item = (usize, usize, usize, u32)>,
    ) -> Result<Self> {
        let r = labels.len();
        if r == 0 {
            return Err(Error::Malformed("fusion ring needs at least the unit".into()));
        }
        if dual.len() != r {
            return Err(Error::Malformed(format!("dual has {} entries for rank {r}", dual.len())));
        }
        if let Some(&bad) = dual.iter().find(|&&d| d >= r) {
            return Err(Error::Malformed(format!("dual index {bad} out of range")));
        }
        let mut tensor = vec![0u32; r * r * r];
        for (a, b, c, m) in entries {
            if a >= r || b >= r || c >= r {
                return Err(Error::Malformed(format!("tensor entry ({a},{b},{c}) out of range")));
            }
            tensor[(a * r + b) * r + c] = m;
        }
        Ok(Self::from_dense(labels, dual, tensor))
    }

    fn from_dense(labels: Vec<String>, dual: Vec<usize>, tensor: Vec<u32>) -> Self {
        let r = labels.len();
        let products = (0..r * r)
            .map(|ab| {
                (0..r)
                    .filter_map(|c| {
                        let m = tensor[ab * r + c];
                        (m > 0).then_some((c, m))
                    })
                    .collect()
            })
            .collect();
        FusionRing { labels, dual, tensor, products, dims: OnceLock::new() }
    }

    /// Builds a ring from a product rule returning the decomposition of a⊗b.
    pub fn from_rule<F>(labels: Vec<String>, dual: Vec<usize>, rule: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> Vec<(usize, u32)>,
    {
        let r = labels.len();
        let mut entries = Vec::new();
        for a in 0..r {
            for b in 0..r {
                let mut acc = vec![0u32; r];
                for (c, m) in rule(a, b) {
                    if c >= r {
                        return Err(Error::Malformed(format!("product {a}*{b} produced index {c}")));
                    }
                    acc[c] += m;
                }
                entries.extend(acc.into_iter().enumerate().filter(|(_, m)| *m > 0).map(|(c, m)| (a, b, c, m)));
            }
        }
        Self::from_entries(labels, dual, entries)
    }

    /// Group ring of a finite group given by a multiplication table on 0..n
    /// with identity 0.
    pub fn group_ring(labels: Vec<String>, mul: &[Vec<usize>]) -> Result<Self> {
        let n = labels.len();
        let dual = (0..n)
            .map(|a| (0..n).find(|&b| mul[a][b] == 0).ok_or_else(|| Error::Malformed(format!("{a} has no inverse"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rule(labels, dual, |a, b| vec![(mul[a][b], 1)])
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn dual(&self, a: usize) -> usize {
        self.dual[a]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    /// N_{a,b}^c
    pub fn n(&self, a: usize, b: usize, c: usize) -> u32 {
        let r = self.rank();
        self.tensor[(a * r + b) * r + c]
    }

    /// Nonzero constituents of a⊗b with multiplicities.
    pub fn product(&self, a: usize, b: usize) -> &[(usize, u32)] {
        &self.products[a * self.rank() + b]
    }

    /// Nonzero entries (a, b, c, N) in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, u32)> + '_ {
        let r = self.rank();
        (0..r * r).flat_map(move |ab| {
            self.products[ab].iter().map(move |&(c, m)| (ab / r, ab % r, c, m))
        })
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|a| (a + 1..r).all(|b| self.product(a, b) == self.product(b, a)))
    }

    pub fn is_self_dual(&self, a: usize) -> bool {
        self.dual[a] == a
    }

    /// Checks unit, duality, Frobenius reciprocity and associativity.
    pub fn validate(&self) -> AxiomReport {
        let r = self.rank();
        let l = |a: usize| &self.labels[a];
        let mut rep = AxiomReport::default();
        for b in 0..r {
            for c in 0..r {
                let want = u32::from(b == c);
                if self.n(0, b, c) != want || self.n(b, 0, c) != want {
                    rep.push("unit", format!("N(1,{0},{1}) or N({0},1,{1}) != {want}", l(b), l(c)));
                }
            }
        }
        if self.dual[0] != 0 {
            rep.push("duality", "dual of the unit is not the unit".into());
        }
        for a in 0..r {
            if self.dual[self.dual[a]] != a {
                rep.push("duality", format!("dual is not an involution at {}", l(a)));
            }
            for b in 0..r {
                let want = u32::from(b == self.dual[a]);
                let got = self.n(a, b, 0);
                if got != want {
                    rep.push("duality", format!("N({},{},1) = {got}, expected {want}", l(a), l(b)));
                }
            }
        }
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    let x = self.n(a, b, c);
                    let y = self.n(self.dual[a], c, b);
                    let z = self.n(c, self.dual[b], a);
                    if x != y || x != z {
                        rep.push(
                            "frobenius",
                            format!("N({},{},{}) = {x}, N(a*,c,b) = {y}, N(c,b*,a) = {z}", l(a), l(b), l(c)),
                        );
                    }
                }
            }
        }
        let mut left = vec![0u64; r];
        let mut right = vec![0u64; r];
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    left.iter_mut().for_each(|x| *x = 0);
                    right.iter_mut().for_each(|x| *x = 0);
                    for &(e, m) in self.product(a, b) {
                        for &(d, k) in self.product(e, c) {
                            left[d] += (m * k) as u64;
                        }
                    }
                    for &(f, m) in self.product(b, c) {
                        for &(d, k) in self.product(a, f) {
                            right[d] += (m * k) as u64;
                        }
                    }
                    if left != right {
                        let d = (0..r).find(|&d| left[d] != right[d]).unwrap();
                        rep.push(
                            "associativity",
                            format!(
                                "(({}*{})*{}) has {} copies of {}, ({}*({}*{})) has {}",
                                l(a), l(b), l(c), left[d], l(d), l(a), l(b), l(c), right[d]
                            ),
                        );
                    }
                }
            }
        }
        rep
    }

    /// Matrix of left multiplication by `a`: entry [c][b] = N_{a,b}^c.
    pub fn fusion_matrix(&self, a: usize) -> Vec<Vec<u32>> {
        let r = self.rank();
        let mut m = vec![vec![0u32; r]; r];
        for b in 0..r {
            for &(c, k) in self.product(a, b) {
                m[c][b] = k;
            }
        }
        m
    }

    /// Perron root of one fusion matrix, certified from its characteristic polynomial.
    pub fn fp_dimension(&self, a: usize) -> FpDim {
        if a == 0 {
            return FpDim::from_exact(Cyclotomic::one(), FpCertificate::IntegerRoot);
        }
        perron_root(&self.fusion_matrix(a))
    }

    /// All FP-dimensions, computed once per ring.
    pub fn fp_dimensions(&self) -> &[FpDim] {
        self.dims.get_or_init(|| {
            fpdim::character_dimensions(self)
                .unwrap_or_else(|| (0..self.rank()).map(|a| self.fp_dimension(a)).collect())
        })
    }

    /// Σ FPdim(a)²
    pub fn fp_dimension_category(&self) -> FpDim {
        let dims = self.fp_dimensions();
        if dims.iter().all(|d| d.is_exact()) {
            let total: Cyclotomic = dims.iter().map(|d| {
                let x = d.exact.as_ref().unwrap();
                x * x
            }).sum();
            return FpDim::from_exact(total, FpCertificate::Derived);
        }
        let mut acc = RealInterval::point(BigRational::from_integer(BigInt::from(0)));
        for d in dims {
            acc = acc.add(&d.enclosure.mul(&d.enclosure));
        }
        FpDim { exact: None, enclosure: acc, certificate: FpCertificate::Enclosure }
    }

    /// FPdim of the sum of squares over the given members.
    pub fn fp_dimension_of(&self, members: &[usize]) -> Option<Cyclotomic> {
        let dims = self.fp_dimensions();
        members
            .iter()
            .map(|&a| dims[a].exact.as_ref().map(|x| x * x))
            .collect::<Option<Vec<_>>>()
            .map(|v| v.into_iter().sum())
    }

    pub fn is_integral(&self) -> bool {
        self.fp_dimensions().iter().all(|d| d.is_integer())
    }

    pub fn is_weakly_integral(&self) -> bool {
        self.fp_dimensions().iter().all(|d| d.square_is_integer())
    }

    /// Invertible basis elements: a⊗a* is the unit.
    pub fn invertibles(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&a| self.product(a, self.dual[a]) == [(0, 1)])
            .collect()
    }

    /// Closure of a set under fusion and duality, always containing the unit.
    pub fn closure(&self, seeds: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        set.insert(0);
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in seeds {
            for x in [s, self.dual[s]] {
                if set.insert(x) {
                    queue.push_back(x);
                }
            }
        }
        queue.push_back(0);
        while let Some(x) = queue.pop_front() {
            let current: Vec<usize> = set.iter().copied().collect();
            for y in current {
                for (a, b) in [(x, y), (y, x)] {
                    for &(c, _) in self.product(a, b) {
                        for z in [c, self.dual[c]] {
                            if set.insert(z) {
                                queue.push_back(z);
                            }
                        }
                    }
                }
            }
        }
        set.into_iter().collect()
    }

    /// True when the set is closed under fusion and duality and contains the unit.
    pub fn is_closed(&self, members: &[usize]) -> bool {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        set.contains(&0)
            && members.iter().all(|&a| set.contains(&self.dual[a]))
            && members.iter().all(|&a| {
                members
                    .iter()
                    .all(|&b| self.product(a, b).iter().all(|(c, _)| set.contains(c)))
            })
    }

    /// The restriction of the ring to a closed set of members.
    pub fn restrict(&self, members: &[usize]) -> Result<FusionRing> {
        if !self.is_closed(members) {
            return Err(Error::Precondition("subset is not closed under fusion and duality".into()));
        }
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let pos = |x: usize| sorted.binary_search(&x).expect("closed");
        let labels = sorted.iter().map(|&a| self.labels[a].clone()).collect();
        let dual = sorted.iter().map(|&a| pos(self.dual[a])).collect();
        let mut entries = Vec::new();
        for (i, &a) in sorted.iter().enumerate() {
            for (j, &b) in sorted.iter().enumerate() {
                for &(c, m) in self.product(a, b) {
                    entries.push((i, j, pos(c), m));
                }
            }
        }
        Self::from_entries(labels, dual, entries)
    }

    pub fn subring_generated(&self, seeds: &[usize]) -> SubRing {
        let members = self.closure(seeds);
        let ring = self.restrict(&members).expect("closure is closed");
        SubRing { members, ring }
    }

    /// Constituents of a⊗a* over all basis elements a, closed up.
    pub fn adjoint_members(&self) -> Vec<usize> {
        let seeds: Vec<usize> = (0..self.rank())
            .flat_map(|a| self.product(a, self.dual[a]).iter().map(|&(c, _)| c).collect::<Vec<_>>())
            .collect();
        self.closure(&seeds)
    }

    pub fn adjoint_subring(&self) -> SubRing {
        self.subring_generated(&self.adjoint_members())
    }

    /// Subring on the invertible elements, and whether it is everything.
    pub fn pointed_part(&self) -> (SubRing, bool) {
        let inv = self.invertibles();
        let pointed = inv.len() == self.rank();
        (self.subring_generated(&inv), pointed)
    }

    pub fn is_pointed(&self) -> bool {
        self.invertibles().len() == self.rank()
    }

    pub fn invertible_group(&self) -> GroupTable {
        let elements = self.invertibles();
        let pos = |x: usize| elements.iter().position(|&e| e == x).expect("invertibles are closed");
        let mul = elements
            .iter()
            .map(|&a| elements.iter().map(|&b| pos(self.product(a, b)[0].0)).collect())
            .collect();
        GroupTable { elements, mul }
    }

    /// Universal grading by cosets of the adjoint subring.
    pub fn universal_grading(&self) -> Result<Grading> {
        let r = self.rank();
        let adj = self.adjoint_members();
        let mut component_of = vec![usize::MAX; r];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for a in 0..r {
            if component_of[a] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = BTreeSet::new();
            for &x in &adj {
                for &(c, _) in self.product(a, x) {
                    members.insert(c);
                }
            }
            for &c in &members {
                if component_of[c] != usize::MAX && component_of[c] != id {
                    return Err(Error::Inconsistent(format!(
                        "grading classes of {} and {} overlap",
                        self.labels[a], self.labels[c]
                    )));
                }
                component_of[c] = id;
            }
            components.push(members.into_iter().collect());
        }
        let g = components.len();
        let mut table = vec![vec![usize::MAX; g]; g];
        for i in 0..g {
            for j in 0..g {
                for &a in &components[i] {
                    for &b in &components[j] {
                        for &(c, _) in self.product(a, b) {
                            let k = component_of[c];
                            if table[i][j] == usize::MAX {
                                table[i][j] = k;
                            } else if table[i][j] != k {
                                return Err(Error::Inconsistent(format!(
                                    "product of grading components {i} and {j} is not homogeneous"
                                )));
                            }
                        }
                    }
                }
            }
        }
        let equidimensional = self.components_equidimensional(&components);
        Ok(Grading { component_of, components, table, equidimensional })
    }

    fn components_equidimensional(&self, components: &[Vec<usize>]) -> Option<bool> {
        let exact: Option<Vec<Cyclotomic>> = components.iter().map(|c| self.fp_dimension_of(c)).collect();
        if let Some(v) = exact {
            return Some(v.iter().all(|x| *x == v[0]));
        }
        let dims = self.fp_dimensions();
        let enc: Vec<RealInterval> = components
            .iter()
            .map(|c| {
                c.iter().fold(RealInterval::point(BigRational::from_integer(BigInt::from(0))), |acc, &a| {
                    acc.add(&dims[a].enclosure.mul(&dims[a].enclosure))
                })
            })
            .collect();
        if enc.iter().any(|e| !e.overlaps(&enc[0])) {
            Some(false)
        } else {
            None
        }
    }

    /// Human-readable decomposition of a⊗b.
    pub fn product_string(&self, a: usize, b: usize) -> String {
        let parts: Vec<String> = self
            .product(a, b)
            .iter()
            .map(|&(c, m)| if m == 1 { self.labels[c].clone() } else { format!("{m}{}", self.labels[c]) })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fusion ring of rank {}", self.rank())?;
        for a in 0..self.rank() {
            for b in a..self.rank() {
                writeln!(f, "  {} * {} = {}", self.labels[a], self.labels[b], self.product_string(a, b))?;
            }
        }
        Ok(())
    }
}
