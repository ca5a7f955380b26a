//! Balancing, Müger centralizers and symmetric subcategories.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{PartialModularData, SEntry};
use crate::error::{Error, Result};
use crate::fusionring::PartialFusionRing;
use crate::numeric::Cyclotomic;

/// Result of the balancing equation
/// θ_λ θ_μ s̃_{λ,μ} = Σ_ν N_{λ*,μ}^ν θ_ν dim(X_ν) at one pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BalancingOutcome {
    /// Both sides known and equal.
    Verified,
    Violated(String),
    /// Part of the fusion row is unknown; this many completions of it by
    /// nonnegative integers satisfy both the dimension count and the equation.
    Consistent { completions: usize },
    /// Too many candidate completions to enumerate.
    Unchecked(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancingReport {
    /// (λ, μ, outcome) for every λ ≤ μ with known s̃_{λ,μ}.
    pub pairs: Vec<(usize, usize, BalancingOutcome)>,
}

impl BalancingReport {
    pub fn violations(&self) -> Vec<&(usize, usize, BalancingOutcome)> {
        self.pairs.iter().filter(|p| matches!(p.2, BalancingOutcome::Violated(_))).collect()
    }

    pub fn passed(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn verified(&self) -> usize {
        self.pairs.iter().filter(|p| p.2 == BalancingOutcome::Verified).count()
    }

    /// True when every known entry was checked with fully known fusion.
    pub fn fully_verified(&self) -> bool {
        self.verified() == self.pairs.len()
    }
}

/// Centralizer of a set with partial S data: `members` certainly
/// centralize, `undecided` lists candidates together with an unknown pair
/// that blocks the decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Centralizer {
    pub members: Vec<usize>,
    pub undecided: Vec<(usize, (usize, usize))>,
}

impl Centralizer {
    pub fn is_decided(&self) -> bool {
        self.undecided.is_empty()
    }

    /// Everything that might centralize.
    pub fn upper(&self) -> Vec<usize> {
        let mut u: Vec<usize> = self.members.iter().copied().chain(self.undecided.iter().map(|x| x.0)).collect();
        u.sort_unstable();
        u
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricEnumeration {
    /// Fusion-closed sets proven symmetric, ordered by size.
    pub symmetric: Vec<Vec<usize>>,
    /// Sets whose symmetry or fusion closure depends on unknown data.
    pub undecidable: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MugerReport {
    pub sub: Vec<usize>,
    pub centralizer: Vec<usize>,
    pub dim_sub: Cyclotomic,
    pub dim_centralizer: Cyclotomic,
    pub dim_total: Cyclotomic,
    pub modular: bool,
    pub holds: bool,
}

const COMPLETION_LIMIT: usize = 200_000;

impl PartialModularData {
    /// Fusion data used by the checks: the attached ring, or the Verlinde
    /// ring when the S-matrix is complete and the ring is not.
    pub fn effective_ring(&self) -> PartialFusionRing {
        if !self.ring.is_complete() && self.is_s_complete() {
            if let Ok(r) = self.verlinde_fusion() {
                return PartialFusionRing::from_ring(&r);
            }
        }
        self.ring.clone()
    }

    /// Checks the balancing equation at every pair λ ≤ μ with known s̃.
    pub fn check_balancing(&self) -> BalancingReport {
        let ring = self.effective_ring();
        let r = self.rank();
        let weighted: Vec<Cyclotomic> = (0..r).map(|x| &self.twists[x] * &self.dims[x]).collect();
        let approx: Vec<f64> = self.dims.iter().map(|d| d.to_complex_f64().0).collect();
        let mut pairs = Vec::new();
        for l in 0..r {
            for m in l..r {
                let Some(s) = self.s[l][m].known() else { continue };
                let lhs = &(&self.twists[l] * &self.twists[m]) * s;
                let ld = ring.dual(l);
                let mut rhs = Cyclotomic::zero();
                let mut rest = &self.dims[l] * &self.dims[m];
                let mut open = Vec::new();
                for nu in 0..r {
                    match ring.get(ld, m, nu) {
                        Some(0) => {}
                        Some(k) => {
                            let k = BigRational::from_integer(BigInt::from(k));
                            rhs = &rhs + &weighted[nu].scale(&k);
                            rest = &rest - &self.dims[nu].scale(&k);
                        }
                        None => open.push(nu),
                    }
                }
                let outcome = if open.is_empty() {
                    if lhs == rhs {
                        BalancingOutcome::Verified
                    } else {
                        BalancingOutcome::Violated(format!(
                            "({}, {}): θθs̃ = {lhs} but Σ Nθd = {rhs}",
                            self.label(l),
                            self.label(m)
                        ))
                    }
                } else {
                    let target = &lhs - &rhs;
                    match count_completions(&open, &rest, &target, &self.dims, &weighted, &approx) {
                        Some(0) => BalancingOutcome::Violated(format!(
                            "({}, {}): no completion of the unknown fusion row satisfies the equation",
                            self.label(l),
                            self.label(m)
                        )),
                        Some(c) => BalancingOutcome::Consistent { completions: c },
                        None => BalancingOutcome::Unchecked(format!(
                            "({}, {}): too many candidate fusion rows",
                            self.label(l),
                            self.label(m)
                        )),
                    }
                };
                pairs.push((l, m, outcome));
            }
        }
        BalancingReport { pairs }
    }

    /// Whether X and Y centralize each other: s̃_{X,Y} = dim X dim Y.
    /// None when the entry is unknown and its modulus does not settle it.
    pub fn centralizes(&self, x: usize, y: usize) -> Option<bool> {
        let dd = &self.dims[x] * &self.dims[y];
        match &self.s[x][y] {
            SEntry::Known(s) => Some(*s == dd),
            SEntry::Unknown => None,
            SEntry::UnknownModulus(m) => {
                let m2 = Cyclotomic::from_rational(&(m * m));
                if m2 == &dd * &dd {
                    None
                } else {
                    Some(false)
                }
            }
        }
    }

    fn check_subset(&self, sub: &[usize]) -> Result<()> {
        let r = self.rank();
        let set: BTreeSet<usize> = sub.iter().copied().collect();
        if set.iter().any(|&x| x >= r) {
            return Err(Error::InvalidParameter("object index out of range".into()));
        }
        if !set.contains(&0) {
            return Err(Error::InvalidParameter("subcategory must contain the unit".into()));
        }
        if let Some(&x) = set.iter().find(|&&x| !set.contains(&self.ring.dual(x))) {
            return Err(Error::InvalidParameter(format!("subcategory not closed under duality at {}", self.label(x))));
        }
        let lower = self.ring.closure_lower(sub);
        if let Some(&x) = lower.iter().find(|x| !set.contains(x)) {
            return Err(Error::InvalidParameter(format!("subcategory not closed under fusion: contains products with {}", self.label(x))));
        }
        Ok(())
    }

    /// Centralizer of an arbitrary set of simples under partial data.
    pub fn centralizer_bounds(&self, sub: &[usize]) -> Result<Centralizer> {
        if sub.iter().any(|&x| x >= self.rank()) {
            return Err(Error::InvalidParameter("object index out of range".into()));
        }
        let mut members = Vec::new();
        let mut undecided = Vec::new();
        'y: for y in 0..self.rank() {
            let mut blocker = None;
            for &x in sub {
                match self.centralizes(x, y) {
                    Some(false) => continue 'y,
                    Some(true) => {}
                    None => blocker = blocker.or(Some((x, y))),
                }
            }
            match blocker {
                None => members.push(y),
                Some(p) => undecided.push((y, p)),
            }
        }
        Ok(Centralizer { members, undecided })
    }

    /// All simples Y with s̃_{X,Y} = dim X dim Y for every X in `sub`.
    /// Fails naming the first unknown pair that blocks a decision.
    pub fn centralizer(&self, sub: &[usize]) -> Result<Vec<usize>> {
        let c = self.centralizer_bounds(sub)?;
        match c.undecided.first() {
            None => Ok(c.members),
            Some(&(_, (x, y))) => Err(Error::UnknownEntry(self.label(x).into(), self.label(y).into())),
        }
    }

    fn pairwise(&self, members: &[usize]) -> std::result::Result<bool, (usize, usize)> {
        let mut blocker = None;
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i..] {
                match self.centralizes(x, y) {
                    Some(false) => return Ok(false),
                    Some(true) => {}
                    None => blocker = blocker.or(Some((x, y))),
                }
            }
        }
        blocker.map_or(Ok(true), Err)
    }

    /// Whether every pair of members centralizes each other. A definite
    /// failure is reported even when other entries are unknown.
    pub fn is_symmetric_subcategory(&self, sub: &[usize]) -> Result<bool> {
        self.check_subset(sub)?;
        self.pairwise(sub)
            .map_err(|(x, y)| Error::UnknownEntry(self.label(x).into(), self.label(y).into()))
    }

    /// Fusion-closed, duality-closed symmetric sets, grown one generator at a
    /// time from smaller symmetric sets.
    pub fn enumerate_symmetric_subcategories(&self) -> SymmetricEnumeration {
        let r = self.rank();
        let candidates: Vec<usize> = (1..r).filter(|&x| self.centralizes(x, x) != Some(false)).collect();
        let mut symmetric: BTreeSet<Vec<usize>> = [vec![0]].into();
        let mut undecidable: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<usize>> = [vec![0]].into();
        while let Some(set) = queue.pop_front() {
            for &x in &candidates {
                if set.contains(&x) {
                    continue;
                }
                let mut seeds = set.clone();
                seeds.push(x);
                let lower = self.ring.closure_lower(&seeds);
                let upper = self.ring.closure_upper(&seeds);
                match self.pairwise(&lower) {
                    Ok(false) => continue,
                    Ok(true) if lower == upper => {
                        if symmetric.insert(lower.clone()) {
                            queue.push_back(lower);
                        }
                    }
                    _ => {
                        undecidable.insert(lower);
                    }
                }
            }
        }
        let mut symmetric: Vec<Vec<usize>> = symmetric.into_iter().collect();
        symmetric.sort_by_key(|s| (s.len(), s.clone()));
        let mut undecidable: Vec<Vec<usize>> = undecidable.into_iter().collect();
        undecidable.sort_by_key(|s| (s.len(), s.clone()));
        SymmetricEnumeration { symmetric, undecidable }
    }

    /// dim(sub) · dim(sub′) = dim(C), with the modularity of the data
    /// (trivial centralizer of everything) checked along the way.
    pub fn muger_dimension_identity(&self, sub: &[usize]) -> Result<MugerReport> {
        self.check_subset(sub)?;
        let all: Vec<usize> = (0..self.rank()).collect();
        let modular = self.centralizer(&all)? == vec![0];
        let centralizer = self.centralizer(sub)?;
        let mut sub: Vec<usize> = sub.to_vec();
        sub.sort_unstable();
        sub.dedup();
        let dim_sub = self.dimension_of(&sub);
        let dim_centralizer = self.dimension_of(&centralizer);
        let dim_total = self.global_dimension();
        let holds = &dim_sub * &dim_centralizer == dim_total;
        Ok(MugerReport { sub, centralizer, dim_sub, dim_centralizer, dim_total, modular, holds })
    }
}

/// Counts nonnegative integer vectors n over `open` with
/// Σ n_ν dim_ν = rest and Σ n_ν θ_ν dim_ν = target.
fn count_completions(
    open: &[usize],
    rest: &Cyclotomic,
    target: &Cyclotomic,
    dims: &[Cyclotomic],
    weighted: &[Cyclotomic],
    approx: &[f64],
) -> Option<usize> {
    let budget = rest.to_complex_f64().0;
    if open.iter().any(|&nu| approx[nu] <= 0.0) {
        return None;
    }
    if budget < -1e-9 {
        return Some(0);
    }
    let bounds: Vec<u32> = open.iter().map(|&nu| (budget / approx[nu] + 1e-9).floor().max(0.0) as u32).collect();
    let leaves = bounds.iter().try_fold(1usize, |acc, &b| acc.checked_mul(b as usize + 1))?;
    if leaves > COMPLETION_LIMIT {
        return None;
    }
    let mut count = 0;
    let mut n = vec![0u32; open.len()];
    loop {
        let used: f64 = n.iter().zip(open).map(|(&k, &nu)| k as f64 * approx[nu]).sum();
        if (used - budget).abs() < 1e-6 {
            let mut d = Cyclotomic::zero();
            let mut w = Cyclotomic::zero();
            for (&k, &nu) in n.iter().zip(open) {
                if k > 0 {
                    let k = BigRational::from_integer(BigInt::from(k));
                    d = &d + &dims[nu].scale(&k);
                    w = &w + &weighted[nu].scale(&k);
                }
            }
            if d == *rest && w == *target {
                count += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == n.len() {
                return Some(count);
            }
            if n[i] < bounds[i] {
                n[i] += 1;
                break;
            }
            n[i] = 0;
            i += 1;
        }
    }
}
