//! Fusion rings whose structure constants are only partly known.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::FusionRing;
use crate::error::{Error, Result};
use crate::numeric::Cyclotomic;

/// Structure constants with unknown entries. The ring is assumed
/// commutative (it carries a braiding), so every known entry is propagated to
/// its images under commutativity, Frobenius reciprocity and duality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFusionRing {
    labels: Vec<String>,
    dual: Vec<usize>,
    entries: Vec<Option<u32>>,
}

impl PartialFusionRing {
    /// Everything unknown apart from the unit and duality axioms.
    pub fn unknown(labels: Vec<String>, dual: Vec<usize>) -> Result<Self> {
        let r = labels.len();
        if dual.len() != r || dual.iter().any(|&d| d >= r) {
            return Err(Error::Malformed("dual does not match the labels".into()));
        }
        let mut p = PartialFusionRing { labels, dual, entries: vec![None; r * r * r] };
        for b in 0..r {
            for c in 0..r {
                p.set(0, b, c, u32::from(b == c))?;
            }
        }
        for a in 0..r {
            for b in 0..r {
                p.set(a, b, 0, u32::from(b == p.dual[a]))?;
            }
        }
        Ok(p)
    }

    pub fn from_ring(ring: &FusionRing) -> Self {
        let r = ring.rank();
        let mut entries = vec![Some(0); r * r * r];
        for (a, b, c, m) in ring.entries() {
            entries[(a * r + b) * r + c] = Some(m);
        }
        PartialFusionRing { labels: ring.labels().to_vec(), dual: ring.duals().to_vec(), entries }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dual(&self, a: usize) -> usize {
        self.dual[a]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    fn idx(&self, a: usize, b: usize, c: usize) -> usize {
        let r = self.rank();
        (a * r + b) * r + c
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> Option<u32> {
        self.entries[self.idx(a, b, c)]
    }

    fn orbit(&self, a: usize, b: usize, c: usize) -> BTreeSet<(usize, usize, usize)> {
        let d = &self.dual;
        let mut seen = BTreeSet::new();
        let mut stack = vec![(a, b, c)];
        while let Some(t) = stack.pop() {
            if !seen.insert(t) {
                continue;
            }
            let (x, y, z) = t;
            stack.push((y, x, z));
            stack.push((d[x], z, y));
            stack.push((z, d[y], x));
            stack.push((d[y], d[x], d[z]));
        }
        seen
    }

    /// Records N_{a,b}^c = m together with all its symmetric images.
    pub fn set(&mut self, a: usize, b: usize, c: usize, m: u32) -> Result<()> {
        for (x, y, z) in self.orbit(a, b, c) {
            let i = self.idx(x, y, z);
            match self.entries[i] {
                Some(old) if old != m => {
                    return Err(Error::Inconsistent(format!(
                        "N({},{},{}) is both {old} and {m}",
                        self.labels[x], self.labels[y], self.labels[z]
                    )))
                }
                _ => self.entries[i] = Some(m),
            }
        }
        Ok(())
    }

    /// Records the full decomposition of a⊗b: listed constituents, zero elsewhere.
    pub fn set_product(&mut self, a: usize, b: usize, parts: &[(usize, u32)]) -> Result<()> {
        for c in 0..self.rank() {
            let m = parts.iter().filter(|(x, _)| *x == c).map(|(_, m)| *m).sum();
            self.set(a, b, c, m)?;
        }
        Ok(())
    }

    /// Uses dimensions to settle rows of a⊗b: a row whose known part already
    /// accounts for dim(a)dim(b) has zeros elsewhere, and a row with one
    /// unknown entry determines it.
    pub fn saturate(&mut self, dims: &[Cyclotomic]) -> Result<()> {
        let r = self.rank();
        loop {
            let mut changed = false;
            for a in 0..r {
                for b in 0..r {
                    let mut rest = &dims[a] * &dims[b];
                    let mut unknown = Vec::new();
                    for c in 0..r {
                        match self.get(a, b, c) {
                            Some(m) => rest = &rest - &dims[c].scale(&BigRational::from_integer(BigInt::from(m))),
                            None => unknown.push(c),
                        }
                    }
                    if unknown.is_empty() {
                        continue;
                    }
                    if rest.is_zero() {
                        for c in unknown {
                            self.set(a, b, c, 0)?;
                        }
                        changed = true;
                    } else if unknown.len() == 1 {
                        let c = unknown[0];
                        let q = rest.checked_div(&dims[c])?;
                        let m = q
                            .to_integer()
                            .filter(|m| !m.is_negative())
                            .and_then(|m| m.to_u32())
                            .ok_or_else(|| {
                                Error::Inconsistent(format!(
                                    "dimension count forces a non-integer N({},{},{})",
                                    self.labels[a], self.labels[b], self.labels[c]
                                ))
                            })?;
                        self.set(a, b, c, m)?;
                        changed = true;
                    }
                }
            }
            if !changed {
                return Ok(());
            }
        }
    }

    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(|e| e.is_some())
    }

    pub fn unknown_entries(&self) -> Vec<(usize, usize, usize)> {
        let r = self.rank();
        (0..r * r * r)
            .filter(|&i| self.entries[i].is_none())
            .map(|i| (i / (r * r), (i / r) % r, i % r))
            .collect()
    }

    pub fn to_ring(&self) -> Option<FusionRing> {
        if !self.is_complete() {
            return None;
        }
        let r = self.rank();
        let entries = (0..r * r * r).filter_map(|i| {
            let m = self.entries[i].unwrap();
            (m > 0).then_some((i / (r * r), (i / r) % r, i % r, m))
        });
        FusionRing::from_entries(self.labels.clone(), self.dual.clone(), entries).ok()
    }

    /// Constituents of a⊗b known to be present.
    pub fn known_constituents(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&c| self.get(a, b, c).is_some_and(|m| m > 0)).collect()
    }

    /// Constituents of a⊗b that are present or might be.
    pub fn possible_constituents(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&c| self.get(a, b, c) != Some(0)).collect()
    }

    fn closure_with<F>(&self, seeds: &[usize], parts: F) -> Vec<usize>
    where
        F: Fn(usize, usize) -> Vec<usize>,
    {
        let mut set: BTreeSet<usize> = [0].into();
        for &s in seeds {
            set.insert(s);
            set.insert(self.dual[s]);
        }
        loop {
            let cur: Vec<usize> = set.iter().copied().collect();
            let before = set.len();
            for &a in &cur {
                for &b in &cur {
                    for c in parts(a, b) {
                        set.insert(c);
                        set.insert(self.dual[c]);
                    }
                }
            }
            if set.len() == before {
                return set.into_iter().collect();
            }
        }
    }

    /// Subring generated by the seeds, using only known constituents
    /// (contained in the true subring).
    pub fn closure_lower(&self, seeds: &[usize]) -> Vec<usize> {
        self.closure_with(seeds, |a, b| self.known_constituents(a, b))
    }

    /// Subring generated by the seeds, counting unknown entries as present
    /// (contains the true subring).
    pub fn closure_upper(&self, seeds: &[usize]) -> Vec<usize> {
        self.closure_with(seeds, |a, b| self.possible_constituents(a, b))
    }

    /// Lower and upper bounds for the adjoint subring of the subring on `members`.
    pub fn adjoint_bounds(&self, members: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let lower: Vec<usize> = members
            .iter()
            .flat_map(|&a| self.known_constituents(a, self.dual[a]))
            .collect();
        let upper: Vec<usize> = members
            .iter()
            .flat_map(|&a| self.possible_constituents(a, self.dual[a]))
            .collect();
        (self.closure_lower(&lower), self.closure_upper(&upper))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib_partial() -> PartialFusionRing {
        PartialFusionRing::unknown(vec!["1".into(), "t".into()], vec![0, 1]).unwrap()
    }

    #[test]
    fn unit_and_duality_are_known() {
        let p = fib_partial();
        assert_eq!(p.get(0, 1, 1), Some(1));
        assert_eq!(p.get(1, 1, 0), Some(1));
        assert_eq!(p.get(1, 1, 1), None);
    }

    #[test]
    fn saturation_solves_single_unknown() {
        let mut p = fib_partial();
        // d² = 1 + d for the golden ratio
        let d = (&Cyclotomic::one() + &Cyclotomic::sqrt_integer(5).unwrap())
            .scale(&BigRational::new(1.into(), 2.into()));
        p.saturate(&[Cyclotomic::one(), d]).unwrap();
        assert!(p.is_complete());
        let ring = p.to_ring().unwrap();
        assert!(ring.validate().passed());
        assert_eq!(ring.product(1, 1), &[(0, 1), (1, 1)]);
    }

    #[test]
    fn conflicting_entries_are_rejected() {
        let mut p = fib_partial();
        assert!(p.set(1, 1, 0, 2).is_err());
    }

    #[test]
    fn adjoint_bounds_bracket_the_truth() {
        let p = fib_partial();
        let (lo, hi) = p.adjoint_bounds(&[0, 1]);
        assert_eq!(lo, vec![0]);
        assert_eq!(hi, vec![0, 1]);
    }
}
