//! Modular data whose S-matrix and fusion may be partly unknown.

mod checks;
mod gt;
mod json;
mod verlinde;

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::fusionring::{FusionRing, PartialFusionRing};
use crate::numeric::{Cyclotomic, Rational};

pub use checks::{BalancingOutcome, BalancingReport, Centralizer, MugerReport, SymmetricEnumeration};
pub use gt::{
    group_theoretical_by_dimension, verify_pq_propositions, GtDecision, GtVerdict, PqReport,
};

/// One entry of the normalized S-matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SEntry {
    Known(Cyclotomic),
    Unknown,
    /// Unknown value of known absolute value.
    UnknownModulus(Rational),
}

impl SEntry {
    pub fn known(&self) -> Option<&Cyclotomic> {
        match self {
            SEntry::Known(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_known(&self) -> bool {
        matches!(self, SEntry::Known(_))
    }
}

/// Dimensions, twists and a symmetric normalized S-matrix s̃ (s̃₀₀ = 1)
/// attached to a possibly partial fusion ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialModularData {
    ring: PartialFusionRing,
    dims: Vec<Cyclotomic>,
    twists: Vec<Cyclotomic>,
    s: Vec<Vec<SEntry>>,
    conductor: u32,
}

impl PartialModularData {
    /// Assembles and checks the data. `s` is indexed [i][j] and must be
    /// symmetric; row 0 must equal the dimensions. The conductor is the lcm
    /// of the twist orders and of the conductors of every known value.
    pub fn new(
        ring: PartialFusionRing,
        dims: Vec<Cyclotomic>,
        twists: Vec<Cyclotomic>,
        s: Vec<Vec<SEntry>>,
    ) -> Result<Self> {
        let r = ring.rank();
        if dims.len() != r || twists.len() != r || s.len() != r || s.iter().any(|row| row.len() != r) {
            return Err(Error::Malformed(format!("modular data sizes do not match rank {r}")));
        }
        if !dims[0].is_one() || !twists[0].is_one() {
            return Err(Error::Malformed("unit must have dimension 1 and twist 1".into()));
        }
        let names = ring.labels().to_vec();
        let label = |i: usize| names[i].clone();
        for i in 0..r {
            for j in 0..r {
                if s[i][j] != s[j][i] {
                    return Err(Error::Malformed(format!("S-matrix not symmetric at ({}, {})", label(i), label(j))));
                }
            }
            if s[0][i].known() != Some(&dims[i]) {
                return Err(Error::Malformed(format!("S-matrix row of the unit differs from dim({})", label(i))));
            }
        }
        let mut conductor = 1u32;
        for (i, t) in twists.iter().enumerate() {
            let (_, order) = t
                .root_exponent()
                .map(|(k, m)| (k, m / (k as u32).gcd(&m).max(1)))
                .ok_or_else(|| Error::Malformed(format!("twist of {} is not a root of unity", label(i))))?;
            conductor = conductor.lcm(&order.max(1));
        }
        for x in dims.iter().chain(s.iter().flatten().filter_map(|e| e.known())) {
            conductor = conductor.lcm(&x.conductor());
        }
        let md = PartialModularData { ring, dims, twists, s, conductor };
        for (i, t) in md.twists.iter().enumerate() {
            if !t.pow(conductor as i64)?.is_one() {
                return Err(Error::Malformed(format!("twist of {} has order not dividing {conductor}", label(i))));
            }
        }
        Ok(md)
    }

    /// Modular data with a complete S-matrix given as a dense matrix.
    pub fn from_complete(
        ring: PartialFusionRing,
        dims: Vec<Cyclotomic>,
        twists: Vec<Cyclotomic>,
        s: Vec<Vec<Cyclotomic>>,
    ) -> Result<Self> {
        let s = s.into_iter().map(|row| row.into_iter().map(SEntry::Known).collect()).collect();
        Self::new(ring, dims, twists, s)
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn labels(&self) -> &[String] {
        self.ring.labels()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.ring.labels()[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels().iter().position(|l| l == label)
    }

    pub fn ring(&self) -> &PartialFusionRing {
        &self.ring
    }

    /// The fusion ring, when every structure constant is known.
    pub fn fusion_ring(&self) -> Option<FusionRing> {
        self.ring.to_ring()
    }

    pub fn dims(&self) -> &[Cyclotomic] {
        &self.dims
    }

    pub fn twists(&self) -> &[Cyclotomic] {
        &self.twists
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn s(&self, i: usize, j: usize) -> &SEntry {
        &self.s[i][j]
    }

    pub fn s_matrix(&self) -> &[Vec<SEntry>] {
        &self.s
    }

    /// A known entry, or an error naming the missing pair.
    pub fn s_known(&self, i: usize, j: usize) -> Result<&Cyclotomic> {
        self.s[i][j]
            .known()
            .ok_or_else(|| Error::UnknownEntry(self.label(i).to_string(), self.label(j).to_string()))
    }

    pub fn is_s_complete(&self) -> bool {
        self.s.iter().flatten().all(SEntry::is_known)
    }

    pub fn unknown_s_entries(&self) -> Vec<(usize, usize)> {
        let r = self.rank();
        (0..r)
            .flat_map(|i| (i..r).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.s[i][j].is_known())
            .collect()
    }

    /// Σ dim(X)²
    pub fn global_dimension(&self) -> Cyclotomic {
        self.dims.iter().map(|d| d * d).sum()
    }

    /// Σ dim(X)² over the given objects.
    pub fn dimension_of(&self, members: &[usize]) -> Cyclotomic {
        members.iter().map(|&i| &self.dims[i] * &self.dims[i]).sum()
    }

    pub fn is_integral(&self) -> bool {
        self.dims.iter().all(Cyclotomic::is_integer)
    }

    /// Replaces one twist (used to inject faults in tests and diagnostics).
    pub fn with_twist(&self, i: usize, twist: Cyclotomic) -> Result<Self> {
        let mut t = self.twists.clone();
        t[i] = twist;
        Self::new(self.ring.clone(), self.dims.clone(), t, self.s.clone())
    }

    /// Replaces one symmetric pair of S-entries.
    pub fn with_s_entry(&self, i: usize, j: usize, value: SEntry) -> Result<Self> {
        let mut s = self.s.clone();
        s[i][j] = value.clone();
        s[j][i] = value;
        Self::new(self.ring.clone(), self.dims.clone(), self.twists.clone(), s)
    }

    /// Replaces the fusion data.
    pub fn with_ring(&self, ring: PartialFusionRing) -> Result<Self> {
        if ring.labels() != self.labels() {
            return Err(Error::Malformed("replacement ring has different labels".into()));
        }
        Self::new(ring, self.dims.clone(), self.twists.clone(), self.s.clone())
    }
}

impl fmt::Display for PartialModularData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "modular data of rank {} (conductor {})", self.rank(), self.conductor)?;
        for i in 0..self.rank() {
            writeln!(f, "  {}: dim {}, twist {}", self.label(i), self.dims[i], self.twists[i])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
