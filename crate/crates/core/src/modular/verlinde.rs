//! Verlinde fusion and completion of S-matrices by orthogonality.

use std::collections::BTreeSet;

use num_traits::{Signed, ToPrimitive};

use super::{PartialModularData, SEntry};
use crate::error::{Error, Result};
use crate::fusionring::{FusionRing, PartialFusionRing};
use crate::numeric::Cyclotomic;

impl PartialModularData {
    /// N_{a,b}^c = (1/D) Σ_x s̃_{a,x} s̃_{b,x} conj(s̃_{c,x}) / s̃_{0,x},
    /// certified to be nonnegative integers satisfying the ring axioms.
    pub fn verlinde_fusion(&self) -> Result<FusionRing> {
        let r = self.rank();
        if let Some(&(i, j)) = self.unknown_s_entries().first() {
            return Err(Error::UnknownEntry(self.label(i).into(), self.label(j).into()));
        }
        let s: Vec<Vec<&Cyclotomic>> =
            self.s.iter().map(|row| row.iter().map(|e| e.known().expect("complete")).collect()).collect();
        let inv_d = self.global_dimension().inverse()?;
        let weight: Vec<Cyclotomic> = self
            .dims
            .iter()
            .map(|d| Ok(&d.inverse()? * &inv_d))
            .collect::<Result<_>>()?;
        let sc: Vec<Vec<Cyclotomic>> = s.iter().map(|row| row.iter().map(|x| x.conj()).collect()).collect();
        let mut entries = Vec::new();
        let mut n = vec![0u32; r * r * r];
        for a in 0..r {
            for b in a..r {
                let t: Vec<Cyclotomic> = (0..r).map(|x| &(s[a][x] * s[b][x]) * &weight[x]).collect();
                for c in 0..r {
                    let v: Cyclotomic = (0..r).map(|x| &t[x] * &sc[c][x]).sum();
                    let m = v
                        .to_integer()
                        .filter(|m| !m.is_negative())
                        .and_then(|m| m.to_u32())
                        .ok_or_else(|| {
                            Error::Inconsistent(format!(
                                "Verlinde gives N({},{},{}) = {v}",
                                self.label(a),
                                self.label(b),
                                self.label(c)
                            ))
                        })?;
                    n[(a * r + b) * r + c] = m;
                    n[(b * r + a) * r + c] = m;
                }
            }
        }
        let mut dual = vec![usize::MAX; r];
        for a in 0..r {
            for b in 0..r {
                if n[(a * r + b) * r] > 0 {
                    dual[a] = b;
                }
            }
        }
        if dual.contains(&usize::MAX) {
            return Err(Error::Inconsistent("Verlinde ring has an object without dual".into()));
        }
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    let m = n[(a * r + b) * r + c];
                    if m > 0 {
                        entries.push((a, b, c, m));
                    }
                }
            }
        }
        let ring = FusionRing::from_entries(self.labels().to_vec(), dual, entries)?;
        if let Some(v) = ring.validate().violations.first() {
            return Err(Error::Inconsistent(format!("Verlinde ring fails {}: {}", v.axiom, v.witness)));
        }
        Ok(ring)
    }

    /// Fills unknown S-entries that appear alone in an orthogonality relation
    /// Σ_x s̃_{a,x} conj(s̃_{b,x}) = δ_{a,b} dim(C). The result is accepted only
    /// if Verlinde fusion then exists, agrees with the known fusion rules and
    /// balancing holds everywhere.
    pub fn complete_by_orthogonality(&self) -> Result<PartialModularData> {
        let r = self.rank();
        let dim = self.global_dimension();
        let mut s = self.s.clone();
        let key = |i: usize, j: usize| (i.min(j), i.max(j));
        loop {
            let mut progress = false;
            for a in 0..r {
                for b in a..r {
                    let unknown: BTreeSet<(usize, usize)> = (0..r)
                        .flat_map(|x| [(a, x), (b, x)])
                        .filter(|&(i, j)| !s[i][j].is_known())
                        .map(|(i, j)| key(i, j))
                        .collect();
                    if unknown.len() != 1 {
                        continue;
                    }
                    let u = *unknown.iter().next().unwrap();
                    let mut known = Cyclotomic::zero();
                    let mut lin = Cyclotomic::zero();
                    let mut conj_lin = Cyclotomic::zero();
                    let mut nonlinear = false;
                    for x in 0..r {
                        match (s[a][x].known(), s[b][x].known()) {
                            (Some(p), Some(q)) => known = &known + &(p * &q.conj()),
                            (None, Some(q)) => lin = &lin + &q.conj(),
                            (Some(p), None) => conj_lin = &conj_lin + p,
                            (None, None) => nonlinear = true,
                        }
                    }
                    if nonlinear || (!lin.is_zero() && !conj_lin.is_zero()) || (lin.is_zero() && conj_lin.is_zero()) {
                        continue;
                    }
                    let rhs = if a == b { &dim - &known } else { -&known };
                    let value = if !lin.is_zero() {
                        rhs.checked_div(&lin)?
                    } else {
                        rhs.checked_div(&conj_lin)?.conj()
                    };
                    if let SEntry::UnknownModulus(m) = &s[u.0][u.1] {
                        if &value * &value.conj() != Cyclotomic::from_rational(&(m * m)) {
                            return Err(Error::Inconsistent(format!(
                                "orthogonality forces s̃({}, {}) = {value}, of the wrong modulus",
                                self.label(u.0),
                                self.label(u.1)
                            )));
                        }
                    }
                    let value = value.minimize();
                    s[u.0][u.1] = SEntry::Known(value.clone());
                    s[u.1][u.0] = SEntry::Known(value);
                    progress = true;
                }
            }
            if !progress {
                break;
            }
        }
        let completed = PartialModularData::new(self.ring.clone(), self.dims.clone(), self.twists.clone(), s)?;
        if let Some(&(i, j)) = completed.unknown_s_entries().first() {
            return Err(Error::Insufficient(format!(
                "orthogonality does not determine s̃({}, {})",
                self.label(i),
                self.label(j)
            )));
        }
        let ring = completed.verlinde_fusion()?;
        for (a, b, c) in (0..r).flat_map(|a| (0..r).flat_map(move |b| (0..r).map(move |c| (a, b, c)))) {
            if let Some(m) = self.ring.get(a, b, c) {
                if m != ring.n(a, b, c) {
                    return Err(Error::Inconsistent(format!(
                        "completed S-matrix gives N({},{},{}) = {} against the known {m}",
                        self.label(a),
                        self.label(b),
                        self.label(c),
                        ring.n(a, b, c)
                    )));
                }
            }
        }
        let completed = completed.with_ring(PartialFusionRing::from_ring(&ring))?;
        let report = completed.check_balancing();
        if let Some((l, m, _)) = report.violations().first() {
            return Err(Error::Inconsistent(format!(
                "completed S-matrix violates balancing at ({}, {})",
                self.label(*l),
                self.label(*m)
            )));
        }
        Ok(completed)
    }
}
