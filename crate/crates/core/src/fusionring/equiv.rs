//! Search for basis bijections identifying two fusion rings.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::fpdim::characteristic_polynomial;
use super::FusionRing;
use crate::error::{Error, Result};

pub const MAX_EQUIVALENCE_RANK: usize = 24;

/// Invariant of a basis element under ring isomorphisms: the characteristic
/// polynomial of its fusion matrix and whether it is self-dual.
pub fn fusion_signature(ring: &FusionRing, a: usize) -> (Vec<BigInt>, bool) {
    (characteristic_polynomial(&ring.fusion_matrix(a)), ring.is_self_dual(a))
}

/// Order in which the basis of `ring` is assigned: breadth first through
/// products, so that later choices are constrained by earlier ones.
fn assignment_order(ring: &FusionRing) -> Vec<usize> {
    let r = ring.rank();
    let mut order = vec![0];
    let mut seen: BTreeSet<usize> = [0].into();
    let mut gen_order: Vec<usize> = (1..r).collect();
    // generators with few constituents first: their powers reach the rest
    gen_order.sort_by_key(|&a| (ring.product(a, a).len(), a));
    while order.len() < r {
        let mut grew = false;
        for i in 0..order.len() {
            for j in 0..=i {
                for (a, b) in [(order[i], order[j]), (order[j], order[i])] {
                    for &(c, _) in ring.product(a, b) {
                        if seen.insert(c) {
                            order.push(c);
                            grew = true;
                        }
                    }
                }
            }
        }
        if !grew {
            let next = *gen_order.iter().find(|a| !seen.contains(a)).expect("rank not reached");
            seen.insert(next);
            order.push(next);
        }
    }
    order
}

/// A unit- and duality-preserving bijection `f` with
/// N1(a,b,c) = N2(f a, f b, f c) for all a, b, c, if one exists.
pub fn grothendieck_equivalent(r1: &FusionRing, r2: &FusionRing) -> Result<Option<Vec<usize>>> {
    let n = r1.rank();
    if n > MAX_EQUIVALENCE_RANK || r2.rank() > MAX_EQUIVALENCE_RANK {
        return Err(Error::Unsupported(format!(
            "equivalence search is limited to rank {MAX_EQUIVALENCE_RANK}"
        )));
    }
    if n != r2.rank() {
        return Ok(None);
    }
    let s1: Vec<_> = (0..n).map(|a| fusion_signature(r1, a)).collect();
    let s2: Vec<_> = (0..n).map(|a| fusion_signature(r2, a)).collect();
    let mut m1 = s1.clone();
    let mut m2 = s2.clone();
    m1.sort();
    m2.sort();
    if m1 != m2 {
        return Ok(None);
    }
    let order = assignment_order(r1);
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).filter(|&b| s1[a] == s2[b]).collect())
        .collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    if search(r1, r2, &order, 1, &candidates, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn consistent(r1: &FusionRing, r2: &FusionRing, assigned: &[usize], x: usize, map: &[usize]) -> bool {
    let d = r1.dual(x);
    if map[d] != usize::MAX && map[d] != r2.dual(map[x]) {
        return false;
    }
    for &a in assigned {
        for &b in assigned {
            if a != x && b != x {
                // only triples touching x are new, handled via c below
                if r1.n(a, b, x) != r2.n(map[a], map[b], map[x]) {
                    return false;
                }
                continue;
            }
            for &c in assigned {
                if r1.n(a, b, c) != r2.n(map[a], map[b], map[c]) {
                    return false;
                }
            }
        }
    }
    true
}

fn search(
    r1: &FusionRing,
    r2: &FusionRing,
    order: &[usize],
    depth: usize,
    candidates: &[Vec<usize>],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    let assigned = &order[..=depth];
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if consistent(r1, r2, assigned, x, map) && search(r1, r2, order, depth + 1, candidates, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}
