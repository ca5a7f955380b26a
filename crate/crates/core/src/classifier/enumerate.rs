//! Exhaustive search for commutative fusion rings whose simples have
//! dimension 1 or 2 and which are generated by a self-dual two-dimensional
//! simple. The search knows nothing about dihedral groups; it serves as an
//! independent check on the classification.
//!
//! The invertibles form an abelian group G acting on the two-dimensional
//! simples by g ↦ g⊗X. Given G, the action and the duality, the invertible
//! part of X⊗Y is forced (g ∈ X⊗Y iff Y = g⊗X*), and the remaining
//! two-dimensional constituents are filled in by backtracking over orbits of
//! index triples under commutativity, Frobenius reciprocity, duality and
//! G-equivariance.

use crate::constructors::AbelianGroup;
use crate::error::{Error, Result};
use crate::fusionring::{grothendieck_equivalent, FusionRing};

pub const MAX_ENUMERATION_RANK: usize = 8;

/// Every ring of rank at most `max_rank` in which all simples are self-dual,
/// one per equivalence class, ordered by rank.
pub fn enumerate_rank_bounded(max_rank: usize) -> Result<Vec<FusionRing>> {
    enumerate(max_rank, true)
}

/// As [`enumerate_rank_bounded`], but only the generator has to be
/// self-dual.
pub fn enumerate_rank_bounded_weakened(max_rank: usize) -> Result<Vec<FusionRing>> {
    enumerate(max_rank, false)
}

fn enumerate(max_rank: usize, strict: bool) -> Result<Vec<FusionRing>> {
    if max_rank > MAX_ENUMERATION_RANK {
        return Err(Error::Unsupported(format!("enumeration is limited to rank {MAX_ENUMERATION_RANK}")));
    }
    let mut found: Vec<FusionRing> = Vec::new();
    for rank in 2..=max_rank {
        let start = found.len();
        for a in 1..rank {
            let b = rank - a;
            for orders in abelian_groups(a) {
                if strict && orders.iter().any(|&n| n != 2) {
                    continue;
                }
                let g = AbelianGroup::new(orders)?;
                for ring in rings_for(&g, b, strict) {
                    let mut dup = false;
                    for other in &found[start..] {
                        if grothendieck_equivalent(&ring, other)?.is_some() {
                            dup = true;
                            break;
                        }
                    }
                    if !dup {
                        found.push(ring);
                    }
                }
            }
        }
    }
    Ok(found)
}

/// Invariant factor lists n₁ | n₂ | … with product n.
fn abelian_groups(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            out.push(acc.clone());
            return;
        }
        for d in (min.max(2)..=rest).filter(|d| rest % d == 0) {
            if acc.last().is_none_or(|&l| d % l == 0) {
                acc.push(d);
                go(rest / d, d, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 2, &mut Vec::new(), &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k % 2 == 0 { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out.sort();
    out
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

fn power(p: &[usize], e: usize) -> Vec<usize> {
    let mut r: Vec<usize> = (0..p.len()).collect();
    for _ in 0..e {
        r = compose(p, &r);
    }
    r
}

/// Homomorphisms from G to the symmetric group on n points, given by the
/// images of the cyclic generators.
fn actions(g: &AbelianGroup, n: usize) -> Vec<Vec<Vec<usize>>> {
    let perms = permutations(n);
    let id: Vec<usize> = (0..n).collect();
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for &m in g.orders() {
        let ok: Vec<&Vec<usize>> = perms.iter().filter(|p| power(p, m) == id).collect();
        let mut next = Vec::new();
        for partial in &out {
            for &p in &ok {
                if partial.iter().all(|q| compose(p, q) == compose(q, p)) {
                    let mut v = partial.clone();
                    v.push(p.clone());
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let n = self.0[y];
            self.0[y] = r;
            y = n;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn rings_for(g: &AbelianGroup, b: usize, strict: bool) -> Vec<FusionRing> {
    let a = g.order();
    let mut out = Vec::new();
    for gens in actions(g, b) {
        // act[x][X] = x ⊗ X
        let act: Vec<Vec<usize>> = (0..a)
            .map(|x| {
                let e = g.element(x);
                let mut p: Vec<usize> = (0..b).collect();
                for (i, gi) in gens.iter().enumerate() {
                    p = compose(&power(gi, e[i]), &p);
                }
                p
            })
            .collect();
        for dual in involutions(b) {
            if dual[0] != 0 || (strict && dual.iter().enumerate().any(|(i, &d)| i != d)) {
                continue;
            }
            if !(0..a).all(|x| (0..b).all(|y| dual[act[x][y]] == act[g.neg(x)][dual[y]])) {
                continue;
            }
            out.extend(fill(g, &act, &dual));
        }
    }
    out
}

fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = p.len();
        if i == n {
            out.push(p.clone());
            return;
        }
        if p[i] != usize::MAX {
            return go(i + 1, p, out);
        }
        p[i] = i;
        go(i + 1, p, out);
        for j in i + 1..n {
            if p[j] == usize::MAX {
                p[i] = j;
                p[j] = i;
                go(i + 1, p, out);
                p[j] = usize::MAX;
            }
        }
        p[i] = usize::MAX;
    }
    let mut out = Vec::new();
    go(0, &mut vec![usize::MAX; n], &mut out);
    out
}

/// All admissible two-dimensional parts T[X][Y][W] for fixed G, action and
/// duality, returned as validated rings generated by the first
/// two-dimensional simple.
fn fill(g: &AbelianGroup, act: &[Vec<usize>], dual: &[usize]) -> Vec<FusionRing> {
    let a = g.order();
    let b = dual.len();
    let mut need = vec![0u32; b * b];
    for x in 0..b {
        for y in 0..b {
            let ic = (0..a).filter(|&h| act[h][dual[x]] == y).count() as u32;
            if ic > 4 || (4 - ic) % 2 == 1 {
                return Vec::new();
            }
            need[x * b + y] = (4 - ic) / 2;
        }
    }
    let idx = |x: usize, y: usize, w: usize| (x * b + y) * b + w;
    let mut uf = UnionFind((0..b * b * b).collect());
    let gens: Vec<usize> = (0..g.orders().len())
        .map(|i| {
            let mut e = vec![0; g.orders().len()];
            e[i] = 1;
            g.index(&e)
        })
        .collect();
    for x in 0..b {
        for y in 0..b {
            for w in 0..b {
                let t = idx(x, y, w);
                uf.union(t, idx(y, x, w));
                uf.union(t, idx(dual[x], w, y));
                uf.union(t, idx(dual[x], dual[y], dual[w]));
                for &h in &gens {
                    uf.union(t, idx(act[h][x], y, act[h][w]));
                }
            }
        }
    }
    let mut orbit_of = vec![usize::MAX; b * b * b];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for t in 0..b * b * b {
        let r = uf.find(t);
        if orbit_of[r] == usize::MAX {
            orbit_of[r] = orbits.len();
            orbits.push(Vec::new());
        }
        let o = orbit_of[r];
        orbit_of[t] = o;
        orbits[o].push(t);
    }
    // rows touched by each orbit, with multiplicity
    let rows: Vec<Vec<(usize, u32)>> = orbits
        .iter()
        .map(|members| {
            let mut v: Vec<(usize, u32)> = Vec::new();
            for &t in members {
                let row = t / b;
                match v.iter_mut().find(|e| e.0 == row) {
                    Some(e) => e.1 += 1,
                    None => v.push((row, 1)),
                }
            }
            v
        })
        .collect();
    let mut open = vec![0u32; b * b];
    for r in &rows {
        for &(row, m) in r {
            open[row] += m;
        }
    }
    let mut sum = vec![0u32; b * b];
    let mut values = vec![0u32; orbits.len()];
    let mut out = Vec::new();
    search(0, &rows, &need, &mut open, &mut sum, &mut values, &mut |vals| {
        if let Some(ring) = assemble(g, act, dual, &orbits, vals) {
            out.push(ring);
        }
    });
    out
}

fn search(
    k: usize,
    rows: &[Vec<(usize, u32)>],
    need: &[u32],
    open: &mut [u32],
    sum: &mut [u32],
    values: &mut [u32],
    emit: &mut dyn FnMut(&[u32]),
) {
    if k == rows.len() {
        emit(values);
        return;
    }
    for v in 0..=2u32 {
        let mut ok = true;
        for &(row, m) in &rows[k] {
            open[row] -= m;
            sum[row] += v * m;
        }
        for &(row, _) in &rows[k] {
            if sum[row] > need[row] || sum[row] + 2 * open[row] < need[row] {
                ok = false;
            }
        }
        if ok {
            values[k] = v;
            search(k + 1, rows, need, open, sum, values, emit);
        }
        for &(row, m) in &rows[k] {
            open[row] += m;
            sum[row] -= v * m;
        }
    }
}

fn assemble(g: &AbelianGroup, act: &[Vec<usize>], dual: &[usize], orbits: &[Vec<usize>], values: &[u32]) -> Option<FusionRing> {
    let a = g.order();
    let b = dual.len();
    let r = a + b;
    let mut labels: Vec<String> = (0..a).map(|x| if x == 0 { "1".to_string() } else { format!("g{}", g.label(x)) }).collect();
    labels.extend((0..b).map(|x| format!("X{}", x + 1)));
    let mut duals: Vec<usize> = (0..a).map(|x| g.neg(x)).collect();
    duals.extend(dual.iter().map(|&x| x + a));
    let mut entries = Vec::new();
    for x in 0..a {
        for y in 0..a {
            entries.push((x, y, g.add(x, y), 1));
        }
        for y in 0..b {
            entries.push((x, a + y, a + act[x][y], 1));
            entries.push((a + y, x, a + act[x][y], 1));
        }
    }
    for x in 0..b {
        for y in 0..b {
            for h in (0..a).filter(|&h| act[h][dual[x]] == y) {
                entries.push((a + x, a + y, h, 1));
            }
        }
    }
    for (o, members) in orbits.iter().enumerate() {
        if values[o] == 0 {
            continue;
        }
        for &t in members {
            let (x, y, w) = (t / (b * b), (t / b) % b, t % b);
            entries.push((a + x, a + y, a + w, values[o]));
        }
    }
    let ring = FusionRing::from_entries(labels, duals, entries).ok()?;
    if !ring.validate().passed() || ring.closure(&[a]).len() != r {
        return None;
    }
    Some(ring)
}
