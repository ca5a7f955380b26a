//! Finite abelian groups, bilinear and quadratic forms with values in roots
//! of unity, and Lagrangian subgroups.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::numeric::RootOfUnity;

/// Z_{n₁} × … × Z_{n_k}. Elements are indexed in mixed radix with the first
/// factor least significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    orders: Vec<usize>,
}

impl AbelianGroup {
    pub fn new(orders: Vec<usize>) -> Result<Self> {
        if orders.iter().any(|&n| n == 0) {
            return Err(Error::InvalidParameter("cyclic factors must have positive order".into()));
        }
        Ok(AbelianGroup { orders: orders.into_iter().filter(|&n| n > 1).collect() })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// Parses comma-separated cyclic orders, e.g. "3,3".
    pub fn parse(s: &str) -> Result<Self> {
        let orders = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidParameter(format!("bad cyclic order '{t}'"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(orders)
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn order(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1, |a, &n| a.lcm(&n))
    }

    pub fn element(&self, mut i: usize) -> Vec<usize> {
        self.orders
            .iter()
            .map(|&n| {
                let c = i % n;
                i /= n;
                c
            })
            .collect()
    }

    pub fn index(&self, x: &[usize]) -> usize {
        self.orders.iter().zip(x).rev().fold(0, |acc, (&n, &c)| acc * n + c % n)
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        let (x, y) = (self.element(i), self.element(j));
        let z: Vec<usize> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        self.index(&z)
    }

    pub fn neg(&self, i: usize) -> usize {
        let z: Vec<usize> = self.element(i).iter().zip(&self.orders).map(|(&a, &n)| (n - a) % n).collect();
        self.index(&z)
    }

    pub fn element_order(&self, i: usize) -> usize {
        self.element(i).iter().zip(&self.orders).fold(1, |acc, (&a, &n)| acc.lcm(&(n / a.gcd(&n))))
    }

    pub fn label(&self, i: usize) -> String {
        let x = self.element(i);
        match x.len() {
            0 => "0".into(),
            1 => x[0].to_string(),
            _ => format!("({})", x.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")),
        }
    }

    /// Subgroup generated by the given elements, as a sorted index list.
    pub fn span(&self, gens: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.add(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    /// All subgroups: cyclic subgroups in element order first, then joins.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut seen = BTreeSet::new();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for g in 0..self.order() {
            let h = self.span(&[g]);
            if seen.insert(h.clone()) {
                out.push(h);
            }
        }
        let mut k = 0;
        while k < out.len() {
            for g in 0..self.order() {
                if out[k].binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = out[k].clone();
                gens.push(g);
                let h = self.span(&gens);
                if seen.insert(h.clone()) {
                    out.push(h);
                }
            }
            k += 1;
        }
        out
    }
}

/// χ(x, y) = ζ_M^{xᵀ G y} for a symmetric integer Gram matrix G on the
/// cyclic generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    group: AbelianGroup,
    gram: Vec<Vec<i64>>,
    modulus: u32,
}

impl BilinearForm {
    /// Checks that the Gram matrix is symmetric, well defined on the group
    /// and nondegenerate.
    pub fn new(group: AbelianGroup, gram: Vec<Vec<i64>>, modulus: u32) -> Result<Self> {
        let k = group.orders.len();
        if modulus == 0 || gram.len() != k || gram.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidParameter(format!("Gram matrix must be {k}×{k} with a positive order")));
        }
        let m = modulus as i64;
        for i in 0..k {
            for j in 0..k {
                if (gram[i][j] - gram[j][i]).rem_euclid(m) != 0 {
                    return Err(Error::InvalidParameter("Gram matrix is not symmetric".into()));
                }
                if (gram[i][j] * group.orders[i] as i64).rem_euclid(m) != 0 {
                    return Err(Error::InvalidParameter(format!(
                        "χ(g{i}, g{j})^{} ≠ 1, so the form is not defined on the group",
                        group.orders[i]
                    )));
                }
            }
        }
        let form = BilinearForm { group, gram, modulus };
        let radical: Vec<String> = form.radical().into_iter().filter(|&x| x != 0).map(|x| form.group.label(x)).collect();
        if !radical.is_empty() {
            return Err(Error::Degenerate(radical.join(", ")));
        }
        Ok(form)
    }

    /// ζ_n^{xy} on Z_n.
    pub fn standard(n: usize) -> Result<Self> {
        Self::new(AbelianGroup::cyclic(n)?, vec![vec![1]], n as u32)
    }

    /// The orthogonal sum of the standard forms on the cyclic factors.
    pub fn diagonal(group: AbelianGroup) -> Result<Self> {
        let m = group.exponent().max(1);
        let k = group.orders.len();
        let gram = (0..k)
            .map(|i| (0..k).map(|j| if i == j { (m / group.orders[i]) as i64 } else { 0 }).collect())
            .collect();
        Self::new(group, gram, m as u32)
    }

    /// ξ^{x₁y₂ + x₂y₁} on Z_n × Z_n.
    pub fn hyperbolic(n: usize) -> Result<Self> {
        Self::new(AbelianGroup::new(vec![n, n])?, vec![vec![0, 1], vec![1, 0]], n as u32)
    }

    /// Parses "g11,g12;g21,g22@M" against the given group.
    pub fn parse(group: AbelianGroup, s: &str) -> Result<Self> {
        let (g, m) = s.split_once('@').ok_or_else(|| Error::InvalidParameter(format!("expected gram@order in '{s}'")))?;
        let modulus = m.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad order '{m}'")))?;
        let gram = parse_matrix(g)?;
        Self::new(group, gram, modulus)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Exponent e with χ(x, y) = ζ_M^e, reduced mod M.
    pub fn exponent(&self, x: usize, y: usize) -> i64 {
        let (a, b) = (self.group.element(x), self.group.element(y));
        let mut e = 0i64;
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                e += self.gram[i][j] * (ai * bj) as i64;
            }
        }
        e.rem_euclid(self.modulus as i64)
    }

    pub fn value(&self, x: usize, y: usize) -> RootOfUnity {
        RootOfUnity::from_fraction(self.exponent(x, y), self.modulus as i64)
    }

    /// {x : χ(x, ·) ≡ 1}
    pub fn radical(&self) -> Vec<usize> {
        (0..self.group.order()).filter(|&x| (0..self.group.order()).all(|y| self.exponent(x, y) == 0)).collect()
    }

    pub fn perp(&self, sub: &[usize]) -> Vec<usize> {
        (0..self.group.order()).filter(|&x| sub.iter().all(|&y| self.exponent(x, y) == 0)).collect()
    }

    /// Functions ρ with ρ(x + y) = ρ(x) ρ(y) χ(x, y); there are |A| of them.
    pub fn quadratic_refinements(&self) -> Vec<Vec<RootOfUnity>> {
        let k = self.group.orders.len();
        // ρ on generator i must satisfy ρᵢ^{nᵢ} = χ(gᵢ, gᵢ)^{−nᵢ(nᵢ−1)/2}
        let choices: Vec<Vec<RootOfUnity>> = (0..k)
            .map(|i| {
                let n = self.group.orders[i] as i64;
                let c = RootOfUnity::from_fraction(-self.gram[i][i] * n * (n - 1) / 2, self.modulus as i64);
                (0..n).map(|t| RootOfUnity::new((c.turn() + t) / n)).collect()
            })
            .collect();
        let count: usize = self.group.order();
        let mut out = Vec::with_capacity(count);
        for pick in 0..count {
            let base: Vec<RootOfUnity> = self.group.element(pick).iter().enumerate().map(|(i, &t)| choices[i][t]).collect();
            out.push(self.refinement_from(&base));
        }
        out
    }

    fn refinement_from(&self, base: &[RootOfUnity]) -> Vec<RootOfUnity> {
        let k = self.group.orders.len();
        (0..self.group.order())
            .map(|idx| {
                let x = self.group.element(idx);
                let mut v = RootOfUnity::one();
                for i in 0..k {
                    let xi = x[i] as i64;
                    v = v * base[i].pow(xi);
                    v = v * RootOfUnity::from_fraction(self.gram[i][i] * xi * (xi - 1) / 2, self.modulus as i64);
                    for j in i + 1..k {
                        v = v * RootOfUnity::from_fraction(self.gram[i][j] * xi * x[j] as i64, self.modulus as i64);
                    }
                }
                v
            })
            .collect()
    }
}

pub(crate) fn parse_matrix(s: &str) -> Result<Vec<Vec<i64>>> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| Error::InvalidParameter(format!("bad matrix entry '{t}'"))))
                .collect()
        })
        .collect()
}

/// A subgroup L with L = L^⊥, or None when none exists. Only subgroups with
/// |L|² = |A| are examined.
pub fn lagrangian_search(form: &BilinearForm) -> Option<Vec<usize>> {
    let n = form.group.order();
    let root = (n as f64).sqrt().round() as usize;
    if root * root != n {
        return None;
    }
    form.group
        .subgroups()
        .into_iter()
        .filter(|l| l.len() == root)
        .find(|l| form.perp(l) == *l)
}
