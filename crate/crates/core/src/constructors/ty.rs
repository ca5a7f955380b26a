//! Tambara–Yamagami rings and the simple objects and even-part fusion of
//! their Drinfeld centers.

use super::abelian::{AbelianGroup, BilinearForm};
use crate::error::{Error, Result};
use crate::fusionring::FusionRing;
use crate::numeric::{Cyclotomic, RootOfUnity};

/// TY(A): a⊗b = ab, a⊗m = m⊗a = m, m⊗m = ⊕_a a.
pub fn ty_ring(group: &AbelianGroup) -> Result<FusionRing> {
    let n = group.order();
    if n < 2 {
        return Err(Error::InvalidParameter("TY needs |A| ≥ 2".into()));
    }
    let mut labels: Vec<String> = (0..n).map(|a| group.label(a)).collect();
    labels.push("m".into());
    let mut dual: Vec<usize> = (0..n).map(|a| group.neg(a)).collect();
    dual.push(n);
    FusionRing::from_rule(labels, dual, |a, b| match (a == n, b == n) {
        (false, false) => vec![(group.add(a, b), 1)],
        (true, true) => (0..n).map(|c| (c, 1)).collect(),
        _ => vec![(n, 1)],
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DtyKind {
    /// X_{a,δ}, δ² = χ(a,a)⁻¹
    Invertible { a: usize, delta: RootOfUnity },
    /// Y_{a,b}, a < b
    TwoDim { a: usize, b: usize },
    /// Z_{ρ,Δ}, ρ(x+y) = ρ(x)ρ(y)χ(x,y), Δ² = τ Σ ρ(x)
    Spin { rho: Vec<RootOfUnity>, delta: RootOfUnity },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtyObject {
    pub kind: DtyKind,
    pub label: String,
    pub dim: Cyclotomic,
    /// 0 for the trivial component of the Z/2-grading, 1 for the Z-objects.
    pub grade: u8,
}

/// The simple objects of D TY(A, χ, τ) with τ = τ_sign/√|A|. Square roots
/// δ, Δ are labelled + for the root with argument in [0, π), − otherwise.
pub fn dty_objects(form: &BilinearForm, tau_sign: i8) -> Result<Vec<DtyObject>> {
    if tau_sign != 1 && tau_sign != -1 {
        return Err(Error::InvalidParameter("τ sign must be ±1".into()));
    }
    let g = form.group();
    let n = g.order();
    let mut out = Vec::with_capacity(n * (n + 7) / 2);
    for a in 0..n {
        let roots = form.value(a, a).inv().square_roots();
        for (delta, s) in roots.into_iter().zip(["+", "-"]) {
            out.push(DtyObject {
                kind: DtyKind::Invertible { a, delta },
                label: format!("X[{}]{s}", g.label(a)),
                dim: Cyclotomic::one(),
                grade: 0,
            });
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            out.push(DtyObject {
                kind: DtyKind::TwoDim { a, b },
                label: format!("Y[{},{}]", g.label(a), g.label(b)),
                dim: Cyclotomic::from_int(2),
                grade: 0,
            });
        }
    }
    let sqrt_n = Cyclotomic::sqrt_integer(n as u64)?;
    for (k, rho) in form.quadratic_refinements().into_iter().enumerate() {
        let gauss: Cyclotomic = rho.iter().map(RootOfUnity::to_cyclotomic).sum();
        let sq = (&gauss * &Cyclotomic::from_int(tau_sign as i64)).checked_div(&sqrt_n)?;
        let sq = RootOfUnity::from_cyclotomic(&sq)
            .ok_or_else(|| Error::Inconsistent(format!("τ·Σρ is not a root of unity for refinement {k}")))?;
        for (delta, s) in sq.square_roots().into_iter().zip(["+", "-"]) {
            out.push(DtyObject {
                kind: DtyKind::Spin { rho: rho.clone(), delta },
                label: format!("Z[{k}]{s}"),
                dim: sqrt_n.clone(),
                grade: 1,
            });
        }
    }
    Ok(out)
}

/// Duals: X_{a,δ}* = X_{−a,δ}, Y_{a,b}* = Y_{−a,−b}; a Z-object is sent to
/// None since its dual is not determined by the parameterization alone.
pub fn dty_duals(form: &BilinearForm, objects: &[DtyObject]) -> Vec<Option<usize>> {
    let g = form.group();
    objects
        .iter()
        .map(|o| match &o.kind {
            DtyKind::Invertible { a, delta } => objects.iter().position(
                |p| matches!(&p.kind, DtyKind::Invertible { a: b, delta: d } if *b == g.neg(*a) && d == delta),
            ),
            DtyKind::TwoDim { a, b } => {
                let (x, y) = (g.neg(*a), g.neg(*b));
                let (x, y) = (x.min(y), x.max(y));
                objects.iter().position(|p| p.kind == DtyKind::TwoDim { a: x, b: y })
            }
            DtyKind::Spin { .. } => None,
        })
        .collect()
}

/// The trivial component D TY₊ on {X_{a,δ}} ∪ {Y_{a,b}}:
/// X_{a,δ}⊗X_{a′,δ′} = X_{a+a′, δδ′χ(a,a′)⁻¹}, X_{a,δ}⊗Y_{b,c} = Y_{a+b,a+c},
/// Y_{a,b}⊗Y_{c,d} = Y_{a+c,b+d} ⊕ Y_{a+d,b+c}, with Y_{e,e} = X_{e,δ} ⊕ X_{e,−δ}.
pub fn dty_plus_ring(form: &BilinearForm) -> Result<FusionRing> {
    let objects: Vec<DtyObject> = dty_objects(form, 1)?.into_iter().filter(|o| o.grade == 0).collect();
    let g = form.group();
    let inv_index = |a: usize, delta: RootOfUnity| -> usize {
        objects
            .iter()
            .position(|o| o.kind == DtyKind::Invertible { a, delta })
            .expect("square root of χ(a,a)⁻¹")
    };
    let y = |a: usize, b: usize| -> Vec<(usize, u32)> {
        if a == b {
            let [d1, d2] = form.value(a, a).inv().square_roots();
            vec![(inv_index(a, d1), 1), (inv_index(a, d2), 1)]
        } else {
            let k = DtyKind::TwoDim { a: a.min(b), b: a.max(b) };
            vec![(objects.iter().position(|o| o.kind == k).expect("pair object"), 1)]
        }
    };
    let rule = |i: usize, j: usize| -> Vec<(usize, u32)> {
        match (&objects[i].kind, &objects[j].kind) {
            (DtyKind::Invertible { a, delta: d }, DtyKind::Invertible { a: b, delta: e }) => {
                vec![(inv_index(g.add(*a, *b), *d * *e * form.value(*a, *b).inv()), 1)]
            }
            (DtyKind::Invertible { a, .. }, DtyKind::TwoDim { a: b, b: c })
            | (DtyKind::TwoDim { a: b, b: c }, DtyKind::Invertible { a, .. }) => y(g.add(*a, *b), g.add(*a, *c)),
            (DtyKind::TwoDim { a, b }, DtyKind::TwoDim { a: c, b: d }) => {
                let mut out = y(g.add(*a, *c), g.add(*b, *d));
                out.extend(y(g.add(*a, *d), g.add(*b, *c)));
                out
            }
            _ => unreachable!("only grade-0 objects"),
        }
    };
    let duals = dty_duals(form, &objects);
    let dual = duals.into_iter().map(|d| d.expect("grade-0 objects have duals")).collect();
    FusionRing::from_rule(objects.iter().map(|o| o.label.clone()).collect(), dual, rule)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ty_dimensions() {
        let ising = ty_ring(&AbelianGroup::cyclic(2).unwrap()).unwrap();
        assert_eq!(ising.fp_dimension(2).exact, Some(Cyclotomic::sqrt_integer(2).unwrap()));
        let z4 = ty_ring(&AbelianGroup::cyclic(4).unwrap()).unwrap();
        assert!(z4.is_integral());
        assert_eq!(z4.fp_dimension_category().exact, Some(Cyclotomic::from_int(8)));
    }

    #[test]
    fn dty_object_counts() {
        let form = BilinearForm::standard(3).unwrap();
        let objs = dty_objects(&form, 1).unwrap();
        assert_eq!(objs.len(), 15);
        let total: Cyclotomic = objs.iter().map(|o| &o.dim * &o.dim).sum();
        assert_eq!(total, Cyclotomic::from_int(36));
        for o in &objs {
            match &o.kind {
                DtyKind::Invertible { a, delta } => assert_eq!(delta.pow(2), form.value(*a, *a).inv()),
                DtyKind::Spin { rho, delta } => {
                    let gauss: Cyclotomic = rho.iter().map(RootOfUnity::to_cyclotomic).sum();
                    let tau = Cyclotomic::sqrt_integer(3).unwrap().inverse().unwrap();
                    assert_eq!(delta.pow(2).to_cyclotomic(), &tau * &gauss);
                }
                DtyKind::TwoDim { .. } => {}
            }
        }
    }

    #[test]
    fn dty_plus_small_groups() {
        let forms = [
            BilinearForm::standard(2).unwrap(),
            BilinearForm::standard(3).unwrap(),
            BilinearForm::hyperbolic(2).unwrap(),
            BilinearForm::standard(4).unwrap(),
            BilinearForm::standard(5).unwrap(),
        ];
        for form in forms {
            let n = form.group().order();
            let ring = dty_plus_ring(&form).unwrap();
            assert_eq!(ring.rank(), 2 * n + n * (n - 1) / 2);
            assert!(ring.validate().passed(), "{:?}", form.group());
            assert_eq!(ring.invertibles().len(), 2 * n);
        }
        assert_eq!(dty_plus_ring(&BilinearForm::standard(2).unwrap()).unwrap().rank(), 5);
    }
}
