//! Randomized property checks shared by the property and acceptance tests.

use std::sync::OnceLock;

use fusionf_core::constructors::{
    b_even_part, build_b, build_pointed_modular, dihedral_rep, semidirect_rep, sl2_ring, ty_ring, AbelianGroup,
    QuadraticForm,
};
use fusionf_core::{Cyclotomic, FusionRing, PartialModularData};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

fn pool() -> &'static [FusionRing] {
    static POOL: OnceLock<Vec<FusionRing>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v = vec![
            dihedral_rep(3).unwrap(),
            dihedral_rep(4).unwrap(),
            dihedral_rep(7).unwrap(),
            semidirect_rep(3).unwrap(),
            b_even_part(2).unwrap(),
            ty_ring(&AbelianGroup::cyclic(2).unwrap()).unwrap(),
            ty_ring(&AbelianGroup::parse("2,2").unwrap()).unwrap(),
            ty_ring(&AbelianGroup::cyclic(3).unwrap()).unwrap(),
        ];
        for ell in [2, 3, 4, 5] {
            v.push(sl2_ring(ell).unwrap());
        }
        for orders in [vec![3], vec![2, 2], vec![4]] {
            let g = AbelianGroup::new(orders).unwrap();
            let n = g.order();
            let mul: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| g.add(a, b)).collect()).collect();
            v.push(FusionRing::group_ring((0..n).map(|a| g.label(a)).collect(), &mul).unwrap());
        }
        v
    })
}

/// Tensor product of two based rings, written independently of the library.
fn tensor(r: &FusionRing, s: &FusionRing) -> FusionRing {
    let m = s.rank();
    let labels = (0..r.rank() * m).map(|i| format!("{}⊠{}", r.label(i / m), s.label(i % m))).collect();
    let dual = (0..r.rank() * m).map(|i| r.dual(i / m) * m + s.dual(i % m)).collect();
    let mut entries = Vec::new();
    for (a, b, c, x) in r.entries() {
        for (d, e, f, y) in s.entries() {
            entries.push((a * m + d, b * m + e, c * m + f, x * y));
        }
    }
    FusionRing::from_entries(labels, dual, entries).unwrap()
}

fn b4_complete() -> &'static PartialModularData {
    static B4: OnceLock<PartialModularData> = OnceLock::new();
    B4.get_or_init(|| build_b(4, 1).unwrap().complete_by_orthogonality().unwrap())
}

fn pointed_pool() -> &'static [PartialModularData] {
    static P: OnceLock<Vec<PartialModularData>> = OnceLock::new();
    P.get_or_init(|| {
        [vec![3], vec![2, 2], vec![4], vec![5], vec![2, 3], vec![3, 3]]
            .into_iter()
            .map(|o| build_pointed_modular(&QuadraticForm::default_for(AbelianGroup::new(o).unwrap()).unwrap()).unwrap())
            .collect()
    })
}

fn subset(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

fn cyclotomic(n: u32, terms: &[(i64, i64)]) -> Cyclotomic {
    Cyclotomic::from_exponents(n, terms)
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-6 && (a.1 - b.1).abs() < 1e-6
}

fn small_cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    (1u32..=24, prop::collection::vec((0i64..24, -5i64..=5), 0..5)).prop_map(|(n, t)| cyclotomic(n, &t))
}

type Outcome = Result<(), TestCaseError>;

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Outcome) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn tensor_products_satisfy_axioms(cases: u32) -> Result<(), String> {
    run(cases, (0usize..15, 0usize..15), |(i, j)| {
        let (r, s) = (&pool()[i], &pool()[j]);
        let t = tensor(r, s);
        prop_assert!(t.validate().passed());
        prop_assert_eq!(t.is_commutative(), r.is_commutative() && s.is_commutative());
        Ok(())
    })
}

fn fp_dimension_is_a_character(cases: u32) -> Result<(), String> {
    run(cases, (0usize..15, 0usize..64, 0usize..64), |(i, a, b)| {
        let r = &pool()[i];
        let (a, b) = (a % r.rank(), b % r.rank());
        let d = |x: usize| r.fp_dimension(x).exact.clone().unwrap();
        let rhs: Cyclotomic = r.product(a, b).iter().map(|&(c, m)| &d(c) * &Cyclotomic::from_int(m as i64)).sum();
        prop_assert_eq!(&d(a) * &d(b), rhs);
        prop_assert_eq!(d(r.dual(a)), d(a));
        Ok(())
    })
}

fn tensor_dimensions_multiply(cases: u32) -> Result<(), String> {
    run(cases, (0usize..15, 0usize..15), |(i, j)| {
        let (r, s) = (&pool()[i], &pool()[j]);
        let t = tensor(r, s);
        let (dt, dr, ds) = (t.fp_dimension_category(), r.fp_dimension_category(), s.fp_dimension_category());
        match dt.exact {
            Some(x) => prop_assert_eq!(x, &dr.exact.unwrap() * &ds.exact.unwrap()),
            // degrees beyond the exact certificates: compare enclosures
            None => prop_assert!(dt.enclosure.overlaps(&dr.enclosure.mul(&ds.enclosure))),
        }
        Ok(())
    })
}

fn universal_grading_is_equidimensional(cases: u32) -> Result<(), String> {
    run(cases, (0usize..15, 0usize..15), |(i, j)| {
        let t = tensor(&pool()[i], &pool()[j]);
        let g = t.universal_grading().unwrap();
        if t.fp_dimensions().iter().all(|d| d.is_exact()) {
            prop_assert_eq!(g.equidimensional, Some(true));
        } else {
            prop_assert_ne!(g.equidimensional, Some(false));
        }
        prop_assert!(g.components[0].contains(&0));
        Ok(())
    })
}

fn centralizer_reverses_inclusion(cases: u32) -> Result<(), String> {
    run(cases, (0usize..7, any::<u64>(), any::<u64>()), |(k, small, extra)| {
        let md = if k == 6 { b4_complete() } else { &pointed_pool()[k] };
        let n = md.rank();
        let cs = md.centralizer(&subset(small, n)).unwrap();
        let ct = md.centralizer(&subset(small | extra, n)).unwrap();
        prop_assert!(ct.iter().all(|x| cs.contains(x)));
        Ok(())
    })
}

fn muger_identity_on_b4(cases: u32) -> Result<(), String> {
    run(cases, any::<u64>(), |seeds| {
        let md = b4_complete();
        let ring = md.fusion_ring().unwrap();
        let sub = ring.closure(&subset(seeds, md.rank()));
        let rep = md.muger_dimension_identity(&sub).unwrap();
        prop_assert!(rep.holds);
        prop_assert_eq!(&rep.dim_sub * &rep.dim_centralizer, Cyclotomic::from_int(36));
        Ok(())
    })
}

fn cyclotomic_ring_axioms(cases: u32) -> Result<(), String> {
    run(cases, (small_cyclotomic(), small_cyclotomic(), small_cyclotomic()), |(x, y, z)| {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x - &x, Cyclotomic::zero());
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!(x.minimize(), x.clone());
        let (xr, xi) = x.to_complex_f64();
        let (yr, yi) = y.to_complex_f64();
        prop_assert!(close((&x * &y).to_complex_f64(), (xr * yr - xi * yi, xr * yi + xi * yr)));
        Ok(())
    })
}

fn cyclotomic_inverses(cases: u32) -> Result<(), String> {
    run(cases, (small_cyclotomic(), small_cyclotomic()), |(x, y)| {
        if x.is_zero() {
            prop_assert!(x.inverse().is_err());
        } else {
            prop_assert!((&x * &x.inverse().unwrap()).is_one());
            prop_assert_eq!((&y * &x).checked_div(&x).unwrap(), y.clone());
        }
        Ok(())
    })
}

fn pointed_part_of_b4(_cases: u32) -> Result<(), String> {
    let rep = b4_complete().muger_dimension_identity(&[0, 1]).map_err(|e| e.to_string())?;
    let ok = rep.dim_sub == Cyclotomic::from_int(2)
        && rep.dim_centralizer == Cyclotomic::from_int(18)
        && rep.dim_total == Cyclotomic::from_int(36);
    ok.then_some(()).ok_or_else(|| format!("{} · {} ≠ 36", rep.dim_sub, rep.dim_centralizer))
}

pub type Property = (&'static str, fn(u32) -> Result<(), String>);

pub const PROPERTIES: [Property; 9] = [
    ("fusion ring axioms on tensor products", tensor_products_satisfy_axioms),
    ("FPdim is a ring homomorphism", fp_dimension_is_a_character),
    ("FPdim multiplies under tensor products", tensor_dimensions_multiply),
    ("universal grading is equidimensional", universal_grading_is_equidimensional),
    ("centralizer reverses inclusion", centralizer_reverses_inclusion),
    ("Müger dimension identity on B:4", muger_identity_on_b4),
    ("Müger identity on the pointed part of B:4", pointed_part_of_b4),
    ("cyclotomic ring axioms", cyclotomic_ring_axioms),
    ("cyclotomic inverses", cyclotomic_inverses),
];
