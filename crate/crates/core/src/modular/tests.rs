use super::*;
use crate::constructors::{b_ring, build_b, build_d, build_pointed_modular, su3_example, AbelianGroup, QuadraticForm};
use crate::numeric::int;

fn b4() -> PartialModularData {
    build_b(4, 1).unwrap()
}

#[test]
fn unit_pairs_reduce_to_dimensions() {
    let md = b4();
    let report = md.check_balancing();
    assert!(report.fully_verified());
    assert!(report.pairs.iter().filter(|p| p.0 == 0).count() == md.rank());
}

#[test]
fn corrupted_twist_reported_at_its_diagonal() {
    let md = b4().with_twist(2, Cyclotomic::root_of_unity(9, 2)).unwrap();
    let bad: Vec<(usize, usize)> = md.check_balancing().violations().iter().map(|p| (p.0, p.1)).collect();
    assert!(bad.contains(&(2, 2)), "{bad:?}");
}

#[test]
fn centralizers_in_b4() {
    let md = b4();
    // γ³ is W₁ in the proof, index 4
    assert_eq!(md.centralizer(&[4]).unwrap(), vec![0, 1, 4]);
    assert_eq!(md.centralizer(&[0]).unwrap(), (0..md.rank()).collect::<Vec<_>>());
    assert_eq!(md.centralizer(&(0..md.rank()).collect::<Vec<_>>()).unwrap(), vec![0]);
    assert_eq!(md.is_symmetric_subcategory(&[0, 1, 4]), Ok(true));
    assert_eq!(md.is_symmetric_subcategory(&[0]), Ok(true));
    assert!(md.is_symmetric_subcategory(&[0, 4]).is_err());
}

#[test]
fn unknown_entries_are_named() {
    let md = b4();
    let err = md.centralizer(&[7]).unwrap_err();
    assert_eq!(err, Error::UnknownEntry("ε′".into(), "ε′".into()));
}

#[test]
fn muger_identity_on_pointed_part() {
    let m = b4().muger_dimension_identity(&[0, 1]).unwrap();
    assert!(m.modular && m.holds);
    assert_eq!(m.dim_sub, Cyclotomic::from_int(2));
    assert_eq!(m.dim_centralizer, Cyclotomic::from_int(18));
    let full = b4().muger_dimension_identity(&(0..8).collect::<Vec<_>>()).unwrap();
    assert!(full.holds);
    assert_eq!(full.centralizer, vec![0]);
}

#[test]
fn verlinde_after_completion() {
    let full = build_b(2, 1).unwrap().complete_by_orthogonality().unwrap();
    let ring = full.verlinde_fusion().unwrap();
    assert!(ring.validate().passed());
    assert_eq!(ring, b_ring(2).unwrap());
    assert!(build_b(2, 1).unwrap().verlinde_fusion().is_err());
}

#[test]
fn completion_rejects_wrong_modulus() {
    let md = build_b(2, 1).unwrap().with_s_entry(5, 5, SEntry::UnknownModulus(int(7))).unwrap();
    assert!(md.complete_by_orthogonality().is_err());
}

#[test]
fn symmetric_subcategories() {
    let e = su3_example().unwrap().enumerate_symmetric_subcategories();
    assert_eq!(e.symmetric, vec![vec![0], vec![0, 1, 2]]);
    assert!(e.undecidable.is_empty());
    let b12 = build_b(12, 1).unwrap().enumerate_symmetric_subcategories();
    assert!(b12.symmetric.contains(&vec![0, 1, 6, 11]));
    let z2 = QuadraticForm::new(AbelianGroup::cyclic(2).unwrap(), vec![vec![1]], 4).unwrap();
    let e = build_pointed_modular(&z2).unwrap().enumerate_symmetric_subcategories();
    assert_eq!(e.symmetric, vec![vec![0]]);
}

#[test]
fn gt_decisions() {
    let su3 = su3_example().unwrap().is_group_theoretical_modular();
    assert_eq!(su3.verdict, GtVerdict::NotGt);
    assert!(su3.trail.iter().any(|l| l.contains("Y ∉ L")));
    let b3 = build_b(3, 1).unwrap().is_group_theoretical_modular();
    assert_eq!(b3.verdict, GtVerdict::NotGt);
    assert!(b3.trail[0].contains("not integral"));
    assert_eq!(build_d(16).unwrap().is_group_theoretical_modular().verdict, GtVerdict::Gt);
}

#[test]
fn undecided_when_data_is_missing() {
    // hiding every entry against V leaves V's membership in L′ open
    let mut md = build_d(4).unwrap();
    for j in 1..md.rank() {
        md = md.with_s_entry(1, j, SEntry::Unknown).unwrap();
    }
    let d = md.is_group_theoretical_modular();
    assert_ne!(d.verdict, GtVerdict::NotGt);
}

#[test]
fn gt_by_dimension() {
    let pointed = |orders: Vec<usize>| {
        let q = QuadraticForm::default_for(AbelianGroup::new(orders).unwrap()).unwrap();
        build_pointed_modular(&q).unwrap().fusion_ring().unwrap()
    };
    assert_eq!(group_theoretical_by_dimension(&pointed(vec![8])), Ok(Some(GtVerdict::Gt)));
    assert_eq!(group_theoretical_by_dimension(&pointed(vec![15])), Ok(Some(GtVerdict::Gt)));
    assert_eq!(group_theoretical_by_dimension(&pointed(vec![36])), Ok(None));
    assert!(group_theoretical_by_dimension(&b_ring(3).unwrap()).is_err());
}

#[test]
fn pq_reports() {
    let pointed = |orders: Vec<usize>| {
        build_pointed_modular(&QuadraticForm::default_for(AbelianGroup::new(orders).unwrap()).unwrap()).unwrap()
    };
    let r = verify_pq_propositions(&pointed(vec![12]), 3, 2, 2).unwrap();
    assert!(r.passed() && r.consistent);
    let r = verify_pq_propositions(&pointed(vec![3, 8]), 3, 2, 3).unwrap();
    assert!(r.passed());
    assert!(verify_pq_propositions(&pointed(vec![12]), 3, 2, 3).is_err());
}

#[test]
fn pq_counting_trail_for_a_fake_instance() {
    // dims of an imagined non-pointed modular category of dimension 3·2² = 12:
    // three invertibles and... 3 + 4 + 4 + ... no integral split exists with
    // simple dims in {1, 2} other than pointed, so use 1,1,1,1,2,2 (sum 12)
    let ring = PartialFusionRing::unknown((0..6).map(|i| format!("X{i}")).collect(), (0..6).collect()).unwrap();
    let dims: Vec<Cyclotomic> = [1, 1, 1, 1, 2, 2].iter().map(|&d| Cyclotomic::from_int(d)).collect();
    let twists = vec![Cyclotomic::one(); 6];
    let mut s = vec![vec![SEntry::Unknown; 6]; 6];
    for i in 0..6 {
        s[0][i] = SEntry::Known(dims[i].clone());
        s[i][0] = SEntry::Known(dims[i].clone());
    }
    let md = PartialModularData::new(ring, dims, twists, s).unwrap();
    let r = verify_pq_propositions(&md, 3, 2, 2).unwrap();
    assert!(!r.passed());
    assert!(!r.consistent);
    assert_eq!(r.candidates.iter().map(|c| c.0).collect::<Vec<_>>(), vec![4]);
}

#[test]
fn json_round_trip() {
    for md in [b4(), build_d(5).unwrap(), su3_example().unwrap()] {
        let v = md.to_json();
        let back = PartialModularData::from_json(&v).unwrap();
        assert_eq!(back, md);
    }
}

#[test]
fn json_errors_carry_paths() {
    let mut v = b4().to_json();
    v["s"][3][2] = serde_json::json!("bogus");
    let err = PartialModularData::from_json(&v).unwrap_err().to_string();
    assert!(err.contains("$.s[3]"), "{err}");
    let mut v = b4().to_json();
    v["conductor"] = serde_json::json!(7);
    assert!(PartialModularData::from_json(&v).unwrap_err().to_string().contains("$.conductor"));
}
