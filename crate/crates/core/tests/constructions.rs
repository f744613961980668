mod common;

use matchext::constructions::{build_family, FamilyId, FamilySpec};
use matchext::harness::{verify_many, Sample, Status, TheoremId};
use matchext::properties::{independence_number, vertex_connectivity, Checker};
use matchext::recognizers::recognize_exceptional_join;
use matchext::Graph;

#[test]
fn k12_sharp_is_tight() {
    for nu in (3..=11).step_by(2) {
        for k in 0..=(nu - 3) / 2 {
            let g = build_family(&FamilySpec::K12Sharp { nu, k }).unwrap();
            assert_eq!(independence_number(&g), (nu - 1) / 2 - k);
            assert_eq!(Checker::new(&g).is_k_half_extendable(k), Ok(true), "ν={nu} k={k}");
        }
    }
}

#[test]
fn exceptional_4k_three() {
    let g = build_family(&FamilySpec::Exceptional4k { k: 3 }).unwrap();
    let c = Checker::new(&g);
    assert_eq!(c.is_k_extendable(3), Ok(true));
    assert_eq!(c.is_n_factor_critical(6), Ok(false));
    assert_eq!(vertex_connectivity(&g), 6);
    assert_eq!(recognize_exceptional_join(&g, 6).unwrap().map(|w| w.clique_order()), Some(3));
}

#[test]
fn exceptional_join_round_trip() {
    let mut rng = common::rng(5);
    for c in 1..=6 {
        for m in 1..=3 {
            for p in [0.0, 0.3, 0.7, 1.0] {
                let core = common::random_graph(&mut rng, c, p);
                let g = build_family(&FamilySpec::ExceptionalJoin { core: core.clone(), m }).unwrap();
                let w = recognize_exceptional_join(&g, c).unwrap().expect("witness");
                assert!(w.is_valid_for(&g, c));
                assert_eq!(w.clique_order(), m);
            }
        }
    }
}

#[test]
fn every_theorem_passes_on_every_family() {
    let specs = FamilySpec::all_up_to(12);
    for id in FamilyId::ALL {
        assert!(specs.iter().any(|s| s.id() == id));
    }
    let samples = Sample::numbered(specs.iter().map(|s| s.build().unwrap()).filter(Graph::is_connected));
    let verdicts = verify_many(&TheoremId::ALL, &samples, 2).unwrap();
    for v in verdicts {
        assert_ne!(v.status(), Status::Fail, "{}: {:?}", v.id, v.violations);
    }
}
