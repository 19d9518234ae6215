use cei::io::decode_graph6;
use cei::verify::{self, counterexample_search, Mode, TheoremId, VerifyConfig};
use cei::Rational;

#[test]
fn first_cover_counterexample_is_a_path() {
    let hit = counterexample_search(TheoremId::Thm2Edc, &VerifyConfig::exhaustive(3))
        .unwrap()
        .expect("the bound fails on three vertices");
    let g = decode_graph6(hit.input.strip_prefix("g6:").unwrap()).unwrap();
    assert_eq!((g.order(), g.size()), (3, 2));
    assert_eq!(hit.lhs, Rational::new(17, 3));
    assert_eq!(hit.rhs, Rational::from_integer(5));
}

#[test]
fn double_graph_has_no_counterexample() {
    let found = counterexample_search(TheoremId::Thm1Double, &VerifyConfig::random(10_000, 11)).unwrap();
    assert!(found.is_none(), "{found:?}");
}

#[test]
fn printed_multipartite_form_fails_on_smallest_case() {
    let hit = counterexample_search(TheoremId::Cor2Printed, &VerifyConfig::exhaustive(4))
        .unwrap()
        .unwrap();
    assert_eq!(hit.input, "kpartite:2,2");
    assert_eq!((hit.lhs, hit.rhs), (Rational::from_integer(4), Rational::from_integer(8)));
}

#[test]
fn reports_are_reproducible() {
    let cfg = VerifyConfig::random(40, 99);
    for t in TheoremId::ALL {
        let a = verify::verify(t, &cfg).unwrap();
        let b = verify::verify(t, &cfg).unwrap();
        assert_eq!(verify::render_json(&[a], false), verify::render_json(&[b], false), "{}", t.name());
    }
}

#[test]
fn seeds_change_samples() {
    let a = verify::verify(TheoremId::Thm2Edc, &VerifyConfig::random(50, 1)).unwrap();
    let b = verify::verify(TheoremId::Thm2Edc, &VerifyConfig::random(50, 2)).unwrap();
    assert_ne!(verify::render_json(&[a], false), verify::render_json(&[b], false));
}

#[test]
fn counts_partition_trials() {
    for r in verify::verify_all(&VerifyConfig::random(30, 5)) {
        assert!(r.error.is_none(), "{}: {:?}", r.theorem.name(), r.error);
        assert_eq!(r.equal_count + r.strict_count + r.violation_count, r.trials, "{}", r.theorem.name());
        assert_eq!(r.mode, Mode::Random);
        assert!(!r.failed(), "{}", r.theorem.name());
        if r.theorem.claim_kind() == verify::ClaimKind::Equality {
            assert_eq!(r.strict_count, 0);
        }
    }
}

#[test]
fn small_bounds_only_affect_dependent_reports() {
    let mut cfg = VerifyConfig::random(10, 0);
    cfg.bounds = verify::SizeBounds::capped(3);
    let reports = verify::verify_all(&cfg);
    assert_eq!(reports.len(), TheoremId::ALL.len());
    let cor2 = reports.iter().find(|r| r.theorem == TheoremId::Cor2Multipartite).unwrap();
    assert!(cor2.error.is_some());
    for t in [TheoremId::Prop1, TheoremId::Prop3, TheoremId::Thm1Double] {
        let r = reports.iter().find(|r| r.theorem == t).unwrap();
        assert!(r.error.is_none(), "{}: {:?}", t.name(), r.error);
        assert!(r.trials > 0);
    }
}

#[test]
fn table_lists_every_theorem() {
    let reports = verify::verify_all(&VerifyConfig::random(5, 0));
    let table = verify::render_table(&reports, false);
    for t in TheoremId::ALL {
        assert!(table.contains(t.name()), "{}", t.name());
    }
}
