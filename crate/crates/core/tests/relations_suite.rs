use std::collections::BTreeMap;
use transvect_core::identities::relations::{verify_relation_suite, RelationForm, SuiteMode, RELATION_IDS};
use transvect_core::Ring;

#[test]
fn corrected_suite_symbolic_n3() {
    let reps = verify_relation_suite(3, &Ring::dyadic(), SuiteMode::Symbolic, RelationForm::Corrected).unwrap();
    let ids: std::collections::BTreeSet<u8> = reps.iter().map(|r| r.id).collect();
    assert_eq!(ids.len(), RELATION_IDS.count());
    let bad: Vec<_> = reps.iter().filter(|r| !r.holds).map(|r| (r.id, r.indices.clone())).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn sampled_suite_has_symbolic_shape() {
    let sym = verify_relation_suite(3, &Ring::dyadic(), SuiteMode::Symbolic, RelationForm::Corrected).unwrap();
    let r = Ring::parse("zmod:9").unwrap();
    let sampled = verify_relation_suite(3, &r, SuiteMode::Sampled { count: 50, seed: 11 }, RelationForm::Corrected).unwrap();
    let count = |reps: &[_]| {
        let mut m = BTreeMap::new();
        for rep in reps {
            let rep: &transvect_core::identities::relations::RelationReport = rep;
            *m.entry(rep.id).or_insert(0usize) += 1;
        }
        m
    };
    let cs = count(&sym);
    let cz = count(&sampled);
    assert_eq!(cs, cz);
    assert!(sampled.iter().all(|r| r.holds));
}

#[test]
fn symbolic_pass_implies_sampled_pass() {
    for ring in ["zmod:9", "zmod:15", "gf:7"] {
        let r = Ring::parse(ring).unwrap();
        let reps = verify_relation_suite(2, &r, SuiteMode::Sampled { count: 100, seed: 5 }, RelationForm::Corrected).unwrap();
        assert!(reps.iter().all(|x| x.holds), "{ring}");
    }
}
