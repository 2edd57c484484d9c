use transvect_core::identities::dilation::{case_table, CaseEntry};

const FROZEN: &str = include_str!("../data/dilation_cases.json");

fn frozen() -> Vec<CaseEntry> {
    serde_json::from_str(FROZEN).expect("case table parses")
}

fn current() -> Vec<CaseEntry> {
    let mut out = case_table(2, 64).unwrap();
    out.extend(case_table(3, 64).unwrap());
    out
}

#[test]
fn case_table_matches_frozen() {
    let now = current();
    if std::env::var_os("TRANSVECT_REGENERATE").is_some() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/dilation_cases.json");
        std::fs::write(path, serde_json::to_string_pretty(&now).unwrap() + "\n").unwrap();
        return;
    }
    let old = frozen();
    assert_eq!(old.len(), now.len());
    for (a, b) in old.iter().zip(&now) {
        assert_eq!(a, b, "case {} against {:?}", a.conjugator, a.target);
    }
}

#[test]
fn frozen_exponents_by_kind() {
    for e in frozen() {
        let bound = match e.kind.as_str() {
            "same-root" | "commuting" => 1,
            "bilinear" => 2,
            "opposite-short" | "opposite-short-rank2" => 3,
            "opposite-long-row" => 2,
            _ => continue,
        };
        assert!(e.exponent <= bound, "{e:?}");
    }
}
