use milag::darboux::export::{case_json, catalog_json};
use milag::darboux::{apparent_singularities, catalog, CaseName};
use milag::exact::{int, rat};
use milag::quasi::{wronskian, SeedKind, SeedSpec};
use serde_json::{json, Value};

fn entry(name: &str) -> Value {
    catalog_json().as_array().unwrap().iter().find(|c| c["name"] == name).cloned().unwrap()
}

#[test]
fn every_case_is_exported() {
    let names: Vec<Value> = catalog_json().as_array().unwrap().iter().map(|c| c["name"].clone()).collect();
    assert_eq!(names, ["A", "B", "C", "D", "E", "F", "G", "H"].map(Value::from));
}

#[test]
fn case_a_record() {
    let a = entry("A");
    assert_eq!(a["g"], "3/4");
    assert_eq!(a["seeds"], json!(["III_1", "I_2"]));
    assert_eq!(a["family"]["missing_indices"], json!([-1]));
    assert_eq!(a["family"]["extra_members"][0]["poly"]["coeffs"], json!(["15", "4"]));
    assert_eq!(a["family"]["weight"]["eta_exponent"], "1/4");
    assert_eq!(a["family"]["prepotential_shift"], "-8");
    assert_eq!(a["family"]["norm_formula"]["gamma_shift"], "5/4");
}

#[test]
fn families_and_weights() {
    assert!(entry("C")["family"].is_null());
    assert!(entry("G")["family"].is_null());
    assert!(entry("D")["family"]["weight"].is_null());
    assert_eq!(entry("H")["family"]["weight"]["constant"], "1/2");
    assert_eq!(entry("G")["g"], "39/10");
}

#[test]
fn wronskians_survive_json() {
    for case in catalog() {
        let v = case_json(&case);
        let back: milag::quasi::QuasiFunction = serde_json::from_value(v["wronskian"].clone()).unwrap();
        assert_eq!(back, case.expected_wronskian, "case {}", case.name);
    }
}

#[test]
fn reflected_partner_of_g_has_a_cubic_zero() {
    let g = rat(-29, 10);
    let seeds = [SeedSpec::new(SeedKind::I, 1), SeedSpec::new(SeedKind::II, 3)];
    let w = wronskian(&seeds.map(|s| s.solution(&g)));
    assert_eq!(w.poly().root_multiplicity(&rat(12, 5)), 3);
    let reports = apparent_singularities(&w).unwrap();
    assert_eq!(reports.len(), 1);
    assert!(reports[0].trivial_monodromy);

    let wg = wronskian(&CaseName::G.spec().seed_functions());
    assert!(w.poly().proportional_to(&wg.poly().scale_var(&int(-1))).is_some(), "{w} vs {wg}");
}
