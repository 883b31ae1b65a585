use serde_json::Value;
use unitgroup_web::{algebra_calc, quotient_explorer, sigma_explorer};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn quotient_of_s4_by_j1() {
    let gens = "e + (2,4) + (1,2)(3,4) + (1,2,3,4)\ne + (1,2) + (1,3) + (2,3) + (1,2,3) + (1,3,2)";
    let v = parse(quotient_explorer("S4", gens).unwrap());
    assert_eq!(v["ring_size"], 128);
    assert_eq!(v["unit_count"], 24);
    assert_eq!(v["identity_criterion"], true);
    assert_eq!(v["weight_two_element"], Value::Null);
}

#[test]
fn quotient_with_weight_two_element() {
    let v = parse(quotient_explorer("S3", "e + (1,2)").unwrap());
    assert!(v["weight_two_element"].is_string());
    assert_eq!(v["identity_criterion"], false);
}

#[test]
fn large_quotients_are_not_enumerated() {
    let v = parse(quotient_explorer("S5", "").unwrap());
    assert_eq!(v["ideal_dim"], 0);
    assert!(v["ring_size"].as_str().unwrap().starts_with("not enumerated"));
}

#[test]
fn bad_input_is_reported() {
    assert!(quotient_explorer("S9", "").is_err());
    assert!(quotient_explorer("Q4", "").is_err());
    assert!(quotient_explorer("S3", "(1,4)").is_err());
    assert!(sigma_explorer("B", 5).is_err());
    assert!(sigma_explorer("S", 4).is_err());
}

#[test]
fn sigma_certificates() {
    let v = parse(sigma_explorer("S", 7).unwrap());
    assert_eq!(v["verdict"], "pass");
    let v = parse(sigma_explorer("A", 8).unwrap());
    assert_eq!(v["verdict"], "obstructed");
}

#[test]
fn calculator() {
    let v = parse(algebra_calc("S4", "e + (2,4) + (1,2)(3,4)", "e").unwrap());
    assert_eq!(v["x"]["unit"], true);
    assert_eq!(v["x"]["inverse"], "e + (1,2,3,4) + (1,3) + (1,4,3,2) + (1,4)(2,3)");
    assert_eq!(v["sum"]["weight"], 2);
    let v = parse(algebra_calc("S3", "e + (1,2) + (1,3) + (2,3) + (1,2,3) + (1,3,2)", "e").unwrap());
    assert_eq!(v["x"]["unit"], false);
    assert_eq!(v["product"]["weight"], 6);
}
