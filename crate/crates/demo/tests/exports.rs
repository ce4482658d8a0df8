use bessel_bounds_demo::{a_ratio_curve, bessel_curve, case_ids, margin_curve, tables};
use serde_json::Value;

#[test]
fn curves_have_matching_lengths() {
    let v: Value = serde_json::from_str(&bessel_curve("K", 0.5, 0.1, 10.0, 20).unwrap()).unwrap();
    assert_eq!(v["x"].as_array().unwrap().len(), 20);
    // e^x K_{1/2}(x) = √(π/(2x))
    let y0 = v["y"][0].as_f64().unwrap();
    assert!((y0 - (std::f64::consts::PI / 0.2).sqrt()).abs() < 1e-12);

    let v: Value = serde_json::from_str(&margin_curve("nasell", 1.0, 0.0, 0.0, 30).unwrap()).unwrap();
    assert!(v["margin"].as_array().unwrap().iter().all(|m| m.as_f64().unwrap() > 0.0));

    let v: Value = serde_json::from_str(&a_ratio_curve(0.0, 40).unwrap()).unwrap();
    assert!((v["estimate"].as_f64().unwrap() - 0.25).abs() < 1e-6);
}

#[test]
fn tables_json_has_both_tables() {
    let v: Value = serde_json::from_str(&tables()).unwrap();
    assert_eq!(v["T1"]["cells"].as_array().unwrap().len(), 42);
    let ids: Vec<String> = serde_json::from_str(&case_ids()).unwrap();
    assert_eq!(ids.len(), 53);
}
