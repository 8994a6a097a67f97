use charvar_wasm::{group_count, hqt_grid, specializations};

#[test]
fn grid_of_h2_genus_two() {
    let v = hqt_grid(2, 2).unwrap();
    assert_eq!(v["dim2N"], 6);
    assert_eq!(v["text"], "1 + q^2*t^2 + 4*q^2*t^3 + q^2*t^4 + q^4*t^4 + 4*q^4*t^5 + q^4*t^6 + q^6*t^6");
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 8);
    assert!(cells.iter().any(|c| c == &serde_json::json!([2, 3, "4"])));
}

#[test]
fn specializations_of_h2_genus_three() {
    let v = specializations(2, 3).unwrap();
    assert_eq!(v["E"], "1 - 4*q^2 + 6*q^4 - 14*q^6 + 6*q^8 - 4*q^10 + q^12");
    assert_eq!(v["pure"], "1 + t^4 + t^8");
    assert_eq!(v["euler"], "-8");
    assert!(v["poincare"].as_str().unwrap().ends_with("32*t^9 + 18*t^10 + 12*t^11 + 3*t^12"));
}

#[test]
fn counts_agree() {
    let v = group_count("gl", 3, 2, 2).unwrap();
    assert_eq!(v["brute"], "211200");
    assert_eq!(v["agreement"], true);
    let v = group_count("sl", 5, 1, 2).unwrap();
    assert_eq!(v["agreement"], true);
}

#[test]
fn out_of_range_requests_are_refused() {
    assert!(hqt_grid(9, 2).is_err());
    assert!(specializations(0, 2).is_err());
    let e = group_count("gl", 3, 1, 3).unwrap_err();
    assert!(e.contains("central element of order 3 unavailable"), "{e}");
    assert!(group_count("gl", 4, 1, 1).is_err());
}
