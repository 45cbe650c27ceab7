use charkit::arith::{zeta, CycNum, LaurentPoly};
use charkit::data::{bundled_families, bundled_traces, BUNDLED_FAMILIES, BUNDLED_TRACES};
use charkit::e7::{
    cell_sum, chi_cuspidal_table, derive_datasets, empty_cell_backsolve, empty_cell_sum,
    final_value_table, recover_almost_characters, regular_class_model, solve_signs,
    solve_signs_with, AuditKind, E7Error, SignAxioms, CHI_A1, CHI_A2, ELSEWHERE,
};
use charkit::fourier::{FamilyDataset, FourierError};
use charkit::hecke::{CoxeterTraceDataset, HeckeError};

fn v7(c: CycNum) -> LaurentPoly {
    LaurentPoly::monomial(c, 7)
}

fn int(n: i64) -> CycNum {
    CycNum::from_integer(n)
}

#[test]
fn derived_datasets_match_the_bundled_files() {
    let d = derive_datasets().unwrap();
    assert_eq!(d.traces.to_json_string(), bundled_traces().to_json_string());
    assert_eq!(
        d.families.to_json_string(),
        bundled_families().to_json_string()
    );
    assert_eq!(d.report.families, 35);
    assert_eq!(d.report.unipotent_characters, 76);
}

#[test]
fn trace_dataset_values() {
    let t = bundled_traces();
    assert_eq!(t.difference_512().unwrap(), v7(int(2)));
    assert_eq!(
        t.combination_56_35_21().unwrap(),
        LaurentPoly::q_pow(5).scale(&int(2))
    );
    assert_eq!(t.trace("phi_512_11").unwrap(), &v7(int(1)));
    assert_eq!(t.trace("phi_512_12").unwrap(), &v7(int(-1)));
}

#[test]
fn mutated_trace_datasets_are_rejected() {
    // Exchange the values of the 512 pair while keeping each label's
    // degree and b, so only the difference check can notice.
    let mut v: serde_json::Value = serde_json::from_str(BUNDLED_TRACES).unwrap();
    let (a, b) = ("phi_512_11", "phi_512_12");
    let ta = v["traces"][a].take();
    v["traces"][a] = v["traces"][b].take();
    v["traces"][b] = ta;
    let ca = v["characters"][a]["coxeter_value"].take();
    v["characters"][a]["coxeter_value"] = v["characters"][b]["coxeter_value"].take();
    v["characters"][b]["coxeter_value"] = ca;
    match CoxeterTraceDataset::from_json_str(&v.to_string()) {
        Err(HeckeError::ConsistencyError { constraint, .. }) => {
            assert_eq!(constraint, "difference_512")
        }
        other => panic!("unexpected {other:?}"),
    }
    let mut v: serde_json::Value = serde_json::from_str(BUNDLED_TRACES).unwrap();
    v["traces"]["phi_21_6"] = serde_json::json!({"10": "1"});
    assert!(matches!(
        CoxeterTraceDataset::from_json_str(&v.to_string()),
        Err(HeckeError::ConsistencyError { .. })
    ));
}

#[test]
fn mutated_family_datasets_are_rejected() {
    // Exchanging the pairs of the two cuspidal members breaks their
    // eigenvalues.
    let mut v: serde_json::Value = serde_json::from_str(BUNDLED_FAMILIES).unwrap();
    let fams = v["families"].as_array_mut().unwrap();
    let f0 = fams
        .iter_mut()
        .find(|f| {
            f["members"]
                .as_array()
                .unwrap()
                .iter()
                .any(|m| m["label"] == "E7[z4]")
        })
        .unwrap();
    let members = f0["members"].as_array_mut().unwrap();
    let i = members
        .iter()
        .position(|m| m["label"] == "phi_512_11")
        .unwrap();
    let j = members
        .iter()
        .position(|m| m["label"] == "phi_512_12")
        .unwrap();
    let (a, b) = (members[i]["mpair"].clone(), members[j]["mpair"].clone());
    members[i]["mpair"] = b;
    members[j]["mpair"] = a;
    assert!(matches!(
        FamilyDataset::from_json_str(&v.to_string()),
        Err(FourierError::PinningError(_))
    ));
}

#[test]
fn regular_class_model_has_four_self_inverse_anchored_classes() {
    let m = regular_class_model().unwrap();
    assert_eq!(m.component_group.order(), 4);
    assert_eq!(m.component_group.element_order(m.a0), 4);
    assert_eq!(m.num_rational_classes(), 4);
    assert_eq!(m.class_labels, ["u0", "u_a0", "u_a0^2", "u_a0^3"]);
    assert!(m.frobenius.iter().enumerate().all(|(i, &j)| i == j));
    assert!(m.is_u0_self_inverse());
    assert_eq!(m.u0_word, (0..7).collect::<Vec<_>>());
}

#[test]
fn cuspidal_characteristic_functions() {
    let m = regular_class_model().unwrap();
    let t = chi_cuspidal_table(&m).unwrap();
    let z = zeta(4, 1);
    let want = [
        (CHI_A1, [int(1), z.clone(), int(-1), -&z]),
        (CHI_A2, [int(1), -&z, int(-1), z.clone()]),
    ];
    for (row, vals) in want {
        assert_eq!(t.get(row, ELSEWHERE), Some(&LaurentPoly::zero()));
        for (class, c) in m.class_labels.iter().zip(vals) {
            assert_eq!(t.get(row, class), Some(&v7(c)), "{row} at {class}");
        }
        // u0 is conjugate to its inverse, so the value there is real.
        let at_u0 = t.get(row, "u0").unwrap();
        assert_eq!(&at_u0.conj(), at_u0);
        for class in &m.class_labels {
            let e = t.get(row, class).unwrap();
            assert_eq!(e * &e.conj(), LaurentPoly::q_pow(7));
        }
    }
}

#[test]
fn cell_sums_and_signs() {
    let (t, f) = (bundled_traces(), bundled_families());
    let q7 = LaurentPoly::q_pow(7);
    for xi in [1i8, -1] {
        for delta in [1i8, -1] {
            let want = q7.scale(&int(1 + 2 * i64::from(xi) + i64::from(delta)));
            assert_eq!(cell_sum(&t, &f, xi, delta).unwrap(), want);
        }
    }
    let s = solve_signs(&t, &f).unwrap();
    assert_eq!(s.xi, 1);
    assert_eq!(s.admissible_delta, vec![1, -1]);
    assert!(s
        .audit
        .iter()
        .any(|a| a.kind == AuditKind::Axiom && a.anchor == "cell_membership_positivity"));
    match solve_signs_with(&t, &f, SignAxioms { positivity: false }) {
        Err(E7Error::AmbiguousSign { survivors }) => assert_eq!(survivors.len(), 4),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn final_table_entries() {
    let f = bundled_families();
    let t = final_value_table(&f, 1).unwrap();
    let (p, z) = (int(1), zeta(4, 1));
    let zero = int(0);
    let want = [
        ("phi_512_11", [p.clone(), zero.clone(), -&p, zero.clone()]),
        ("phi_512_12", [-&p, zero.clone(), p.clone(), zero.clone()]),
        ("E7[z4]", [zero.clone(), -&z, zero.clone(), z.clone()]),
        ("E7[-z4]", [zero.clone(), z.clone(), zero.clone(), -&z]),
    ];
    let mut checked = 0;
    for (row, vals) in want {
        for (class, c) in ["u0", "u_a0", "u_a0^2", "u_a0^3"].iter().zip(vals) {
            assert_eq!(t.get(row, class), Some(&v7(c)), "{row} at {class}");
            checked += 1;
        }
    }
    assert_eq!(checked, 16);
    for class in &t.col_labels {
        let s = t.get("phi_512_11", class).unwrap() + t.get("phi_512_12", class).unwrap();
        assert!(s.is_zero());
    }
}

#[test]
fn round_trip_recovers_the_characteristic_functions() {
    let f = bundled_families();
    let m = regular_class_model().unwrap();
    let chi = chi_cuspidal_table(&m).unwrap();
    for xi in [1i8, -1] {
        let r = recover_almost_characters(&f, &final_value_table(&f, xi).unwrap()).unwrap();
        for class in &m.class_labels {
            let c1 = chi.get(CHI_A1, class).unwrap().scale(&int(xi.into()));
            let c2 = chi.get(CHI_A2, class).unwrap().scale(&int(xi.into()));
            assert_eq!(r.get("R_x1", class), Some(&c1));
            assert_eq!(r.get("R_x2", class), Some(&c2));
            for other in &r.row_labels[2..] {
                assert!(r.get(other, class).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn empty_cell_back_solution() {
    let (t, f) = (bundled_traces(), bundled_families());
    let r = empty_cell_backsolve(&t, &f, 1).unwrap();
    assert_eq!(r, LaurentPoly::q_pow(2));
    assert!(empty_cell_sum(&t, &f, 1, &r).unwrap().is_zero());
    // Formal value for the excluded sign.
    let r = empty_cell_backsolve(&t, &f, -1).unwrap();
    assert_eq!(r, LaurentPoly::q_pow(2).scale(&int(-3)));
    assert!(empty_cell_sum(&t, &f, -1, &r).unwrap().is_zero());
}

#[test]
fn invalid_signs_are_rejected() {
    let (t, f) = (bundled_traces(), bundled_families());
    assert_eq!(final_value_table(&f, 0), Err(E7Error::InvalidSign(0)));
    assert_eq!(
        empty_cell_backsolve(&t, &f, 3),
        Err(E7Error::InvalidSign(3))
    );
}
