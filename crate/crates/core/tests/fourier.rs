use std::collections::BTreeMap;

use charkit::arith::{CycNum, LaurentPoly};
use charkit::fourier::{
    almost_transform, fourier_matrix, m_set, pairing, Direction, Family, FamilyMember,
    FourierContext, FourierError, MPair, MemberKind,
};
use charkit::groups::parse_group;
use proptest::prelude::*;

fn group(name: &str) -> charkit::groups::FiniteGroup {
    parse_group(name).unwrap()
}

fn q(n: i64, d: i64) -> CycNum {
    CycNum::from_ratio(n, d)
}

#[test]
fn m_set_sizes() {
    assert_eq!(m_set(&group("Z1")).unwrap().len(), 1);
    assert_eq!(m_set(&group("Z2")).unwrap().len(), 4);
    assert_eq!(m_set(&group("S3")).unwrap().len(), 8);
    assert_eq!(m_set(&group("Z4")).unwrap().len(), 16);
    // Σ over classes of the number of classes of the centralizer.
    assert_eq!(m_set(&group("S4")).unwrap().len(), 21);
}

#[test]
fn pairing_examples() {
    let x = MPair::new(0, 0);
    assert_eq!(pairing(&group("Z1"), &x, &x).unwrap(), CycNum::one());
    assert_eq!(pairing(&group("S3"), &x, &x).unwrap(), q(1, 6));
    assert!(matches!(
        pairing(&group("S3"), &MPair::new(5, 0), &x),
        Err(FourierError::KeyMismatch(_))
    ));
}

#[test]
fn z2_matrix() {
    let fm = fourier_matrix(&group("Z2")).unwrap();
    let h = q(1, 2);
    let m = -&h;
    // Order (1,1), (1,ε), (g,1), (g,ε).
    let want = vec![
        vec![h.clone(), h.clone(), h.clone(), h.clone()],
        vec![h.clone(), h.clone(), m.clone(), m.clone()],
        vec![h.clone(), m.clone(), h.clone(), m.clone()],
        vec![h.clone(), m.clone(), m.clone(), h.clone()],
    ];
    assert_eq!(fm.entries, want);
}

#[test]
fn s3_matrix_entries_and_involution() {
    let fm = fourier_matrix(&group("S3")).unwrap();
    assert_eq!(fm.size(), 8);
    // {(1,r),(1,r)} = |G|·r(1)²/|G|² = 2/3 for the 2-dimensional r; rows are
    // sorted by degree, so r is the last character of C(1) = S3.
    let r = fm
        .mpairs
        .iter()
        .position(|x| x.class_index == 0 && x.char_index == 2)
        .unwrap();
    assert_eq!(fm.entries[r][r], q(2, 3));
    let allowed: Vec<CycNum> = [
        (0, 1),
        (1, 6),
        (-1, 6),
        (1, 3),
        (-1, 3),
        (2, 3),
        (1, 2),
        (-1, 2),
    ]
    .iter()
    .map(|&(a, b)| q(a, b))
    .collect();
    for row in &fm.entries {
        for e in row {
            assert!(allowed.contains(e), "unexpected entry {e}");
        }
    }
    assert!(fm.is_hermitian() && fm.is_involution());
}

#[test]
fn fourier_involution_for_small_groups() {
    for name in ["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "S3", "S4", "D4", "Q8"] {
        let fm = fourier_matrix(&group(name)).unwrap();
        assert!(fm.is_hermitian(), "{name}");
        assert!(fm.is_involution(), "{name}");
    }
}

#[test]
fn eigenvalues_of_z4() {
    let ctx = FourierContext::new(&group("Z4")).unwrap();
    // Every eigenvalue is a fourth root of unity.
    for x in ctx.m_set() {
        let l = ctx.eigenvalue(&x).unwrap();
        assert!(l.pow(4).is_one());
    }
}

fn z2_family() -> Family {
    let members = [("a", 0, 0), ("b", 0, 1), ("c", 1, 0), ("d", 1, 1)]
        .iter()
        .map(|&(l, c, k)| FamilyMember {
            kind: MemberKind::Principal,
            label: l.to_string(),
            mpair: MPair::new(c, k),
            delta: if l == "d" { -1 } else { 1 },
            lambda: CycNum::one(),
        })
        .collect();
    Family {
        id: "T".into(),
        group: "Z2".into(),
        members,
    }
}

#[test]
fn transform_rejects_wrong_keys() {
    let fm = fourier_matrix(&group("Z2")).unwrap();
    let fam = z2_family();
    let mut vals: BTreeMap<String, CycNum> = ["a", "b", "c"]
        .iter()
        .map(|l| (l.to_string(), CycNum::one()))
        .collect();
    assert!(matches!(
        almost_transform(&fm, &fam, Direction::RhoToR, &vals),
        Err(FourierError::KeyMismatch(_))
    ));
    vals.insert("d".into(), CycNum::one());
    assert!(almost_transform(&fm, &fam, Direction::RhoToR, &vals).is_ok());
    assert!(almost_transform(&fm, &fam, Direction::RToRho, &vals).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transform_round_trip(coeffs in prop::collection::vec((-5i64..=5, -3i32..=7), 4)) {
        let fm = fourier_matrix(&group("Z2")).unwrap();
        let fam = z2_family();
        let vals: BTreeMap<String, LaurentPoly> = ["a", "b", "c", "d"]
            .iter()
            .zip(&coeffs)
            .map(|(l, &(c, e))| {
                let v = LaurentPoly::monomial(CycNum::from_integer(c), e)
                    + LaurentPoly::monomial(CycNum::from_integer(1 - c), e + 1);
                (l.to_string(), v)
            })
            .collect();
        let r = almost_transform(&fm, &fam, Direction::RhoToR, &vals).unwrap();
        let back = almost_transform(&fm, &fam, Direction::RToRho, &r).unwrap();
        prop_assert_eq!(back, vals);
    }

    #[test]
    fn pairing_is_hermitian_on_s3_and_z4(pick in 0usize..2, i in 0usize..16, j in 0usize..16) {
        let ctx = FourierContext::new(&group(["S3", "Z4"][pick])).unwrap();
        let pairs = ctx.m_set();
        let (x, y) = (pairs[i % pairs.len()], pairs[j % pairs.len()]);
        prop_assert_eq!(ctx.pairing(&x, &y).unwrap(), ctx.pairing(&y, &x).unwrap().conj());
    }
}
