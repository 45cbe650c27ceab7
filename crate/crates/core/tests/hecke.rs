use std::collections::HashMap;
use std::sync::Arc;

use charkit::arith::{CycNum, LaurentPoly};
use charkit::coxeter::{RootSystem, WeylElement};
use charkit::groups::{character_table, FiniteGroup, Perm};
use charkit::hecke::{
    braid_relations_hold, build_irrep_model, coxeter_trace_from_characters, hecke_trace,
    quadratic_relations_hold, supported_labels, t_multiply, trace_of_word, HeckeElement,
};
use proptest::prelude::*;

fn weyl_as_perm(w: &WeylElement) -> Perm {
    Perm(w.perm().iter().map(|&x| x as u32).collect())
}

/// `W` as a permutation group on its roots.
fn weyl_group(rs: &RootSystem) -> FiniteGroup {
    let gens: Vec<Perm> = (0..rs.rank())
        .map(|s| weyl_as_perm(&rs.simple_reflection(s).unwrap()))
        .collect();
    FiniteGroup::enumerate(&rs.datum.type_label, &gens, 100_000).unwrap()
}

#[test]
fn relations_hold_for_every_bundled_model() {
    for t in ["A1", "A2", "A3", "A4", "A5", "B2", "G2"] {
        let rs = RootSystem::from_type(t).unwrap();
        for label in supported_labels(&rs) {
            let m = build_irrep_model(&rs, &label).unwrap();
            assert!(quadratic_relations_hold(&m), "{t} {label} quadratic");
            assert!(braid_relations_hold(&m), "{t} {label} braid");
        }
    }
}

#[test]
fn type_a_models_have_hook_length_dimensions() {
    fn hook_dim(p: &[usize]) -> usize {
        let n: usize = p.iter().sum();
        let mut prod = 1usize;
        for (i, &row) in p.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = p[i + 1..].iter().filter(|&&r| r > j).count();
                prod *= arm + leg + 1;
            }
        }
        (1..=n).product::<usize>() / prod
    }
    for t in ["A1", "A2", "A3", "A4", "A5"] {
        let rs = RootSystem::from_type(t).unwrap();
        let labels = supported_labels(&rs);
        let mut total = 0;
        for label in &labels {
            let m = build_irrep_model(&rs, label).unwrap();
            let p = charkit::hecke::parse_partition(label).unwrap();
            assert_eq!(m.dim, hook_dim(&p), "{t} {label}");
            total += m.dim * m.dim;
        }
        assert_eq!(total as u128, rs.group_order(), "{t}");
    }
}

#[test]
fn tits_specialization_matches_character_tables() {
    for t in ["A2", "A3", "B2", "G2"] {
        let rs = RootSystem::from_type(t).unwrap();
        let g = weyl_group(&rs);
        let table = character_table(&g).unwrap();
        let labels = supported_labels(&rs);
        assert_eq!(
            labels.len(),
            table.rows.len(),
            "{t}: complete set of models"
        );
        let mut matched = vec![false; table.rows.len()];
        for label in labels {
            let m = build_irrep_model(&rs, &label).unwrap();
            let values: Vec<CycNum> = table
                .class_reps
                .iter()
                .map(|&i| {
                    let w = rs
                        .element_from_perm(g.element(i).0.iter().map(|&x| x as u16).collect())
                        .unwrap();
                    hecke_trace(&rs, &m, &w).unwrap().eval_at_one()
                })
                .collect();
            let row = table
                .rows
                .iter()
                .position(|r| *r == values)
                .unwrap_or_else(|| panic!("{t} {label}: no matching character"));
            assert!(!matched[row], "{t} {label}: character matched twice");
            matched[row] = true;
        }
    }
}

#[test]
fn coxeter_traces_follow_the_scalar_formula_in_type_a() {
    // On V_φ the element T_c^h = T_{w0}² is the scalar q^{N(1+φ(r)/φ(1))}.
    for n in 2..=6usize {
        let rs = RootSystem::from_type(&format!("A{}", n - 1)).unwrap();
        let word: Vec<usize> = (0..n - 1).collect();
        let c = rs.element_from_word(&word).unwrap();
        let r = rs.simple_reflection(0).unwrap();
        let npos = (n * (n - 1) / 2) as i64;
        for label in supported_labels(&rs) {
            let m = build_irrep_model(&rs, &label).unwrap();
            let deg = m.dim as i64;
            let at = |w: &WeylElement| {
                hecke_trace(&rs, &m, w)
                    .unwrap()
                    .eval_at_one()
                    .as_rational()
                    .unwrap()
            };
            let chi_r = at(&r).to_integer().try_into().unwrap();
            let chi_c: i64 = at(&c).to_integer().try_into().unwrap();
            let expected =
                coxeter_trace_from_characters(deg, chi_r, chi_c, npos, n as i64).unwrap();
            assert_eq!(
                hecke_trace(&rs, &m, &c).unwrap(),
                expected,
                "A{} {label}",
                n - 1
            );
        }
    }
}

#[test]
fn multiplication_examples() {
    let rs = Arc::new(RootSystem::from_type("A2").unwrap());
    let ts = HeckeElement::from_word(&rs, &[0]).unwrap();
    let q = LaurentPoly::q_pow(1);
    let sq = t_multiply(&ts, &ts).unwrap();
    let expected = HeckeElement::one(&rs)
        .scale(&q)
        .add(&ts.scale(&(&q - &LaurentPoly::one())))
        .unwrap();
    assert_eq!(sq, expected);
    let t1t2 = t_multiply(&ts, &HeckeElement::from_word(&rs, &[1]).unwrap()).unwrap();
    assert_eq!(t1t2, HeckeElement::from_word(&rs, &[0, 1]).unwrap());
}

const RANK_LE_4: [&str; 10] = [
    "A1", "A2", "A3", "A4", "B2", "B3", "C3", "G2", "A1xA2", "A1xA1xA1",
];

fn random_element(rs: &Arc<RootSystem>, word: &[usize], coeffs: &[(i64, i32)]) -> HeckeElement {
    let mut acc = HeckeElement::zero(rs);
    let mut w = rs.identity();
    for (k, &s) in word.iter().enumerate() {
        w = rs.mul_simple_right(&w, s % rs.rank());
        if let Some(&(c, e)) = coeffs.get(k) {
            let term = HeckeElement::term(
                rs,
                w.clone(),
                LaurentPoly::monomial(CycNum::from_integer(c), e),
            );
            acc = acc.add(&term).unwrap();
        }
    }
    acc
}

/// Apply one braid move at a random applicable position, if any.
fn braid_move(rs: &RootSystem, word: &mut Vec<usize>, pick: usize) {
    let d = &rs.datum;
    let mut sites = Vec::new();
    for i in 0..word.len() {
        for j in 0..rs.rank() {
            let a = word[i];
            if a == j {
                continue;
            }
            let m = d.coxeter_m(a, j) as usize;
            if i + m <= word.len() && (0..m).all(|k| word[i + k] == if k % 2 == 0 { a } else { j })
            {
                sites.push((i, a, j, m));
            }
        }
    }
    if sites.is_empty() {
        return;
    }
    let (i, a, j, m) = sites[pick % sites.len()];
    for k in 0..m {
        word[i + k] = if k % 2 == 0 { j } else { a };
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn multiplication_is_associative(
        t in 0..RANK_LE_4.len(),
        words in prop::collection::vec(prop::collection::vec(0usize..4, 0..8), 3),
        coeffs in prop::collection::vec((-3i64..=3, -2i32..=3), 3),
    ) {
        let rs = Arc::new(RootSystem::from_type(RANK_LE_4[t]).unwrap());
        let e: Vec<HeckeElement> = words
            .iter()
            .zip(&coeffs)
            .map(|(w, &c)| random_element(&rs, w, &[c, (1, 0), (-1, 1), c]))
            .collect();
        let left = t_multiply(&t_multiply(&e[0], &e[1]).unwrap(), &e[2]).unwrap();
        let right = t_multiply(&e[0], &t_multiply(&e[1], &e[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let one = HeckeElement::one(&rs);
        prop_assert_eq!(t_multiply(&one, &e[0]).unwrap(), e[0].clone());
        prop_assert_eq!(t_multiply(&e[0], &one).unwrap(), e[0].clone());
    }

    #[test]
    fn traces_are_invariant_under_braid_moves(
        t in 0..4usize,
        word in prop::collection::vec(0usize..5, 0..14),
        picks in prop::collection::vec(0usize..100, 1..6),
    ) {
        let rs = RootSystem::from_type(["A3", "A4", "B2", "G2"][t]).unwrap();
        let w = rs
            .element_from_word(&word.iter().map(|s| s % rs.rank()).collect::<Vec<_>>())
            .unwrap();
        let mut reduced = rs.reduced_word(&w);
        let labels = supported_labels(&rs);
        let mut cache: HashMap<String, LaurentPoly> = HashMap::new();
        for label in &labels {
            let m = build_irrep_model(&rs, label).unwrap();
            cache.insert(label.clone(), hecke_trace(&rs, &m, &w).unwrap());
        }
        for pick in picks {
            braid_move(&rs, &mut reduced, pick);
            prop_assert_eq!(rs.element_from_word(&reduced).unwrap(), w.clone());
            for label in &labels {
                let m = build_irrep_model(&rs, label).unwrap();
                prop_assert_eq!(&trace_of_word(&m, &reduced).unwrap(), &cache[label]);
            }
        }
    }
}
