//! One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use charkit::arith::{zeta, CycNum, LaurentPoly};
use charkit::coxeter::{coxeter_conjugator, replay_moves, RootSystem, WeylElement};
use charkit::data::BUNDLED_TRACES;
use charkit::e7::{
    chi_cuspidal_table, final_value_table, recover_almost_characters, regular_class_model,
    solve_signs, solve_signs_with, E7Error, SignAxioms, CHI_A1, CHI_A2,
};
use charkit::fourier::{fourier_matrix, load_family_dataset};
use charkit::groups::{character_table, parse_group, FiniteGroup, Perm};
use charkit::hecke::{
    braid_relations_hold, build_irrep_model, hecke_trace, load_coxeter_traces,
    quadratic_relations_hold, supported_labels, t_multiply, HeckeElement, HeckeError,
};
use charkit::sandbox::{build_sandbox, heckeuch_report, verify_cell_products};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn fourier_involution() -> Outcome {
    let start = Instant::now();
    for name in ["Z1", "Z2", "Z3", "Z4", "Z6", "S3", "S4", "S5"] {
        let g = parse_group(name).map_err(|e| e.to_string())?;
        // Construction itself rejects non-hermitian or non-involutive
        // matrices; the checks are repeated here.
        let fm = fourier_matrix(&g).map_err(|e| format!("{name}: {e}"))?;
        ensure(fm.is_hermitian() && fm.is_involution(), || format!("{name}"))?;
    }
    within(start, Duration::from_secs(10))
}

fn integer_rows(name: &str, types: &[Vec<usize>]) -> Result<BTreeSet<Vec<i64>>, String> {
    let g = parse_group(name).map_err(|e| e.to_string())?;
    let t = character_table(&g).map_err(|e| e.to_string())?;
    let cycle_type = |i: usize| {
        let p = g.element(i);
        let mut seen = vec![false; p.degree()];
        let mut ty = Vec::new();
        for s in 0..p.degree() {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = p.apply(x);
                len += 1;
            }
            if len > 0 {
                ty.push(len);
            }
        }
        ty.sort_unstable_by(|a, b| b.cmp(a));
        ty
    };
    let cols: Vec<Vec<usize>> = t.class_reps.iter().map(|&r| cycle_type(r)).collect();
    let perm: Vec<usize> = types
        .iter()
        .map(|ty| cols.iter().position(|c| c == ty).ok_or(format!("{name}: no class {ty:?}")))
        .collect::<Result<_, _>>()?;
    t.rows
        .iter()
        .map(|row| {
            perm.iter()
                .map(|&k| {
                    row[k]
                        .as_rational()
                        .and_then(|r| i64::try_from(r.to_integer()).ok())
                        .ok_or(format!("{name}: non-integer value"))
                })
                .collect()
        })
        .collect()
}

fn character_tables() -> Outcome {
    let groups = ["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "S3", "S4", "S5", "D4", "Q8"];
    for name in groups {
        let g = parse_group(name).map_err(|e| e.to_string())?;
        let t = character_table(&g).map_err(|e| format!("{name}: {e}"))?;
        ensure(t.rows_orthogonal() && t.columns_orthogonal(), || format!("{name}"))?;
    }
    let set = |rows: &[&[i64]]| rows.iter().map(|r| r.to_vec()).collect::<BTreeSet<_>>();
    let s3 = set(&[&[1, 1, 1], &[1, -1, 1], &[2, 0, -1]]);
    ensure(integer_rows("S3", &[vec![1, 1, 1], vec![2, 1], vec![3]])? == s3, || "S3".into())?;
    let s4 = set(&[
        &[1, 1, 1, 1, 1],
        &[1, -1, 1, 1, -1],
        &[2, 0, 2, -1, 0],
        &[3, 1, -1, 0, -1],
        &[3, -1, -1, 0, 1],
    ]);
    let t4 = [vec![1, 1, 1, 1], vec![2, 1, 1], vec![2, 2], vec![3, 1], vec![4]];
    ensure(integer_rows("S4", &t4)? == s4, || "S4".into())?;
    let s5 = set(&[
        &[1, 1, 1, 1, 1, 1, 1],
        &[1, -1, 1, 1, -1, -1, 1],
        &[4, 2, 0, 1, -1, 0, -1],
        &[4, -2, 0, 1, 1, 0, -1],
        &[5, 1, 1, -1, 1, -1, 0],
        &[5, -1, 1, -1, -1, 1, 0],
        &[6, 0, -2, 0, 0, 0, 1],
    ]);
    let t5 = [
        vec![1, 1, 1, 1, 1],
        vec![2, 1, 1, 1],
        vec![2, 2, 1],
        vec![3, 1, 1],
        vec![3, 2],
        vec![4, 1],
        vec![5],
    ];
    ensure(integer_rows("S5", &t5)? == s5, || "S5".into())?;
    Ok(format!("{} groups", groups.len()))
}

fn random_element(rs: &Arc<RootSystem>, rng: &mut StdRng) -> HeckeElement {
    let mut acc = HeckeElement::zero(rs);
    let mut w = rs.identity();
    for _ in 0..rng.gen_range(0..8) {
        w = rs.mul_simple_right(&w, rng.gen_range(0..rs.rank()));
        if rng.gen_bool(0.6) {
            let c = CycNum::from_integer(rng.gen_range(-3..=3));
            let term = HeckeElement::term(rs, w.clone(), LaurentPoly::monomial(c, rng.gen_range(-2..=3)));
            acc = acc.add(&term).unwrap();
        }
    }
    acc
}

fn hecke_relations() -> Outcome {
    let start = Instant::now();
    let mut models = 0;
    for t in ["A2", "A3", "A4", "A5", "B2", "G2"] {
        let rs = RootSystem::from_type(t).map_err(|e| e.to_string())?;
        for label in supported_labels(&rs) {
            let m = build_irrep_model(&rs, &label).map_err(|e| e.to_string())?;
            ensure(quadratic_relations_hold(&m) && braid_relations_hold(&m), || {
                format!("{t} {label}")
            })?;
            models += 1;
        }
    }
    let types = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "B4", "D4", "F4", "G2", "A1xA2"];
    let systems: Vec<Arc<RootSystem>> =
        types.iter().map(|t| Arc::new(RootSystem::from_type(t).unwrap())).collect();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for i in 0..1000 {
        let rs = &systems[i % systems.len()];
        let e: Vec<HeckeElement> = (0..3).map(|_| random_element(rs, &mut rng)).collect();
        let l = t_multiply(&t_multiply(&e[0], &e[1]).unwrap(), &e[2]).unwrap();
        let r = t_multiply(&e[0], &t_multiply(&e[1], &e[2]).unwrap()).unwrap();
        ensure(l == r, || format!("triple {i} in {}", types[i % types.len()]))?;
    }
    Ok(format!("{models} models, 1000 triples, {}", within(start, Duration::from_secs(60))?))
}

fn weyl_group(rs: &RootSystem) -> FiniteGroup {
    let gens: Vec<Perm> = (0..rs.rank())
        .map(|s| Perm(rs.simple_reflection(s).unwrap().perm().iter().map(|&x| x as u32).collect()))
        .collect();
    FiniteGroup::enumerate(&rs.datum.type_label, &gens, 100_000).unwrap()
}

fn tits_specialization() -> Outcome {
    for t in ["A2", "A3", "B2", "G2"] {
        let rs = RootSystem::from_type(t).map_err(|e| e.to_string())?;
        let g = weyl_group(&rs);
        let table = character_table(&g).map_err(|e| e.to_string())?;
        let reps: Vec<WeylElement> = table
            .class_reps
            .iter()
            .map(|&i| rs.element_from_perm(g.element(i).0.iter().map(|&x| x as u16).collect()).unwrap())
            .collect();
        let mut rows = BTreeSet::new();
        for label in supported_labels(&rs) {
            let m = build_irrep_model(&rs, &label).map_err(|e| e.to_string())?;
            let values: Vec<CycNum> =
                reps.iter().map(|w| hecke_trace(&rs, &m, w).unwrap().eval_at_one()).collect();
            let row = table.rows.iter().position(|r| *r == values);
            let row = row.ok_or(format!("{t} {label}: no matching character"))?;
            ensure(rows.insert(row), || format!("{t} {label}: repeated character"))?;
        }
        ensure(rows.len() == table.rows.len(), || format!("{t}: missing characters"))?;
    }
    Ok("S3, S4, W(B2), W(G2)".into())
}

const SANDBOXES: [(usize, u8); 4] = [(2, 2), (2, 3), (2, 4), (3, 2)];

fn sandbox_heckeuch() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for (n, q) in SANDBOXES {
        let sb = build_sandbox(n, q).map_err(|e| e.to_string())?;
        let rep = heckeuch_report(&sb).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || format!("GL{n}(F{q}): {:?}", rep.failures))?;
        cases += rep.cases;
    }
    Ok(format!("{cases} cases, {}", within(start, Duration::from_secs(120))?))
}

fn bruhat_structure() -> Outcome {
    let mut cases = 0;
    for (n, q) in SANDBOXES {
        let sb = build_sandbox(n, q).map_err(|e| e.to_string())?;
        let rep = verify_cell_products(&sb);
        ensure(rep.passed(), || format!("GL{n}(F{q}): {:?}", rep.failures))?;
        cases += rep.cases;
    }
    Ok(format!("{cases} cases"))
}

fn coxeter_conjugation() -> Outcome {
    let start = Instant::now();
    let rs = RootSystem::from_type("E7").map_err(|e| e.to_string())?;
    let source: Vec<usize> = (0..7).collect();
    let c = rs.coxeter_element(&source).unwrap();
    let mut target = source.clone();
    let mut count = 0;
    // Heap's algorithm over all orderings.
    let mut stack = vec![0usize; 7];
    let check = |t: &[usize]| -> Result<(), String> {
        let cert = coxeter_conjugator(&rs, &source, t).map_err(|e| e.to_string())?;
        let (word, _) = replay_moves(&rs, &source, &cert.moves).map_err(|e| e.to_string())?;
        let u = rs.element_from_word(&cert.word).unwrap();
        let ok = cert.verified
            && word == t
            && rs.conjugate(&u, &c) == rs.coxeter_element(t).unwrap();
        ensure(ok, || format!("ordering {t:?}"))
    };
    check(&target)?;
    count += 1;
    let mut i = 0;
    while i < 7 {
        if stack[i] < i {
            if i % 2 == 0 {
                target.swap(0, i);
            } else {
                target.swap(stack[i], i);
            }
            check(&target)?;
            count += 1;
            stack[i] += 1;
            i = 0;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    ensure(count == 5040, || format!("{count} orderings"))?;
    Ok(format!("{count} orderings, {}", within(start, Duration::from_secs(30))?))
}

fn e7_structure() -> Outcome {
    let rs = RootSystem::from_type("E7").map_err(|e| e.to_string())?;
    ensure(rs.num_positive() == 63, || format!("{} positive roots", rs.num_positive()))?;
    ensure(rs.group_order() == 2_903_040, || format!("|W| = {}", rs.group_order()))?;
    let w0 = rs.longest_element(&(0..7).collect::<Vec<_>>()).unwrap();
    ensure(w0.length() == 63, || format!("l(w0) = {}", w0.length()))?;
    ensure((0..7).all(|i| rs.negate(w0.perm()[i] as usize) == i), || "-w0 moves a simple root".into())?;
    let gens: Vec<WeylElement> = rs
        .relative_weyl_generators(&[1, 2, 3, 4])
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|(_, w)| w)
        .collect();
    let order = rs.generate_subgroup(&gens, 1000).map_err(|e| e.to_string())?.len();
    ensure(order == 48, || format!("relative Weyl group of order {order}"))?;
    Ok("63 roots, |W| = 2903040, l(w0) = 63, |W(L)| = 48".into())
}

fn data_path(file: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(file)
}

fn sign_determination() -> Outcome {
    let t = load_coxeter_traces(data_path("e7_coxeter_traces.json")).map_err(|e| e.to_string())?;
    let f = load_family_dataset(data_path("e7_families.json")).map_err(|e| e.to_string())?;
    let s = solve_signs(&t, &f).map_err(|e| e.to_string())?;
    ensure(s.xi == 1 && s.admissible_delta == [1, -1], || format!("{s:?}"))?;
    match solve_signs_with(&t, &f, SignAxioms { positivity: false }) {
        Err(E7Error::AmbiguousSign { .. }) => Ok("xi = +1, delta in {1, -1}".into()),
        other => Err(format!("without positivity: {other:?}")),
    }
}

fn final_table() -> Outcome {
    let f = load_family_dataset(data_path("e7_families.json")).map_err(|e| e.to_string())?;
    let t = final_value_table(&f, 1).map_err(|e| e.to_string())?;
    let (one, z, zero) = (CycNum::one(), zeta(4, 1), CycNum::zero());
    let want = [
        ("phi_512_11", [one.clone(), zero.clone(), -&one, zero.clone()]),
        ("phi_512_12", [-&one, zero.clone(), one.clone(), zero.clone()]),
        ("E7[z4]", [zero.clone(), -&z, zero.clone(), z.clone()]),
        ("E7[-z4]", [zero.clone(), z.clone(), zero.clone(), -&z]),
    ];
    let mut equal = 0;
    for (row, vals) in want {
        for (class, c) in ["u0", "u_a0", "u_a0^2", "u_a0^3"].iter().zip(vals) {
            let got = t.get(row, class);
            ensure(got == Some(&LaurentPoly::monomial(c, 7)), || format!("{row} at {class}: {got:?}"))?;
            equal += 1;
        }
    }
    let model = regular_class_model().map_err(|e| e.to_string())?;
    let chi = chi_cuspidal_table(&model).map_err(|e| e.to_string())?;
    let r = recover_almost_characters(&f, &t).map_err(|e| e.to_string())?;
    for class in &model.class_labels {
        ensure(
            r.get("R_x1", class) == chi.get(CHI_A1, class) && r.get("R_x2", class) == chi.get(CHI_A2, class),
            || format!("round trip differs at {class}"),
        )?;
    }
    Ok(format!("{equal} entries, round trip exact"))
}

fn dataset_integrity() -> Outcome {
    let t = load_coxeter_traces(data_path("e7_coxeter_traces.json")).map_err(|e| e.to_string())?;
    let comb = t.combination_56_35_21().map_err(|e| e.to_string())?;
    ensure(comb == LaurentPoly::q_pow(5).scale(&CycNum::from_integer(2)), || format!("{comb}"))?;
    let diff = t.difference_512().map_err(|e| e.to_string())?;
    ensure(diff == LaurentPoly::monomial(CycNum::from_integer(2), 7), || format!("{diff}"))?;
    // Exchange the 512 pair's traces and Coxeter values.
    let mut v: serde_json::Value = serde_json::from_str(BUNDLED_TRACES).unwrap();
    for section in ["traces", "characters"] {
        let (a, b) = ("phi_512_11", "phi_512_12");
        if section == "traces" {
            let x = v[section][a].take();
            v[section][a] = v[section][b].take();
            v[section][b] = x;
        } else {
            let x = v[section][a]["coxeter_value"].take();
            v[section][a]["coxeter_value"] = v[section][b]["coxeter_value"].take();
            v[section][b]["coxeter_value"] = x;
        }
    }
    let path = std::env::temp_dir().join(format!("charkit-mutated-{}.json", std::process::id()));
    std::fs::write(&path, v.to_string()).map_err(|e| e.to_string())?;
    let res = load_coxeter_traces(&path);
    let _ = std::fs::remove_file(&path);
    match res {
        Err(HeckeError::ConsistencyError { constraint, .. }) => {
            Ok(format!("2q^5 and 2v^7 enforced; mutation rejected by {constraint}"))
        }
        other => Err(format!("mutated dataset: {other:?}")),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("Fourier involution", fourier_involution),
        ("Character tables", character_tables),
        ("Hecke relations", hecke_relations),
        ("Tits specialization", tits_specialization),
        ("Sandbox trace identity", sandbox_heckeuch),
        ("Bruhat structure", bruhat_structure),
        ("Coxeter conjugation", coxeter_conjugation),
        ("E7 structure", e7_structure),
        ("Sign determination", sign_determination),
        ("Final table", final_table),
        ("Trace dataset integrity", dataset_integrity),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(f) {
            Ok(Ok(detail)) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
            Err(_) => {
                failed += 1;
                println!("FAIL {:>2} {name}: panicked", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
