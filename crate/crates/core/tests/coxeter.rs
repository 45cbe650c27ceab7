use charkit::coxeter::{coxeter_conjugator, replay_moves, RootSystem};

fn orderings(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[test]
fn every_e7_coxeter_element_is_conjugate_to_the_standard_one() {
    let rs = RootSystem::from_type("E7").unwrap();
    let source: Vec<usize> = (0..7).collect();
    let c = rs.coxeter_element(&source).unwrap();
    let all = orderings(7);
    assert_eq!(all.len(), 5040);
    for target in &all {
        let cert = coxeter_conjugator(&rs, &source, target).unwrap();
        assert!(cert.verified, "{target:?}");
        let (word, u) = replay_moves(&rs, &source, &cert.moves).unwrap();
        assert_eq!(&word, target);
        assert_eq!(u, cert.word);
        // Independent check on root permutations.
        let u = rs.element_from_word(&cert.word).unwrap();
        assert_eq!(rs.conjugate(&u, &c), rs.coxeter_element(target).unwrap());
    }
}

#[test]
fn e7_structure() {
    let rs = RootSystem::from_type("E7").unwrap();
    assert_eq!(rs.num_positive(), 63);
    assert_eq!(rs.group_order(), 2_903_040);
    let all: Vec<usize> = (0..7).collect();
    let w0 = rs.longest_element(&all).unwrap();
    assert_eq!(w0.length(), 63);
    for i in 0..7 {
        assert_eq!(rs.negate(w0.perm()[i] as usize), i);
    }
    let d4 = [1, 2, 3, 4];
    let gens: Vec<_> = rs.relative_weyl_generators(&d4).unwrap().into_iter().map(|(_, w)| w).collect();
    assert_eq!(gens.len(), 3);
    assert_eq!(rs.generate_subgroup(&gens, 1000).unwrap().len(), 48);
}
