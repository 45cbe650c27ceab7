use charkit::sandbox::{
    build_sandbox, convolution_hecke_check, convolution_operators, heckeuch_report,
    heckeuch_verify, sandbox_char_table, verify_cell_products,
};

const SMALL: [(usize, u8); 4] = [(2, 2), (2, 3), (2, 4), (3, 2)];

#[test]
fn group_and_borel_orders() {
    for (n, q) in SMALL {
        let sb = build_sandbox(n, q).unwrap();
        let qq = q as usize;
        let g: usize = (0..n)
            .map(|i| qq.pow(n as u32) - qq.pow(i as u32))
            .product();
        let b = (qq - 1).pow(n as u32) * qq.pow((n * (n - 1) / 2) as u32);
        assert_eq!(sb.order(), g);
        assert_eq!(sb.borel_order(), b);
        assert_eq!(sb.torus.len(), (qq - 1).pow(n as u32));
    }
}

#[test]
fn bruhat_structure_holds() {
    for (n, q) in SMALL {
        let sb = build_sandbox(n, q).unwrap();
        let rep = verify_cell_products(&sb);
        assert!(rep.passed(), "GL{n}(F{q}): {:?}", rep.failures);
    }
}

#[test]
fn convolution_algebra_follows_the_multiplication_rule() {
    for (n, q) in SMALL {
        let sb = build_sandbox(n, q).unwrap();
        let rep = convolution_hecke_check(&sb);
        assert!(rep.passed(), "GL{n}(F{q}): {:?}", rep.failures);
    }
    // T_s∘T_s = 3·T_e + 2·T_s for GL2(F3).
    let sb = build_sandbox(2, 3).unwrap();
    let alg = convolution_operators(&sb);
    let s = &alg.ops[1];
    for i in 0..alg.cosets {
        for j in 0..alg.cosets {
            let sq: i64 = (0..alg.cosets).map(|k| s[i][k] * s[k][j]).sum();
            assert_eq!(sq, 3 * i64::from(i == j) + 2 * s[i][j]);
        }
    }
}

#[test]
fn steinberg_at_regular_unipotent_counts_fixed_borels() {
    let sb = build_sandbox(2, 3).unwrap();
    let t = sandbox_char_table(&sb).unwrap();
    let u = sb.regular_unipotent();
    let c = sb.class_of[u] as usize;
    // St(u) = #{fixed Borel subgroups} − 1, and u fixes exactly one line.
    assert_eq!(t.permutation[c], 1);
    assert_eq!(t.steinberg[c], 0);
    assert!(t.permutation_decomposes(&sb));
    // Degree of St is q^{N}.
    assert_eq!(t.steinberg[sb.class_of[sb.identity()] as usize], 3);
}

#[test]
fn trace_identity_holds_everywhere() {
    for (n, q) in SMALL {
        let sb = build_sandbox(n, q).unwrap();
        let rep = heckeuch_report(&sb).unwrap();
        assert_eq!(rep.cases, sb.classes.len() * sb.weyl.len());
        assert!(rep.passed(), "GL{n}(F{q}): {:?}", rep.failures);
    }
}

#[test]
fn trace_identity_examples() {
    let sb = build_sandbox(2, 3).unwrap();
    // g = 1, w = e: both sides are |G/B|.
    let one = heckeuch_verify(&sb, sb.identity(), 0).unwrap();
    assert!(one.equal);
    assert_eq!(one.lhs_times_b as usize, sb.order());
    // Regular unipotent, w = s: q·1 + St(u)·(−1) = 3.
    let u = heckeuch_verify(&sb, sb.regular_unipotent(), 1).unwrap();
    assert!(u.equal);
    assert_eq!(u.rhs_times_b, 3 * sb.borel_order() as i64);
}

#[test]
fn unipotent_classes_of_gl3_f2() {
    let sb = build_sandbox(3, 2).unwrap();
    let uni: Vec<usize> = (0..sb.classes.len())
        .filter(|&c| sb.is_unipotent(sb.classes[c][0]))
        .collect();
    assert_eq!(uni.len(), 3);
    let rep = heckeuch_report(&sb).unwrap();
    assert!(rep.passed());
}

#[test]
fn regular_unipotent_is_conjugate_to_its_inverse() {
    for (n, q) in SMALL {
        let sb = build_sandbox(n, q).unwrap();
        let u = sb.regular_unipotent();
        assert_eq!(sb.class_of[u], sb.class_of[sb.inv(u)], "GL{n}(F{q})");
    }
}
