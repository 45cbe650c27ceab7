//! Exhaustive checks of the Bruhat decomposition, the convolution Hecke
//! algebra and the trace identity
//! `Σ_φ ρ_φ(g)·Tr(T_w, V_φ) = |O_g ∩ BẇB|·|C_G(g)|/|B|`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::group::LieGroupSandbox;
use super::SandboxError;
use crate::arith::laurent_specialize;
use crate::hecke::{build_irrep_model, hecke_trace, partition_label};

/// Result of one family of checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    pub q: u8,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(check: &str, sb: &LieGroupSandbox) -> Self {
        CheckReport {
            check: check.to_string(),
            n: sb.n,
            q: sb.q,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Bits = Vec<bool>;

fn to_bits(sb: &LieGroupSandbox, xs: &[usize]) -> Bits {
    let mut b = vec![false; sb.order()];
    for &x in xs {
        b[x] = true;
    }
    b
}

/// `X·Y` for `X` a union of left `B`-cosets and `B·Y = Y`: one
/// representative per coset of `X` suffices.
fn product_set(sb: &LieGroupSandbox, x: &Bits, y: &[usize]) -> Bits {
    let mut seen = vec![false; sb.order()];
    let mut out = vec![false; sb.order()];
    for a in (0..sb.order()).filter(|&a| x[a]) {
        if seen[a] {
            continue;
        }
        for &b in &sb.borel {
            seen[sb.mul(a, b)] = true;
        }
        for &c in y {
            out[sb.mul(a, c)] = true;
        }
    }
    out
}

/// All reduced words of a Weyl element.
fn reduced_words(sb: &LieGroupSandbox, w: usize) -> Vec<Vec<usize>> {
    let rs = &sb.root_system;
    let el = &sb.weyl[w];
    if el.is_identity() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for s in 0..rs.rank() {
        if rs.is_left_descent(el, s) {
            let rest = sb.weyl_index(&rs.mul_simple_left(s, el)).unwrap();
            for mut tail in reduced_words(sb, rest) {
                tail.insert(0, s);
                out.push(tail);
            }
        }
    }
    out
}

/// Partition, cell sizes `|B|·q^{ℓ(w)}`, `BẇB` as a set product, and the
/// cell products along every reduced word.
pub fn verify_cell_products(sb: &LieGroupSandbox) -> CheckReport {
    let mut rep = CheckReport::new("cells", sb);
    let cells: Vec<Vec<usize>> = (0..sb.weyl.len()).map(|w| sb.cell(w)).collect();
    let b = sb.borel_order();
    let total: usize = cells.iter().map(Vec::len).sum();
    rep.expect(total == sb.order(), || {
        format!("cells cover {total} of {} elements", sb.order())
    });
    for (w, cell) in cells.iter().enumerate() {
        let ell = sb.weyl[w].length() as u32;
        let want = b * (sb.q as usize).pow(ell);
        rep.expect(cell.len() == want, || {
            format!(
                "|BwB| = {} for w = {:?}, expected {want}",
                cell.len(),
                sb.weyl_perms[w]
            )
        });
        // BẇB = B·ẇ·B computed directly.
        let mut bwb = vec![false; sb.order()];
        for &b1 in &sb.borel {
            let bw = sb.mul(b1, sb.weyl_reps[w]);
            for &b2 in &sb.borel {
                bwb[sb.mul(bw, b2)] = true;
            }
        }
        rep.expect(bwb == to_bits(sb, cell), || {
            format!(
                "B·w·B differs from the labelled cell for w = {:?}",
                sb.weyl_perms[w]
            )
        });
    }
    let generator_cell = |s: usize| {
        let ws = sb.root_system.simple_reflection(s).unwrap();
        &cells[sb.weyl_index(&ws).unwrap()]
    };
    for (w, cell) in cells.iter().enumerate() {
        let target = to_bits(sb, cell);
        for word in reduced_words(sb, w) {
            let mut acc = to_bits(sb, &sb.borel);
            for &s in &word {
                acc = product_set(sb, &acc, generator_cell(s));
            }
            rep.expect(acc == target, || {
                format!("cell product along {word:?} is not BwB")
            });
        }
    }
    for s in 0..sb.root_system.rank() {
        let c = generator_cell(s);
        let sq = product_set(sb, &to_bits(sb, c), c);
        let mut want = to_bits(sb, c);
        for &x in &sb.borel {
            want[x] = true;
        }
        rep.expect(sq == want, || {
            format!("BsB·BsB ≠ B ∪ BsB for s = {}", s + 1)
        });
    }
    rep
}

/// The operators `T_w : xB ↦ Σ_{x⁻¹y ∈ BẇB} yB` on `Q[G/B]`.
#[derive(Clone, Debug)]
pub struct ConvolutionAlgebra {
    pub cosets: usize,
    /// `ops[w][y][x] = 1` when `x⁻¹y ∈ BẇB`.
    pub ops: Vec<Vec<Vec<i64>>>,
}

pub fn convolution_operators(sb: &LieGroupSandbox) -> ConvolutionAlgebra {
    let mut coset_of = vec![usize::MAX; sb.order()];
    let mut reps = Vec::new();
    for g in 0..sb.order() {
        if coset_of[g] != usize::MAX {
            continue;
        }
        for &b in &sb.borel {
            coset_of[sb.mul(g, b)] = reps.len();
        }
        reps.push(g);
    }
    let m = reps.len();
    let mut ops = vec![vec![vec![0i64; m]; m]; sb.weyl.len()];
    for (x, &gx) in reps.iter().enumerate() {
        let xi = sb.inv(gx);
        for (y, &gy) in reps.iter().enumerate() {
            let w = sb.cell_label[sb.mul(xi, gy)] as usize;
            ops[w][y][x] = 1;
        }
    }
    ConvolutionAlgebra { cosets: m, ops }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

/// `T_s·T_w` is the operator "apply `T_s`, then `T_w`"; it must follow the
/// multiplication rule with the numeric `q`, and the braid relations.
pub fn convolution_hecke_check(sb: &LieGroupSandbox) -> CheckReport {
    let mut rep = CheckReport::new("hecke", sb);
    let alg = convolution_operators(sb);
    let q = sb.q as i64;
    let rs = &sb.root_system;
    let id: Vec<Vec<i64>> = (0..alg.cosets)
        .map(|i| (0..alg.cosets).map(|j| i64::from(i == j)).collect())
        .collect();
    rep.expect(alg.ops[0] == id, || "T_e is not the identity".into());
    for s in 0..rs.rank() {
        let ws = sb.weyl_index(&rs.simple_reflection(s).unwrap()).unwrap();
        for w in 0..sb.weyl.len() {
            let sw_el = rs.mul_simple_left(s, &sb.weyl[w]);
            let sw = sb.weyl_index(&sw_el).unwrap();
            let prod = mat_mul(&alg.ops[w], &alg.ops[ws]);
            let want: Vec<Vec<i64>> = if sw_el.length() > sb.weyl[w].length() {
                alg.ops[sw].clone()
            } else {
                (0..alg.cosets)
                    .map(|i| {
                        (0..alg.cosets)
                            .map(|j| q * alg.ops[sw][i][j] + (q - 1) * alg.ops[w][i][j])
                            .collect()
                    })
                    .collect()
            };
            rep.expect(prod == want, || {
                format!(
                    "T_s·T_w rule fails for s = {}, w = {:?}",
                    s + 1,
                    sb.weyl_perms[w]
                )
            });
        }
    }
    for s in 0..rs.rank() {
        for t in s + 1..rs.rank() {
            let m = rs.datum.coxeter_m(s, t) as usize;
            let op = |g: usize| {
                let e = rs.simple_reflection(g).unwrap();
                &alg.ops[sb.weyl_index(&e).unwrap()]
            };
            let alt = |a: usize, b: usize| {
                let mut acc = id.clone();
                for k in 0..m {
                    acc = mat_mul(&acc, op(if k % 2 == 0 { a } else { b }));
                }
                acc
            };
            rep.expect(alt(s, t) == alt(t, s), || {
                format!("braid relation fails for s{}, s{}", s + 1, t + 1)
            });
        }
    }
    rep
}

/// Unipotent principal-series character values on every conjugacy class.
#[derive(Clone, Debug)]
pub struct SandboxCharTable {
    /// Partition labels `[n]`, …, `[1^n]`; `[n]` is the trivial character
    /// and `[1^n]` the Steinberg character.
    pub labels: Vec<String>,
    /// `values[φ][class]`.
    pub values: Vec<Vec<i64>>,
    /// Permutation character of `G` on `G/B`.
    pub permutation: Vec<i64>,
    pub steinberg: Vec<i64>,
}

/// `|O_c ∩ BẇB|` for every class `c` and Weyl index `w`.
pub fn class_cell_counts(sb: &LieGroupSandbox) -> Vec<Vec<usize>> {
    let mut counts = vec![vec![0usize; sb.weyl.len()]; sb.classes.len()];
    for g in 0..sb.order() {
        counts[sb.class_of[g] as usize][sb.cell_label[g] as usize] += 1;
    }
    counts
}

/// `Ind_{P_J}^G 1` at each class: `|C(g)|·|O_g ∩ P_J|/|P_J|`.
fn parabolic_permutation_character(
    sb: &LieGroupSandbox,
    counts: &[Vec<usize>],
    j: &[usize],
) -> Vec<i64> {
    let rs = &sb.root_system;
    let in_wj: Vec<bool> = sb
        .weyl
        .iter()
        .map(|w| rs.reduced_word(w).iter().all(|s| j.contains(s)))
        .collect();
    let size_wj: usize = (0..sb.weyl.len())
        .filter(|&w| in_wj[w])
        .map(|w| sb.cell(w).len())
        .sum();
    (0..sb.classes.len())
        .map(|c| {
            let meet: usize = (0..sb.weyl.len())
                .filter(|&w| in_wj[w])
                .map(|w| counts[c][w])
                .sum();
            let num = sb.centralizer_order(c) * meet;
            debug_assert_eq!(num % size_wj, 0);
            (num / size_wj) as i64
        })
        .collect()
}

/// Steinberg by the alternating sum over parabolic subgroups; the middle
/// constituent of `GL_3` as `(π − 1 − St)/2`.
pub fn sandbox_char_table(sb: &LieGroupSandbox) -> Result<SandboxCharTable, SandboxError> {
    let counts = class_cell_counts(sb);
    let rank = sb.root_system.rank();
    let k = sb.classes.len();
    let mut steinberg = vec![0i64; k];
    for mask in 0u32..(1 << rank) {
        let j: Vec<usize> = (0..rank).filter(|&s| mask >> s & 1 == 1).collect();
        let sign = if j.len() % 2 == 0 { 1 } else { -1 };
        let pi = parabolic_permutation_character(sb, &counts, &j);
        for c in 0..k {
            steinberg[c] += sign * pi[c];
        }
    }
    let permutation = parabolic_permutation_character(sb, &counts, &[]);
    let trivial = vec![1i64; k];
    let (labels, values) = match sb.n {
        2 => (
            vec![partition_label(&[2]), partition_label(&[1, 1])],
            vec![trivial, steinberg.clone()],
        ),
        3 => {
            let mut middle = Vec::with_capacity(k);
            for c in 0..k {
                let twice = permutation[c] - 1 - steinberg[c];
                if twice % 2 != 0 {
                    return Err(SandboxError::NonIntegerCharacter(format!(
                        "(π − 1 − St)/2 = {twice}/2 at class {c}"
                    )));
                }
                middle.push(twice / 2);
            }
            (
                vec![
                    partition_label(&[3]),
                    partition_label(&[2, 1]),
                    partition_label(&[1, 1, 1]),
                ],
                vec![trivial, middle, steinberg.clone()],
            )
        }
        n => return Err(SandboxError::SizeCapExceeded(format!("n = {n}"))),
    };
    Ok(SandboxCharTable {
        labels,
        values,
        permutation,
        steinberg,
    })
}

impl SandboxCharTable {
    /// `π = Σ_φ φ(1)·ρ_φ` as class functions.
    pub fn permutation_decomposes(&self, sb: &LieGroupSandbox) -> bool {
        let rs = &sb.root_system;
        let degrees: Vec<i64> = self
            .labels
            .iter()
            .map(|l| build_irrep_model(rs, l).map(|m| m.dim as i64).unwrap_or(0))
            .collect();
        (0..self.permutation.len()).all(|c| {
            let s: i64 = degrees
                .iter()
                .zip(&self.values)
                .map(|(d, row)| d * row[c])
                .sum();
            s == self.permutation[c]
        })
    }
}

/// `Tr(T_w, V_φ)` at `v = √q` for every label and Weyl index.
pub fn specialized_traces(
    sb: &LieGroupSandbox,
    labels: &[String],
) -> Result<Vec<Vec<i64>>, SandboxError> {
    let rs = &sb.root_system;
    let mut out = Vec::with_capacity(labels.len());
    for label in labels {
        let model = build_irrep_model(rs, label)?;
        let mut row = Vec::with_capacity(sb.weyl.len());
        for w in &sb.weyl {
            let tr = hecke_trace(rs, &model, w)?;
            let val = laurent_specialize(&tr, sb.field.p as u32, sb.field.fexp)?;
            let r = val
                .is_rational()
                .then(|| val.rational.as_rational())
                .flatten()
                .filter(|r| r.is_integer())
                .ok_or_else(|| {
                    SandboxError::NonIntegerCharacter(format!("Tr(T_w, {label}) = {tr} at q"))
                })?;
            row.push(r.to_integer().try_into().expect("trace fits in i64"));
        }
        out.push(row);
    }
    Ok(out)
}

/// One evaluation of the trace identity; `lhs` and `rhs` are scaled by
/// `|B|` so both are integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeckeUchCase {
    pub class: usize,
    /// 1-based reduced word of `w`.
    pub w: Vec<usize>,
    pub lhs_times_b: i64,
    pub rhs_times_b: i64,
    pub equal: bool,
}

/// Precomputed data for repeated identity checks.
pub struct HeckeUchData {
    pub table: SandboxCharTable,
    pub traces: Vec<Vec<i64>>,
    pub counts: Vec<Vec<usize>>,
}

impl HeckeUchData {
    pub fn new(sb: &LieGroupSandbox) -> Result<Self, SandboxError> {
        let table = sandbox_char_table(sb)?;
        let traces = specialized_traces(sb, &table.labels)?;
        Ok(HeckeUchData {
            table,
            traces,
            counts: class_cell_counts(sb),
        })
    }

    pub fn case(&self, sb: &LieGroupSandbox, class: usize, w: usize) -> HeckeUchCase {
        let lhs = (self.counts[class][w] * sb.centralizer_order(class)) as i64;
        let rhs: i64 = (0..self.table.labels.len())
            .map(|phi| self.table.values[phi][class] * self.traces[phi][w])
            .sum::<i64>()
            * sb.borel_order() as i64;
        HeckeUchCase {
            class,
            w: sb
                .root_system
                .reduced_word(&sb.weyl[w])
                .iter()
                .map(|s| s + 1)
                .collect(),
            lhs_times_b: lhs,
            rhs_times_b: rhs,
            equal: lhs == rhs,
        }
    }
}

/// The identity at element `g` and Weyl index `w`.
pub fn heckeuch_verify(
    sb: &LieGroupSandbox,
    g: usize,
    w: usize,
) -> Result<HeckeUchCase, SandboxError> {
    let data = HeckeUchData::new(sb)?;
    Ok(data.case(sb, sb.class_of[g] as usize, w))
}

/// The identity for every conjugacy class (hence every element) and every
/// Weyl element.
pub fn heckeuch_report(sb: &LieGroupSandbox) -> Result<CheckReport, SandboxError> {
    let data = HeckeUchData::new(sb)?;
    let mut rep = CheckReport::new("heckeuch", sb);
    for c in 0..sb.classes.len() {
        for w in 0..sb.weyl.len() {
            let case = data.case(sb, c, w);
            rep.expect(case.equal, || {
                format!(
                    "class of {} with w = {:?}: |B|·lhs = {}, |B|·rhs = {}",
                    sb.format_matrix(sb.classes[c][0]),
                    case.w,
                    case.lhs_times_b,
                    case.rhs_times_b
                )
            });
        }
    }
    Ok(rep)
}

/// Unipotent class sizes and character values, for reports.
pub fn unipotent_summary(sb: &LieGroupSandbox) -> Result<BTreeMap<String, Vec<i64>>, SandboxError> {
    let t = sandbox_char_table(sb)?;
    let uni: Vec<usize> = (0..sb.classes.len())
        .filter(|&c| sb.is_unipotent(sb.classes[c][0]))
        .collect();
    let mut out = BTreeMap::new();
    out.insert(
        "class_sizes".to_string(),
        uni.iter().map(|&c| sb.classes[c].len() as i64).collect(),
    );
    for (label, row) in t.labels.iter().zip(&t.values) {
        out.insert(label.clone(), uni.iter().map(|&c| row[c]).collect());
    }
    Ok(out)
}
