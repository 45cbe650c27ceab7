//! Values of the unipotent characters of the cuspidal family at the four
//! rational classes of regular unipotent elements of `E7(q)`, `q = 2^f`.

use std::collections::BTreeMap;

use num_traits::Signed;
use serde::Serialize;

use super::E7Error;
use crate::arith::{zeta, CycNum, LaurentPoly};
use crate::coxeter::{coxeter_conjugator, replay_moves, ConjugatorCertificate, RootSystem};
use crate::fourier::{
    Direction, Family, FamilyDataset, MemberKind, LABEL_21_6, LABEL_35_4, LABEL_512_11,
    LABEL_512_12, LABEL_56_3, LABEL_X1, LABEL_X2,
};
use crate::groups::{character_table, parse_group, FiniteGroup};
use crate::hecke::CoxeterTraceDataset;

pub const LABEL_TRIVIAL: &str = "phi_1_0";
pub const ELSEWHERE: &str = "elsewhere";
pub const CHI_A1: &str = "chi_A1";
pub const CHI_A2: &str = "chi_A2";

/// The regular unipotent classes `u_a`, `a ∈ A(u0) ≅ Z/4`.
#[derive(Clone, Debug)]
pub struct RegUnipModel {
    pub component_group: FiniteGroup,
    /// Element index of the generator `a0`.
    pub a0: usize,
    /// `class_labels[k]` names the class of `u_{a0^k}`.
    pub class_labels: Vec<String>,
    /// `class_elements[k]` is the element index of `a0^k`.
    pub class_elements: Vec<usize>,
    /// `u0 = u_{α_i}(1)` over this 0-based node sequence.
    pub u0_word: Vec<usize>,
    /// Frobenius on `A(u0)` as a map of element indices.
    pub frobenius: Vec<usize>,
    /// Moves taking the word of `u0` to its reversal, the word of `u0⁻¹`
    /// in characteristic 2.
    pub self_inverse: ConjugatorCertificate,
}

impl RegUnipModel {
    pub fn num_rational_classes(&self) -> usize {
        self.class_labels.len()
    }

    pub fn is_u0_self_inverse(&self) -> bool {
        self.self_inverse.verified
    }
}

fn model_error(msg: impl Into<String>) -> E7Error {
    E7Error::Derivation(msg.into())
}

/// Build the `Z/4` model and certify that `u0` is conjugate to `u0⁻¹`.
///
/// Commutations and rotations of the simple-reflection word apply verbatim
/// to the root-element word, since root elements of non-joined simple roots
/// commute; the certificate is therefore checked by replaying its moves.
pub fn regular_class_model() -> Result<RegUnipModel, E7Error> {
    let g = parse_group("Z4")?;
    let a0 = g
        .index_of(&g.generators[0])
        .ok_or_else(|| model_error("Z4 generator is not an element"))?;
    if g.order() != 4 || g.element_order(a0) != 4 {
        return Err(model_error("component group must be cyclic of order 4"));
    }
    let frobenius: Vec<usize> = (0..g.order()).collect();
    let cd = g.conjugacy_data();
    // F acts trivially, so every class is F-stable.
    let stable = cd
        .classes
        .iter()
        .filter(|c| {
            c.iter()
                .all(|&x| cd.class_of[frobenius[x]] == cd.class_of[c[0]])
        })
        .count();
    if stable != 4 {
        return Err(model_error(format!(
            "{stable} F-stable classes in A(u0), expected 4"
        )));
    }
    let class_elements: Vec<usize> = (0..4).map(|k| g.pow(a0, k)).collect();
    let class_labels = ["u0", "u_a0", "u_a0^2", "u_a0^3"]
        .map(str::to_string)
        .to_vec();

    let rs = RootSystem::from_type("E7")?;
    let u0_word: Vec<usize> = (0..rs.rank()).collect();
    let reversed: Vec<usize> = u0_word.iter().rev().copied().collect();
    let mut cert = coxeter_conjugator(&rs, &u0_word, &reversed)?;
    let (word, _) = replay_moves(&rs, &u0_word, &cert.moves)?;
    cert.verified &= word == reversed;
    if !cert.verified {
        return Err(model_error("u0 is not certified conjugate to its inverse"));
    }
    Ok(RegUnipModel {
        component_group: g,
        a0,
        class_labels,
        class_elements,
        u0_word,
        frobenius,
        self_inverse: cert,
    })
}

/// Class function values; `None` marks a value that is not determined.
#[derive(Clone, Debug, PartialEq)]
pub struct CharValueTable {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub entries: Vec<Vec<Option<LaurentPoly>>>,
}

impl CharValueTable {
    pub fn get(&self, row: &str, col: &str) -> Option<&LaurentPoly> {
        let i = self.row_labels.iter().position(|r| r == row)?;
        let j = self.col_labels.iter().position(|c| c == col)?;
        self.entries[i][j].as_ref()
    }

    pub fn row(&self, row: &str) -> Option<&[Option<LaurentPoly>]> {
        let i = self.row_labels.iter().position(|r| r == row)?;
        Some(&self.entries[i])
    }

    /// Apply `f` to every known entry.
    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        CharValueTable {
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|e| e.as_ref().map(&f)).collect())
                .collect(),
        }
    }

    /// Rows as label → column → rendered value, with `"unknown"` for gaps.
    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Out<'a> {
            columns: &'a [String],
            rows: BTreeMap<&'a str, BTreeMap<&'a str, String>>,
        }
        let rows = self
            .row_labels
            .iter()
            .zip(&self.entries)
            .map(|(r, es)| {
                let cells = self
                    .col_labels
                    .iter()
                    .zip(es)
                    .map(|(c, e)| {
                        let s = e
                            .as_ref()
                            .map_or_else(|| "unknown".to_string(), |p| p.to_string());
                        (c.as_str(), s)
                    })
                    .collect();
                (r.as_str(), cells)
            })
            .collect();
        serde_json::to_value(Out {
            columns: &self.col_labels,
            rows,
        })
        .expect("serializable")
    }
}

/// `χ_{A_i}` on `O_reg`: `v^7·σ_i(a)` at `u_a`, zero elsewhere, where `σ1`,
/// `σ2` are the characters of `A(u0)` with `σ_i(a0) = ±ζ4`.
pub fn chi_cuspidal_table(model: &RegUnipModel) -> Result<CharValueTable, E7Error> {
    let g = &model.component_group;
    let t = character_table(g)?;
    let col_of = |x: usize| {
        t.class_reps
            .iter()
            .position(|&r| r == x)
            .ok_or_else(|| model_error(format!("no class column for element {x}")))
    };
    let a0_col = col_of(model.a0)?;
    let sigma = |want: CycNum| {
        t.rows
            .iter()
            .position(|r| r[a0_col] == want)
            .ok_or_else(|| model_error(format!("no character of A(u0) takes {want} at a0")))
    };
    let rows = [sigma(zeta(4, 1))?, sigma(-zeta(4, 1))?];
    let v7 = LaurentPoly::v_pow(7);
    let mut entries = Vec::new();
    for &r in &rows {
        let mut row = vec![Some(LaurentPoly::zero())];
        for &x in &model.class_elements {
            row.push(Some(v7.scale(&t.rows[r][col_of(x)?])));
        }
        entries.push(row);
    }
    let mut col_labels = vec![ELSEWHERE.to_string()];
    col_labels.extend(model.class_labels.iter().cloned());
    Ok(CharValueTable {
        row_labels: vec![CHI_A1.to_string(), CHI_A2.to_string()],
        col_labels,
        entries,
    })
}

fn check_sign(s: i8) -> Result<CycNum, E7Error> {
    match s {
        1 | -1 => Ok(CycNum::from_integer(s.into())),
        _ => Err(E7Error::InvalidSign(s.into())),
    }
}

fn pinning(msg: impl Into<String>) -> E7Error {
    E7Error::PinningError(msg.into())
}

/// Almost-character values at one regular unipotent class.
///
/// `R_{1_W} = 1`; the other principal `R_φ` vanish on regular unipotent
/// elements; `R_{x1}`, `R_{x2}` and `R_{x0}` are given; every other
/// non-principal `R_x` is zero there.
#[derive(Clone, Debug)]
pub struct RegularValues {
    pub r_x1: LaurentPoly,
    pub r_x2: LaurentPoly,
    pub r_x0: LaurentPoly,
}

fn family_r_values(
    fam: &FamilyDataset,
    family: &Family,
    vals: &RegularValues,
) -> Result<BTreeMap<String, LaurentPoly>, E7Error> {
    let x0 = fam.x0_label()?;
    let mut r = BTreeMap::new();
    for pair in &fam.fourier_of(family).mpairs {
        let key = pair.to_string();
        let v = match family.member_at(pair) {
            Some(m) if m.label == LABEL_TRIVIAL => LaurentPoly::one(),
            Some(m) if m.label == LABEL_X1 => vals.r_x1.clone(),
            Some(m) if m.label == LABEL_X2 => vals.r_x2.clone(),
            Some(m) if m.label == x0 => vals.r_x0.clone(),
            _ => LaurentPoly::zero(),
        };
        r.insert(key, v);
    }
    Ok(r)
}

/// Unipotent character values at the class, for every member of every
/// family.
pub fn unipotent_values(
    fam: &FamilyDataset,
    vals: &RegularValues,
) -> Result<BTreeMap<String, LaurentPoly>, E7Error> {
    let mut out = BTreeMap::new();
    for family in &fam.families {
        let r = family_r_values(fam, family, vals)?;
        out.extend(fam.rho_from_r(family, &r)?);
    }
    Ok(out)
}

/// `Σ_φ ρ_φ(u)·Tr(T_{w_c}, V_φ)` over the principal series.
pub fn regular_class_sum(
    traces: &CoxeterTraceDataset,
    fam: &FamilyDataset,
    vals: &RegularValues,
) -> Result<LaurentPoly, E7Error> {
    let rho = unipotent_values(fam, vals)?;
    let mut sum = LaurentPoly::zero();
    for family in &fam.families {
        for m in family
            .members
            .iter()
            .filter(|m| m.kind == MemberKind::Principal)
        {
            sum = &sum + &(&rho[&m.label] * traces.trace(&m.label)?);
        }
    }
    Ok(sum)
}

fn column(table: &CharValueTable, class: &str) -> Result<(LaurentPoly, LaurentPoly), E7Error> {
    let get = |row| {
        table
            .get(row, class)
            .cloned()
            .ok_or_else(|| model_error(format!("{row} has no value at {class}")))
    };
    Ok((get(CHI_A1)?, get(CHI_A2)?))
}

/// `R_{x_i} = ξ·χ_{A_i}` at `class`, with the given `R_{x0}`.
fn regular_values(
    model: &RegUnipModel,
    xi: &CycNum,
    class: &str,
    r_x0: LaurentPoly,
) -> Result<RegularValues, E7Error> {
    let (c1, c2) = column(&chi_cuspidal_table(model)?, class)?;
    Ok(RegularValues {
        r_x1: c1.scale(xi),
        r_x2: c2.scale(xi),
        r_x0,
    })
}

/// The Coxeter-cell sum at `u0` with `R_{x0}(u0) = δq²`.
///
/// Checks that the data reproduce `ρ_{56,3} = ½R_{x0}`,
/// `ρ_{35,4} = ρ_{21,6} = −½R_{x0}` on the `x0` family,
/// `ρ_{512,11}(u0) = −ρ_{512,12}(u0) = ξv^7`, and the closed form
/// `q^7(1 + 2ξ + δ)`.
pub fn cell_sum(
    traces: &CoxeterTraceDataset,
    fam: &FamilyDataset,
    xi: i8,
    delta: i8,
) -> Result<LaurentPoly, E7Error> {
    let (x, d) = (check_sign(xi)?, check_sign(delta)?);
    let half = CycNum::from_ratio(1, 2);
    let coeffs = fam.x0_coefficients()?;
    let x0 = fam.x0_label()?;
    for (label, want) in [
        (LABEL_56_3, half.clone()),
        (LABEL_35_4, -&half),
        (LABEL_21_6, -&half),
    ] {
        let c = coeffs.get(label).cloned().unwrap_or_else(CycNum::zero);
        if c != want {
            return Err(pinning(format!("{{{label}, {x0}}} = {c}, expected {want}")));
        }
    }
    let model = regular_class_model()?;
    let vals = regular_values(&model, &x, "u0", LaurentPoly::q_pow(2).scale(&d))?;
    let rho = unipotent_values(fam, &vals)?;
    let v7 = LaurentPoly::v_pow(7).scale(&x);
    if rho[LABEL_512_11] != v7 || rho[LABEL_512_12] != -&v7 {
        return Err(pinning(format!(
            "rho_512_11(u0), rho_512_12(u0) = {}, {}; expected {v7} and its negative",
            rho[LABEL_512_11], rho[LABEL_512_12]
        )));
    }
    let sum = regular_class_sum(traces, fam, &vals)?;
    let closed = LaurentPoly::q_pow(7).scale(&(&(&CycNum::one() + &(&x + &x)) + &d));
    if sum != closed {
        return Err(pinning(format!(
            "cell sum {sum} differs from the closed form {closed}"
        )));
    }
    Ok(sum)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AuditKind {
    /// Checked by computation on the loaded data.
    Computed,
    /// Taken as given; not re-derivable by software.
    Axiom,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    pub anchor: String,
    pub kind: AuditKind,
    pub statement: String,
}

fn audit(anchor: &str, kind: AuditKind, statement: impl Into<String>) -> AuditEntry {
    AuditEntry {
        anchor: anchor.to_string(),
        kind,
        statement: statement.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SignSolution {
    pub xi: i8,
    pub admissible_delta: Vec<i8>,
    /// `(ξ, δ, cell sum)` for every candidate.
    pub candidates: Vec<(i8, i8, String)>,
    pub audit: Vec<AuditEntry>,
}

/// Constraints available to [`solve_signs_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignAxioms {
    /// The cell sum at `u0` is a positive count: `ẇ0·u0·ẇ0⁻¹` lies in
    /// `B·ẇ_c·B`.
    pub positivity: bool,
}

impl Default for SignAxioms {
    fn default() -> Self {
        SignAxioms { positivity: true }
    }
}

/// Nonzero with every coefficient a nonnegative rational.
fn is_positive(p: &LaurentPoly) -> bool {
    !p.is_zero()
        && p.terms()
            .values()
            .all(|c| c.as_rational().is_some_and(|r| !r.is_negative()))
}

pub fn solve_signs(
    traces: &CoxeterTraceDataset,
    fam: &FamilyDataset,
) -> Result<SignSolution, E7Error> {
    solve_signs_with(traces, fam, SignAxioms::default())
}

/// Enumerate `(ξ, δ) ∈ {±1}²` and keep the pairs the axioms allow.
pub fn solve_signs_with(
    traces: &CoxeterTraceDataset,
    fam: &FamilyDataset,
    axioms: SignAxioms,
) -> Result<SignSolution, E7Error> {
    let mut log = vec![
        audit(
            "common_scalar_xi",
            AuditKind::Axiom,
            "R_x1 = xi*chi_A1 and R_x2 = xi*chi_A2 with one scalar xi in {-1, 1}",
        ),
        audit(
            "x0_value_is_signed_q2",
            AuditKind::Axiom,
            "R_x0(u0) = delta*q^2 with delta in {-1, 1}",
        ),
        audit(
            "principal_values_on_regular_class",
            AuditKind::Axiom,
            "R_(1_W) = 1 and every other R_x outside {x0, x1, x2} vanishes on regular unipotent elements",
        ),
        audit(
            "x0_family_coefficients",
            AuditKind::Computed,
            "rho_56_3 = R_x0/2 and rho_35_4 = rho_21_6 = -R_x0/2 on the x0 family",
        ),
        audit(
            "coxeter_traces",
            AuditKind::Computed,
            "Tr(T_wc) on 56_3, 35_4, 21_6 combines to 2q^5 and on the 512 pair differs by 2v^7",
        ),
    ];
    let mut candidates = Vec::new();
    let mut survivors = Vec::new();
    for xi in [1i8, -1] {
        for delta in [1i8, -1] {
            let s = cell_sum(traces, fam, xi, delta)?;
            candidates.push((xi, delta, s.to_string()));
            if !axioms.positivity || is_positive(&s) {
                survivors.push((xi, delta));
            }
        }
    }
    log.push(audit(
        "cell_sum_closed_form",
        AuditKind::Computed,
        "sum over Irr(W) of rho(u0)*Tr(T_wc) equals q^7*(1 + 2*xi + delta)",
    ));
    if axioms.positivity {
        log.push(audit(
            "cell_membership_positivity",
            AuditKind::Axiom,
            "the cell sum at u0 counts a nonempty set of rational points, so it is strictly positive",
        ));
    }
    let xi = match survivors.first() {
        Some(&(x, _)) if survivors.iter().all(|&(y, _)| y == x) => x,
        _ => return Err(E7Error::AmbiguousSign { survivors }),
    };
    let admissible_delta = survivors.iter().map(|&(_, d)| d).collect();
    log.push(audit(
        "xi_unique",
        AuditKind::Computed,
        format!("every surviving (xi, delta) has xi = {xi}"),
    ));
    Ok(SignSolution {
        xi,
        admissible_delta,
        candidates,
        audit: log,
    })
}

/// Labels of the cuspidal family in table order.
pub const F0_ROWS: [&str; 4] = [LABEL_512_11, LABEL_512_12, LABEL_X1, LABEL_X2];

/// Values of the four members of the cuspidal family at the four classes,
/// with `R_{x_i} = ξ·χ_{A_i}` and all other almost characters of the family
/// zero on `O_reg`.
pub fn final_value_table(fam: &FamilyDataset, xi: i8) -> Result<CharValueTable, E7Error> {
    let x = check_sign(xi)?;
    let model = regular_class_model()?;
    let chi = chi_cuspidal_table(&model)?;
    let f0 = fam.f0()?;
    let none = RegularValues {
        r_x1: LaurentPoly::zero(),
        r_x2: LaurentPoly::zero(),
        r_x0: LaurentPoly::zero(),
    };
    let mut cols: Vec<BTreeMap<String, LaurentPoly>> = Vec::new();
    for class in &model.class_labels {
        let (c1, c2) = column(&chi, class)?;
        let vals = RegularValues {
            r_x1: c1.scale(&x),
            r_x2: c2.scale(&x),
            ..none.clone()
        };
        cols.push(fam.rho_from_r(f0, &family_r_values(fam, f0, &vals)?)?);
    }
    let entries = F0_ROWS
        .iter()
        .map(|&l| cols.iter().map(|c| c.get(l).cloned()).collect())
        .collect();
    Ok(CharValueTable {
        row_labels: F0_ROWS.map(str::to_string).to_vec(),
        col_labels: model.class_labels.clone(),
        entries,
    })
}

/// Almost characters of the cuspidal family recovered from a table of
/// [`final_value_table`]: rows `R_x1`, `R_x2`, then the remaining pairs.
pub fn recover_almost_characters(
    fam: &FamilyDataset,
    table: &CharValueTable,
) -> Result<CharValueTable, E7Error> {
    let f0 = fam.f0()?;
    let pair_of = |l: &str| {
        f0.member(l)
            .map(|m| m.mpair.to_string())
            .unwrap_or_default()
    };
    let (p1, p2) = (pair_of(LABEL_X1), pair_of(LABEL_X2));
    let mut row_keys = vec![p1.clone(), p2.clone()];
    for x in &fam.fourier_of(f0).mpairs {
        let s = x.to_string();
        if s != p1 && s != p2 {
            row_keys.push(s);
        }
    }
    let mut entries = vec![Vec::new(); row_keys.len()];
    for (j, col) in table.col_labels.iter().enumerate() {
        let mut rho = BTreeMap::new();
        for (i, l) in table.row_labels.iter().enumerate() {
            let v = table.entries[i][j]
                .clone()
                .ok_or_else(|| model_error(format!("{l} is unknown at {col}")))?;
            rho.insert(l.clone(), v);
        }
        let r = fam.transform(f0, Direction::RhoToR, &rho)?;
        for (i, k) in row_keys.iter().enumerate() {
            entries[i].push(r.get(k).cloned());
        }
    }
    let mut row_labels = vec!["R_x1".to_string(), "R_x2".to_string()];
    row_labels.extend(row_keys[2..].iter().map(|k| format!("R_{k}")));
    Ok(CharValueTable {
        row_labels,
        col_labels: table.col_labels.clone(),
        entries,
    })
}

/// Divide by a single-term Laurent polynomial.
fn divide_by_monomial(p: &LaurentPoly, m: &LaurentPoly) -> Option<LaurentPoly> {
    let mut it = m.terms().iter();
    let (&k, c) = it.next()?;
    if it.next().is_some() {
        return None;
    }
    Some(p.scale(&c.inv().ok()?).shift(-k))
}

/// The cell sum at `u_{a0²}` as a function of `r = R_{x0}(u_{a0²})`.
pub fn empty_cell_sum(
    traces: &CoxeterTraceDataset,
    fam: &FamilyDataset,
    xi: i8,
    r: &LaurentPoly,
) -> Result<LaurentPoly, E7Error> {
    let x = check_sign(xi)?;
    let model = regular_class_model()?;
    let vals = regular_values(&model, &x, &model.class_labels[2], r.clone())?;
    regular_class_sum(traces, fam, &vals)
}

/// Solve for `R_{x0}(u_{a0²})` from the vanishing of the cell sum at
/// `u_{a0²}`, which meets no point of `B·ẇ_c·B` there.
///
/// The sum is affine in `r`; its slope must be a monomial.
pub fn empty_cell_backsolve(
    traces: &CoxeterTraceDataset,
    fam: &FamilyDataset,
    xi: i8,
) -> Result<LaurentPoly, E7Error> {
    let k0 = empty_cell_sum(traces, fam, xi, &LaurentPoly::zero())?;
    let k1 = empty_cell_sum(traces, fam, xi, &LaurentPoly::one())?;
    let slope = &k1 - &k0;
    let r = divide_by_monomial(&-k0, &slope)
        .ok_or_else(|| pinning(format!("coefficient of R_x0 is {slope}, not a monomial")))?;
    let residual = empty_cell_sum(traces, fam, xi, &r)?;
    if !residual.is_zero() {
        return Err(pinning(format!("back-substitution leaves {residual}")));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::{bundled_families, bundled_traces};

    #[test]
    fn model_shape() {
        let m = regular_class_model().unwrap();
        assert_eq!(m.num_rational_classes(), 4);
        assert_eq!(m.component_group.element_order(m.a0), 4);
        assert!(m.is_u0_self_inverse());
        assert_eq!(m.class_elements[0], 0);
    }

    #[test]
    fn cell_sum_closed_forms() {
        let (t, f) = (bundled_traces(), bundled_families());
        let q7 = LaurentPoly::q_pow(7);
        assert_eq!(cell_sum(&t, &f, 1, 1).unwrap(), &q7 * &LaurentPoly::from(4));
        assert_eq!(
            cell_sum(&t, &f, 1, -1).unwrap(),
            &q7 * &LaurentPoly::from(2)
        );
        assert!(cell_sum(&t, &f, -1, 1).unwrap().is_zero());
        assert_eq!(
            cell_sum(&t, &f, -1, -1).unwrap(),
            &q7 * &LaurentPoly::from(-2)
        );
        assert_eq!(cell_sum(&t, &f, 2, 1), Err(E7Error::InvalidSign(2)));
    }

    #[test]
    fn monomial_division() {
        let p: LaurentPoly = "3*v^10 - v^4".parse().unwrap();
        let m: LaurentPoly = "-2*v^4".parse().unwrap();
        let want: LaurentPoly = "-3/2*v^6 + 1/2".parse().unwrap();
        assert_eq!(divide_by_monomial(&p, &m), Some(want));
        assert_eq!(divide_by_monomial(&p, &p), None);
    }

    #[test]
    fn positivity() {
        assert!(is_positive(&"2*v^14".parse().unwrap()));
        assert!(!is_positive(&LaurentPoly::zero()));
        assert!(!is_positive(&"-2*v^14".parse().unwrap()));
        assert!(!is_positive(&"z4*v^14".parse().unwrap()));
    }
}
