//! The bundled `E7` datasets, rebuilt from the Weyl group alone: character
//! table, fake degrees, Coxeter-element traces and the family partition.
//!
//! Families are found by search. Characters of one family share
//! `φ(r)/φ(1)`; within such a group every block of 1, 3 or 5 characters is
//! tried against the Fourier matrix of `1`, `Z2` or `S3` (the two
//! characters of degree 512 form the exceptional `Z2` family). A block is
//! accepted when the unipotent degrees `Δ(x)·Σ_φ conj{x, x_φ}·Feg_φ` are all
//! of the form `c·q^a·Π Φ_d` with `c > 0` and a common `a`, principal
//! degrees specialize to `φ(1)` at `q = 1`, the others to `0`, and the
//! member at `(1,1)` has `b = a`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::E7Error;
use crate::arith::{zeta, CycNum, LaurentPoly};
use crate::coxeter::{cyclotomic_factorization, RootSystem, WeylClasses};
use crate::fourier::{
    Family, FamilyDataset, FamilyMember, FourierContext, FourierMatrix, MPair, MemberKind,
    LABEL_X1, LABEL_X2,
};
use crate::groups::{parse_group, CharTable};
use crate::hecke::{coxeter_trace_from_characters, CharacterData, CoxeterTraceDataset, E7_H, E7_N};

/// Everything the datasets need about one irreducible character of `W`.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterSummary {
    pub label: String,
    pub degree: i64,
    pub b: i64,
    pub reflection_value: i64,
    pub coxeter_value: i64,
    /// Coefficients of the fake degree in `q`.
    pub fake_degree: Vec<i64>,
}

fn derivation(msg: impl Into<String>) -> E7Error {
    E7Error::Derivation(msg.into())
}

fn integer_value(c: &CycNum) -> Result<i64, E7Error> {
    c.as_rational()
        .filter(|r| r.is_integer())
        .and_then(|r| r.to_integer().to_i64())
        .ok_or_else(|| derivation(format!("character value {c} is not an integer")))
}

/// Labels `phi_<d>_<b>` with values at a reflection and at the Coxeter
/// element `s1·s2·…·s7`.
pub fn summarize_characters(
    wc: &WeylClasses,
    table: &CharTable,
) -> Result<Vec<CharacterSummary>, E7Error> {
    let fake = wc.fake_degrees(table)?;
    let refl = wc.class_of_word(&[0])?;
    let word: Vec<usize> = (0..wc.rank()).collect();
    let cox = wc.class_of_word(&word)?;
    let mut out = Vec::with_capacity(table.rows.len());
    for (row, f) in table.rows.iter().zip(fake) {
        let degree = integer_value(&row[0])?;
        let b = f
            .iter()
            .position(|&c| c != 0)
            .ok_or_else(|| derivation("zero fake degree"))? as i64;
        if f.iter().sum::<i64>() != degree {
            return Err(derivation(format!(
                "fake degree of a {degree}-dimensional character"
            )));
        }
        out.push(CharacterSummary {
            label: format!("phi_{degree}_{b}"),
            degree,
            b,
            reflection_value: integer_value(&row[refl])?,
            coxeter_value: integer_value(&row[cox])?,
            fake_degree: f,
        });
    }
    let mut labels: Vec<&str> = out.iter().map(|c| c.label.as_str()).collect();
    labels.sort_unstable();
    if labels.windows(2).any(|w| w[0] == w[1]) {
        return Err(derivation("labels phi_<d>_<b> are not unique"));
    }
    Ok(out)
}

/// Traces from `φ(c)·v^{2N(1+φ(r)/φ(1))/h}`, validated on construction.
pub fn derive_trace_dataset(chars: &[CharacterSummary]) -> Result<CoxeterTraceDataset, E7Error> {
    let mut characters = BTreeMap::new();
    let mut traces = BTreeMap::new();
    for c in chars {
        let t = coxeter_trace_from_characters(
            c.degree,
            c.reflection_value,
            c.coxeter_value,
            E7_N,
            E7_H,
        )
        .ok_or_else(|| derivation(format!("{}: non-integral trace exponent", c.label)))?;
        characters.insert(
            c.label.clone(),
            CharacterData {
                degree: c.degree,
                b: c.b,
                reflection_value: c.reflection_value,
                coxeter_value: c.coxeter_value,
            },
        );
        traces.insert(c.label.clone(), t);
    }
    let ds = CoxeterTraceDataset {
        type_label: "E7".into(),
        coxeter_word: (0..7).collect(),
        provenance: "derived: Dixon-Schneider character table of W(E7) and the \
                     eigenvalue formula for T_c"
            .into(),
        characters,
        traces,
    };
    ds.validate()?;
    Ok(ds)
}

type Poly = Vec<BigRational>;

fn poly_of(f: &[i64]) -> Poly {
    f.iter()
        .map(|&c| BigRational::from_integer(c.into()))
        .collect()
}

/// Unipotent degree data of one family member.
struct DegreeData {
    valuation: usize,
    at_one: BigRational,
}

/// `None` unless `p = c·q^a·Π Φ_d^{e_d}` with `c > 0` and every `e_d` at
/// most `order_mult[d]`, the multiplicity of `Φ_d` in `Π(q^{d_i} − 1)`:
/// character degrees divide the group order for every `q`.
fn cyclotomic_shape(p: &Poly, order_mult: &HashMap<u32, u32>) -> Option<DegreeData> {
    let den = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let num: Option<Vec<i128>> = p
        .iter()
        .map(|c| {
            (c * BigRational::from_integer(den.clone()))
                .to_integer()
                .to_i128()
        })
        .collect();
    let num = num?;
    let (c, _, a, factors) = cyclotomic_factorization(&num, 1)?;
    if c <= 0
        || factors
            .iter()
            .any(|(d, e)| order_mult.get(d).copied().unwrap_or(0) < *e)
    {
        return None;
    }
    Some(DegreeData {
        valuation: a,
        at_one: p.iter().fold(BigRational::zero(), |acc, x| acc + x),
    })
}

/// A candidate family shape.
struct Shape {
    group: &'static str,
    fm: FourierMatrix,
    ctx: FourierContext,
    /// Pairs carrying principal characters, special first.
    slots: Vec<MPair>,
    exceptional: bool,
    order_mult: HashMap<u32, u32>,
}

impl Shape {
    fn new(group: &'static str, exceptional: bool, degrees: &[usize]) -> Result<Self, E7Error> {
        let ctx = FourierContext::new(&parse_group(group)?)?;
        let fm = FourierMatrix::from_context(&ctx)?;
        let mut slots = Vec::new();
        for x in &fm.mpairs {
            let principal = if exceptional {
                x.char_index == 0
            } else {
                ctx.eigenvalue(x)?.is_one()
            };
            if principal {
                slots.push(*x);
            }
        }
        Ok(Shape {
            group,
            fm,
            ctx,
            slots,
            exceptional,
            order_mult: order_multiplicities(degrees),
        })
    }

    fn delta(&self, x: &MPair) -> i8 {
        if self.exceptional && !self.slots.contains(x) {
            -1
        } else {
            1
        }
    }

    /// Whether the characters `chosen[i]` placed at `slots[i]` pass every
    /// degree condition.
    fn accepts(&self, chosen: &[&CharacterSummary]) -> bool {
        let mut valuation = None;
        for x in &self.fm.mpairs {
            let mut deg: Poly = vec![BigRational::zero(); E7_N as usize + 1];
            for (slot, ch) in self.slots.iter().zip(chosen) {
                let e = self.fm.entry(x, slot).unwrap().conj();
                let e = e.as_rational().expect("rational Fourier matrix");
                for (d, f) in deg.iter_mut().zip(poly_of(&ch.fake_degree)) {
                    *d += &e * f;
                }
            }
            if self.delta(x) < 0 {
                deg.iter_mut().for_each(|d| *d = -d.clone());
            }
            let Some(data) = cyclotomic_shape(&deg, &self.order_mult) else {
                return false;
            };
            if *valuation.get_or_insert(data.valuation) != data.valuation {
                return false;
            }
            let want = match self.slots.iter().position(|s| s == x) {
                Some(i) => chosen[i].degree,
                None => 0,
            };
            if data.at_one != BigRational::from_integer(want.into()) {
                return false;
            }
        }
        chosen[0].b as usize == valuation.unwrap()
    }

    /// Whether some permutation of `M(G)` preserving the Fourier matrix,
    /// the eigenvalues and `Δ` carries assignment `a` to assignment `b`.
    fn equivalent(&self, a: &[&CharacterSummary], b: &[&CharacterSummary]) -> bool {
        let n = self.fm.size();
        let idx = |x: &MPair| self.fm.index_of(x).unwrap();
        let mut sigma = vec![usize::MAX; n];
        for (i, ch) in a.iter().enumerate() {
            let j = b.iter().position(|c| c.label == ch.label).unwrap();
            sigma[idx(&self.slots[i])] = idx(&self.slots[j]);
        }
        let free: Vec<usize> = (0..n).filter(|&i| sigma[i] == usize::MAX).collect();
        let targets: Vec<usize> = (0..n).filter(|i| !sigma.contains(i)).collect();
        permutations(&targets).into_iter().any(|img| {
            let mut s = sigma.clone();
            for (&i, &j) in free.iter().zip(&img) {
                s[i] = j;
            }
            let x = &self.fm.mpairs;
            (0..n).all(|i| {
                self.fm.eigenvalues[s[i]] == self.fm.eigenvalues[i]
                    && self.delta(&x[s[i]]) == self.delta(&x[i])
                    && (0..n).all(|j| self.fm.entries[s[i]][s[j]] == self.fm.entries[i][j])
            })
        })
    }

    /// Every slot assignment of `block` that passes.
    fn assignments<'a>(&self, block: &[&'a CharacterSummary]) -> Vec<Vec<&'a CharacterSummary>> {
        permutations(block)
            .into_iter()
            .filter(|p| self.accepts(p))
            .collect()
    }
}

/// Multiplicity of `Φ_d` in `Π_i (q^{d_i} − 1)`.
fn order_multiplicities(degrees: &[usize]) -> HashMap<u32, u32> {
    let mut m = HashMap::new();
    for &di in degrees {
        for d in (1..=di).filter(|d| di % d == 0) {
            *m.entry(d as u32).or_insert(0) += 1;
        }
    }
    m
}

fn permutations<T: Copy>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// One accepted family: shape index and the characters in slot order.
#[derive(Clone)]
struct Block<'a> {
    shape: usize,
    chars: Vec<&'a CharacterSummary>,
    /// Number of accepted slot assignments.
    assignments: usize,
}

/// Outcome of the search, with the ambiguities it resolved.
#[derive(Clone, Debug, Serialize)]
pub struct FamilySearchReport {
    pub families: usize,
    pub unipotent_characters: usize,
    /// Families with several accepted slot assignments, all related by
    /// symmetries of the Fourier matrix, with their number.
    pub multiple_assignments: Vec<(String, usize)>,
}

fn partitions<'a>(shapes: &[Shape], rest: &[&'a CharacterSummary]) -> Vec<Vec<Block<'a>>> {
    let Some((&first, others)) = rest.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for (si, shape) in shapes.iter().enumerate() {
        let k = shape.slots.len();
        if k > rest.len() {
            continue;
        }
        for pick in combinations(others.len(), k - 1) {
            let mut block = vec![first];
            block.extend(pick.iter().map(|&i| others[i]));
            if shape.exceptional != block.iter().all(|c| c.degree == 512) {
                continue;
            }
            let valid = shape.assignments(&block);
            if valid.is_empty() || !valid.iter().all(|v| shape.equivalent(&valid[0], v)) {
                continue;
            }
            let remaining: Vec<&CharacterSummary> = others
                .iter()
                .enumerate()
                .filter(|(i, _)| !pick.contains(i))
                .map(|(_, c)| *c)
                .collect();
            for tail in partitions(shapes, &remaining) {
                let mut p = vec![Block {
                    shape: si,
                    chars: valid[0].clone(),
                    assignments: valid.len(),
                }];
                p.extend(tail);
                out.push(p);
            }
        }
    }
    out
}

/// The family partition of `Irr(W(E7))` with pairs, signs and eigenvalues.
///
/// Within the exceptional family the character with smaller `b` is placed
/// at `(0,0)`; the loader's pinning check confirms this matches the signs
/// of the values at `u0`.
pub fn derive_family_dataset(
    chars: &[CharacterSummary],
    degrees: &[usize],
) -> Result<(FamilyDataset, FamilySearchReport), E7Error> {
    let shapes = vec![
        Shape::new("Z1", false, degrees)?,
        Shape::new("Z2", false, degrees)?,
        Shape::new("S3", false, degrees)?,
        Shape::new("Z2", true, degrees)?,
    ];
    let mut groups: HashMap<BigRational, Vec<&CharacterSummary>> = HashMap::new();
    for c in chars {
        let ratio = BigRational::new(c.reflection_value.into(), c.degree.into());
        groups.entry(ratio).or_default().push(c);
    }
    let mut ratios: Vec<&BigRational> = groups.keys().collect();
    ratios.sort();
    let mut blocks = Vec::new();
    for r in ratios {
        let mut members = groups[r].clone();
        members.sort_by_key(|c| (c.b, c.degree));
        let mut found = partitions(&shapes, &members);
        if found.len() != 1 {
            let shown: Vec<Vec<Vec<&str>>> = found
                .iter()
                .map(|p| {
                    p.iter()
                        .map(|b| b.chars.iter().map(|c| c.label.as_str()).collect())
                        .collect()
                })
                .collect();
            return Err(derivation(format!(
                "characters with φ(r)/φ(1) = {r} admit {} family partitions: {shown:?}",
                found.len()
            )));
        }
        blocks.extend(found.pop().unwrap());
    }
    let mut families = Vec::new();
    let mut report = FamilySearchReport {
        families: blocks.len(),
        unipotent_characters: 0,
        multiple_assignments: Vec::new(),
    };
    for block in &blocks {
        let shape = &shapes[block.shape];
        let mut chars = block.chars.clone();
        if shape.exceptional {
            chars.sort_by_key(|c| c.b);
        }
        let id = chars[0].label.clone();
        if block.assignments > 1 {
            report
                .multiple_assignments
                .push((id.clone(), block.assignments));
        }
        let mut members = Vec::new();
        for x in &shape.fm.mpairs {
            let mut lambda = shape.ctx.eigenvalue(x)?;
            let (kind, label) = match shape.slots.iter().position(|s| s == x) {
                Some(i) => (MemberKind::Principal, chars[i].label.clone()),
                None if shape.exceptional => {
                    lambda = &lambda * &zeta(4, 1);
                    let label = if lambda == zeta(4, 1) {
                        LABEL_X1
                    } else {
                        LABEL_X2
                    };
                    (MemberKind::Cuspidal, label.to_string())
                }
                None => (MemberKind::Nonprincipal, format!("{id}:{x}")),
            };
            members.push(FamilyMember {
                kind,
                label,
                mpair: *x,
                delta: shape.delta(x),
                lambda,
            });
        }
        report.unipotent_characters += members.len();
        families.push(Family {
            id,
            group: shape.group.to_string(),
            members,
        });
    }
    families.sort_by_key(|f| {
        let special = chars.iter().find(|c| c.label == f.id).unwrap();
        (special.b, special.degree)
    });
    let raw = serde_json::json!({
        "type": "E7",
        "provenance": "derived: families by search over fake-degree Fourier \
                       transforms in W(E7)",
        "families": families,
    });
    let ds = FamilyDataset::from_json_str(&raw.to_string())?;
    Ok((ds, report))
}

/// Both datasets with the intermediate character data.
pub struct DerivedData {
    pub characters: Vec<CharacterSummary>,
    pub traces: CoxeterTraceDataset,
    pub families: FamilyDataset,
    pub report: FamilySearchReport,
}

/// Enumerate `W(E7)` and rebuild both datasets.
pub fn derive_datasets() -> Result<DerivedData, E7Error> {
    let rs = RootSystem::from_type("E7")?;
    let wc = WeylClasses::new(&rs, 3_000_000)?;
    let table = wc.character_table()?;
    let characters = summarize_characters(&wc, &table)?;
    let traces = derive_trace_dataset(&characters)?;
    let (families, report) = derive_family_dataset(&characters, &wc.degrees())?;
    Ok(DerivedData {
        characters,
        traces,
        families,
        report,
    })
}

/// Laurent polynomial in `v` of a fake degree given in `q`.
pub fn fake_degree_in_v(f: &[i64]) -> LaurentPoly {
    LaurentPoly::from_terms(
        f.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (2 * i as i32, CycNum::from_integer(c))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerations() {
        assert_eq!(permutations(&[1, 2, 3]).len(), 6);
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(2, 3).len(), 0);
    }

    #[test]
    fn shapes_of_small_groups() {
        let deg = [2, 6, 8, 10, 12, 14, 18];
        assert_eq!(Shape::new("Z2", false, &deg).unwrap().slots.len(), 3);
        assert_eq!(Shape::new("S3", false, &deg).unwrap().slots.len(), 5);
        let ex = Shape::new("Z2", true, &deg).unwrap();
        assert_eq!(ex.slots, vec![MPair::new(0, 0), MPair::new(1, 0)]);
    }

    #[test]
    fn cyclotomic_shape_rejects_negative_leading() {
        let m = order_multiplicities(&[2, 3]);
        // −q(q − 1) has c = −1.
        assert!(cyclotomic_shape(&poly_of(&[0, 1, -1]), &m).is_none());
        assert!(cyclotomic_shape(&poly_of(&[0, -1, 1]), &m).is_some());
        // (q − 1)³ does not divide (q² − 1)(q³ − 1).
        assert!(cyclotomic_shape(&poly_of(&[-1, 3, -3, 1]), &m).is_none());
    }
}
