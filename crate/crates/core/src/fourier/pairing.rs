//! The set `M(G)` of pairs `(g, σ)` up to conjugation and the pairing on it.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::FourierError;
use crate::arith::CycNum;
use crate::groups::{character_table, CharTable, ConjugacyData, FiniteGroup};

/// `(g, σ)` with `g` the representative of conjugacy class `class_index`
/// and `σ` row `char_index` of the character table of `C(g)`.
///
/// Serialized as `[class_index, char_index]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MPair {
    pub class_index: usize,
    pub char_index: usize,
    /// Set when `g` is the canonical class representative.
    pub canonical: bool,
}

impl MPair {
    pub fn new(class_index: usize, char_index: usize) -> Self {
        MPair {
            class_index,
            char_index,
            canonical: true,
        }
    }
}

impl fmt::Display for MPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.class_index, self.char_index)
    }
}

impl Serialize for MPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.class_index, self.char_index].serialize(s)
    }
}

impl<'de> Deserialize<'de> for MPair {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [c, k] = <[usize; 2]>::deserialize(d)?;
        Ok(MPair::new(c, k))
    }
}

/// A centralizer `C(g)` with its own class data and character table.
#[derive(Clone, Debug)]
pub struct Centralizer {
    /// Element indices in the ambient group.
    pub elements: Vec<usize>,
    /// Ambient element index to class of `C(g)`.
    pub class_of: HashMap<usize, usize>,
    pub table: CharTable,
}

impl Centralizer {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// `σ(y)` for row `sigma` and ambient element `y ∈ C(g)`.
    pub fn value(&self, sigma: usize, y: usize) -> &CycNum {
        &self.table.rows[sigma][self.class_of[&y]]
    }
}

/// A group with its classes and centralizer character tables, enough to
/// evaluate the pairing.
#[derive(Clone, Debug)]
pub struct FourierContext {
    pub group: FiniteGroup,
    pub classes: ConjugacyData,
    pub centralizers: Vec<Centralizer>,
}

impl FourierContext {
    pub fn new(group: &FiniteGroup) -> Result<Self, FourierError> {
        let classes = group.conjugacy_data();
        let mut centralizers = Vec::with_capacity(classes.reps.len());
        for (c, members) in classes.centralizers.iter().enumerate() {
            let h = group.subgroup(&format!("C({c})"), members)?;
            let table = character_table(&h)?;
            let hc = h.conjugacy_data();
            let class_of = members
                .iter()
                .map(|&i| {
                    let j = h
                        .index_of(group.element(i))
                        .expect("member of the centralizer");
                    (i, hc.class_of[j])
                })
                .collect();
            centralizers.push(Centralizer {
                elements: members.clone(),
                class_of,
                table,
            });
        }
        Ok(FourierContext {
            group: group.clone(),
            classes,
            centralizers,
        })
    }

    /// One canonical pair per equivalence class, ordered by
    /// `(class_index, char_index)`.
    pub fn m_set(&self) -> Vec<MPair> {
        self.centralizers
            .iter()
            .enumerate()
            .flat_map(|(c, z)| (0..z.table.rows.len()).map(move |k| MPair::new(c, k)))
            .collect()
    }

    fn check(&self, x: &MPair) -> Result<(), FourierError> {
        let ok = x.canonical
            && x.class_index < self.centralizers.len()
            && x.char_index < self.centralizers[x.class_index].table.rows.len();
        if ok {
            Ok(())
        } else {
            Err(FourierError::KeyMismatch(format!(
                "{x} is not a canonical pair of {}",
                self.group.name
            )))
        }
    }

    /// `σ(g)/σ(1)` for `x = (g, σ)`.
    pub fn eigenvalue(&self, x: &MPair) -> Result<CycNum, FourierError> {
        self.check(x)?;
        let z = &self.centralizers[x.class_index];
        let g = self.classes.reps[x.class_index];
        let row = &z.table.rows[x.char_index];
        let deg = row[0].inv().expect("nonzero degree");
        Ok(z.value(x.char_index, g) * &deg)
    }

    /// `#{x : g·xhx⁻¹ = xhx⁻¹·g}` split by the class of `x⁻¹g⁻¹x` in
    /// `C(h)` and of `xhx⁻¹` in `C(g)`.
    fn double_counts(&self, cg: usize, ch: usize) -> HashMap<(usize, usize), u64> {
        let grp = &self.group;
        let g = self.classes.reps[cg];
        let h = self.classes.reps[ch];
        let g_inv = grp.inv(g);
        let zg = &self.centralizers[cg];
        let zh = &self.centralizers[ch];
        let mut counts = HashMap::new();
        for x in 0..grp.order() {
            let y = grp.conj(x, h);
            if grp.mul(g, y) != grp.mul(y, g) {
                continue;
            }
            let t = grp.conj(grp.inv(x), g_inv);
            *counts
                .entry((zh.class_of[&t], zg.class_of[&y]))
                .or_insert(0) += 1;
        }
        counts
    }

    /// `{(g,σ),(h,τ)} = |C(g)|⁻¹|C(h)|⁻¹ Σ τ(x⁻¹g⁻¹x)·σ(xhx⁻¹)` over
    /// `x ∈ G` with `g·xhx⁻¹ = xhx⁻¹·g`.
    pub fn pairing(&self, x: &MPair, y: &MPair) -> Result<CycNum, FourierError> {
        self.check(x)?;
        self.check(y)?;
        let counts = self.double_counts(x.class_index, y.class_index);
        Ok(self.pairing_from_counts(x, y, &counts))
    }

    fn pairing_from_counts(
        &self,
        x: &MPair,
        y: &MPair,
        counts: &HashMap<(usize, usize), u64>,
    ) -> CycNum {
        let zg = &self.centralizers[x.class_index];
        let zh = &self.centralizers[y.class_index];
        let mut sum = CycNum::zero();
        for (&(kt, ks), &n) in counts {
            let term = &zh.table.rows[y.char_index][kt] * &zg.table.rows[x.char_index][ks];
            sum += &term.scale(&BigRational::from_integer((n as i64).into()));
        }
        let denom = (zg.order() * zh.order()) as i64;
        sum.scale(&BigRational::new(1.into(), denom.into()))
    }

    /// The full pairing matrix over [`Self::m_set`].
    pub fn pairing_matrix(&self) -> Vec<Vec<CycNum>> {
        let pairs = self.m_set();
        let r = self.centralizers.len();
        let counts: Vec<Vec<HashMap<(usize, usize), u64>>> = (0..r)
            .map(|a| (0..r).map(|b| self.double_counts(a, b)).collect())
            .collect();
        pairs
            .iter()
            .map(|x| {
                pairs
                    .iter()
                    .map(|y| self.pairing_from_counts(x, y, &counts[x.class_index][y.class_index]))
                    .collect()
            })
            .collect()
    }
}

/// `M(G)` for a group.
pub fn m_set(group: &FiniteGroup) -> Result<Vec<MPair>, FourierError> {
    Ok(FourierContext::new(group)?.m_set())
}

/// `{x, y}` for canonical pairs of `group`.
pub fn pairing(group: &FiniteGroup, x: &MPair, y: &MPair) -> Result<CycNum, FourierError> {
    FourierContext::new(group)?.pairing(x, y)
}

/// The Fourier matrix `Υ = ({x, y})` on `M(G)`, checked hermitian and
/// involutive at construction.
#[derive(Clone, Debug)]
pub struct FourierMatrix {
    pub group_name: String,
    pub mpairs: Vec<MPair>,
    pub entries: Vec<Vec<CycNum>>,
    /// `σ(g)/σ(1)` per pair.
    pub eigenvalues: Vec<CycNum>,
}

impl FourierMatrix {
    pub fn from_context(ctx: &FourierContext) -> Result<Self, FourierError> {
        let mpairs = ctx.m_set();
        let eigenvalues = mpairs
            .iter()
            .map(|x| ctx.eigenvalue(x))
            .collect::<Result<_, _>>()?;
        let fm = FourierMatrix {
            group_name: ctx.group.name.clone(),
            entries: ctx.pairing_matrix(),
            mpairs,
            eigenvalues,
        };
        if !fm.is_hermitian() {
            return Err(FourierError::InvariantViolation(format!(
                "pairing matrix of {} is not hermitian",
                fm.group_name
            )));
        }
        if !fm.is_involution() {
            return Err(FourierError::InvariantViolation(format!(
                "pairing matrix of {} does not square to the identity",
                fm.group_name
            )));
        }
        Ok(fm)
    }

    pub fn size(&self) -> usize {
        self.mpairs.len()
    }

    pub fn index_of(&self, x: &MPair) -> Option<usize> {
        self.mpairs.iter().position(|y| y == x)
    }

    pub fn entry(&self, x: &MPair, y: &MPair) -> Option<&CycNum> {
        Some(&self.entries[self.index_of(x)?][self.index_of(y)?])
    }

    pub fn is_hermitian(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i].conj()))
    }

    pub fn square(&self) -> Vec<Vec<CycNum>> {
        let n = self.size();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| &self.entries[i][k] * &self.entries[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    pub fn is_involution(&self) -> bool {
        self.square().iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }
}

/// The checked Fourier matrix of a group.
pub fn fourier_matrix(group: &FiniteGroup) -> Result<FourierMatrix, FourierError> {
    FourierMatrix::from_context(&FourierContext::new(group)?)
}
