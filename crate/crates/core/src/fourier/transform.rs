//! Families and the signed Fourier transform between unipotent characters
//! and almost characters.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{FourierError, FourierMatrix, MPair};
use crate::arith::{CycModule, CycNum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MemberKind {
    /// Image of an irreducible character of `W`, labelled `phi_<d>_<b>`.
    Principal,
    Cuspidal,
    /// Neither principal nor cuspidal.
    Nonprincipal,
}

/// One unipotent character `ρ` with its pair `x̄_ρ`, sign `Δ(x̄_ρ)` and
/// Frobenius eigenvalue `λ̃`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyMember {
    pub kind: MemberKind,
    pub label: String,
    pub mpair: MPair,
    pub delta: i8,
    pub lambda: CycNum,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Family {
    pub id: String,
    pub group: String,
    pub members: Vec<FamilyMember>,
}

impl Family {
    pub fn member(&self, label: &str) -> Option<&FamilyMember> {
        self.members.iter().find(|m| m.label == label)
    }

    pub fn member_at(&self, x: &MPair) -> Option<&FamilyMember> {
        self.members.iter().find(|m| m.mpair == *x)
    }

    pub fn principal_labels(&self) -> impl Iterator<Item = &str> {
        self.members
            .iter()
            .filter(|m| m.kind == MemberKind::Principal)
            .map(|m| m.label.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Unipotent character values keyed by member label to `R_x` keyed by
    /// pair.
    RhoToR,
    /// `R_x` keyed by pair to unipotent character values keyed by label.
    RToRho,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::RhoToR => "rho_to_R",
            Direction::RToRho => "R_to_rho",
        })
    }
}

impl FromStr for Direction {
    type Err = FourierError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rho_to_R" => Ok(Direction::RhoToR),
            "R_to_rho" => Ok(Direction::RToRho),
            _ => Err(FourierError::KeyMismatch(format!(
                "unknown direction {s:?}"
            ))),
        }
    }
}

fn delta_scalar(d: i8) -> CycNum {
    CycNum::from_integer(d as i64)
}

/// Signed Fourier transform on one family.
///
/// `RhoToR`: `R_x = Σ_ρ {x̄_ρ, x}·Δ(x̄_ρ)·ρ`, input keyed by member labels,
/// output keyed by pair strings `(c,k)`.
/// `RToRho`: `ρ = Δ(x̄_ρ)·Σ_x conj{x̄_ρ, x}·R_x`, the inverse.
pub fn almost_transform<T: CycModule>(
    fm: &FourierMatrix,
    family: &Family,
    direction: Direction,
    values: &BTreeMap<String, T>,
) -> Result<BTreeMap<String, T>, FourierError> {
    if fm.mpairs.len() != family.members.len() {
        return Err(FourierError::KeyMismatch(format!(
            "family {} has {} members but M({}) has {} pairs",
            family.id,
            family.members.len(),
            fm.group_name,
            fm.mpairs.len()
        )));
    }
    let idx: Vec<usize> = family
        .members
        .iter()
        .map(|m| {
            fm.index_of(&m.mpair).ok_or_else(|| {
                FourierError::KeyMismatch(format!("{} is not in M({})", m.mpair, fm.group_name))
            })
        })
        .collect::<Result<_, _>>()?;
    let expected: BTreeSet<String> = match direction {
        Direction::RhoToR => family.members.iter().map(|m| m.label.clone()).collect(),
        Direction::RToRho => fm.mpairs.iter().map(MPair::to_string).collect(),
    };
    let given: BTreeSet<String> = values.keys().cloned().collect();
    if given != expected {
        let missing: Vec<_> = expected.difference(&given).collect();
        let extra: Vec<_> = given.difference(&expected).collect();
        return Err(FourierError::KeyMismatch(format!(
            "family {}: missing {missing:?}, unexpected {extra:?}",
            family.id
        )));
    }
    let mut out = BTreeMap::new();
    match direction {
        Direction::RhoToR => {
            for (j, x) in fm.mpairs.iter().enumerate() {
                let mut acc = T::zero();
                for (m, &i) in family.members.iter().zip(&idx) {
                    let c = &fm.entries[i][j] * &delta_scalar(m.delta);
                    acc = acc.add(&values[&m.label].scale(&c));
                }
                out.insert(x.to_string(), acc);
            }
        }
        Direction::RToRho => {
            for (m, &i) in family.members.iter().zip(&idx) {
                let mut acc = T::zero();
                for (j, x) in fm.mpairs.iter().enumerate() {
                    let c = fm.entries[i][j].conj();
                    acc = acc.add(&values[&x.to_string()].scale(&c));
                }
                out.insert(m.label.clone(), acc.scale(&delta_scalar(m.delta)));
            }
        }
    }
    Ok(out)
}
