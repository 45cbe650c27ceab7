//! The bundled `E7` family data: the partition of unipotent characters into
//! families, their pairs in `M(G_F)`, signs `Δ` and eigenvalues `λ̃`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::transform::{almost_transform, Direction, Family, MemberKind};
use super::{FourierContext, FourierError, FourierMatrix};
use crate::arith::{zeta, CycNum, LaurentPoly};
use crate::groups::parse_group;
use crate::hecke::{parse_phi_label, CoxeterTraceDataset, E7_ORDER};

pub const LABEL_512_11: &str = "phi_512_11";
pub const LABEL_512_12: &str = "phi_512_12";
/// `ρ_{x1}` and `ρ_{x2}`.
pub const LABEL_X1: &str = "E7[z4]";
pub const LABEL_X2: &str = "E7[-z4]";
pub const LABEL_56_3: &str = "phi_56_3";
pub const LABEL_35_4: &str = "phi_35_4";
pub const LABEL_21_6: &str = "phi_21_6";

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RawDataset {
    #[serde(rename = "type")]
    type_label: String,
    #[serde(default)]
    provenance: String,
    families: Vec<Family>,
}

/// Validated family data with the Fourier matrix of every group used.
#[derive(Clone, Debug)]
pub struct FamilyDataset {
    pub type_label: String,
    pub provenance: String,
    pub families: Vec<Family>,
    pub fourier: HashMap<String, FourierMatrix>,
}

fn schema(msg: impl Into<String>) -> FourierError {
    FourierError::SchemaError(msg.into())
}

fn pinning(msg: impl Into<String>) -> FourierError {
    FourierError::PinningError(msg.into())
}

impl FamilyDataset {
    pub fn from_json_str(text: &str) -> Result<Self, FourierError> {
        let raw: RawDataset = serde_json::from_str(text).map_err(|e| schema(e.to_string()))?;
        if raw.type_label != "E7" {
            return Err(schema("type must be E7"));
        }
        let mut contexts: HashMap<String, FourierContext> = HashMap::new();
        let mut fourier = HashMap::new();
        for fam in &raw.families {
            if !fourier.contains_key(&fam.group) {
                let g = parse_group(&fam.group)
                    .map_err(|e| schema(format!("family {}: {e}", fam.id)))?;
                let ctx = FourierContext::new(&g)?;
                fourier.insert(fam.group.clone(), FourierMatrix::from_context(&ctx)?);
                contexts.insert(fam.group.clone(), ctx);
            }
        }
        let ds = FamilyDataset {
            type_label: raw.type_label,
            provenance: raw.provenance,
            families: raw.families,
            fourier,
        };
        ds.validate_structure(&contexts)?;
        ds.validate_pinning()?;
        Ok(ds)
    }

    pub fn to_json_string(&self) -> String {
        let raw = RawDataset {
            type_label: self.type_label.clone(),
            provenance: self.provenance.clone(),
            families: self.families.clone(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }

    pub fn family_of(&self, label: &str) -> Option<&Family> {
        self.families.iter().find(|f| f.member(label).is_some())
    }

    /// The family of the two degree-512 characters.
    pub fn f0(&self) -> Result<&Family, FourierError> {
        self.family_of(LABEL_512_11)
            .ok_or_else(|| schema(format!("no family contains {LABEL_512_11}")))
    }

    /// The family of `φ_{56,3}`, which contains `x0`.
    pub fn x0_family(&self) -> Result<&Family, FourierError> {
        self.family_of(LABEL_56_3)
            .ok_or_else(|| schema(format!("no family contains {LABEL_56_3}")))
    }

    /// Label of `x0`: the unique non-principal member of the `φ_{56,3}`
    /// family.
    pub fn x0_label(&self) -> Result<&str, FourierError> {
        let fam = self.x0_family()?;
        let mut np = fam
            .members
            .iter()
            .filter(|m| m.kind != MemberKind::Principal);
        match (np.next(), np.next()) {
            (Some(m), None) => Ok(&m.label),
            _ => Err(schema(format!(
                "family {} must have exactly one non-principal member",
                fam.id
            ))),
        }
    }

    pub fn fourier_of(&self, family: &Family) -> &FourierMatrix {
        &self.fourier[&family.group]
    }

    pub fn transform<T: crate::arith::CycModule>(
        &self,
        family: &Family,
        direction: Direction,
        values: &BTreeMap<String, T>,
    ) -> Result<BTreeMap<String, T>, FourierError> {
        almost_transform(self.fourier_of(family), family, direction, values)
    }

    /// Number of unipotent characters, `|X̄(W)| = Σ_F |M(G_F)|`.
    pub fn num_unipotent(&self) -> usize {
        self.families
            .iter()
            .map(|f| self.fourier[&f.group].size())
            .sum()
    }

    pub fn principal_labels(&self) -> BTreeSet<String> {
        self.families
            .iter()
            .flat_map(|f| f.principal_labels().map(str::to_string))
            .collect()
    }

    fn validate_structure(
        &self,
        contexts: &HashMap<String, FourierContext>,
    ) -> Result<(), FourierError> {
        let mut seen = BTreeSet::new();
        let mut principal = 0usize;
        let mut deg_sq = 0u64;
        for fam in &self.families {
            let fm = &self.fourier[&fam.group];
            let ctx = &contexts[&fam.group];
            let pairs: BTreeSet<_> = fam.members.iter().map(|m| m.mpair).collect();
            if pairs.len() != fam.members.len() {
                return Err(schema(format!("family {}: repeated pairs", fam.id)));
            }
            if pairs != fm.mpairs.iter().copied().collect() {
                return Err(schema(format!(
                    "family {}: members do not cover M({})",
                    fam.id, fam.group
                )));
            }
            let has_512 = fam
                .principal_labels()
                .any(|l| parse_phi_label(l).is_some_and(|(d, _)| d == 512));
            for m in &fam.members {
                if !seen.insert(m.label.clone()) {
                    return Err(schema(format!("label {} appears twice", m.label)));
                }
                if m.delta != 1 && m.delta != -1 {
                    return Err(schema(format!("{}: delta must be ±1", m.label)));
                }
                if m.kind == MemberKind::Principal {
                    let (d, _) = parse_phi_label(&m.label)
                        .ok_or_else(|| schema(format!("bad principal label {}", m.label)))?;
                    principal += 1;
                    deg_sq += (d * d) as u64;
                }
                let mut want = ctx.eigenvalue(&m.mpair)?;
                if has_512 && m.kind != MemberKind::Principal {
                    want = &want * &zeta(4, 1);
                }
                if m.lambda != want {
                    return Err(schema(format!(
                        "{}: lambda {} differs from the eigenvalue rule {}",
                        m.label, m.lambda, want
                    )));
                }
            }
        }
        if principal != 60 || deg_sq != E7_ORDER {
            return Err(schema(format!(
                "principal labels: {principal} with Σ d² = {deg_sq}, expected 60 and {E7_ORDER}"
            )));
        }
        let f0 = self.f0()?;
        let labels: BTreeSet<&str> = f0.members.iter().map(|m| m.label.as_str()).collect();
        let want: BTreeSet<&str> = [LABEL_512_11, LABEL_512_12, LABEL_X1, LABEL_X2].into();
        if labels != want {
            return Err(schema(format!("F0 members {labels:?}, expected {want:?}")));
        }
        for (label, lam) in [(LABEL_X1, zeta(4, 1)), (LABEL_X2, -zeta(4, 1))] {
            let m = f0.member(label).unwrap();
            if m.kind != MemberKind::Cuspidal || m.delta != -1 || m.lambda != lam {
                return Err(schema(format!(
                    "{label} must be cuspidal with delta -1 and lambda {lam}"
                )));
            }
        }
        Ok(())
    }

    /// The pair assignment must reproduce the signs the unipotent values at
    /// `u0` are known to have.
    fn validate_pinning(&self) -> Result<(), FourierError> {
        let f0 = self.f0()?;
        let x1 = f0.member(LABEL_X1).unwrap().mpair.to_string();
        let x2 = f0.member(LABEL_X2).unwrap().mpair.to_string();
        // R_{x1}(u0) = R_{x2}(u0) = 1 (in units of ξq^{7/2}); other R_x vanish.
        let r: BTreeMap<String, CycNum> = self
            .fourier_of(f0)
            .mpairs
            .iter()
            .map(|x| {
                let s = x.to_string();
                let v = if s == x1 || s == x2 { 1 } else { 0 };
                (s, CycNum::from_integer(v))
            })
            .collect();
        let rho = self.transform(f0, Direction::RToRho, &r)?;
        if rho[LABEL_512_11] != CycNum::one() || rho[LABEL_512_12] != CycNum::from_integer(-1) {
            return Err(pinning(format!(
                "rho_512_11(u0), rho_512_12(u0) = {}, {} (units of xi*q^(7/2)), expected 1, -1",
                rho[LABEL_512_11], rho[LABEL_512_12]
            )));
        }
        let fam = self.x0_family()?;
        let x0 = fam.member(self.x0_label()?).unwrap().mpair.to_string();
        let r: BTreeMap<String, CycNum> = self
            .fourier_of(fam)
            .mpairs
            .iter()
            .map(|x| {
                let s = x.to_string();
                let v = CycNum::from_integer(i64::from(s == x0));
                (s, v)
            })
            .collect();
        let rho = self.transform(fam, Direction::RToRho, &r)?;
        let half = CycNum::from_ratio(1, 2);
        for (label, want) in [
            (LABEL_56_3, half.clone()),
            (LABEL_35_4, -&half),
            (LABEL_21_6, -&half),
        ] {
            match rho.get(label) {
                Some(v) if *v == want => {}
                other => {
                    return Err(pinning(format!(
                        "{label}(u0) = {other:?} in units of R_x0(u0), expected {want}"
                    )))
                }
            }
        }
        Ok(())
    }

    /// Principal labels must be exactly the labels of the trace dataset.
    pub fn check_against_traces(&self, traces: &CoxeterTraceDataset) -> Result<(), FourierError> {
        let ours = self.principal_labels();
        let theirs: BTreeSet<String> = traces.traces.keys().cloned().collect();
        if ours != theirs {
            return Err(schema(
                "principal labels differ from the trace dataset labels",
            ));
        }
        Ok(())
    }

    /// Coefficients `{x̄_ρ, x0}` for every member of the `x0` family.
    pub fn x0_coefficients(&self) -> Result<BTreeMap<String, CycNum>, FourierError> {
        let fam = self.x0_family()?;
        let x0 = fam.member(self.x0_label()?).unwrap().mpair;
        let fm = self.fourier_of(fam);
        Ok(fam
            .members
            .iter()
            .map(|m| (m.label.clone(), fm.entry(&m.mpair, &x0).unwrap().clone()))
            .collect())
    }

    /// Values at `u0` from almost-character values on one family.
    pub fn rho_from_r(
        &self,
        family: &Family,
        r: &BTreeMap<String, LaurentPoly>,
    ) -> Result<BTreeMap<String, LaurentPoly>, FourierError> {
        self.transform(family, Direction::RToRho, r)
    }
}

/// Load and validate a family dataset file.
pub fn load_family_dataset(path: impl AsRef<Path>) -> Result<FamilyDataset, FourierError> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| schema(format!("{}: {e}", path.as_ref().display())))?;
    FamilyDataset::from_json_str(&text)
}
