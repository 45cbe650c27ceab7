//! The bundled `E7` Coxeter-element trace data and its load-time checks.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::HeckeError;
use crate::arith::{CycNum, LaurentPoly};

/// Number of positive roots and Coxeter number of `E7`.
pub const E7_N: i64 = 63;
pub const E7_H: i64 = 18;
pub const E7_ORDER: u64 = 2_903_040;

/// Ordinary character data recorded next to each trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterData {
    pub degree: i64,
    pub b: i64,
    /// Value at a reflection.
    pub reflection_value: i64,
    /// Value at a Coxeter element.
    pub coxeter_value: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RawDataset {
    #[serde(rename = "type")]
    type_label: String,
    coxeter_word: Vec<usize>,
    #[serde(default)]
    provenance: String,
    characters: BTreeMap<String, CharacterData>,
    traces: BTreeMap<String, BTreeMap<String, String>>,
}

/// `Tr(T_{w_c}, V_φ)` for `w_c = s1·s2·…·s7` and every `φ ∈ Irr(W(E7))`.
#[derive(Clone, Debug)]
pub struct CoxeterTraceDataset {
    pub type_label: String,
    /// 0-based generators.
    pub coxeter_word: Vec<usize>,
    pub provenance: String,
    pub characters: BTreeMap<String, CharacterData>,
    pub traces: BTreeMap<String, LaurentPoly>,
}

/// Parse `phi_<degree>_<b>`.
pub fn parse_phi_label(label: &str) -> Option<(i64, i64)> {
    let rest = label.strip_prefix("phi_")?;
    let (d, b) = rest.split_once('_')?;
    Some((d.parse().ok()?, b.parse().ok()?))
}

/// `φ(c)·v^{2N(1 + φ(r)/φ(1))/h}`: the trace of a Coxeter element forced by
/// `T_c^h = T_{w0}²` acting as a scalar on `V_φ`. `None` when the exponent
/// is not an integer.
pub fn coxeter_trace_from_characters(
    degree: i64,
    reflection_value: i64,
    coxeter_value: i64,
    n_pos: i64,
    h: i64,
) -> Option<LaurentPoly> {
    if coxeter_value == 0 {
        return Some(LaurentPoly::zero());
    }
    let num = 2 * n_pos * (degree + reflection_value);
    let den = h * degree;
    if num % den != 0 {
        return None;
    }
    Some(LaurentPoly::monomial(
        CycNum::from_integer(coxeter_value),
        (num / den) as i32,
    ))
}

fn consistency(name: &str, detail: String) -> HeckeError {
    HeckeError::ConsistencyError {
        constraint: name.to_string(),
        detail,
    }
}

impl CoxeterTraceDataset {
    pub fn from_json_str(text: &str) -> Result<Self, HeckeError> {
        let raw: RawDataset =
            serde_json::from_str(text).map_err(|e| HeckeError::SchemaError(e.to_string()))?;
        let schema = |m: &str| HeckeError::SchemaError(m.to_string());
        if raw.type_label != "E7" {
            return Err(schema("type must be E7"));
        }
        if raw.coxeter_word != (1..=7).collect::<Vec<_>>() {
            return Err(schema("coxeter_word must be [1,2,3,4,5,6,7]"));
        }
        if raw.characters.keys().ne(raw.traces.keys()) {
            return Err(schema("characters and traces must have the same labels"));
        }
        for (label, c) in &raw.characters {
            match parse_phi_label(label) {
                Some((d, b)) if d == c.degree && b == c.b => {}
                _ => return Err(schema(&format!("label {label} does not match its data"))),
            }
        }
        let mut traces = BTreeMap::new();
        for (label, m) in &raw.traces {
            let p = LaurentPoly::from_map(m)
                .map_err(|e| HeckeError::SchemaError(format!("{label}: {e}")))?;
            traces.insert(label.clone(), p);
        }
        let ds = CoxeterTraceDataset {
            type_label: raw.type_label,
            coxeter_word: raw.coxeter_word.iter().map(|s| s - 1).collect(),
            provenance: raw.provenance,
            characters: raw.characters,
            traces,
        };
        ds.validate()?;
        Ok(ds)
    }

    pub fn to_json_string(&self) -> String {
        let raw = RawDataset {
            type_label: self.type_label.clone(),
            coxeter_word: self.coxeter_word.iter().map(|s| s + 1).collect(),
            provenance: self.provenance.clone(),
            characters: self.characters.clone(),
            traces: self
                .traces
                .iter()
                .map(|(k, v)| (k.clone(), v.to_map()))
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }

    pub fn trace(&self, label: &str) -> Result<&LaurentPoly, HeckeError> {
        self.traces
            .get(label)
            .ok_or_else(|| HeckeError::UnsupportedLabel(label.to_string()))
    }

    /// `Tr(56_3) − Tr(35_4) − Tr(21_6)`.
    pub fn combination_56_35_21(&self) -> Result<LaurentPoly, HeckeError> {
        Ok(&(self.trace("phi_56_3")? - self.trace("phi_35_4")?) - self.trace("phi_21_6")?)
    }

    /// `Tr(512_11) − Tr(512_12)`.
    pub fn difference_512(&self) -> Result<LaurentPoly, HeckeError> {
        Ok(self.trace("phi_512_11")? - self.trace("phi_512_12")?)
    }

    /// Every load-time constraint; the first violation is reported.
    pub fn validate(&self) -> Result<(), HeckeError> {
        if self.traces.len() != 60 {
            return Err(consistency(
                "class_count",
                format!("expected 60 characters, found {}", self.traces.len()),
            ));
        }
        let deg_sq: i64 = self.characters.values().map(|c| c.degree * c.degree).sum();
        if deg_sq as u64 != E7_ORDER {
            return Err(consistency(
                "degree_squares",
                format!("sum of squared degrees is {deg_sq}"),
            ));
        }
        for (label, c) in &self.characters {
            let at_one = self.traces[label].eval_at_one();
            if at_one != CycNum::from_integer(c.coxeter_value) {
                return Err(consistency(
                    "specialization",
                    format!(
                        "{label}: trace at v=1 is {at_one}, class value {}",
                        c.coxeter_value
                    ),
                ));
            }
        }
        let regular: i64 = self
            .characters
            .values()
            .map(|c| c.degree * c.coxeter_value)
            .sum();
        let norm: i64 = self
            .characters
            .values()
            .map(|c| c.coxeter_value.pow(2))
            .sum();
        if regular != 0 || norm != E7_H {
            return Err(consistency(
                "column_orthogonality",
                format!("Σ φ(1)φ(c) = {regular}, Σ φ(c)² = {norm}"),
            ));
        }
        for (label, c) in &self.characters {
            let expected = coxeter_trace_from_characters(
                c.degree,
                c.reflection_value,
                c.coxeter_value,
                E7_N,
                E7_H,
            );
            if expected.as_ref() != Some(&self.traces[label]) {
                return Err(consistency(
                    "eigenvalue_exponent",
                    format!(
                        "{label}: trace {} is not φ(c)·v^(2N(1+φ(r)/φ(1))/h)",
                        self.traces[label]
                    ),
                ));
            }
        }
        if self.traces.get("phi_1_0") != Some(&LaurentPoly::q_pow(7)) {
            return Err(consistency("trivial", "phi_1_0 must be q^7".into()));
        }
        if self.traces.get("phi_1_63") != Some(&LaurentPoly::from(-1)) {
            return Err(consistency("sign", "phi_1_63 must be -1".into()));
        }
        let comb = self.combination_56_35_21()?;
        if comb != LaurentPoly::q_pow(5).scale(&CycNum::from_integer(2)) {
            return Err(consistency(
                "combination_2q5",
                format!("Tr(56_3) - Tr(35_4) - Tr(21_6) = {comb}"),
            ));
        }
        let diff = self.difference_512()?;
        if diff != LaurentPoly::monomial(CycNum::from_integer(2), 7) {
            return Err(consistency(
                "difference_512",
                format!("Tr(512_11) - Tr(512_12) = {diff}"),
            ));
        }
        Ok(())
    }
}

/// Load and validate a trace dataset file.
pub fn load_coxeter_traces(path: impl AsRef<Path>) -> Result<CoxeterTraceDataset, HeckeError> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| HeckeError::SchemaError(format!("{}: {e}", path.as_ref().display())))?;
    CoxeterTraceDataset::from_json_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(parse_phi_label("phi_512_11"), Some((512, 11)));
        assert_eq!(parse_phi_label("phi_512"), None);
        assert_eq!(parse_phi_label("E7[z4]"), None);
    }

    #[test]
    fn trace_formula_examples() {
        // Trivial: φ(r) = 1, φ(c) = 1 gives v^14 = q^7.
        assert_eq!(
            coxeter_trace_from_characters(1, 1, 1, E7_N, E7_H),
            Some(LaurentPoly::q_pow(7))
        );
        // Degree 512 with φ(r) = 0 gives ±v^7.
        assert_eq!(
            coxeter_trace_from_characters(512, 0, -1, E7_N, E7_H),
            Some(-LaurentPoly::v_pow(7))
        );
        // A2 reflection representation: N = 3, h = 3, φ(r) = 0, φ(c) = −1.
        assert_eq!(
            coxeter_trace_from_characters(2, 0, -1, 3, 3),
            Some(-LaurentPoly::q_pow(1))
        );
    }
}
