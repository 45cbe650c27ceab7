//! Explicit matrix models of irreducible Hecke algebra modules.
//!
//! Labels:
//! * `triv`, `sign`: `T_s ↦ q` and `T_s ↦ −1` for every generator;
//! * `lin:<word>`: one letter per generator, `q` or `s`, constant on
//!   generators joined by an odd bond;
//! * `dihedral:<j>`: the two-dimensional models of an irreducible rank-2
//!   type with `m ∈ {3, 4, 6}` and `1 ≤ j < m/2`;
//! * `[λ1,λ2,…]`: the left-cell model of a partition of `n` for `A_{n−1}`,
//!   `n ≤ 6`.

use super::matrix::{self, LMatrix};
use super::wgraph::type_a_models;
use super::HeckeError;
use crate::arith::{CycNum, LaurentPoly};
use crate::coxeter::{CartanDatum, RootSystem, WeylElement};

/// A representation of the generic Hecke algebra by one matrix per
/// generator.
#[derive(Clone, Debug)]
pub struct IrrepModel {
    pub label: String,
    pub datum: CartanDatum,
    pub matrices: Vec<LMatrix>,
    pub dim: usize,
}

fn q() -> LaurentPoly {
    LaurentPoly::q_pow(1)
}

fn scalar(x: LaurentPoly) -> LMatrix {
    vec![vec![x]]
}

fn is_type_a(d: &CartanDatum) -> bool {
    let n = d.rank();
    d.type_label == format!("A{n}")
}

/// Parse `[3,2]`, `(3,2)` or `3,2` into a partition.
pub fn parse_partition(label: &str) -> Option<Vec<usize>> {
    let body = label
        .trim()
        .trim_start_matches(['[', '('])
        .trim_end_matches([']', ')']);
    let parts: Vec<usize> = body
        .split(',')
        .map(|t| t.trim().parse::<usize>().ok().filter(|&x| x > 0))
        .collect::<Option<_>>()?;
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Some(parts)
}

pub fn partition_label(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Build the model named by `label` for the root system's datum.
pub fn build_irrep_model(rs: &RootSystem, label: &str) -> Result<IrrepModel, HeckeError> {
    let datum = rs.datum.clone();
    let n = datum.rank();
    let unsupported = || HeckeError::UnsupportedLabel(label.to_string());
    let model = |matrices: Vec<LMatrix>| {
        let dim = matrices.first().map_or(1, Vec::len);
        IrrepModel {
            label: label.to_string(),
            datum: datum.clone(),
            matrices,
            dim,
        }
    };
    if label == "triv" {
        return Ok(model(vec![scalar(q()); n]));
    }
    if label == "sign" {
        return Ok(model(vec![scalar(LaurentPoly::from(-1)); n]));
    }
    if let Some(pattern) = label.strip_prefix("lin:") {
        let letters: Vec<char> = pattern.chars().collect();
        if letters.len() != n || letters.iter().any(|c| !matches!(c, 'q' | 's')) {
            return Err(unsupported());
        }
        for i in 0..n {
            for j in 0..n {
                if datum.coxeter_m(i, j) % 2 == 1 && letters[i] != letters[j] {
                    return Err(unsupported());
                }
            }
        }
        let mats = letters
            .iter()
            .map(|&c| scalar(if c == 'q' { q() } else { LaurentPoly::from(-1) }))
            .collect();
        return Ok(model(mats));
    }
    if let Some(j) = label.strip_prefix("dihedral:") {
        let j: u32 = j.parse().map_err(|_| unsupported())?;
        if n != 2 || !datum.adjacent(0, 1) {
            return Err(unsupported());
        }
        let m = datum.coxeter_m(0, 1);
        if j == 0 || 2 * j >= m {
            return Err(unsupported());
        }
        // b = q·(2 + 2cos(2πj/m)), an integer multiple of q for m ∈ {3,4,6}.
        let c: i64 = match (m, j) {
            (3, 1) => 1,
            (4, 1) => 2,
            (6, 1) => 3,
            (6, 2) => 1,
            _ => return Err(unsupported()),
        };
        let zero = LaurentPoly::zero;
        let ts = vec![
            vec![LaurentPoly::from(-1), zero()],
            vec![LaurentPoly::one(), q()],
        ];
        let tt = vec![
            vec![q(), q().scale(&CycNum::from_integer(c))],
            vec![zero(), LaurentPoly::from(-1)],
        ];
        return Ok(model(vec![ts, tt]));
    }
    if let Some(p) = parse_partition(label) {
        if !is_type_a(&datum) || p.iter().sum::<usize>() != n + 1 || n + 1 > 6 {
            return Err(unsupported());
        }
        let models = type_a_models(rs).ok_or_else(unsupported)?;
        let (_, mats) = models
            .by_partition
            .iter()
            .find(|(shape, _)| *shape == p)
            .ok_or_else(unsupported)?;
        let mut m = model(mats.clone());
        m.label = partition_label(&p);
        return Ok(m);
    }
    Err(unsupported())
}

/// Labels of a complete set of irreducible models, when one is available.
pub fn supported_labels(rs: &RootSystem) -> Vec<String> {
    let d = &rs.datum;
    let n = d.rank();
    if is_type_a(d) && n < 6 {
        if let Some(models) = type_a_models(rs) {
            return models
                .by_partition
                .iter()
                .map(|(p, _)| partition_label(p))
                .collect();
        }
    }
    let mut out = vec!["triv".to_string(), "sign".to_string()];
    if n == 2 && d.adjacent(0, 1) {
        let m = d.coxeter_m(0, 1);
        if m % 2 == 0 {
            out.push("lin:qs".into());
            out.push("lin:sq".into());
        }
        for j in 1..m.div_ceil(2) {
            if 2 * j < m {
                out.push(format!("dihedral:{j}"));
            }
        }
    }
    out
}

/// `Tr(T_w, V)` along a reduced word of `w`.
pub fn hecke_trace(
    rs: &RootSystem,
    model: &IrrepModel,
    w: &WeylElement,
) -> Result<LaurentPoly, HeckeError> {
    if model.datum != rs.datum || w.perm().len() != rs.num_roots() {
        return Err(HeckeError::DatumMismatch);
    }
    let word = rs.reduced_word(w);
    trace_of_word(model, &word)
}

/// Trace of the product of generator matrices along any word.
pub fn trace_of_word(model: &IrrepModel, word: &[usize]) -> Result<LaurentPoly, HeckeError> {
    let mut acc = matrix::identity(model.dim);
    for &s in word {
        let m = model.matrices.get(s).ok_or(HeckeError::DatumMismatch)?;
        acc = matrix::mul(&acc, m);
    }
    Ok(matrix::trace(&acc))
}

/// `(M − q)(M + 1) = 0` for every generator matrix.
pub fn quadratic_relations_hold(model: &IrrepModel) -> bool {
    let id = matrix::identity(model.dim);
    model.matrices.iter().all(|m| {
        let a = matrix::sub(m, &matrix::scale(&id, &q()));
        let b = matrix::add(m, &id);
        matrix::is_zero(&matrix::mul(&a, &b))
    })
}

/// Alternating products of length `m_ij` agree for every pair.
pub fn braid_relations_hold(model: &IrrepModel) -> bool {
    let n = model.datum.rank();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let m = model.datum.coxeter_m(i, j) as usize;
            let alt = |a: usize, b: usize| {
                let mut acc = matrix::identity(model.dim);
                for k in 0..m {
                    let g = if k % 2 == 0 { a } else { b };
                    acc = matrix::mul(&acc, &model.matrices[g]);
                }
                acc
            };
            alt(i, j) == alt(j, i)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimensional_models() {
        let rs = RootSystem::from_type("A2").unwrap();
        let w = rs.element_from_word(&[0, 1, 0]).unwrap();
        let triv = build_irrep_model(&rs, "triv").unwrap();
        assert_eq!(hecke_trace(&rs, &triv, &w).unwrap(), LaurentPoly::q_pow(3));
        let sign = build_irrep_model(&rs, "sign").unwrap();
        assert_eq!(hecke_trace(&rs, &sign, &w).unwrap(), LaurentPoly::from(-1));
    }

    #[test]
    fn a2_two_dimensional_trace() {
        let rs = RootSystem::from_type("A2").unwrap();
        let c = rs.element_from_word(&[0, 1]).unwrap();
        for label in ["dihedral:1", "[2,1]"] {
            let m = build_irrep_model(&rs, label).unwrap();
            assert_eq!(
                hecke_trace(&rs, &m, &c).unwrap(),
                -LaurentPoly::q_pow(1),
                "{label}"
            );
            assert_eq!(
                hecke_trace(&rs, &m, &c).unwrap().eval_at_one(),
                CycNum::from_integer(-1)
            );
        }
    }

    #[test]
    fn unsupported_labels() {
        let rs = RootSystem::from_type("A2").unwrap();
        for bad in ["lin:qs", "dihedral:2", "[2,2]", "foo", "lin:q"] {
            assert!(matches!(
                build_irrep_model(&rs, bad),
                Err(HeckeError::UnsupportedLabel(_))
            ));
        }
        let b2 = RootSystem::from_type("B2").unwrap();
        assert!(build_irrep_model(&b2, "lin:qs").is_ok());
        assert!(build_irrep_model(&b2, "[2,1]").is_err());
    }

    #[test]
    fn datum_mismatch() {
        let a2 = RootSystem::from_type("A2").unwrap();
        let b2 = RootSystem::from_type("B2").unwrap();
        let m = build_irrep_model(&a2, "triv").unwrap();
        assert_eq!(
            hecke_trace(&b2, &m, &b2.identity()),
            Err(HeckeError::DatumMismatch)
        );
    }
}
