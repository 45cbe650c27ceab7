//! The generic Iwahori–Hecke algebra in the basis `{T_w}`.
//!
//! Multiplication uses `T_s·T_w = T_{sw}` when `ℓ(sw) = ℓ(w) + 1` and
//! `T_s·T_w = q·T_{sw} + (q − 1)·T_w` otherwise, applied letter by letter
//! along a reduced word of the left factor.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::arith::LaurentPoly;
use crate::coxeter::{RootSystem, WeylElement};

use super::HeckeError;

/// A finite combination `Σ c_w·T_w`; zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct HeckeElement {
    rs: Arc<RootSystem>,
    support: BTreeMap<WeylElement, LaurentPoly>,
}

impl PartialEq for HeckeElement {
    fn eq(&self, other: &Self) -> bool {
        self.rs.datum == other.rs.datum && self.support == other.support
    }
}

impl HeckeElement {
    pub fn zero(rs: &Arc<RootSystem>) -> Self {
        HeckeElement {
            rs: Arc::clone(rs),
            support: BTreeMap::new(),
        }
    }

    /// `T_e`.
    pub fn one(rs: &Arc<RootSystem>) -> Self {
        Self::basis(rs, rs.identity())
    }

    /// `T_w`.
    pub fn basis(rs: &Arc<RootSystem>, w: WeylElement) -> Self {
        Self::term(rs, w, LaurentPoly::one())
    }

    /// `c·T_w`.
    pub fn term(rs: &Arc<RootSystem>, w: WeylElement, c: LaurentPoly) -> Self {
        let mut h = Self::zero(rs);
        h.add_term(w, &c);
        h
    }

    /// `T_w` for the product of a word of generators.
    pub fn from_word(rs: &Arc<RootSystem>, word: &[usize]) -> Result<Self, HeckeError> {
        Ok(Self::basis(rs, rs.element_from_word(word)?))
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn support(&self) -> &BTreeMap<WeylElement, LaurentPoly> {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn coeff(&self, w: &WeylElement) -> LaurentPoly {
        self.support.get(w).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, w: WeylElement, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.support.entry(w.clone()).or_default();
        *e = &*e + c;
        if e.is_zero() {
            self.support.remove(&w);
        }
    }

    fn check(&self, other: &Self) -> Result<(), HeckeError> {
        if self.rs.datum != other.rs.datum {
            Err(HeckeError::DatumMismatch)
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, HeckeError> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.support {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, HeckeError> {
        self.add(&other.scale(&LaurentPoly::from(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(&self.rs);
        for (w, x) in &self.support {
            out.add_term(w.clone(), &(x * c));
        }
        out
    }

    /// `T_s·self`.
    pub fn left_mul_simple(&self, s: usize) -> Self {
        let q = LaurentPoly::q_pow(1);
        let qm1 = &q - &LaurentPoly::one();
        let mut out = Self::zero(&self.rs);
        for (w, c) in &self.support {
            let sw = self.rs.mul_simple_left(s, w);
            if sw.length() > w.length() {
                out.add_term(sw, c);
            } else {
                out.add_term(sw, &(c * &q));
                out.add_term(w.clone(), &(c * &qm1));
            }
        }
        out
    }

    /// `T_w·self` by left recursion on a reduced word of `w`.
    pub fn left_mul_basis(&self, w: &WeylElement) -> Self {
        let word = self.rs.reduced_word(w);
        let mut out = self.clone();
        for &s in word.iter().rev() {
            out = out.left_mul_simple(s);
        }
        out
    }
}

/// Bilinear product in the Hecke algebra.
pub fn t_multiply(x: &HeckeElement, y: &HeckeElement) -> Result<HeckeElement, HeckeError> {
    x.check(y)?;
    let mut out = HeckeElement::zero(&x.rs);
    for (w, c) in &x.support {
        let part = y.left_mul_basis(w).scale(c);
        for (u, d) in part.support {
            out.add_term(u, &d);
        }
    }
    Ok(out)
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .support
            .iter()
            .map(|(w, c)| {
                let word: Vec<String> = self
                    .rs
                    .reduced_word(w)
                    .iter()
                    .map(|s| (s + 1).to_string())
                    .collect();
                format!("({c})*T[{}]", word.join(","))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Arc<RootSystem> {
        Arc::new(RootSystem::from_type("A2").unwrap())
    }

    #[test]
    fn quadratic_rule() {
        let rs = a2();
        let ts = HeckeElement::from_word(&rs, &[0]).unwrap();
        let prod = t_multiply(&ts, &ts).unwrap();
        let q = LaurentPoly::q_pow(1);
        let expected = HeckeElement::one(&rs)
            .scale(&q)
            .add(&ts.scale(&(&q - &LaurentPoly::one())))
            .unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn length_adding_product() {
        let rs = a2();
        let t1 = HeckeElement::from_word(&rs, &[0]).unwrap();
        let t2 = HeckeElement::from_word(&rs, &[1]).unwrap();
        assert_eq!(
            t_multiply(&t1, &t2).unwrap(),
            HeckeElement::from_word(&rs, &[0, 1]).unwrap()
        );
    }

    #[test]
    fn quadratic_relation_vanishes() {
        let rs = a2();
        let ts = HeckeElement::from_word(&rs, &[1]).unwrap();
        let q = LaurentPoly::q_pow(1);
        let one = HeckeElement::one(&rs);
        let a = ts.sub(&one.scale(&q)).unwrap();
        let b = ts.add(&one).unwrap();
        assert!(t_multiply(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn identity_is_neutral_and_mismatch_detected() {
        let rs = a2();
        let x = HeckeElement::from_word(&rs, &[0, 1]).unwrap();
        let one = HeckeElement::one(&rs);
        assert_eq!(t_multiply(&one, &x).unwrap(), x);
        assert_eq!(t_multiply(&x, &one).unwrap(), x);
        let b2 = Arc::new(RootSystem::from_type("B2").unwrap());
        let y = HeckeElement::one(&b2);
        assert_eq!(t_multiply(&x, &y), Err(HeckeError::DatumMismatch));
    }
}
