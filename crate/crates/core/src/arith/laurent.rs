//! Laurent polynomials in `v` with cyclotomic coefficients; `q = v²`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ArithError, CycNum};

/// Finite sum `Σ c_k v^k`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, CycNum>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(CycNum::one())
    }

    pub fn constant(c: CycNum) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·v^k`.
    pub fn monomial(c: CycNum, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    /// `v^k`.
    pub fn v_pow(k: i32) -> Self {
        Self::monomial(CycNum::one(), k)
    }

    /// `q^k = v^{2k}`.
    pub fn q_pow(k: i32) -> Self {
        Self::v_pow(2 * k)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, CycNum)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in it {
            p.add_term(k, &c);
        }
        p
    }

    fn add_term(&mut self, k: i32, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(CycNum::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<i32, CycNum> {
        &self.terms
    }

    pub fn coeff(&self, k: i32) -> CycNum {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    /// Lowest exponent present.
    pub fn valuation(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent present.
    pub fn degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, x)| (k, x * c)).collect(),
        }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, x)| (e + k, x.clone()))
                .collect(),
        }
    }

    /// Coefficientwise complex conjugation; `v` is real.
    pub fn conj(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, x)| (k, x.conj())).collect(),
        }
    }

    /// Value at `v = 1`.
    pub fn eval_at_one(&self) -> CycNum {
        self.terms.values().cloned().sum()
    }

    /// Value at `v = 1` times `sign^k`, i.e. at `v = ±1`.
    pub fn eval_at_sign(&self, negative: bool) -> CycNum {
        self.terms
            .iter()
            .map(|(&k, c)| {
                if negative && k % 2 != 0 {
                    -c
                } else {
                    c.clone()
                }
            })
            .sum()
    }

    /// Evaluate at a rational `v`.
    pub fn eval_rational(&self, v: &BigRational) -> Result<CycNum, ArithError> {
        if v.is_zero() && self.terms.keys().any(|&k| k < 0) {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self
            .terms
            .iter()
            .map(|(&k, c)| c.scale(&rational_pow(v, k)))
            .sum())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Serialized form: exponent (decimal string) to coefficient text.
    pub fn to_map(&self) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|(k, c)| (k.to_string(), c.to_string()))
            .collect()
    }

    pub fn from_map(m: &BTreeMap<String, String>) -> Result<Self, ArithError> {
        let mut p = LaurentPoly::zero();
        for (k, c) in m {
            let k: i32 = k.trim().parse().map_err(|_| ArithError::Parse(k.clone()))?;
            let c: CycNum = c.parse()?;
            p.add_term(k, &c);
        }
        Ok(p)
    }
}

fn rational_pow(v: &BigRational, k: i32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= v;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

impl From<CycNum> for LaurentPoly {
    fn from(c: CycNum) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        LaurentPoly::constant(CycNum::from_integer(n))
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c);
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, &-c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, &(x * y));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Display for LaurentPoly {
    /// `c*v^k + ...`, descending exponents; multi-term coefficients are
    /// parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (&k, c) in self.terms.iter().rev() {
            let text = c.to_string();
            let compound = text[1..].contains(" + ") || text[1..].contains(" - ");
            let (neg, mag) = if compound {
                (false, format!("({text})"))
            } else if let Some(rest) = text.strip_prefix('-') {
                (true, rest.to_string())
            } else {
                (false, text)
            };
            let vpart = match k {
                0 => String::new(),
                1 => "v".to_string(),
                _ => format!("v^{k}"),
            };
            let body = match (mag.as_str(), vpart.is_empty()) {
                (_, true) => mag.clone(),
                ("1", false) => vpart,
                (_, false) => format!("{mag}*{vpart}"),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        f.write_str(&out)
    }
}

impl FromStr for LaurentPoly {
    type Err = ArithError;

    /// Parses the canonical rendering, e.g. `-z4*v^7 + (1 + z3)*v^2 - 1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // Split into signed terms at top-level `+`/`-`.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut depth = 0i32;
        for ch in compact.chars() {
            match ch {
                '(' => {
                    depth += 1;
                    cur.push(ch);
                }
                ')' => {
                    depth -= 1;
                    cur.push(ch);
                }
                '+' | '-' if depth == 0 && !cur.ends_with('^') => {
                    if !cur.is_empty() {
                        terms.push((neg, std::mem::take(&mut cur)));
                    } else if !terms.is_empty() {
                        return Err(bad());
                    }
                    neg = ch == '-';
                }
                _ => cur.push(ch),
            }
        }
        if depth != 0 || cur.is_empty() {
            return Err(bad());
        }
        terms.push((neg, cur));
        let mut p = LaurentPoly::zero();
        for (neg, t) in terms {
            let (coef, k) = match t.rfind('v') {
                Some(pos) => {
                    let exp = &t[pos + 1..];
                    let k = if exp.is_empty() {
                        1
                    } else {
                        exp.strip_prefix('^')
                            .and_then(|e| e.parse::<i32>().ok())
                            .ok_or_else(bad)?
                    };
                    let c = t[..pos].strip_suffix('*').unwrap_or(&t[..pos]);
                    if t[..pos].ends_with('*') == c.is_empty() && !c.is_empty() {
                        return Err(bad());
                    }
                    (c.to_string(), k)
                }
                None => (t.clone(), 0),
            };
            let coef = coef
                .strip_prefix('(')
                .and_then(|c| c.strip_suffix(')'))
                .unwrap_or(&coef)
                .to_string();
            let mut c: CycNum = if coef.is_empty() {
                CycNum::one()
            } else {
                coef.parse()?
            };
            if neg {
                c = -c;
            }
            p.add_term(k, &c);
        }
        Ok(p)
    }
}

impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Exact element `rational + sqrt_coeff·√p` of `Q(ζ_m)(√p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSurd {
    pub rational: CycNum,
    pub sqrt_coeff: CycNum,
    pub p: u32,
}

impl QuadSurd {
    /// Value as an element of a cyclotomic field, using the quadratic Gauss
    /// sum for `√p`.
    pub fn to_cyc(&self) -> CycNum {
        if self.sqrt_coeff.is_zero() {
            return self.rational.clone();
        }
        &self.rational + &(&self.sqrt_coeff * &sqrt_prime(self.p))
    }

    pub fn is_rational(&self) -> bool {
        self.sqrt_coeff.is_zero()
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sqrt_coeff.is_zero() {
            write!(f, "{}", self.rational)
        } else if self.rational.is_zero() {
            write!(f, "({})*sqrt({})", self.sqrt_coeff, self.p)
        } else {
            write!(
                f,
                "{} + ({})*sqrt({})",
                self.rational, self.sqrt_coeff, self.p
            )
        }
    }
}

/// Positive square root of an odd or even prime inside a cyclotomic field.
fn sqrt_prime(p: u32) -> CycNum {
    if p == 2 {
        return &CycNum::root_of_unity(8, 1) + &CycNum::root_of_unity(8, 7);
    }
    // Gauss sum g = Σ (a/p) ζ_p^a, g² = (−1/p)·p.
    let mut g = CycNum::zero();
    for a in 1..p {
        let leg = legendre(a, p);
        let t = CycNum::root_of_unity(p, a as i64);
        if leg == 1 {
            g += &t;
        } else {
            g -= &t;
        }
    }
    if p % 4 == 1 {
        g
    } else {
        // g = i√p for p ≡ 3 mod 4.
        &g * &CycNum::root_of_unity(4, 3)
    }
}

fn legendre(a: u32, p: u32) -> i32 {
    let mut r: u64 = 1;
    let mut b = a as u64 % p as u64;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Substitute `v ↦ √q` with `q = p^fexp`, `√p > 0`.
pub fn laurent_specialize(f: &LaurentPoly, p: u32, fexp: u32) -> Result<QuadSurd, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::UnsupportedSpecialization(format!(
            "{p} is not prime"
        )));
    }
    if fexp == 0 {
        return Err(ArithError::UnsupportedSpecialization(
            "field exponent must be positive".into(),
        ));
    }
    let pr = BigRational::from_integer(BigInt::from(p));
    let mut rational = CycNum::zero();
    let mut sqrt_coeff = CycNum::zero();
    for (&k, c) in f.terms() {
        // (√p)^{k·fexp} = p^{⌊k·fexp/2⌋}·(√p)^{k·fexp mod 2}.
        let e = k as i64 * fexp as i64;
        let half = e.div_euclid(2);
        let odd = e.rem_euclid(2) == 1;
        let scale = rational_pow(&pr, half as i32);
        let term = c.scale(&scale);
        if odd {
            sqrt_coeff += &term;
        } else {
            rational += &term;
        }
    }
    Ok(QuadSurd {
        rational,
        sqrt_coeff,
        p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specialize_examples() {
        let v7 = LaurentPoly::v_pow(7);
        let r = laurent_specialize(&v7, 2, 2).unwrap();
        assert!(r.is_rational());
        assert_eq!(r.rational, CycNum::from_integer(128));
        let qm1 = &LaurentPoly::q_pow(1) - &LaurentPoly::one();
        assert_eq!(
            laurent_specialize(&qm1, 2, 1).unwrap().to_cyc(),
            CycNum::one()
        );
        let r = laurent_specialize(&v7, 2, 1).unwrap();
        assert_eq!(r.rational, CycNum::zero());
        assert_eq!(r.sqrt_coeff, CycNum::from_integer(8));
        assert_eq!(r.to_string(), "(8)*sqrt(2)");
    }

    #[test]
    fn specialize_rejects_bad_arguments() {
        let f = LaurentPoly::v_pow(1);
        assert!(laurent_specialize(&f, 4, 1).is_err());
        assert!(laurent_specialize(&f, 3, 0).is_err());
    }

    #[test]
    fn sqrt_prime_squares() {
        for p in [2, 3, 5, 7, 11, 13] {
            let s = sqrt_prime(p);
            assert_eq!(&s * &s, CycNum::from_integer(p as i64), "p = {p}");
        }
    }

    #[test]
    fn negative_exponent_specialization() {
        let f = LaurentPoly::v_pow(-1);
        let r = laurent_specialize(&f, 3, 1).unwrap();
        assert_eq!(r.sqrt_coeff, CycNum::from_ratio(1, 3));
    }

    #[test]
    fn render_and_parse() {
        let z4 = CycNum::root_of_unity(4, 1);
        let p = LaurentPoly::from_terms([
            (7, -z4.clone()),
            (2, &CycNum::one() + &CycNum::root_of_unity(3, 1)),
            (0, CycNum::from_integer(-1)),
            (-3, CycNum::from_ratio(1, 2)),
        ]);
        let s = p.to_string();
        assert_eq!(s, "-z4*v^7 + (1 + z3)*v^2 - 1 + 1/2*v^-3");
        assert_eq!(s.parse::<LaurentPoly>().unwrap(), p);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!("v".parse::<LaurentPoly>().unwrap(), LaurentPoly::v_pow(1));
        assert_eq!(
            "-v^2".parse::<LaurentPoly>().unwrap(),
            -LaurentPoly::q_pow(1)
        );
        assert!("v^".parse::<LaurentPoly>().is_err());
        assert!("(1 + z3".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn map_round_trip() {
        let p: LaurentPoly = "2*v^14 - z4*v^7 + 3".parse().unwrap();
        assert_eq!(LaurentPoly::from_map(&p.to_map()).unwrap(), p);
    }

    #[test]
    fn no_stored_zeros() {
        let p = &LaurentPoly::v_pow(3) - &LaurentPoly::v_pow(3);
        assert!(p.is_zero());
        assert!(p.terms().is_empty());
    }
}
