//! Elements of cyclotomic fields `Q(ζ_m)` in the power basis.
//!
//! An element of order `m` is stored as the coefficient vector of its
//! representative of degree `< φ(m)` modulo the `m`-th cyclotomic polynomial.
//! Operands of different orders are lifted to the least common multiple
//! before combining.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// Exact element of a cyclotomic field.
#[derive(Clone, Debug)]
pub struct CycNum {
    order: u32,
    coeffs: Vec<BigRational>,
}

/// Euler's totient.
pub fn euler_phi(m: u32) -> usize {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn divisors(m: u32) -> Vec<u32> {
    (1..=m).filter(|d| m % d == 0).collect()
}

type PolyCache = RwLock<HashMap<u32, Arc<Vec<i64>>>>;

fn cyclotomic_cache() -> &'static PolyCache {
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients (ascending, monic) of the `m`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    assert!(m > 0, "cyclotomic polynomial of order 0");
    if let Some(p) = cyclotomic_cache().read().unwrap().get(&m) {
        return Arc::clone(p);
    }
    // x^m - 1 divided by every Φ_d with d | m, d < m.
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in divisors(m) {
        if d == m {
            continue;
        }
        let den = cyclotomic_polynomial(d);
        num = exact_div_monic(&num, &den);
    }
    let arc = Arc::new(num);
    cyclotomic_cache()
        .write()
        .unwrap()
        .insert(m, Arc::clone(&arc));
    arc
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut quot = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Reduce a dense polynomial in `ζ_m` (any length) modulo `Φ_m`.
fn reduce(order: u32, mut poly: Vec<BigRational>) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(order);
    let deg = phi.len() - 1;
    if poly.len() > deg {
        for k in (deg..poly.len()).rev() {
            let c = std::mem::replace(&mut poly[k], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for (j, &pj) in phi.iter().enumerate().take(deg) {
                if pj != 0 {
                    poly[k - deg + j] -= &c * BigRational::from_integer(BigInt::from(pj));
                }
            }
        }
        poly.truncate(deg);
    }
    poly.resize(deg, BigRational::zero());
    poly
}

impl CycNum {
    /// Build from a power-basis coefficient vector of any length; reduces.
    pub fn from_power_coeffs(order: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        CycNum {
            order,
            coeffs: reduce(order, coeffs),
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        CycNum {
            order: 1,
            coeffs: vec![r],
        }
    }

    /// `ζ_m^k` for the primitive root `ζ_m = exp(2πi/m)`.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut c = vec![BigRational::zero(); e + 1];
        c[e] = BigRational::one();
        Self::from_power_coeffs(order, c)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coefficients, length `φ(order)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// Rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        let s = self.shrink();
        if s.order == 1 {
            Some(s.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Same element written over `Q(ζ_target)`; `order` must divide `target`.
    pub fn lift(&self, target: u32) -> CycNum {
        assert!(
            target % self.order == 0,
            "cannot lift order {} to {}",
            self.order,
            target
        );
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[k * step] = c.clone();
            }
        }
        CycNum::from_power_coeffs(target, poly)
    }

    fn common(&self, other: &CycNum) -> (CycNum, CycNum) {
        let m = self.order.lcm(&other.order);
        (self.lift(m), other.lift(m))
    }

    /// Image under `ζ ↦ ζ^{-1}` (complex conjugation).
    pub fn conj(&self) -> CycNum {
        let m = self.order as usize;
        let mut poly = vec![BigRational::zero(); m];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(m - k) % m] += c;
            }
        }
        CycNum::from_power_coeffs(self.order, poly)
    }

    /// Galois automorphism `ζ_m ↦ ζ_m^j` for `gcd(j, m) = 1`.
    pub fn galois(&self, j: i64) -> CycNum {
        let m = self.order as i64;
        assert_eq!(j.gcd(&m), 1, "exponent must be a unit modulo the order");
        let mut poly = vec![BigRational::zero(); m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(k as i64 * j).rem_euclid(m) as usize] += c;
            }
        }
        CycNum::from_power_coeffs(self.order, poly)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<CycNum, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let n = self.coeffs.len();
        if n == 1 {
            return Ok(CycNum::from_rational(self.coeffs[0].recip()));
        }
        // Columns of the multiplication-by-self matrix are self·ζ^j.
        let mut mat: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n + 1]; n];
        for j in 0..n {
            let col = (self * &CycNum::root_of_unity(self.order, j as i64)).coeffs;
            for i in 0..n {
                mat[i][j] = col[i].clone();
            }
        }
        mat[0][n] = BigRational::one();
        let sol = solve_augmented(mat).ok_or(ArithError::DivisionByZero)?;
        Ok(CycNum::from_power_coeffs(self.order, sol))
    }

    pub fn pow(&self, mut e: u32) -> CycNum {
        let mut base = self.clone();
        let mut acc = CycNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, r: &BigRational) -> CycNum {
        CycNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// The same element written over the smallest cyclotomic field that
    /// contains it.
    pub fn shrink(&self) -> CycNum {
        if self.order == 1 {
            return self.clone();
        }
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            return CycNum::from_rational(self.coeffs[0].clone());
        }
        for d in divisors(self.order) {
            if d == 1 || d == self.order {
                continue;
            }
            if let Some(c) = self.descend(d) {
                return c;
            }
        }
        self.clone()
    }

    /// Coordinates over `Q(ζ_d)` if the element lies in that subfield.
    fn descend(&self, d: u32) -> Option<CycNum> {
        let k = euler_phi(d);
        let n = self.coeffs.len();
        let basis: Vec<Vec<BigRational>> = (0..k)
            .map(|j| CycNum::root_of_unity(d, j as i64).lift(self.order).coeffs)
            .collect();
        let mut mat: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); k + 1]; n];
        for (i, row) in mat.iter_mut().enumerate() {
            for j in 0..k {
                row[j] = basis[j][i].clone();
            }
            row[k] = self.coeffs[i].clone();
        }
        let sol = solve_overdetermined(mat, k)?;
        Some(CycNum::from_power_coeffs(d, sol))
    }
}

/// Solve a square augmented system; `None` if singular.
fn solve_augmented(mut m: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let t = &f * &m[col][c];
                    m[r][c] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Solve an `rows × k` system with augmented last column, requiring
/// consistency; `None` when inconsistent.
fn solve_overdetermined(mut m: Vec<Vec<BigRational>>, k: usize) -> Option<Vec<BigRational>> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in col..=k {
                    let t = &f * &m[r][c];
                    m[i][c] -= t;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); k];
    for (i, &col) in pivots.iter().enumerate() {
        sol[col] = m[i][k].clone();
    }
    Some(sol)
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNum {}

impl Default for CycNum {
    fn default() -> Self {
        CycNum::zero()
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::from_integer(n)
    }
}

impl From<BigRational> for CycNum {
    fn from(r: BigRational) -> Self {
        CycNum::from_rational(r)
    }
}

impl Add<&CycNum> for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub<&CycNum> for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl Mul<&CycNum> for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        if self.order == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.order == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let (a, b) = self.common(rhs);
        let n = a.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        CycNum::from_power_coeffs(a.order, prod)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
        impl $tr<CycNum> for &CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x += y;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x -= y;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycNum {
    /// Canonical text: `a0 + a1*z4 + a2*z4^2 ...` over the smallest field.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.shrink();
        let mut out = String::new();
        for (k, c) in s.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = fmt_rational(&c.abs());
            let body = match (k, mag.as_str()) {
                (0, _) => mag.clone(),
                (1, "1") => format!("z{}", s.order),
                (1, _) => format!("{}*z{}", mag, s.order),
                (_, "1") => format!("z{}^{}", s.order, k),
                _ => format!("{}*z{}^{}", mag, s.order, k),
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl FromStr for CycNum {
    type Err = ArithError;

    /// Parses the canonical rendering, e.g. `-1/2 + 3*z4`, `z3^2`, `-z12^5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if i == 0 && (ch == '+' || ch == '-') {
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        terms.push((neg, cur));
        let mut acc = CycNum::zero();
        for (neg, t) in terms {
            if t.is_empty() {
                return Err(bad());
            }
            let (coef, root) = match t.find('z') {
                Some(pos) => {
                    let c = t[..pos].trim_end_matches('*');
                    let c = if c.is_empty() { "1" } else { c };
                    (c.to_string(), Some(t[pos + 1..].to_string()))
                }
                None => (t.clone(), None),
            };
            let coef = parse_rational(&coef).ok_or_else(bad)?;
            let mut term = CycNum::from_rational(coef);
            if let Some(r) = root {
                let (m, k) = match r.split_once('^') {
                    Some((m, k)) => (m, k.parse::<i64>().map_err(|_| bad())?),
                    None => (r.as_str(), 1),
                };
                let m: u32 = m.parse().map_err(|_| bad())?;
                if m == 0 {
                    return Err(bad());
                }
                term = &term * &CycNum::root_of_unity(m, k);
            }
            if neg {
                term = -term;
            }
            acc += &term;
        }
        Ok(acc)
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl serde::Serialize for CycNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for CycNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32, k: i64) -> CycNum {
        CycNum::root_of_unity(m, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for m in 1..=60 {
            assert_eq!(cyclotomic_polynomial(m).len() - 1, euler_phi(m));
        }
    }

    #[test]
    fn conj_examples() {
        assert_eq!(z(4, 1).conj(), -z(4, 1));
        let r = CycNum::from_ratio(3, 2);
        assert_eq!(r.conj(), r);
        let one = CycNum::one();
        assert_eq!((&one + &z(4, 1)).conj(), &one - &z(4, 1));
    }

    #[test]
    fn arith_examples() {
        assert_eq!(&z(4, 1) * &z(4, 1), CycNum::from_integer(-1));
        let one = CycNum::one();
        assert_eq!(
            (&one + &z(4, 1)) * (&one - &z(4, 1)),
            CycNum::from_integer(2)
        );
        let sq = &z(6, 1) * &z(6, 1);
        assert_eq!(sq.order(), 6);
        assert_eq!(sq, &z(6, 1) - &one);
        assert_eq!(sq.coeffs(), (&z(6, 1) - &one).coeffs());
    }

    #[test]
    fn mixed_orders_lift_to_lcm() {
        let s = &z(4, 1) + &z(3, 1);
        assert_eq!(s.order(), 12);
        assert_eq!(&s - &z(3, 1), z(4, 1));
        assert_eq!(z(12, 3), z(4, 1));
        assert_eq!(z(6, 2), z(3, 1));
    }

    #[test]
    fn inverse_and_division_by_zero() {
        let a = &CycNum::from_integer(2) + &z(5, 2);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        assert_eq!(CycNum::zero().inv(), Err(ArithError::DivisionByZero));
        assert_eq!(
            CycNum::from_ratio(2, 3).inv().unwrap(),
            CycNum::from_ratio(3, 2)
        );
    }

    #[test]
    fn render_and_parse() {
        assert_eq!(z(4, 1).to_string(), "z4");
        assert_eq!((-z(4, 1)).to_string(), "-z4");
        assert_eq!(CycNum::from_ratio(-1, 2).to_string(), "-1/2");
        assert_eq!((&z(6, 1) * &z(6, 1)).to_string(), "z3");
        let x: CycNum = "1/2 - 3*z4".parse().unwrap();
        assert_eq!(
            x,
            &CycNum::from_ratio(1, 2) - &z(4, 1).scale(&BigRational::from_integer(3.into()))
        );
        assert_eq!(x.to_string(), "1/2 - 3*z4");
        let y: CycNum = "z3^2".parse().unwrap();
        assert_eq!(y, z(3, 2));
        assert_eq!(y.to_string(), "-1 - z3");
        assert!("z0".parse::<CycNum>().is_err());
        assert!("".parse::<CycNum>().is_err());
        assert!("1/0".parse::<CycNum>().is_err());
    }

    #[test]
    fn shrink_finds_subfield() {
        let sqrt2 = &z(8, 1) + &z(8, 7);
        assert_eq!(sqrt2.shrink().order(), 8);
        assert_eq!((&sqrt2 * &sqrt2).shrink().order(), 1);
        let w = z(12, 4);
        assert_eq!(w.shrink().order(), 3);
    }

    #[test]
    fn galois_action() {
        assert_eq!(z(5, 1).galois(2), z(5, 2));
        assert_eq!(z(5, 1).galois(-1), z(5, 1).conj());
    }
}
