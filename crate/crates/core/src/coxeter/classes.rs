//! Conjugacy classes, class-algebra data and fake degrees of a Weyl group,
//! with elements stored as integer matrices on the root lattice.
//!
//! An element `w` is identified by `w(2ρ)`, which is regular, so the key is
//! injective. Conjugating by `s` only needs `w(2ρ − 2α_s) = w(2ρ) − 2w(α_s)`
//! followed by `s`, which keeps the class computation linear in the rank.

use std::collections::HashMap;

use super::{CoxeterError, RootSystem};
use crate::arith::{cyclotomic_polynomial, euler_phi};
use crate::groups::{dixon_schneider, CharTable, ClassStructure, GroupError};

const RMAX: usize = 8;
type Mat = [i8; RMAX * RMAX];
type Key = [i16; RMAX];

/// Enumerated Weyl group with its conjugacy classes.
///
/// Class 0 is the identity; classes are ordered by size, then by the BFS
/// index of their first element.
pub struct WeylClasses {
    rank: usize,
    cartan: Vec<Vec<i32>>,
    n_pos: usize,
    /// `mats[x][i·RMAX + j]` is coordinate `i` of `x(α_j)`.
    mats: Vec<Mat>,
    index: HashMap<Key, u32>,
    rho2: Key,
    /// `x = s_gen · parent`; the identity points at itself.
    parent: Vec<(u32, u8)>,
    class_of: Vec<u16>,
    members: Vec<Vec<u32>>,
    orders: Vec<u64>,
    /// `powers[k][e]` is the class of `g_k^e`, `0 ≤ e < order`.
    powers: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl WeylClasses {
    /// Enumerate `W` by left multiplication with simple reflections.
    pub fn new(rs: &RootSystem, cap: usize) -> Result<Self, CoxeterError> {
        let r = rs.rank();
        if r > RMAX {
            return Err(CoxeterError::InvalidCartan(format!(
                "rank {r} exceeds {RMAX}"
            )));
        }
        let cartan = rs.datum.cartan.clone();
        let mut rho2 = [0i16; RMAX];
        for root in &rs.roots[..rs.num_positive()] {
            for (i, &c) in root.iter().enumerate() {
                rho2[i] += c as i16;
            }
        }
        let mut id = [0i8; RMAX * RMAX];
        for i in 0..r {
            id[i * RMAX + i] = 1;
        }
        let mut wc = WeylClasses {
            rank: r,
            cartan,
            n_pos: rs.num_positive(),
            mats: vec![id],
            index: HashMap::new(),
            rho2,
            parent: vec![(0, 0)],
            class_of: Vec::new(),
            members: Vec::new(),
            orders: Vec::new(),
            powers: Vec::new(),
            inverse: Vec::new(),
        };
        wc.index.insert(rho2, 0);
        let mut head = 0;
        while head < wc.mats.len() {
            let x = wc.mats[head];
            for s in 0..r {
                let key = wc.reflect_key(s, &wc.key_of(&x));
                if wc.index.contains_key(&key) {
                    continue;
                }
                if wc.mats.len() >= cap {
                    return Err(CoxeterError::EnumerationCap(cap));
                }
                let y = wc.left_reflect(s, &x);
                wc.index.insert(key, wc.mats.len() as u32);
                wc.mats.push(y);
                wc.parent.push((head as u32, s as u8));
            }
            head += 1;
        }
        wc.build_classes();
        Ok(wc)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.mats.len()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    fn key_of(&self, m: &Mat) -> Key {
        let mut out = [0i16; RMAX];
        self.apply_into(m, &self.rho2, &mut out);
        out
    }

    fn apply_into(&self, m: &Mat, v: &Key, out: &mut Key) {
        for i in 0..self.rank {
            let row = &m[i * RMAX..i * RMAX + self.rank];
            out[i] = row.iter().zip(v).map(|(&a, &b)| a as i16 * b).sum();
        }
    }

    /// `s(v)`.
    fn reflect_key(&self, s: usize, v: &Key) -> Key {
        let mut out = *v;
        let pairing: i32 = (0..self.rank)
            .map(|j| self.cartan[s][j] * v[j] as i32)
            .sum();
        out[s] -= pairing as i16;
        out
    }

    /// `s·x`: only row `s` changes.
    fn left_reflect(&self, s: usize, x: &Mat) -> Mat {
        let mut y = *x;
        for j in 0..self.rank {
            let pairing: i32 = (0..self.rank)
                .map(|i| self.cartan[s][i] * x[i * RMAX + j] as i32)
                .sum();
            y[s * RMAX + j] = (x[s * RMAX + j] as i32 - pairing) as i8;
        }
        y
    }

    /// Key of `s·x·s`.
    fn conj_key(&self, s: usize, x: usize) -> Key {
        let m = &self.mats[x];
        let mut k = self.key_of(m);
        for i in 0..self.rank {
            k[i] -= 2 * m[i * RMAX + s] as i16;
        }
        self.reflect_key(s, &k)
    }

    fn mat_mul(&self, a: &Mat, b: &Mat) -> Mat {
        let r = self.rank;
        let mut c = [0i8; RMAX * RMAX];
        for i in 0..r {
            for j in 0..r {
                let v: i32 = (0..r)
                    .map(|k| a[i * RMAX + k] as i32 * b[k * RMAX + j] as i32)
                    .sum();
                c[i * RMAX + j] = v as i8;
            }
        }
        c
    }

    pub fn index_of_mat(&self, m: &Mat) -> usize {
        self.index[&self.key_of(m)] as usize
    }

    /// Index of the product of the simple reflections in `word` (0-based).
    pub fn index_of_word(&self, word: &[usize]) -> Result<usize, CoxeterError> {
        let mut k = self.rho2;
        for &s in word.iter().rev() {
            if s >= self.rank {
                return Err(CoxeterError::IndexOutOfRange {
                    index: s,
                    rank: self.rank,
                });
            }
            k = self.reflect_key(s, &k);
        }
        Ok(self.index[&k] as usize)
    }

    /// A reduced word for element `x` (BFS words are shortest).
    pub fn word(&self, mut x: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while x != 0 {
            let (p, s) = self.parent[x];
            w.push(s as usize);
            x = p as usize;
        }
        w
    }

    fn build_classes(&mut self) {
        let n = self.order();
        let mut label = vec![u32::MAX; n];
        let mut classes: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if label[start] != u32::MAX {
                continue;
            }
            let c = classes.len() as u32;
            label[start] = c;
            let mut cls = vec![start as u32];
            let mut head = 0;
            while head < cls.len() {
                let x = cls[head] as usize;
                head += 1;
                for s in 0..self.rank {
                    let y = self.index[&self.conj_key(s, x)];
                    if label[y as usize] == u32::MAX {
                        label[y as usize] = c;
                        cls.push(y);
                    }
                }
            }
            cls.sort_unstable();
            classes.push(cls);
        }
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by_key(|&c| (classes[c].len(), classes[c][0]));
        let mut rename = vec![0u16; classes.len()];
        for (new, &old) in order.iter().enumerate() {
            rename[old] = new as u16;
        }
        self.class_of = label.iter().map(|&l| rename[l as usize]).collect();
        self.members = order
            .iter()
            .map(|&c| std::mem::take(&mut classes[c]))
            .collect();
        let reps: Vec<usize> = self.members.iter().map(|m| m[0] as usize).collect();
        let r = self.rank;
        let mut id = [0i8; RMAX * RMAX];
        for i in 0..r {
            id[i * RMAX + i] = 1;
        }
        for &g in &reps {
            let m = self.mats[g];
            let mut pw = vec![0usize];
            let mut acc = m;
            while acc != id {
                pw.push(self.class_of[self.index_of_mat(&acc)] as usize);
                acc = self.mat_mul(&acc, &m);
            }
            self.orders.push(pw.len() as u64);
            self.powers.push(pw);
        }
        self.inverse = (0..reps.len())
            .map(|k| {
                let o = self.orders[k] as usize;
                self.powers[k][(o - 1) % o]
            })
            .collect();
    }

    pub fn num_classes(&self) -> usize {
        self.members.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    pub fn class_members(&self, k: usize) -> &[u32] {
        &self.members[k]
    }

    pub fn class_rep(&self, k: usize) -> usize {
        self.members[k][0] as usize
    }

    /// Class of the product of `word`.
    pub fn class_of_word(&self, word: &[usize]) -> Result<usize, CoxeterError> {
        Ok(self.class_of(self.index_of_word(word)?))
    }

    /// `det(1 − q·g_k)` as coefficients in `q`.
    pub fn det_one_minus_q(&self, k: usize) -> Vec<i128> {
        let m = &self.mats[self.class_rep(k)];
        let r = self.rank;
        let a: Vec<Vec<i128>> = (0..r)
            .map(|i| (0..r).map(|j| m[i * RMAX + j] as i128).collect())
            .collect();
        // det(x − M) = Σ c_i x^i; det(1 − qM) = Σ c_i q^{r−i}.
        let cp = charpoly(&a);
        (0..=r).map(|d| cp[r - d]).collect()
    }

    /// Character table by Dixon–Schneider, with the class order of `self`.
    pub fn character_table(&self) -> Result<CharTable, GroupError> {
        let mut t = dixon_schneider(self)?;
        t.class_reps = (0..self.num_classes()).map(|k| self.class_rep(k)).collect();
        Ok(t)
    }

    /// `Π(1 − q^{d_i})` over the degrees of `W`, from the Molien series of
    /// the invariants.
    fn invariant_denominator(&self, trunc: usize) -> Vec<i128> {
        let order = self.order() as i128;
        let mut series = vec![0i128; trunc + 1];
        for k in 0..self.num_classes() {
            let inv = series_inverse(&self.det_one_minus_q(k), trunc);
            let h = self.members[k].len() as i128;
            for (s, c) in series.iter_mut().zip(&inv) {
                *s += h * c;
            }
        }
        for s in series.iter_mut() {
            debug_assert_eq!(*s % order, 0);
            *s /= order;
        }
        series_inverse(&series, trunc)
    }

    /// Degrees of the basic invariants, increasing.
    pub fn degrees(&self) -> Vec<usize> {
        let trunc = self.n_pos + self.rank + 1;
        let mut p = self.invariant_denominator(trunc);
        let mut out = Vec::new();
        while let Some(d) = (1..p.len()).find(|&i| p[i] != 0) {
            out.push(d);
            // Divide by 1 − q^d.
            for i in d..p.len() {
                p[i] += p[i - d];
            }
        }
        out
    }

    /// Fake degrees `Σ_i ⟨φ, S^i/I⟩ q^i` of every row of `table`, as
    /// coefficient vectors of length `N + 1`.
    pub fn fake_degrees(&self, table: &CharTable) -> Result<Vec<Vec<i64>>, GroupError> {
        let trunc = self.n_pos + self.rank + 1;
        let order = self.order() as i128;
        let denom = self.invariant_denominator(trunc);
        let inverses: Vec<Vec<i128>> = (0..self.num_classes())
            .map(|k| series_inverse(&self.det_one_minus_q(k), trunc))
            .collect();
        let mut out = Vec::with_capacity(table.rows.len());
        for row in &table.rows {
            let mut molien = vec![0i128; trunc + 1];
            for (k, inv) in inverses.iter().enumerate() {
                let val = row[k]
                    .as_rational()
                    .filter(|x| x.is_integer())
                    .ok_or(GroupError::SplittingFailed)?;
                let val: i128 = val
                    .to_integer()
                    .try_into()
                    .map_err(|_| GroupError::SplittingFailed)?;
                let h = self.members[k].len() as i128 * val;
                for (s, c) in molien.iter_mut().zip(inv) {
                    *s += h * c;
                }
            }
            let prod = series_mul(&molien, &denom, trunc);
            if prod.iter().any(|c| c % order != 0) || prod[self.n_pos + 1..].iter().any(|&c| c != 0)
            {
                return Err(GroupError::SplittingFailed);
            }
            out.push(
                prod[..=self.n_pos]
                    .iter()
                    .map(|c| (c / order) as i64)
                    .collect(),
            );
        }
        Ok(out)
    }
}

impl ClassStructure for WeylClasses {
    fn group_order(&self) -> u64 {
        self.order() as u64
    }
    fn num_classes(&self) -> usize {
        self.members.len()
    }
    fn class_size(&self, k: usize) -> u64 {
        self.members[k].len() as u64
    }
    fn inverse_class(&self, k: usize) -> usize {
        self.inverse[k]
    }
    fn element_order(&self, k: usize) -> u64 {
        self.orders[k]
    }
    fn power_class(&self, k: usize, e: u64) -> usize {
        self.powers[k][(e % self.orders[k]) as usize]
    }
    /// `#{x ∈ C_j : x⁻¹·g_l ∈ C_k} = #{y ∈ C_{j'} : y·g_l ∈ C_k}`.
    fn class_matrix(&self, j: usize) -> Vec<Vec<u64>> {
        let r = self.num_classes();
        let jj = self.inverse[j];
        let targets: Vec<Key> = (0..r)
            .map(|l| self.key_of(&self.mats[self.class_rep(l)]))
            .collect();
        let mut m = vec![vec![0u64; r]; r];
        let mut buf = [0i16; RMAX];
        for &y in &self.members[jj] {
            let my = &self.mats[y as usize];
            for (l, t) in targets.iter().enumerate() {
                self.apply_into(my, t, &mut buf);
                let k = self.class_of[self.index[&buf] as usize] as usize;
                m[k][l] += 1;
            }
        }
        m
    }
}

/// `det(x·I − A)` by Faddeev–LeVerrier; coefficient of `x^i` at index `i`.
fn charpoly(a: &[Vec<i128>]) -> Vec<i128> {
    let n = a.len();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I.
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|t| a[i][t] * m[t][j]).sum::<i128>();
            }
            next[i][i] += c[n - k + 1];
        }
        m = next;
        let tr: i128 = (0..n)
            .map(|i| (0..n).map(|t| a[i][t] * m[t][i]).sum::<i128>())
            .sum();
        c[n - k] = -tr / k as i128;
    }
    c
}

/// Inverse of a power series with constant term ±1, to degree `trunc`.
fn series_inverse(f: &[i128], trunc: usize) -> Vec<i128> {
    assert!(f[0] == 1 || f[0] == -1, "constant term must be a unit");
    let mut g = vec![0i128; trunc + 1];
    g[0] = f[0];
    for n in 1..=trunc {
        let s: i128 = (1..=n.min(f.len() - 1)).map(|i| f[i] * g[n - i]).sum();
        g[n] = -s * f[0];
    }
    g
}

fn series_mul(a: &[i128], b: &[i128], trunc: usize) -> Vec<i128> {
    let mut c = vec![0i128; trunc + 1];
    for (i, &x) in a.iter().enumerate().take(trunc + 1) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(trunc + 1 - i) {
            c[i + j] += x * y;
        }
    }
    c
}

/// Write `f = num/den` as `(c/den)·q^a·Π Φ_d^{e_d}`, returning
/// `(c, den, a, [(d, e_d)])`, or `None` when no such factorization exists.
pub fn cyclotomic_factorization(
    num: &[i128],
    den: i128,
) -> Option<(i128, i128, usize, Vec<(u32, u32)>)> {
    let a = num.iter().position(|&c| c != 0)?;
    let mut p: Vec<i128> = num[a..].to_vec();
    while p.last() == Some(&0) {
        p.pop();
    }
    let mut factors = Vec::new();
    let mut d = 1u32;
    // φ(d) ≥ √(d/2), so no Φ_d with d > 2·deg² divides.
    let bound = 2 * (p.len() as u32).pow(2) + 2;
    while p.len() > 1 {
        if d > bound {
            return None;
        }
        if euler_phi(d) < p.len() {
            let phi = cyclotomic_polynomial(d);
            let mut e = 0;
            while let Some(q) = exact_div(&p, &phi) {
                p = q;
                e += 1;
            }
            if e > 0 {
                factors.push((d, e));
            }
        }
        d += 1;
    }
    Some((p[0], den, a, factors))
}

fn exact_div(p: &[i128], d: &[i64]) -> Option<Vec<i128>> {
    if d.len() > p.len() {
        return None;
    }
    let lead = *d.last().unwrap() as i128;
    let mut rem = p.to_vec();
    let mut q = vec![0i128; p.len() - d.len() + 1];
    for i in (0..q.len()).rev() {
        let top = rem[i + d.len() - 1];
        if top % lead != 0 {
            return None;
        }
        let c = top / lead;
        q[i] = c;
        for (j, &dj) in d.iter().enumerate() {
            rem[i + j] -= c * dj as i128;
        }
    }
    rem.iter().all(|&x| x == 0).then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_rotation() {
        // [[0,-1],[1,0]]: x² + 1.
        assert_eq!(charpoly(&[vec![0, -1], vec![1, 0]]), vec![1, 0, 1]);
    }

    #[test]
    fn cyclotomic_factors() {
        // 2q(q² − 1) = 2·q·Φ1·Φ2.
        let f = [0, -2, 0, 2];
        let (c, den, a, fs) = cyclotomic_factorization(&f, 1).unwrap();
        assert_eq!((c, den, a), (2, 1, 1));
        assert_eq!(fs, vec![(1, 1), (2, 1)]);
        // q·Φ7·Φ12·Φ14 = q + q^5 + q^7 + … + q^17 needs Φ_d beyond deg p.
        let mut f = vec![0i128; 18];
        for e in [1, 5, 7, 9, 11, 13, 17] {
            f[e] = 1;
        }
        let (_, _, a, fs) = cyclotomic_factorization(&f, 1).unwrap();
        assert_eq!((a, fs), (1, vec![(7, 1), (12, 1), (14, 1)]));
        // q² + q + 2 is not a cyclotomic product.
        assert!(cyclotomic_factorization(&[2, 1, 1], 1).is_none());
    }

    #[test]
    fn small_types() {
        for (label, order, classes, degrees) in [
            ("A3", 24, 5, vec![2, 3, 4]),
            ("B3", 48, 10, vec![2, 4, 6]),
            ("G2", 12, 6, vec![2, 6]),
            ("D4", 192, 13, vec![2, 4, 4, 6]),
        ] {
            let rs = RootSystem::from_type(label).unwrap();
            let wc = WeylClasses::new(&rs, 1 << 20).unwrap();
            assert_eq!(wc.order(), order, "{label}");
            assert_eq!(wc.num_classes(), classes, "{label}");
            assert_eq!(wc.degrees(), degrees, "{label}");
        }
    }
}
