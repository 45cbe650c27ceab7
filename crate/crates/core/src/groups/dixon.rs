//! Ordinary character tables by the Dixon–Schneider method.
//!
//! Central characters `ω_χ(K_j) = |C_j|·χ(g_j)/χ(1)` are the common
//! eigenvectors of the class matrices `M_j[k][l] = a_{jkl}`, where
//! `K_j·K_k = Σ_l a_{jkl}·K_l`. The eigenspaces are split over `F_p` with
//! `p ≡ 1 mod exp(G)` and `p > 2√|G|`, and the values are lifted back to
//! cyclotomic integers through eigenvalue multiplicities.

use std::cmp::Reverse;

use num_integer::Integer;

use super::{FiniteGroup, GroupError};
use crate::arith::CycNum;

/// The class-algebra data the method needs.
///
/// Class 0 must be the identity class.
pub trait ClassStructure {
    fn group_order(&self) -> u64;
    fn num_classes(&self) -> usize;
    fn class_size(&self, k: usize) -> u64;
    fn inverse_class(&self, k: usize) -> usize;
    fn element_order(&self, k: usize) -> u64;
    /// Class of `g_k^e`.
    fn power_class(&self, k: usize, e: u64) -> usize;
    /// `M_j[k][l] = #{x ∈ C_j : x⁻¹·g_l ∈ C_k}`.
    fn class_matrix(&self, j: usize) -> Vec<Vec<u64>>;
    /// Order in which class matrices are tried for splitting.
    fn splitting_order(&self) -> Vec<usize> {
        let mut js: Vec<usize> = (1..self.num_classes()).collect();
        js.sort_by_key(|&j| (self.class_size(j), j));
        js
    }
}

/// An exact character table.
#[derive(Clone, Debug)]
pub struct CharTable {
    pub group_order: u64,
    pub class_sizes: Vec<u64>,
    /// Element index of each class representative, when known.
    pub class_reps: Vec<usize>,
    pub element_orders: Vec<u64>,
    pub exponent: u64,
    /// `rows[χ][k] = χ(g_k)`.
    pub rows: Vec<Vec<CycNum>>,
}

impl CharTable {
    pub fn degrees(&self) -> Vec<i64> {
        self.rows
            .iter()
            .map(|r| {
                let d = r[0].as_rational().expect("degree is rational");
                d.to_integer().try_into().expect("degree fits in i64")
            })
            .collect()
    }

    /// `Σ_k |C_k|·χ(g_k)·conj(ψ(g_k)) = |G|·δ_{χψ}` for all pairs.
    pub fn rows_orthogonal(&self) -> bool {
        let n = self.rows.len();
        let g = CycNum::from_integer(self.group_order as i64);
        let conj: Vec<Vec<CycNum>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(CycNum::conj).collect())
            .collect();
        (0..n).all(|a| {
            (a..n).all(|b| {
                let s: CycNum = (0..self.class_sizes.len())
                    .map(|k| {
                        (&self.rows[a][k] * &conj[b][k]).scale(
                            &num_rational::BigRational::from_integer(
                                (self.class_sizes[k] as i64).into(),
                            ),
                        )
                    })
                    .sum();
                if a == b {
                    s == g
                } else {
                    s.is_zero()
                }
            })
        })
    }

    /// `Σ_χ χ(g_k)·conj(χ(g_l)) = δ_{kl}·|G|/|C_k|` for all pairs.
    pub fn columns_orthogonal(&self) -> bool {
        let r = self.class_sizes.len();
        (0..r).all(|k| {
            (k..r).all(|l| {
                let s: CycNum = self.rows.iter().map(|row| &row[k] * &row[l].conj()).sum();
                if k == l {
                    s == CycNum::from_integer((self.group_order / self.class_sizes[k]) as i64)
                } else {
                    s.is_zero()
                }
            })
        })
    }

    /// `Σ χ(1)² = |G|`.
    pub fn degrees_square_sum_ok(&self) -> bool {
        self.degrees().iter().map(|d| (d * d) as u64).sum::<u64>() == self.group_order
    }
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Smallest prime `p ≡ 1 mod e` with `p > 2√order`.
pub fn choose_prime(e: u64, order: u64) -> u64 {
    let mut p = e + 1;
    while !(is_prime(p) && p * p > 4 * order) {
        p += e;
    }
    p
}

/// A primitive `e`-th root of unity modulo `p`.
pub fn root_of_unity_mod(e: u64, p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    let g = (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("prime has a primitive root");
    pow_mod(g, (p - 1) / e, p)
}

/// Characteristic polynomial (ascending, monic) over `F_p` via reduction to
/// Hessenberg form.
pub fn charpoly_mod(mut h: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = h.len();
    for m in 1..n.saturating_sub(1) {
        // Bring a nonzero entry into h[m][m-1].
        if let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) {
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let inv = inv_mod(h[m][m - 1], p);
            for i in m + 1..n {
                if h[i][m - 1] == 0 {
                    continue;
                }
                let f = h[i][m - 1] * inv % p;
                for c in 0..n {
                    h[i][c] = (h[i][c] + p - f * h[m][c] % p) % p;
                }
                for r in 0..n {
                    h[r][m] = (h[r][m] + f * h[r][i]) % p;
                }
            }
        }
    }
    // p_k = (x − h_kk)·p_{k−1} − Σ_{i<k} h_ik·(Π_{j=i+1..k} h_{j,j−1})·p_{i−1}.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - c * h[k][k] % p) % p;
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = prod * h[i + 1][i] % p;
            let coef = h[i][k] * prod % p;
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = (next[d] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn eval_poly(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, i);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for cc in 0..ncols {
                    rows[i][cc] = (rows[i][cc] + p - f * rows[r][cc] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of the kernel of a square matrix over `F_p`.
fn kernel(mut a: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = a.first().map_or(0, Vec::len);
    let pivots = rref(&mut a, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in a.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

struct Subspace {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn new(mut basis: Vec<Vec<u64>>, p: u64) -> Self {
        let pivots = rref(&mut basis, p);
        Subspace { basis, pivots }
    }
}

/// Split `F_p^r` into the common eigenlines of the class matrices.
fn split_eigenspaces<C: ClassStructure + ?Sized>(
    cs: &C,
    p: u64,
) -> Result<Vec<Vec<u64>>, GroupError> {
    let r = cs.num_classes();
    let full: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            let mut e = vec![0u64; r];
            e[i] = 1;
            e
        })
        .collect();
    let mut spaces = vec![Subspace::new(full, p)];
    for j in cs.splitting_order() {
        if spaces.iter().all(|s| s.basis.len() == 1) {
            break;
        }
        let m: Vec<Vec<u64>> = cs
            .class_matrix(j)
            .into_iter()
            .map(|row| row.into_iter().map(|x| x % p).collect())
            .collect();
        let mut next = Vec::new();
        for sp in spaces {
            let d = sp.basis.len();
            if d == 1 {
                next.push(sp);
                continue;
            }
            // Images of basis vectors, expressed in pivot coordinates.
            let images: Vec<Vec<u64>> = sp
                .basis
                .iter()
                .map(|b| {
                    (0..r)
                        .map(|k| {
                            m[k].iter()
                                .zip(b)
                                .fold(0, |acc, (&x, &y)| (acc + x * y) % p)
                        })
                        .collect()
                })
                .collect();
            // a[i][c] = coordinate i of M·b_c.
            let a: Vec<Vec<u64>> = (0..d)
                .map(|i| (0..d).map(|c| images[c][sp.pivots[i]]).collect())
                .collect();
            let cp = charpoly_mod(a.clone(), p);
            let roots: Vec<u64> = (0..p).filter(|&x| eval_poly(&cp, x, p) == 0).collect();
            let mut total = 0;
            for lam in roots {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|i| {
                        (0..d)
                            .map(|c| {
                                if i == c {
                                    (a[i][c] + p - lam) % p
                                } else {
                                    a[i][c]
                                }
                            })
                            .collect()
                    })
                    .collect();
                let ker = kernel(shifted, p);
                total += ker.len();
                let vecs: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|c| {
                        (0..r)
                            .map(|k| {
                                c.iter()
                                    .zip(&sp.basis)
                                    .fold(0, |acc, (&x, b)| (acc + x * b[k]) % p)
                            })
                            .collect()
                    })
                    .collect();
                next.push(Subspace::new(vecs, p));
            }
            if total != d {
                return Err(GroupError::SplittingFailed);
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.basis.len() != 1) {
        return Err(GroupError::SplittingFailed);
    }
    Ok(spaces
        .into_iter()
        .map(|s| s.basis.into_iter().next().unwrap())
        .collect())
}

/// Character table from class-algebra data.
pub fn dixon_schneider<C: ClassStructure + ?Sized>(cs: &C) -> Result<CharTable, GroupError> {
    let r = cs.num_classes();
    let order = cs.group_order();
    let orders: Vec<u64> = (0..r).map(|k| cs.element_order(k)).collect();
    let exponent = orders.iter().fold(1u64, |acc, &o| acc.lcm(&o));
    let p = choose_prime(exponent, order);
    let z = root_of_unity_mod(exponent, p);
    let sizes: Vec<u64> = (0..r).map(|k| cs.class_size(k)).collect();
    let lines = split_eigenspaces(cs, p)?;
    let g_mod = order % p;

    let mut chars: Vec<(i64, Vec<Vec<u64>>, Vec<CycNum>)> = Vec::new();
    for line in lines {
        let w0 = line[0];
        if w0 == 0 {
            return Err(GroupError::SplittingFailed);
        }
        let inv0 = inv_mod(w0, p);
        let omega: Vec<u64> = line.iter().map(|&x| x * inv0 % p).collect();
        // χ(1)² = |G| / Σ_k ω_k·ω_{k'}/h_k.
        let s = (0..r).fold(0u64, |acc, k| {
            let t = omega[k] * omega[cs.inverse_class(k)] % p * inv_mod(sizes[k] % p, p) % p;
            (acc + t) % p
        });
        if s == 0 {
            return Err(GroupError::SplittingFailed);
        }
        let d2 = g_mod * inv_mod(s, p) % p;
        let deg = (1..)
            .take_while(|d: &u64| d * d <= order)
            .find(|d| d * d % p == d2)
            .ok_or(GroupError::SplittingFailed)?;
        let values: Vec<u64> = (0..r)
            .map(|k| omega[k] * deg % p * inv_mod(sizes[k] % p, p) % p)
            .collect();
        let mut mults = Vec::with_capacity(r);
        let mut exact = Vec::with_capacity(r);
        for k in 0..r {
            let o = orders[k];
            let zo = pow_mod(z, exponent / o, p);
            let zo_inv = inv_mod(zo, p);
            let o_inv = inv_mod(o % p, p);
            let mut m = Vec::with_capacity(o as usize);
            for t in 0..o {
                let step = pow_mod(zo_inv, t, p);
                let mut acc = 0u64;
                let mut tw = 1u64;
                for l in 0..o {
                    acc = (acc + values[cs.power_class(k, l)] * tw) % p;
                    tw = tw * step % p;
                }
                let mt = acc * o_inv % p;
                if mt > deg {
                    return Err(GroupError::SplittingFailed);
                }
                m.push(mt);
            }
            let coeffs: Vec<num_rational::BigRational> = m
                .iter()
                .map(|&x| num_rational::BigRational::from_integer((x as i64).into()))
                .collect();
            exact.push(CycNum::from_power_coeffs(o as u32, coeffs).shrink());
            mults.push(m);
        }
        chars.push((deg as i64, mults, exact));
    }
    chars.sort_by(|a, b| (a.0, Reverse(&a.1)).cmp(&(b.0, Reverse(&b.1))));
    let table = CharTable {
        group_order: order,
        class_sizes: sizes,
        class_reps: Vec::new(),
        element_orders: orders,
        exponent,
        rows: chars.into_iter().map(|c| c.2).collect(),
    };
    if table.rows.len() != r || !table.rows.iter().all(|row| !row[0].is_zero()) {
        return Err(GroupError::SplittingFailed);
    }
    Ok(table)
}

/// Class-algebra view of an enumerated permutation group.
pub struct GroupClasses<'a> {
    pub group: &'a FiniteGroup,
    pub data: super::ConjugacyData,
    orders: Vec<u64>,
}

impl<'a> GroupClasses<'a> {
    pub fn new(group: &'a FiniteGroup) -> Self {
        let data = group.conjugacy_data();
        let orders = data.reps.iter().map(|&g| group.element_order(g)).collect();
        GroupClasses {
            group,
            data,
            orders,
        }
    }
}

impl ClassStructure for GroupClasses<'_> {
    fn group_order(&self) -> u64 {
        self.group.order() as u64
    }
    fn num_classes(&self) -> usize {
        self.data.classes.len()
    }
    fn class_size(&self, k: usize) -> u64 {
        self.data.classes[k].len() as u64
    }
    fn inverse_class(&self, k: usize) -> usize {
        self.data.class_of[self.group.inv(self.data.reps[k])]
    }
    fn element_order(&self, k: usize) -> u64 {
        self.orders[k]
    }
    fn power_class(&self, k: usize, e: u64) -> usize {
        self.data.class_of[self.group.pow(self.data.reps[k], e)]
    }
    fn class_matrix(&self, j: usize) -> Vec<Vec<u64>> {
        let r = self.num_classes();
        let mut m = vec![vec![0u64; r]; r];
        for (l, &g) in self.data.reps.iter().enumerate() {
            for &x in &self.data.classes[j] {
                let k = self.data.class_of[self.group.mul(self.group.inv(x), g)];
                m[k][l] += 1;
            }
        }
        m
    }
}

/// Exact character table of a permutation group; class order as in
/// [`FiniteGroup::conjugacy_data`].
pub fn character_table(g: &FiniteGroup) -> Result<CharTable, GroupError> {
    let gc = GroupClasses::new(g);
    let mut t = dixon_schneider(&gc)?;
    t.class_reps = gc.data.reps.clone();
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_small() {
        let p = 101;
        // [[2,1],[0,3]] has charpoly x² − 5x + 6.
        let cp = charpoly_mod(vec![vec![2, 1], vec![0, 3]], p);
        assert_eq!(cp, vec![6, p - 5, 1]);
        let cp = charpoly_mod(vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]], p);
        assert_eq!(cp, vec![p - 1, 0, 0, 1]);
    }

    #[test]
    fn prime_choice() {
        let p = choose_prime(4, 4);
        assert_eq!(p, 5);
        assert_eq!((p - 1) % 4, 0);
        let z = root_of_unity_mod(4, p);
        assert_eq!(pow_mod(z, 4, p), 1);
        assert_ne!(pow_mod(z, 2, p), 1);
    }
}
