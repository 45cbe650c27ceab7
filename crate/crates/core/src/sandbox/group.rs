//! `GL_n(F_q)` by exhaustive enumeration, with its Bruhat decomposition.

use std::collections::HashMap;
use std::sync::Arc;

use super::field::FiniteField;
use super::SandboxError;
use crate::coxeter::{RootSystem, WeylElement};

/// Row-major `n × n` matrix padded to `3 × 3`.
pub type Mat = [u8; 9];

/// Largest group the sandbox enumerates.
pub const SANDBOX_CAP: usize = 200_000;

/// `G = GL_n(F_q)` with `B` upper triangular, `T` diagonal, `U` upper
/// unitriangular and `W = S_n` acting by permutation matrices
/// `ẇ·e_j = e_{w(j)}`.
#[derive(Clone, Debug)]
pub struct LieGroupSandbox {
    pub n: usize,
    pub q: u8,
    pub field: FiniteField,
    pub elements: Vec<Mat>,
    /// Matrix code to element index; `u32::MAX` for singular matrices.
    code_index: Vec<u32>,
    inverse: Vec<u32>,
    pub borel: Vec<usize>,
    pub torus: Vec<usize>,
    pub unipotent_radical: Vec<usize>,
    pub root_system: Arc<RootSystem>,
    /// `W` sorted by length.
    pub weyl: Vec<WeylElement>,
    /// One-line notation `w(j)` of each Weyl element.
    pub weyl_perms: Vec<Vec<usize>>,
    /// Element index of each `ẇ`.
    pub weyl_reps: Vec<usize>,
    weyl_index: HashMap<WeylElement, usize>,
    /// Index into `weyl` of the cell `BẇB` containing each element.
    pub cell_label: Vec<u16>,
    /// Conjugacy classes, ordered by smallest element index.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<u32>,
}

impl LieGroupSandbox {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn borel_order(&self) -> usize {
        self.borel.len()
    }

    fn code(&self, m: &Mat) -> usize {
        let q = self.q as usize;
        let mut c = 0usize;
        for i in (0..self.n * self.n).rev() {
            c = c * q + m[i] as usize;
        }
        c
    }

    pub fn index_of(&self, m: &Mat) -> Option<usize> {
        let i = *self.code_index.get(self.code(m))?;
        (i != u32::MAX).then_some(i as usize)
    }

    pub fn element(&self, i: usize) -> &Mat {
        &self.elements[i]
    }

    pub fn mat_mul(&self, a: &Mat, b: &Mat) -> Mat {
        mat_mul(&self.field, self.n, a, b)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let m = self.mat_mul(&self.elements[a], &self.elements[b]);
        self.index_of(&m).expect("closed under multiplication")
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `h·g·h⁻¹`.
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn identity(&self) -> usize {
        self.index_of(&identity(self.n)).unwrap()
    }

    pub fn weyl_index(&self, w: &WeylElement) -> Option<usize> {
        self.weyl_index.get(w).copied()
    }

    /// `g` with `(g − 1)^n = 0`.
    pub fn is_unipotent(&self, g: usize) -> bool {
        let f = &self.field;
        let mut d = self.elements[g];
        for i in 0..self.n {
            d[i * self.n + i] = f.sub(d[i * self.n + i], 1);
        }
        let mut p = d;
        for _ in 1..self.n {
            p = self.mat_mul(&p, &d);
        }
        p.iter().take(self.n * self.n).all(|&x| x == 0)
    }

    /// `1 + Σ E_{i,i+1}`.
    pub fn regular_unipotent(&self) -> usize {
        let mut m = identity(self.n);
        for i in 0..self.n - 1 {
            m[i * self.n + i + 1] = 1;
        }
        self.index_of(&m).unwrap()
    }

    pub fn centralizer_order(&self, class: usize) -> usize {
        self.order() / self.classes[class].len()
    }

    /// Elements of `BẇB` for Weyl index `w`.
    pub fn cell(&self, w: usize) -> Vec<usize> {
        (0..self.order())
            .filter(|&g| self.cell_label[g] as usize == w)
            .collect()
    }

    pub fn format_matrix(&self, g: usize) -> String {
        let m = &self.elements[g];
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let r: Vec<String> = (0..self.n).map(|j| m[i * self.n + j].to_string()).collect();
                r.join(" ")
            })
            .collect();
        format!("[{}]", rows.join("; "))
    }
}

pub fn identity(n: usize) -> Mat {
    let mut m = [0u8; 9];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn mat_mul(f: &FiniteField, n: usize, a: &Mat, b: &Mat) -> Mat {
    let mut c = [0u8; 9];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0u8;
            for k in 0..n {
                acc = f.add(acc, f.mul(a[i * n + k], b[k * n + j]));
            }
            c[i * n + j] = acc;
        }
    }
    c
}

/// Rank of the submatrix on rows `r0..n` and columns `0..c1`.
fn corner_rank(f: &FiniteField, n: usize, m: &Mat, r0: usize, c1: usize) -> usize {
    let mut rows: Vec<Vec<u8>> = (r0..n).map(|i| m[i * n..i * n + c1].to_vec()).collect();
    let mut rank = 0;
    for col in 0..c1 {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = f.inv(rows[rank][col]);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = f.mul(rows[r][col], inv);
                for c in col..c1 {
                    let t = f.mul(factor, rows[rank][c]);
                    rows[r][c] = f.sub(rows[r][c], t);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The permutation `w` with `g ∈ BẇB`, from the ranks of lower-left
/// corners, which are invariant under both `B` actions.
pub fn bruhat_permutation(f: &FiniteField, n: usize, g: &Mat) -> Vec<usize> {
    let r = |i: usize, j: isize| -> isize {
        if i >= n || j < 0 {
            0
        } else {
            corner_rank(f, n, g, i, j as usize + 1) as isize
        }
    };
    (0..n)
        .map(|j| {
            let j = j as isize;
            (0..n)
                .find(|&i| r(i, j) - r(i + 1, j) - r(i, j - 1) + r(i + 1, j - 1) == 1)
                .expect("invertible matrices have a Bruhat permutation")
        })
        .collect()
}

/// Reduced word `w = s_{i1}·…·s_{ik}` of a permutation in one-line
/// notation, peeling left descents.
pub fn permutation_word(w: &[usize]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut word = Vec::new();
    loop {
        let mut pos = vec![0; w.len()];
        for (j, &x) in w.iter().enumerate() {
            pos[x] = j;
        }
        let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| pos[i] > pos[i + 1]) else {
            break;
        };
        word.push(i);
        for x in w.iter_mut() {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
    }
    word
}

fn permutation_of_word(n: usize, word: &[usize]) -> Vec<usize> {
    let mut w: Vec<usize> = (0..n).collect();
    for &i in word.iter().rev() {
        for x in w.iter_mut() {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
    }
    w
}

/// Enumerate `GL_n(F_q)` and label every element by its Bruhat cell.
pub fn build_sandbox(n: usize, q: u8) -> Result<LieGroupSandbox, SandboxError> {
    if !(2..=3).contains(&n) {
        return Err(SandboxError::SizeCapExceeded(format!(
            "n = {n} is outside 2..=3"
        )));
    }
    let field = FiniteField::new(q)?;
    let qq = q as usize;
    let order: usize = (0..n)
        .map(|i| qq.pow(n as u32) - qq.pow(i as u32))
        .product();
    if order > SANDBOX_CAP {
        return Err(SandboxError::SizeCapExceeded(format!(
            "|GL_{n}(F_{q})| = {order} exceeds {SANDBOX_CAP}"
        )));
    }
    let total = qq.pow((n * n) as u32);
    let mut code_index = vec![u32::MAX; total];
    let mut elements = Vec::with_capacity(order);
    for code in 0..total {
        let mut m = [0u8; 9];
        let mut c = code;
        for e in m.iter_mut().take(n * n) {
            *e = (c % qq) as u8;
            c /= qq;
        }
        if corner_rank(&field, n, &m, 0, n) == n {
            code_index[code] = elements.len() as u32;
            elements.push(m);
        }
    }
    debug_assert_eq!(elements.len(), order);

    let rs = Arc::new(RootSystem::from_type(&format!("A{}", n - 1))?);
    let weyl = rs.enumerate(usize::MAX)?;
    let weyl_index: HashMap<WeylElement, usize> = weyl
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    let weyl_perms: Vec<Vec<usize>> = weyl
        .iter()
        .map(|w| permutation_of_word(n, &rs.reduced_word(w)))
        .collect();
    let perm_index: HashMap<Vec<usize>, usize> = weyl_perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();

    let mut sb = LieGroupSandbox {
        n,
        q,
        field,
        elements,
        code_index,
        inverse: Vec::new(),
        borel: Vec::new(),
        torus: Vec::new(),
        unipotent_radical: Vec::new(),
        root_system: rs,
        weyl,
        weyl_perms,
        weyl_reps: Vec::new(),
        weyl_index,
        cell_label: Vec::new(),
        classes: Vec::new(),
        class_of: Vec::new(),
    };
    let id = identity(n);
    let mut inverse = vec![u32::MAX; order];
    for a in 0..order {
        if inverse[a] != u32::MAX {
            continue;
        }
        // Inverse by powering: g^{ord-1}.
        let mut p = sb.elements[a];
        let mut prev = id;
        while p != id {
            prev = p;
            p = sb.mat_mul(&p, &sb.elements[a]);
        }
        let b = sb.index_of(&prev).unwrap();
        inverse[a] = b as u32;
        inverse[b] = a as u32;
    }
    sb.inverse = inverse;
    for (g, m) in sb.elements.iter().enumerate() {
        let lower_zero = (0..n).all(|i| (0..i).all(|j| m[i * n + j] == 0));
        if !lower_zero {
            continue;
        }
        sb.borel.push(g);
        let upper_zero = (0..n).all(|i| (i + 1..n).all(|j| m[i * n + j] == 0));
        if upper_zero {
            sb.torus.push(g);
        }
        if (0..n).all(|i| m[i * n + i] == 1) {
            sb.unipotent_radical.push(g);
        }
    }
    sb.weyl_reps = sb
        .weyl_perms
        .iter()
        .map(|w| {
            let mut m = [0u8; 9];
            for (j, &wj) in w.iter().enumerate() {
                m[wj * n + j] = 1;
            }
            sb.index_of(&m).unwrap()
        })
        .collect();
    sb.cell_label = sb
        .elements
        .iter()
        .map(|m| perm_index[&bruhat_permutation(&sb.field, n, m)] as u16)
        .collect();
    let (classes, class_of) = conjugacy_classes(&sb);
    sb.classes = classes;
    sb.class_of = class_of;
    Ok(sb)
}

/// Generators: elementary transvections `1 + a·E_ij` and `diag(γ at i)`.
fn generators(sb: &LieGroupSandbox) -> Vec<usize> {
    let n = sb.n;
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for a in 1..sb.q {
                let mut m = identity(n);
                m[i * n + j] = a;
                gens.push(sb.index_of(&m).unwrap());
            }
        }
    }
    let gamma = sb.field.primitive_element();
    for i in 0..n {
        let mut m = identity(n);
        m[i * n + i] = gamma;
        gens.push(sb.index_of(&m).unwrap());
    }
    gens
}

fn conjugacy_classes(sb: &LieGroupSandbox) -> (Vec<Vec<usize>>, Vec<u32>) {
    let gens = generators(sb);
    let order = sb.order();
    let mut class_of = vec![u32::MAX; order];
    let mut classes = Vec::new();
    for g in 0..order {
        if class_of[g] != u32::MAX {
            continue;
        }
        let c = classes.len() as u32;
        class_of[g] = c;
        let mut members = vec![g];
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            k += 1;
            for &h in &gens {
                let y = sb.conj(h, x);
                if class_of[y] == u32::MAX {
                    class_of[y] = c;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    (classes, class_of)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let sb = build_sandbox(2, 2).unwrap();
        assert_eq!(sb.order(), 6);
        let sb = build_sandbox(2, 3).unwrap();
        assert_eq!(sb.borel_order(), 12);
        let sb = build_sandbox(3, 2).unwrap();
        assert_eq!(sb.order(), 168);
        assert_eq!(sb.classes.len(), 6);
        assert!(build_sandbox(4, 2).is_err());
        assert!(build_sandbox(2, 6).is_err());
    }

    #[test]
    fn words_and_permutations_agree() {
        for w in [
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![2, 1, 0],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ] {
            assert_eq!(permutation_of_word(3, &permutation_word(&w)), w);
        }
    }

    #[test]
    fn weyl_representatives_lie_in_their_cells() {
        let sb = build_sandbox(3, 3).unwrap();
        for (w, &g) in sb.weyl_reps.iter().enumerate() {
            assert_eq!(sb.cell_label[g] as usize, w);
        }
    }
}
