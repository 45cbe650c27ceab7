//! Kazhdan–Lusztig W-graphs of small Weyl groups and left-cell models.
//!
//! On a left cell `Γ` the generators act by
//! `T_s·e_y = −e_y` if `sy < y`, and otherwise
//! `T_s·e_y = q·e_y + v·Σ_{z∈Γ, sz<z} μ(z,y)·e_z`.
//! All entries lie in `Z[v]`, unlike seminormal forms.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::matrix::LMatrix;
use crate::arith::{CycNum, LaurentPoly};
use crate::coxeter::{RootSystem, WeylElement};

/// Largest group handled by the KL computation.
pub const KL_CAP: usize = 1000;

/// Kazhdan–Lusztig data of a small Weyl group.
pub struct KlData {
    pub elements: Vec<WeylElement>,
    pub lengths: Vec<usize>,
    /// `left[s][i]` is the index of `s·w_i`.
    pub left: Vec<Vec<usize>>,
    /// Nonzero `μ` values, symmetric: `mu[&(min, max)]`.
    pub mu: HashMap<(usize, usize), i64>,
}

impl KlData {
    pub fn new(rs: &RootSystem) -> Option<Self> {
        let elements = rs.enumerate(KL_CAP).ok()?;
        let n = elements.len();
        let index: HashMap<&WeylElement, usize> =
            elements.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let lengths: Vec<usize> = elements.iter().map(WeylElement::length).collect();
        let left: Vec<Vec<usize>> = (0..rs.rank())
            .map(|s| {
                elements
                    .iter()
                    .map(|w| index[&rs.mul_simple_left(s, w)])
                    .collect()
            })
            .collect();
        // p[w][x] = P_{x,w} as coefficients in q; empty means zero.
        let mut p: Vec<Vec<Vec<i64>>> = vec![Vec::new(); n];
        // mu_below[v] lists (z, μ(z,v)) with z < v.
        let mut mu_below: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
        p[0] = vec![Vec::new(); n];
        p[0][0] = vec![1];
        for w in 1..n {
            let s = (0..rs.rank())
                .find(|&s| lengths[left[s][w]] < lengths[w])
                .expect("nontrivial element has a left descent");
            let v = left[s][w];
            let mut col = vec![Vec::new(); n];
            for x in 0..n {
                if lengths[x] > lengths[w] {
                    continue;
                }
                let sx = left[s][x];
                let c = usize::from(lengths[sx] < lengths[x]);
                let mut acc: Vec<i64> = Vec::new();
                add_shifted(&mut acc, &p[v][sx], 1 - c, 1);
                add_shifted(&mut acc, &p[v][x], c, 1);
                for &(z, m) in &mu_below[v] {
                    if lengths[left[s][z]] < lengths[z] && !p[z].is_empty() {
                        let shift = (lengths[w] - lengths[z]) / 2;
                        add_shifted(&mut acc, &p[z][x], shift, -m);
                    }
                }
                while acc.last() == Some(&0) {
                    acc.pop();
                }
                col[x] = acc;
            }
            for (x, px) in col.iter().enumerate() {
                let d = lengths[w] as i64 - lengths[x] as i64;
                if x != w && d > 0 && d % 2 == 1 {
                    let k = ((d - 1) / 2) as usize;
                    if let Some(&m) = px.get(k) {
                        if m != 0 {
                            mu_below[w].push((x, m));
                        }
                    }
                }
            }
            p[w] = col;
        }
        let mut mu = HashMap::new();
        for (w, list) in mu_below.iter().enumerate() {
            for &(z, m) in list {
                mu.insert((z.min(w), z.max(w)), m);
            }
        }
        Some(KlData {
            elements,
            lengths,
            left,
            mu,
        })
    }

    pub fn mu(&self, a: usize, b: usize) -> i64 {
        self.mu.get(&(a.min(b), a.max(b))).copied().unwrap_or(0)
    }

    pub fn is_left_descent(&self, s: usize, y: usize) -> bool {
        self.lengths[self.left[s][y]] < self.lengths[y]
    }

    /// Left cells: strongly connected components of the W-graph preorder.
    pub fn left_cells(&self) -> Vec<Vec<usize>> {
        let n = self.elements.len();
        let rank = self.left.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for y in 0..n {
            for z in 0..n {
                if z != y
                    && self.mu(z, y) != 0
                    && (0..rank).any(|s| !self.is_left_descent(s, y) && self.is_left_descent(s, z))
                {
                    adj[y].push(z);
                }
            }
        }
        let mut cells = tarjan(&adj);
        for c in cells.iter_mut() {
            c.sort_unstable();
        }
        cells.sort();
        cells
    }

    /// Generator matrices of the left-cell module on `cell` (sorted).
    pub fn cell_matrices(&self, cell: &[usize]) -> Vec<LMatrix> {
        let d = cell.len();
        let pos: HashMap<usize, usize> = cell.iter().enumerate().map(|(i, &y)| (y, i)).collect();
        let q = LaurentPoly::q_pow(1);
        (0..self.left.len())
            .map(|s| {
                let mut m = vec![vec![LaurentPoly::zero(); d]; d];
                for (j, &y) in cell.iter().enumerate() {
                    if self.is_left_descent(s, y) {
                        m[j][j] = LaurentPoly::from(-1);
                        continue;
                    }
                    m[j][j] = q.clone();
                    for (&z, &i) in &pos {
                        let mu = self.mu(z, y);
                        if mu != 0 && self.is_left_descent(s, z) {
                            m[i][j] = LaurentPoly::monomial(CycNum::from_integer(mu), 1);
                        }
                    }
                }
                m
            })
            .collect()
    }
}

fn add_shifted(acc: &mut Vec<i64>, src: &[i64], shift: usize, factor: i64) {
    if src.is_empty() {
        return;
    }
    if acc.len() < src.len() + shift {
        acc.resize(src.len() + shift, 0);
    }
    for (k, &c) in src.iter().enumerate() {
        acc[k + shift] += factor * c;
    }
}

fn tarjan(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        out: Vec<Vec<usize>>,
    }
    fn visit(st: &mut State, v: usize) {
        st.index[v] = Some(st.next);
        st.low[v] = st.next;
        st.next += 1;
        st.stack.push(v);
        st.on_stack[v] = true;
        for i in 0..st.adj[v].len() {
            let w = st.adj[v][i];
            match st.index[w] {
                None => {
                    visit(st, w);
                    st.low[v] = st.low[v].min(st.low[w]);
                }
                Some(iw) if st.on_stack[w] => st.low[v] = st.low[v].min(iw),
                _ => {}
            }
        }
        if Some(st.low[v]) == st.index[v] {
            let mut comp = Vec::new();
            loop {
                let w = st.stack.pop().unwrap();
                st.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            st.out.push(comp);
        }
    }
    let n = adj.len();
    let mut st = State {
        adj,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        out: Vec::new(),
    };
    for v in 0..n {
        if st.index[v].is_none() {
            visit(&mut st, v);
        }
    }
    st.out
}

/// One-line notation of a type-A Weyl element acting on `{0, …, n−1}`.
pub fn one_line(rs: &RootSystem, w: &WeylElement) -> Vec<usize> {
    let n = rs.rank() + 1;
    let mut line: Vec<usize> = (0..n).collect();
    for s in rs.reduced_word(w) {
        line.swap(s, s + 1);
    }
    line
}

/// Shape of the Robinson–Schensted insertion tableau.
pub fn rsk_shape(seq: &[usize]) -> Vec<usize> {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &x in seq {
        let mut x = x;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            match rows[r].iter().position(|&y| y > x) {
                Some(p) => {
                    x = std::mem::replace(&mut rows[r][p], x);
                    r += 1;
                }
                None => {
                    rows[r].push(x);
                    break;
                }
            }
        }
    }
    rows.iter().map(Vec::len).collect()
}

/// Left-cell models of `W(A_{n−1})`, one per partition of `n`.
pub struct TypeAModels {
    pub by_partition: Vec<(Vec<usize>, Vec<LMatrix>)>,
}

type ModelCache = Mutex<HashMap<usize, Arc<TypeAModels>>>;

/// Models for `W(A_{rank})`, cached per rank.
pub fn type_a_models(rs: &RootSystem) -> Option<Arc<TypeAModels>> {
    static CACHE: OnceLock<ModelCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let rank = rs.rank();
    if let Some(m) = cache.lock().unwrap().get(&rank) {
        return Some(Arc::clone(m));
    }
    let kl = KlData::new(rs)?;
    let mut chosen: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for cell in kl.left_cells() {
        let shape = rsk_shape(&one_line(rs, &kl.elements[cell[0]]));
        match chosen.iter_mut().find(|(s, _)| *s == shape) {
            Some(entry) if entry.1[0] > cell[0] => entry.1 = cell,
            Some(_) => {}
            None => chosen.push((shape, cell)),
        }
    }
    chosen.sort_by(|a, b| b.0.cmp(&a.0));
    let models = Arc::new(TypeAModels {
        by_partition: chosen
            .into_iter()
            .map(|(shape, cell)| {
                let mats = kl.cell_matrices(&cell);
                (shape, mats)
            })
            .collect(),
    });
    cache.lock().unwrap().insert(rank, Arc::clone(&models));
    Some(models)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rsk_examples() {
        assert_eq!(rsk_shape(&[0, 1, 2]), vec![3]);
        assert_eq!(rsk_shape(&[2, 1, 0]), vec![1, 1, 1]);
        assert_eq!(rsk_shape(&[1, 0, 2]), vec![2, 1]);
    }

    #[test]
    fn a2_mu_and_cells() {
        let rs = RootSystem::from_type("A2").unwrap();
        let kl = KlData::new(&rs).unwrap();
        // In S3 every P_{x,w} is 1, so μ(x,w) = 1 exactly when ℓ(w) − ℓ(x) = 1
        // and x < w.
        let cells = kl.left_cells();
        let mut sizes: Vec<usize> = cells.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2]);
    }

    #[test]
    fn cell_sizes_match_dimensions_in_a3() {
        let rs = RootSystem::from_type("A3").unwrap();
        let models = type_a_models(&rs).unwrap();
        let dims: Vec<(Vec<usize>, usize)> = models
            .by_partition
            .iter()
            .map(|(p, m)| (p.clone(), m[0].len()))
            .collect();
        assert_eq!(
            dims,
            vec![
                (vec![4], 1),
                (vec![3, 1], 3),
                (vec![2, 2], 2),
                (vec![2, 1, 1], 3),
                (vec![1, 1, 1, 1], 1),
            ]
        );
    }
}
