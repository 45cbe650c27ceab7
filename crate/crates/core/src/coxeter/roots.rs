//! Root systems by reflection closure and Weyl group elements as root
//! permutations.

use std::collections::{HashMap, HashSet, VecDeque};

use super::{CartanDatum, CoxeterError, WeylElement};

/// Upper bound on the number of roots before a matrix is declared infinite.
const ROOT_CAP: usize = 20_000;

/// All roots of a finite root system in the simple-root basis.
///
/// Positive roots occupy indices `0..n_pos` ordered by height; the negative
/// of root `i` sits at `i + n_pos`. The simple root `α_i` has index `i`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub datum: CartanDatum,
    pub roots: Vec<Vec<i32>>,
    pub positive_flags: Vec<bool>,
    /// `reflection[s][r]` is the index of `s_s(root r)`.
    pub reflection: Vec<Vec<u16>>,
    index: HashMap<Vec<i32>, usize>,
    n_pos: usize,
}

fn reflect(cartan: &[Vec<i32>], s: usize, beta: &[i32]) -> Vec<i32> {
    let pairing: i32 = cartan[s].iter().zip(beta).map(|(a, b)| a * b).sum();
    let mut out = beta.to_vec();
    out[s] -= pairing;
    out
}

impl RootSystem {
    /// Closure of the simple roots under the simple reflections.
    pub fn new(datum: CartanDatum) -> Result<Self, CoxeterError> {
        let n = datum.rank();
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for s in 0..n {
                let img = reflect(&datum.cartan, s, &beta);
                if seen.insert(img.clone()) {
                    if seen.len() > ROOT_CAP {
                        return Err(CoxeterError::InvalidCartan(
                            "reflection closure does not terminate".into(),
                        ));
                    }
                    queue.push_back(img);
                }
            }
        }
        let mut pos: Vec<Vec<i32>> = Vec::new();
        for r in &seen {
            let nonneg = r.iter().all(|&c| c >= 0);
            let nonpos = r.iter().all(|&c| c <= 0);
            if !nonneg && !nonpos {
                return Err(CoxeterError::InvalidCartan("root with mixed signs".into()));
            }
            if nonneg {
                pos.push(r.clone());
            }
        }
        pos.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = pos.len();
        if 2 * n_pos != seen.len() {
            return Err(CoxeterError::InvalidCartan(
                "roots not symmetric under negation".into(),
            ));
        }
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        let index: HashMap<Vec<i32>, usize> = roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        let reflection = (0..n)
            .map(|s| {
                roots
                    .iter()
                    .map(|r| index[&reflect(&datum.cartan, s, r)] as u16)
                    .collect()
            })
            .collect();
        let positive_flags = (0..roots.len()).map(|i| i < n_pos).collect();
        Ok(RootSystem {
            datum,
            roots,
            positive_flags,
            reflection,
            index,
            n_pos,
        })
    }

    /// Parse a type label and build its root system.
    pub fn from_type(label: &str) -> Result<Self, CoxeterError> {
        RootSystem::new(label.parse()?)
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root_index(&self, coords: &[i32]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_positive(&self, r: usize) -> bool {
        r < self.n_pos
    }

    /// Index of `−root r`.
    pub fn negate(&self, r: usize) -> usize {
        if r < self.n_pos {
            r + self.n_pos
        } else {
            r - self.n_pos
        }
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::from_parts((0..self.num_roots() as u16).collect(), 0)
    }

    fn check_gen(&self, s: usize) -> Result<(), CoxeterError> {
        if s >= self.rank() {
            Err(CoxeterError::IndexOutOfRange {
                index: s,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// Simple reflection `s` (0-based).
    pub fn simple_reflection(&self, s: usize) -> Result<WeylElement, CoxeterError> {
        self.check_gen(s)?;
        Ok(WeylElement::from_parts(self.reflection[s].clone(), 1))
    }

    /// `w·s`, updating the length from the sign of `w(α_s)`.
    pub fn mul_simple_right(&self, w: &WeylElement, s: usize) -> WeylElement {
        let refl = &self.reflection[s];
        let perm: Vec<u16> = refl.iter().map(|&r| w.perm()[r as usize]).collect();
        let up = self.is_positive(w.perm()[s] as usize);
        let len = if up { w.length() + 1 } else { w.length() - 1 };
        WeylElement::from_parts(perm, len)
    }

    /// `s·w`.
    pub fn mul_simple_left(&self, s: usize, w: &WeylElement) -> WeylElement {
        let refl = &self.reflection[s];
        let perm: Vec<u16> = w.perm().iter().map(|&r| refl[r as usize]).collect();
        let up = !self.is_left_descent(w, s);
        let len = if up { w.length() + 1 } else { w.length() - 1 };
        WeylElement::from_parts(perm, len)
    }

    /// Product of the simple reflections in `word` (0-based), left to right.
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement, CoxeterError> {
        let mut w = self.identity();
        for &s in word {
            self.check_gen(s)?;
            w = self.mul_simple_right(&w, s);
        }
        Ok(w)
    }

    /// Composition `a∘b`.
    pub fn multiply(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let perm: Vec<u16> = b.perm().iter().map(|&r| a.perm()[r as usize]).collect();
        self.with_length(perm)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut inv = vec![0u16; w.perm().len()];
        for (i, &r) in w.perm().iter().enumerate() {
            inv[r as usize] = i as u16;
        }
        WeylElement::from_parts(inv, w.length())
    }

    /// `u·w·u⁻¹`.
    pub fn conjugate(&self, u: &WeylElement, w: &WeylElement) -> WeylElement {
        self.multiply(&self.multiply(u, w), &self.inverse(u))
    }

    fn with_length(&self, perm: Vec<u16>) -> WeylElement {
        let len = perm[..self.n_pos]
            .iter()
            .filter(|&&r| !self.is_positive(r as usize))
            .count();
        WeylElement::from_parts(perm, len)
    }

    /// Build an element from a root permutation, checking it commutes with
    /// negation; the length is recomputed from inversions.
    pub fn element_from_perm(&self, perm: Vec<u16>) -> Result<WeylElement, CoxeterError> {
        if perm.len() != self.num_roots()
            || (0..self.num_roots())
                .any(|r| perm[self.negate(r)] as usize != self.negate(perm[r] as usize))
        {
            return Err(CoxeterError::NotAnElement);
        }
        Ok(self.with_length(perm))
    }

    /// `ℓ(w s) < ℓ(w)`, i.e. `w(α_s) < 0`.
    pub fn is_right_descent(&self, w: &WeylElement, s: usize) -> bool {
        !self.is_positive(w.perm()[s] as usize)
    }

    /// `ℓ(s w) < ℓ(w)`, i.e. `w⁻¹(α_s) < 0`.
    pub fn is_left_descent(&self, w: &WeylElement, s: usize) -> bool {
        let pre = w
            .perm()
            .iter()
            .position(|&r| r as usize == s)
            .expect("permutation");
        !self.is_positive(pre)
    }

    /// A reduced word by stripping right descents.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut word = Vec::with_capacity(w.length());
        let mut cur = w.clone();
        while cur.length() > 0 {
            let s = (0..self.rank())
                .find(|&s| self.is_right_descent(&cur, s))
                .expect("nontrivial element has a descent");
            word.push(s);
            cur = self.mul_simple_right(&cur, s);
        }
        word.reverse();
        word
    }

    /// Longest element `w₀^J` of the parabolic subgroup `W_J`.
    pub fn longest_element(&self, j: &[usize]) -> Result<WeylElement, CoxeterError> {
        for &s in j {
            self.check_gen(s)?;
        }
        let mut w = self.identity();
        while let Some(&s) = j.iter().find(|&&s| !self.is_right_descent(&w, s)) {
            w = self.mul_simple_right(&w, s);
        }
        Ok(w)
    }

    /// Generators `σ_s = w₀^{J∪{s}}·w₀^J`, `s ∉ J`, of the relative Weyl
    /// group. Fails unless every `σ_s` is an involution normalizing `W_J`.
    pub fn relative_weyl_generators(
        &self,
        j: &[usize],
    ) -> Result<Vec<(usize, WeylElement)>, CoxeterError> {
        let w0j = self.longest_element(j)?;
        let simple_j: HashSet<usize> = j.iter().copied().collect();
        let mut out = Vec::new();
        for s in (0..self.rank()).filter(|s| !simple_j.contains(s)) {
            let mut js = j.to_vec();
            js.push(s);
            let sigma = self.multiply(&self.longest_element(&js)?, &w0j);
            let stabilizes = j
                .iter()
                .all(|&t| simple_j.contains(&(sigma.perm()[t] as usize)));
            if !self.multiply(&sigma, &sigma).is_identity() || !stabilizes {
                return Err(CoxeterError::NotRelative { generator: s });
            }
            out.push((s, sigma));
        }
        Ok(out)
    }

    /// Coxeter element `s_{o_1}·s_{o_2}·…` for a node ordering.
    pub fn coxeter_element(&self, order: &[usize]) -> Result<WeylElement, CoxeterError> {
        self.check_ordering(order)?;
        self.element_from_word(order)
    }

    pub(crate) fn check_ordering(&self, order: &[usize]) -> Result<(), CoxeterError> {
        let mut seen = vec![false; self.rank()];
        for &s in order {
            self.check_gen(s)?;
            if std::mem::replace(&mut seen[s], true) {
                return Err(CoxeterError::NotAnOrdering);
            }
        }
        if order.len() != self.rank() {
            return Err(CoxeterError::NotAnOrdering);
        }
        Ok(())
    }

    /// `|W|` by an orbit–stabilizer chain: the stabilizer in `W_J` of the
    /// fundamental weight `ω_s` is `W_{J∖{s}}`.
    pub fn group_order(&self) -> u128 {
        let mut j: Vec<usize> = (0..self.rank()).collect();
        let mut order: u128 = 1;
        while let Some(s) = j.pop() {
            let mut omega = vec![0i32; self.rank()];
            omega[s] = 1;
            let mut j_full = j.clone();
            j_full.push(s);
            order *= self.weight_orbit(&omega, &j_full).len() as u128;
        }
        order
    }

    /// Orbit of a weight (fundamental-weight coordinates) under `W_J`.
    pub fn weight_orbit(&self, lambda: &[i32], j: &[usize]) -> Vec<Vec<i32>> {
        let a = &self.datum.cartan;
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut out = vec![lambda.to_vec()];
        seen.insert(lambda.to_vec());
        let mut head = 0;
        while head < out.len() {
            let mu = out[head].clone();
            head += 1;
            for &i in j {
                if mu[i] == 0 {
                    continue;
                }
                // s_i(μ) = μ − μ_i·α_i; coordinate k of α_i is a[k][i].
                let img: Vec<i32> = (0..mu.len()).map(|k| mu[k] - mu[i] * a[k][i]).collect();
                if seen.insert(img.clone()) {
                    out.push(img);
                }
            }
        }
        out
    }

    /// Every element of the subgroup generated by `gens`, by closure; fails
    /// past `cap` elements.
    pub fn generate_subgroup(
        &self,
        gens: &[WeylElement],
        cap: usize,
    ) -> Result<Vec<WeylElement>, CoxeterError> {
        let id = self.identity();
        let mut seen: HashSet<Vec<u16>> = HashSet::new();
        seen.insert(id.perm().to_vec());
        let mut out = vec![id];
        let mut head = 0;
        while head < out.len() {
            let x = out[head].clone();
            head += 1;
            for g in gens {
                let y = self.multiply(&x, g);
                if seen.insert(y.perm().to_vec()) {
                    if out.len() >= cap {
                        return Err(CoxeterError::EnumerationCap(cap));
                    }
                    out.push(y);
                }
            }
        }
        Ok(out)
    }

    /// All elements of `W`, ordered by length then discovery.
    pub fn enumerate(&self, cap: usize) -> Result<Vec<WeylElement>, CoxeterError> {
        let gens: Vec<WeylElement> = (0..self.rank())
            .map(|s| self.simple_reflection(s).unwrap())
            .collect();
        let mut all = self.generate_subgroup(&gens, cap)?;
        all.sort_by_key(|w| w.length());
        Ok(all)
    }

    /// Action of `w` on a vector in simple-root coordinates.
    pub fn act_on_vector(&self, w: &WeylElement, v: &[i32]) -> Vec<i32> {
        let mut out = vec![0i32; self.rank()];
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                let img = &self.roots[w.perm()[i] as usize];
                for (o, x) in out.iter_mut().zip(img) {
                    *o += c * x;
                }
            }
        }
        out
    }
}
