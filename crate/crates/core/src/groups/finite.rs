//! Finite permutation groups by full enumeration.

use std::collections::HashMap;

use num_integer::Integer;

use super::{GroupError, Perm};

/// Default bound on the number of enumerated elements.
pub const DEFAULT_ORDER_CAP: usize = 100_000;

/// All elements of a permutation group, identity at index 0, in
/// breadth-first order from the generators.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub name: String,
    pub generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    inverse: Vec<usize>,
}

/// Conjugacy classes with representatives and centralizers.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    /// Element indices of each class, ascending; classes ordered by size,
    /// then by smallest element index.
    pub classes: Vec<Vec<usize>>,
    /// Class number of every element.
    pub class_of: Vec<usize>,
    /// Representative (smallest element index) of each class.
    pub reps: Vec<usize>,
    /// Centralizer of each representative, as sorted element indices.
    pub centralizers: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Enumerate the group generated by `gens` on a common domain.
    pub fn enumerate(name: &str, gens: &[Perm], cap: usize) -> Result<Self, GroupError> {
        let degree = gens.iter().map(Perm::degree).max().unwrap_or(1).max(1);
        let gens: Vec<Perm> = gens.iter().map(|g| g.extended(degree)).collect();
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in &gens {
                let y = g.compose(&x);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(GroupError::OrderCapExceeded(cap));
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
        }
        let inverse = elements.iter().map(|e| index[&e.inverse()]).collect();
        Ok(FiniteGroup {
            name: name.to_string(),
            generators: gens,
            elements,
            index,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of `a·b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Index of `h·g·h⁻¹`.
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inverse[h])
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.order())
            .map(|a| self.element_order(a))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .all(|a| g.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Elements commuting with `g`.
    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.order())
            .filter(|&x| self.mul(x, g) == self.mul(g, x))
            .collect()
    }

    /// Conjugacy classes in canonical order, with centralizers.
    pub fn conjugacy_data(&self) -> ConjugacyData {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = raw.len();
            let mut members = vec![start];
            class_of[start] = id;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for g in &self.generators {
                    let gi = self.index[g];
                    let y = self.conj(gi, x);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            raw.push(members);
        }
        raw.sort_by_key(|c| (c.len(), c[0]));
        for (k, c) in raw.iter().enumerate() {
            for &x in c {
                class_of[x] = k;
            }
        }
        let reps: Vec<usize> = raw.iter().map(|c| c[0]).collect();
        let centralizers = reps.iter().map(|&r| self.centralizer(r)).collect();
        ConjugacyData {
            classes: raw,
            class_of,
            reps,
            centralizers,
        }
    }

    /// The subgroup on the given element indices, re-enumerated from them.
    pub fn subgroup(&self, name: &str, members: &[usize]) -> Result<FiniteGroup, GroupError> {
        let gens: Vec<Perm> = members.iter().map(|&i| self.elements[i].clone()).collect();
        let h = FiniteGroup::enumerate(name, &gens, members.len().max(1))?;
        debug_assert_eq!(h.order(), members.len());
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(s: &str, n: usize) -> Perm {
        Perm::from_cycles(s, n).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let z4 = FiniteGroup::enumerate("Z4", &[cyc("(1,2,3,4)", 4)], 100).unwrap();
        assert_eq!(z4.order(), 4);
        let s3 = FiniteGroup::enumerate("S3", &[cyc("(1,2)", 3), cyc("(1,2,3)", 3)], 100).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(s3.element(0).is_identity());
        let s5 =
            FiniteGroup::enumerate("S5", &[cyc("(1,2)", 5), cyc("(1,2,3,4,5)", 5)], 1000).unwrap();
        assert_eq!(s5.order(), 120);
        assert_eq!(
            FiniteGroup::enumerate("S5", &[cyc("(1,2)", 5), cyc("(1,2,3,4,5)", 5)], 50)
                .unwrap_err(),
            GroupError::OrderCapExceeded(50)
        );
    }

    #[test]
    fn conjugacy_examples() {
        let s3 = FiniteGroup::enumerate("S3", &[cyc("(1,2)", 3), cyc("(1,2,3)", 3)], 100).unwrap();
        let cd = s3.conjugacy_data();
        let sizes: Vec<usize> = cd.classes.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(cd.centralizers[2].len(), 2);
        for (c, z) in cd.classes.iter().zip(&cd.centralizers) {
            assert_eq!(c.len() * z.len(), 6);
        }
        let z4 = FiniteGroup::enumerate("Z4", &[cyc("(1,2,3,4)", 4)], 100).unwrap();
        assert_eq!(z4.conjugacy_data().classes.len(), 4);
        assert_eq!(z4.exponent(), 4);
    }
}
