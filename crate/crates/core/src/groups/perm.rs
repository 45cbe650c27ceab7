//! Permutations of `{0, …, n−1}`.

use std::fmt;

use super::GroupError;

/// A permutation stored by images; composition is functional,
/// `(a·b)(x) = a(b(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Extend to degree `n` by fixing the new points.
    pub fn extended(&self, n: usize) -> Perm {
        let mut v = self.0.clone();
        v.extend(self.0.len() as u32..n as u32);
        Perm(v)
    }

    /// Parse cycle notation with 1-based points, e.g. `(1,2)(3,4)` or `()`.
    pub fn from_cycles(s: &str, degree: usize) -> Result<Perm, GroupError> {
        let bad = || GroupError::Parse(s.to_string());
        let mut img: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        let body = s.trim();
        if body.is_empty() {
            return Err(bad());
        }
        for cyc in body.split('(').skip(1) {
            let cyc = cyc.trim();
            let inner = cyc.strip_suffix(')').ok_or_else(bad)?;
            if inner.trim().is_empty() {
                continue;
            }
            let pts = inner
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .ok()
                        .filter(|&p| p >= 1 && p <= degree)
                })
                .collect::<Option<Vec<_>>>()
                .ok_or_else(bad)?;
            for (k, &p) in pts.iter().enumerate() {
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(bad());
                }
                img[p - 1] = (pts[(k + 1) % pts.len()] - 1) as u32;
            }
        }
        if !body.starts_with('(') {
            return Err(bad());
        }
        Ok(Perm(img))
    }

    /// Largest point moved, 1-based, in cycle notation.
    pub fn max_point_in(s: &str) -> usize {
        s.split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for Perm {
    /// Cycle notation, 1-based; the identity is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            any = true;
            let mut cyc = vec![start + 1];
            seen[start] = true;
            let mut x = self.0[start] as usize;
            while x != start {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.0[x] as usize;
            }
            let parts: Vec<String> = cyc.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let p = Perm::from_cycles("(1,2)(3,4,5)", 5).unwrap();
        assert_eq!(p.to_string(), "(1,2)(3,4,5)");
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert!(Perm::from_cycles("(1,1)", 3).is_err());
        assert!(Perm::from_cycles("(1,4)", 3).is_err());
        assert!(Perm::from_cycles("1,2", 3).is_err());
    }

    #[test]
    fn composition_is_functional() {
        let a = Perm::from_cycles("(1,2)", 3).unwrap();
        let b = Perm::from_cycles("(2,3)", 3).unwrap();
        // a(b(1)) = a(1) = 2, a(b(2)) = a(3) = 3.
        assert_eq!(a.compose(&b).0, vec![1, 2, 0]);
        assert!(a.compose(&a).is_identity());
        assert!(a
            .compose(&b)
            .compose(&a.compose(&b).inverse())
            .is_identity());
    }
}
