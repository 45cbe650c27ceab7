//! Cartan matrices of finite type.
//!
//! Convention: `cartan[i][j] = ⟨α_j, α_i^∨⟩`, so the simple reflection `s_i`
//! acts on root coordinates by `β ↦ β − (Σ_j cartan[i][j]·β_j)·α_i`.
//! Node numbering follows Bourbaki.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::CoxeterError;

/// A validated Cartan matrix with its type label and node names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    pub type_label: String,
    pub cartan: Vec<Vec<i32>>,
    pub node_names: Vec<String>,
}

impl CartanDatum {
    /// Validate a matrix and wrap it; nodes are named `1..=rank`.
    pub fn new(type_label: &str, cartan: Vec<Vec<i32>>) -> Result<Self, CoxeterError> {
        validate(&cartan)?;
        let node_names = (1..=cartan.len()).map(|i| i.to_string()).collect();
        Ok(CartanDatum {
            type_label: type_label.to_string(),
            cartan,
            node_names,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Whether nodes `i` and `j` are joined in the Dynkin diagram.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    /// Coxeter matrix entry `m_ij`, the order of `s_i s_j`.
    pub fn coxeter_m(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        match self.cartan[i][j] * self.cartan[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            other => unreachable!("validated Cartan product {other}"),
        }
    }

    /// Irreducible finite-type matrix by Bourbaki label.
    pub fn irreducible(series: char, n: usize) -> Result<Self, CoxeterError> {
        let bad = || CoxeterError::UnknownType(format!("{series}{n}"));
        let mut a = vec![vec![0i32; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = |a: &mut Vec<Vec<i32>>, nodes: &[usize]| {
            for w in nodes.windows(2) {
                a[w[0]][w[1]] = -1;
                a[w[1]][w[0]] = -1;
            }
        };
        match series {
            'A' if n >= 1 => chain(&mut a, &(0..n).collect::<Vec<_>>()),
            'B' if n >= 2 => {
                chain(&mut a, &(0..n).collect::<Vec<_>>());
                // α_n short.
                a[n - 1][n - 2] = -2;
            }
            'C' if n >= 2 => {
                chain(&mut a, &(0..n).collect::<Vec<_>>());
                // α_n long.
                a[n - 2][n - 1] = -2;
            }
            'D' if n >= 3 => {
                chain(&mut a, &(0..n - 1).collect::<Vec<_>>());
                a[n - 3][n - 1] = -1;
                a[n - 1][n - 3] = -1;
            }
            'E' if (6..=8).contains(&n) => {
                chain(&mut a, &[0, 2]);
                chain(&mut a, &(2..n).collect::<Vec<_>>());
                a[1][3] = -1;
                a[3][1] = -1;
            }
            'F' if n == 4 => {
                chain(&mut a, &[0, 1, 2, 3]);
                // α_1, α_2 long; α_3, α_4 short.
                a[2][1] = -2;
            }
            'G' if n == 2 => {
                // α_1 short, α_2 long.
                a[0][1] = -3;
                a[1][0] = -1;
            }
            _ => return Err(bad()),
        }
        CartanDatum::new(&format!("{series}{n}"), a)
    }

    /// Block-diagonal sum of data; nodes are renumbered consecutively.
    pub fn product(parts: &[CartanDatum]) -> Result<Self, CoxeterError> {
        let n: usize = parts.iter().map(|p| p.rank()).sum();
        let mut a = vec![vec![0i32; n]; n];
        let mut off = 0;
        for p in parts {
            for i in 0..p.rank() {
                for j in 0..p.rank() {
                    a[off + i][off + j] = p.cartan[i][j];
                }
            }
            off += p.rank();
        }
        let label = parts
            .iter()
            .map(|p| p.type_label.as_str())
            .collect::<Vec<_>>()
            .join("x");
        CartanDatum::new(&label, a)
    }
}

impl FromStr for CartanDatum {
    type Err = CoxeterError;

    /// Parses `E7`, `A2`, `B3`, `A1xA1`, `G2xA2`, ...
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = s
            .split(['x', 'X', '*'])
            .map(|p| {
                let p = p.trim();
                let mut chars = p.chars();
                let series = chars
                    .next()
                    .ok_or_else(|| CoxeterError::UnknownType(s.to_string()))?
                    .to_ascii_uppercase();
                let n: usize = chars
                    .as_str()
                    .parse()
                    .map_err(|_| CoxeterError::UnknownType(s.to_string()))?;
                CartanDatum::irreducible(series, n)
            })
            .collect::<Result<Vec<_>, _>>()?;
        if parts.len() == 1 {
            Ok(parts.into_iter().next().unwrap())
        } else {
            CartanDatum::product(&parts)
        }
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.type_label)
    }
}

/// Check diagonal, sign pattern, symmetrizability and positive definiteness.
fn validate(a: &[Vec<i32>]) -> Result<(), CoxeterError> {
    let n = a.len();
    let invalid = |why: &str| Err(CoxeterError::InvalidCartan(why.to_string()));
    if n == 0 {
        return invalid("empty matrix");
    }
    if a.iter().any(|row| row.len() != n) {
        return invalid("matrix is not square");
    }
    for i in 0..n {
        if a[i][i] != 2 {
            return invalid("diagonal entry differs from 2");
        }
        for j in 0..n {
            if i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) {
                return invalid("off-diagonal sign pattern");
            }
        }
    }
    // Symmetrizer d with d_i·a_ij = d_j·a_ji, propagated along edges.
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(BigRational::from_integer(1.into()));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                let want = &di * BigRational::new(a[i][j].into(), a[j][i].into());
                match &d[j] {
                    Some(dj) if *dj != want => return invalid("not symmetrizable"),
                    Some(_) => {}
                    None => {
                        d[j] = Some(want);
                        stack.push(j);
                    }
                }
            }
        }
    }
    // Symmetrized form B = D·A must be positive definite: every pivot of
    // Gaussian elimination (equivalently every leading minor) positive.
    let mut b: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| d[i].clone().unwrap() * BigRational::from_integer(a[i][j].into()))
                .collect()
        })
        .collect();
    for k in 0..n {
        if !b[k][k].is_positive() {
            return invalid("not of finite type");
        }
        for i in k + 1..n {
            if b[i][k].is_zero() {
                continue;
            }
            let f = &b[i][k] / &b[k][k];
            for j in k..n {
                let t = &f * &b[k][j];
                b[i][j] -= t;
            }
        }
    }
    Ok(())
}
