//! Dense square matrices over Laurent polynomials.

use crate::arith::{CycNum, LaurentPoly};

pub type LMatrix = Vec<Vec<LaurentPoly>>;

pub fn identity(n: usize) -> LMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn from_ints(rows: &[&[i64]]) -> LMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| LaurentPoly::from(x)).collect())
        .collect()
}

pub fn mul(a: &LMatrix, b: &LMatrix) -> LMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![LaurentPoly::zero(); m]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(aik * &b[k][j]);
                }
            }
        }
    }
    out
}

pub fn add(a: &LMatrix, b: &LMatrix) -> LMatrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn sub(a: &LMatrix, b: &LMatrix) -> LMatrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn scale(a: &LMatrix, c: &LaurentPoly) -> LMatrix {
    a.iter()
        .map(|r| r.iter().map(|x| x * c).collect())
        .collect()
}

pub fn trace(a: &LMatrix) -> LaurentPoly {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

pub fn is_zero(a: &LMatrix) -> bool {
    a.iter().all(|r| r.iter().all(LaurentPoly::is_zero))
}

/// Entrywise value at `v = 1`.
pub fn at_one(a: &LMatrix) -> Vec<Vec<CycNum>> {
    a.iter()
        .map(|r| r.iter().map(LaurentPoly::eval_at_one).collect())
        .collect()
}
