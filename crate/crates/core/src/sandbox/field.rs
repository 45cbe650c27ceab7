//! Small finite fields by lookup tables.

use super::SandboxError;

/// `F_q` with elements `0..q`; `0` and `1` are the field's zero and one.
///
/// For `q = 4` the element `a + 2b` stands for `a + b·x` in
/// `F_2[x]/(x² + x + 1)`.
#[derive(Clone, Debug)]
pub struct FiniteField {
    pub q: u8,
    pub p: u8,
    pub fexp: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl FiniteField {
    pub fn new(q: u8) -> Result<Self, SandboxError> {
        let (p, fexp) = match q {
            2 | 3 | 5 | 7 => (q, 1),
            4 => (2, 2),
            _ => return Err(SandboxError::UnsupportedField(q)),
        };
        let n = q as usize;
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        for a in 0..q {
            for b in 0..q {
                let i = a as usize * n + b as usize;
                if q == 4 {
                    add[i] = a ^ b;
                    mul[i] = gf4_mul(a, b);
                } else {
                    add[i] = (a + b) % q;
                    mul[i] = ((a as u16 * b as u16) % q as u16) as u8;
                }
            }
        }
        let neg = (0..q)
            .map(|a| {
                (0..q)
                    .find(|&b| add[a as usize * n + b as usize] == 0)
                    .unwrap()
            })
            .collect();
        let inv = (0..q)
            .map(|a| {
                (0..q)
                    .find(|&b| mul[a as usize * n + b as usize] == 1)
                    .unwrap_or(0)
            })
            .collect();
        Ok(FiniteField {
            q,
            p,
            fexp,
            add,
            mul,
            neg,
            inv,
        })
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `inv(0) = 0`.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    /// A generator of `F_q^×`.
    pub fn primitive_element(&self) -> u8 {
        (1..self.q)
            .find(|&g| {
                let mut x = g;
                let mut ord = 1;
                while x != 1 {
                    x = self.mul(x, g);
                    ord += 1;
                }
                ord == self.q - 1
            })
            .expect("finite fields have primitive elements")
    }
}

fn gf4_mul(a: u8, b: u8) -> u8 {
    // (a0 + a1 x)(b0 + b1 x) with x² = x + 1.
    let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
    let c0 = (a0 & b0) ^ (a1 & b1);
    let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    c0 | (c1 << 1)
}
