//! Small finite fields `F_q`, `q = p^k`, as lookup tables.
//!
//! Elements are encoded as integers `0..q` whose base-`p` digits are the
//! coefficients of a polynomial in `x` modulo a fixed irreducible polynomial.

use crate::error::{Error, Result};
use crate::invariants::factorize;

#[derive(Clone, Debug)]
pub struct Field {
    pub p: u32,
    pub k: u32,
    pub q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

/// Irreducible polynomials (monic, coefficients lowest degree first,
/// leading 1 omitted) for the extension fields in use.
fn modulus(p: u32, k: u32) -> Option<Vec<u32>> {
    match (p, k) {
        (_, 1) => Some(vec![0]),
        (2, 2) => Some(vec![1, 1]),      // x² + x + 1
        (2, 3) => Some(vec![1, 1, 0]),   // x³ + x + 1
        (3, 2) => Some(vec![1, 0]),      // x² + 1
        (3, 3) => Some(vec![1, 2, 0]),   // x³ + 2x + 1
        (5, 2) => Some(vec![2, 0]),      // x² + 2
        (2, 4) => Some(vec![1, 1, 0, 0]), // x⁴ + x + 1
        _ => None,
    }
}

impl Field {
    pub fn new(q: u32) -> Result<Field> {
        let f = factorize(q as u128);
        if f.len() != 1 {
            return Err(Error::Config(format!("{q} is not a prime power")));
        }
        let (p, k) = (f[0].0 as u32, f[0].1);
        let m = modulus(p, k).ok_or_else(|| Error::Config(format!("field of order {q} is not supported")))?;
        let digits = |mut x: u32| -> Vec<u32> {
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let encode = |c: &[u32]| c.iter().rev().fold(0, |acc, &d| acc * p + d);
        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&sum);
                let mut prod = vec![0u32; 2 * k as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // reduce using x^k = -(m_0 + m_1 x + … + m_{k-1} x^{k-1})
                for deg in (k as usize..prod.len()).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, &mi) in m.iter().enumerate() {
                        let idx = deg - k as usize + i;
                        prod[idx] = (prod[idx] + (p - mi % p) * c) % p;
                    }
                }
                mul[(a * q + b) as usize] = encode(&prod[..k as usize]);
            }
        }
        let mut inv = vec![0; n];
        for a in 1..q {
            inv[a as usize] = (1..q).find(|&b| mul[(a * q + b) as usize] == 1).expect("field element is invertible");
        }
        let field = Field { p, k, q, add, mul, inv };
        if (1..q).any(|a| field.inv[a as usize] == 0) {
            return Err(Error::Config(format!("modulus for q = {q} is reducible")));
        }
        Ok(field)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.q).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u32, e: u32) -> u32 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// `1, x, …, x^{k-1}`: a basis over the prime field.
    pub fn basis(&self) -> Vec<u32> {
        (0..self.k).map(|i| self.p.pow(i)).collect()
    }
}
