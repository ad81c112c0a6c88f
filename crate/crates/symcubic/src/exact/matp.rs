//! Dense linear algebra over a prime field F_q with q < 2^31.
//!
//! Ranks computed here are certified lower bounds for the rational rank of
//! the same integer matrix: a nonzero pivot minor mod q is nonzero over Q.

use crate::error::{Error, Result};

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    debug_assert!(p < (1 << 31));
    (a * b) % p
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse in F_p, p prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u128(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod_u128(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u128(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod_u128(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u128(acc, base, p);
        }
        base = mul_mod_u128(base, base, p);
        exp >>= 1;
    }
    acc
}

/// The largest `count` primes below 2^31, largest first.
pub fn prime_pool(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = (1u64 << 31) - 1;
    while out.len() < count {
        if is_prime_u64(n) {
            out.push(n);
        }
        n -= 2;
    }
    out
}

/// Validate a user-supplied modulus for the mod-p rank engine.
pub fn validate_modulus(p: u64) -> Result<u64> {
    if p >= (1 << 31) {
        return Err(Error::InvalidInput(format!(
            "modulus {p} too large; must be below 2^31"
        )));
    }
    if !is_prime_u64(p) {
        return Err(Error::InvalidInput(format!("modulus {p} is not prime")));
    }
    Ok(p)
}

/// Dense matrix over F_p, row major.
#[derive(Debug, Clone)]
pub struct FpMat {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FpMat {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        FpMat {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_i64(p: u64, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut m = FpMat::zero(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v.rem_euclid(p as i64) as u64);
            }
        }
        m
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        debug_assert!(v < self.p);
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn add_at(&mut self, r: usize, c: usize, v: u64) {
        let cur = self.get(r, c);
        self.set(r, c, add_mod(cur, v % self.p, self.p));
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        if a < b {
            let (top, bottom) = self.data.split_at_mut(b * c);
            top[a * c..a * c + c].swap_with_slice(&mut bottom[..c]);
        } else {
            self.swap_rows(b, a);
        }
    }

    /// Rank by forward elimination; consumes the matrix.
    pub fn rank(mut self) -> usize {
        let (p, rows, cols) = (self.p, self.rows, self.cols);
        let mut rank = 0usize;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pr) = (rank..rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(rank, pr);
            let inv = inv_mod(self.get(rank, c), p);
            for i in (rank + 1)..rows {
                let lead = self.get(i, c);
                if lead == 0 {
                    continue;
                }
                let f = mul_mod(lead, inv, p);
                let (top, bottom) = self.data.split_at_mut(i * cols);
                let prow = &top[rank * cols + c..rank * cols + cols];
                let irow = &mut bottom[c..cols];
                for (a, b) in irow.iter_mut().zip(prow) {
                    *a = sub_mod(*a, mul_mod(f, *b, p), p);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let (p, rows, cols) = (self.p, self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = inv_mod(self.get(r, c), p);
            for j in c..cols {
                let v = mul_mod(self.get(r, j), inv, p);
                self.set(r, j, v);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c);
                if f == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = sub_mod(self.get(i, j), mul_mod(f, self.get(r, j), p), p);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Canonical RREF basis of the right kernel; rows are kernel vectors.
    pub fn kernel(&self) -> FpMat {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = FpMat::zero(self.p, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            basis.set(k, fc, 1);
            for (ri, &pc) in pivots.iter().enumerate() {
                let v = m.get(ri, fc);
                if v != 0 {
                    basis.set(k, pc, self.p - v);
                }
            }
        }
        basis.rref();
        basis
    }
}
