//! Minimal exact arithmetic in the cyclotomic field Q(zeta_p), p prime:
//! elements are polynomials in zeta of degree < p-1, reduced modulo the
//! p-th cyclotomic polynomial 1 + x + ... + x^{p-1}.

use num::{BigRational, One, Zero};

/// Element of Q(zeta_p) on the power basis 1, zeta, ..., zeta^{p-2}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycElem {
    p: usize,
    coeffs: Vec<BigRational>,
}

impl CycElem {
    pub fn zero(p: usize) -> Self {
        CycElem {
            p,
            coeffs: vec![BigRational::zero(); p - 1],
        }
    }

    pub fn one(p: usize) -> Self {
        let mut e = CycElem::zero(p);
        e.coeffs[0] = BigRational::one();
        e
    }

    pub fn from_rational(p: usize, r: BigRational) -> Self {
        let mut e = CycElem::zero(p);
        e.coeffs[0] = r;
        e
    }

    /// zeta^j for any integer exponent.
    pub fn zeta_power(p: usize, j: i64) -> Self {
        let j = j.rem_euclid(p as i64) as usize;
        if j < p - 1 {
            let mut e = CycElem::zero(p);
            e.coeffs[j] = BigRational::one();
            e
        } else {
            // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
            let mut e = CycElem::zero(p);
            for c in &mut e.coeffs {
                *c = -BigRational::one();
            }
            e
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &CycElem) -> CycElem {
        debug_assert_eq!(self.p, other.p);
        CycElem {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &CycElem) -> CycElem {
        CycElem {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> CycElem {
        CycElem {
            p: self.p,
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &CycElem) -> CycElem {
        let p = self.p;
        let mut raw = vec![BigRational::zero(); 2 * (p - 1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        // Reduce powers >= p-1 using zeta^{p-1} = -(1 + ... + zeta^{p-2})
        // repeatedly (equivalently zeta^p = 1 after one pass).
        for e in (p - 1..raw.len()).rev() {
            if raw[e].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut raw[e], BigRational::zero());
            for k in 0..p - 1 {
                raw[e - (p - 1) + k] -= &c;
            }
        }
        CycElem {
            p,
            coeffs: raw.into_iter().take(p - 1).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the cyclotomic polynomial.
    pub fn inv(&self) -> Option<CycElem> {
        if self.is_zero() {
            return None;
        }
        let p = self.p;
        let phi: Vec<BigRational> = vec![BigRational::one(); p]; // 1 + x + ... + x^{p-1}
        let f = self.coeffs.clone();
        let (g, _, t) = poly_ext_gcd(&phi, &f);
        // gcd must be a nonzero constant
        let deg_g = poly_degree(&g)?;
        if deg_g != 0 {
            return None;
        }
        let scale = g[0].recip();
        let mut coeffs: Vec<BigRational> = t.iter().map(|c| c * &scale).collect();
        coeffs.resize(p - 1, BigRational::zero());
        Some(CycElem { p, coeffs })
    }
}

fn poly_degree(a: &[BigRational]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

fn poly_rem_div(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = poly_degree(b).expect("division by zero polynomial");
    let mut rem = a.to_vec();
    let mut quo = vec![BigRational::zero(); a.len().max(1)];
    while let Some(da) = poly_degree(&rem) {
        if da < db {
            break;
        }
        let f = &rem[da] / &b[db];
        quo[da - db] += &f;
        for i in 0..=db {
            let v = &rem[da - db + i] - &f * &b[i];
            rem[da - db + i] = v;
        }
    }
    (quo, rem)
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b).
fn poly_ext_gcd(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0 = vec![BigRational::one()];
    let mut s1 = vec![BigRational::zero()];
    let mut t0 = vec![BigRational::zero()];
    let mut t1 = vec![BigRational::one()];
    while poly_degree(&r1).is_some() {
        let (q, r) = poly_rem_div(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    (r0, s0, t0)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}
