//! Boundary criterion: decide whether the arrangement controlling the
//! compactification is empty, by finite search for factorizations of the
//! symmetry data through the stabilizers of the two distinguished
//! degenerations, and verify the determinantal family facts.
//!
//! The rational curve chi of cubic forms
//!
//!   g_{a,b} = det [[x0, x1, x2+2a*x5], [x1, x2-a*x5, x3], [x2+2a*x5, x3, x4]] + b*x5^3
//!
//! has two distinguished members. At b = 0 the form is the determinant of a
//! generic symmetric 3x3 matrix; its stabilizer G1 is the image of GL(3)
//! acting on V = Sym^2(C^3), under which the determinant scales by
//! det(g)^{-2}. At a = 0 the determinant part is the catalecticant of a
//! binary quartic and V = Sym^4(C^2) + C; the stabilizer G2 consists of
//! pairs (g, u) with (det g)^2 / u a cube root of unity (exactly the
//! condition making catalecticant and x5^3 scale together), under which the
//! form scales by u^{-3}.
//!
//! The compactification is Baily-Borel exactly when the symmetry data
//! factors through neither stabilizer. The search runs over exponent
//! vectors mod M = 6p (finite-order preimages of an order-p projective
//! element have order dividing 6p), matching the induced weight multiset
//! against a power of the generator up to a global scalar shift, with the
//! character bookkeeping w -> kw - 3c under shifts.

use num::{BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::matp::is_prime_u64;
use crate::exact::{Monomial, Polynomial};
use crate::symmetry::{SymmetryType, NVARS};

/// Which stabilizer the witness factors through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WitnessTarget {
    G1,
    G2,
}

/// Replayable factorization data. For G1 the exponents are the eigenvalue
/// exponents (t1,t2,t3) of a preimage in GL(3); for G2 they are
/// (s1, s2, u) for GL(2) x C*. All exponents are w.r.t. a primitive M-th
/// root of unity, M = 6p.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationWitness {
    pub target: WitnessTarget,
    pub exponents: Vec<i64>,
    /// Power k of the generator matched by the image.
    pub power: i64,
    /// Global scalar shift c applied to the weight vector.
    pub shift: i64,
    pub modulus: u64,
}

impl FactorizationWitness {
    /// Weight multiset of the image in GL(6), sorted.
    pub fn induced_weights(&self) -> Vec<i64> {
        let m = self.modulus as i64;
        let mut v = match self.target {
            WitnessTarget::G1 => {
                let t = &self.exponents;
                vec![
                    2 * t[0],
                    t[0] + t[1],
                    t[0] + t[2],
                    2 * t[1],
                    t[1] + t[2],
                    2 * t[2],
                ]
            }
            WitnessTarget::G2 => {
                let (s1, s2, u) = (self.exponents[0], self.exponents[1], self.exponents[2]);
                vec![4 * s1, 3 * s1 + s2, 2 * s1 + 2 * s2, s1 + 3 * s2, 4 * s2, u]
            }
        };
        for x in &mut v {
            *x = x.rem_euclid(m);
        }
        v.sort_unstable();
        v
    }

    /// Exponent of the character by which the witness acts on the
    /// distinguished form: det^{-2} for G1, u^{-3} for G2.
    pub fn character_exp(&self) -> i64 {
        let m = self.modulus as i64;
        match self.target {
            WitnessTarget::G1 => (-2 * self.exponents.iter().sum::<i64>()).rem_euclid(m),
            WitnessTarget::G2 => (-3 * self.exponents[2]).rem_euclid(m),
        }
    }
}

/// Verdict of the emptiness criterion: Baily-Borel iff no factorization.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BBVerdict {
    pub is_bb: bool,
    pub witnesses: Vec<FactorizationWitness>,
}

fn require_prime(sym: &SymmetryType) -> Result<u64> {
    let p = sym.order();
    if !is_prime_u64(p) {
        return Err(Error::InvalidInput(format!(
            "boundary criterion requires prime order, got {p}"
        )));
    }
    Ok(p)
}

/// Shifted weight targets: sorted multisets of (M/p) * (k * m_i mod p) + c.
fn target_multiset(sym: &SymmetryType, k: i64, c: i64, m: i64) -> Vec<i64> {
    let p = sym.order() as i64;
    let unit = m / p;
    let mut v: Vec<i64> = sym
        .weights()
        .iter()
        .map(|&mi| (unit * ((k * mi).rem_euclid(p)) + c).rem_euclid(m))
        .collect();
    v.sort_unstable();
    v
}

/// Required character exponent of the matched element: the image of the
/// k-th generator power rescaled by shift c acts on eigenforms with
/// exponent (M/p) k w - 3c.
fn required_character(sym: &SymmetryType, k: i64, c: i64, m: i64) -> i64 {
    let p = sym.order() as i64;
    let unit = m / p;
    (unit * k * sym.lambda_exp() - 3 * c).rem_euclid(m)
}

/// Candidate shifts aligning a sorted multiset with a sorted base multiset.
fn candidate_shifts(sums: &[i64], base: &[i64], m: i64) -> Vec<i64> {
    let mut cands: Vec<i64> = base
        .iter()
        .map(|&b| (sums[0] - b).rem_euclid(m))
        .collect();
    cands.sort_unstable();
    cands.dedup();
    cands
}

fn shifted_sorted(base: &[i64], c: i64, m: i64) -> Vec<i64> {
    let mut v: Vec<i64> = base.iter().map(|&b| (b + c).rem_euclid(m)).collect();
    v.sort_unstable();
    v
}

/// Search for a factorization through the determinantal stabilizer G1.
pub fn g1_factorization(sym: &SymmetryType) -> Result<Option<FactorizationWitness>> {
    let p = require_prime(sym)? as i64;
    let sym = sym.canonicalize();
    let m = 6 * p;
    // Base multisets per generator power, before shifting.
    let bases: Vec<(i64, Vec<i64>)> = (1..p)
        .map(|k| (k, target_multiset(&sym, k, 0, m)))
        .collect();

    for t1 in 0..m {
        for t2 in t1..m {
            for t3 in t2..m {
                let mut sums = [
                    2 * t1,
                    t1 + t2,
                    t1 + t3,
                    2 * t2,
                    t2 + t3,
                    2 * t3,
                ];
                for s in &mut sums {
                    *s = s.rem_euclid(m);
                }
                sums.sort_unstable();
                let lambda = (-2 * (t1 + t2 + t3)).rem_euclid(m);
                for (k, base) in &bases {
                    for c in candidate_shifts(&sums, base, m) {
                        if required_character(&sym, *k, c, m) != lambda {
                            continue;
                        }
                        if shifted_sorted(base, c, m) == sums {
                            return Ok(Some(FactorizationWitness {
                                target: WitnessTarget::G1,
                                exponents: vec![t1, t2, t3],
                                power: *k,
                                shift: c,
                                modulus: m as u64,
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Search for a factorization through the chordal stabilizer G2.
pub fn g2_factorization(sym: &SymmetryType) -> Result<Option<FactorizationWitness>> {
    let p = require_prime(sym)? as i64;
    let sym = sym.canonicalize();
    let m = 6 * p;
    let third = m / 3;
    let bases: Vec<(i64, Vec<i64>)> = (1..p)
        .map(|k| (k, target_multiset(&sym, k, 0, m)))
        .collect();

    for s1 in 0..m {
        for s2 in 0..m {
            // (det g)^2 / u must be a cube root of unity; this also makes
            // the catalecticant and the cube term scale together.
            for j in 0..3 {
                let u = (2 * (s1 + s2) - j * third).rem_euclid(m);
                let mut sums = [
                    4 * s1,
                    3 * s1 + s2,
                    2 * s1 + 2 * s2,
                    s1 + 3 * s2,
                    4 * s2,
                    u,
                ];
                for s in &mut sums {
                    *s = s.rem_euclid(m);
                }
                sums.sort_unstable();
                let lambda = (-3 * u).rem_euclid(m);
                for (k, base) in &bases {
                    for c in candidate_shifts(&sums, base, m) {
                        if required_character(&sym, *k, c, m) != lambda {
                            continue;
                        }
                        if shifted_sorted(base, c, m) == sums {
                            return Ok(Some(FactorizationWitness {
                                target: WitnessTarget::G2,
                                exponents: vec![s1, s2, u],
                                power: *k,
                                shift: c,
                                modulus: m as u64,
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Baily-Borel verdict: the compactification is Baily-Borel exactly when
/// neither factorization exists.
pub fn bb_verdict(sym: &SymmetryType) -> Result<BBVerdict> {
    let mut witnesses = Vec::new();
    if let Some(w) = g1_factorization(sym)? {
        witnesses.push(w);
    }
    if let Some(w) = g2_factorization(sym)? {
        witnesses.push(w);
    }
    Ok(BBVerdict {
        is_bb: witnesses.is_empty(),
        witnesses,
    })
}

fn x(i: usize) -> Polynomial {
    let mut e = [0u8; NVARS];
    e[i] = 1;
    Polynomial::term_i64(NVARS, &e, 1)
}

/// The cubic form g_{a,b}: determinant of the displayed symmetric matrix
/// plus b x5^3, expanded exactly.
pub fn chi_form(a: &BigRational, b: &BigRational) -> Result<Polynomial> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::InvalidInput(
            "chi is parametrized by (a:b) != (0,0)".into(),
        ));
    }
    let two_a = BigRational::from_integer(2.into()) * a;
    let m00 = x(0);
    let m01 = x(1);
    let m02 = x(2).add(&x(5).scale(&two_a));
    let m11 = x(2).add(&x(5).scale(&-a.clone()));
    let m12 = x(3);
    let m22 = x(4);
    // 3x3 symmetric determinant
    let det = m00
        .mul(&m11.mul(&m22).add(&m12.mul(&m12).scale(&-BigRational::one())))
        .add(
            &m01.mul(&m01.mul(&m22).add(&m12.mul(&m02).scale(&-BigRational::one())))
                .scale(&-BigRational::one()),
        )
        .add(&m02.mul(&m01.mul(&m12).add(&m11.mul(&m02).scale(&-BigRational::one()))));
    let cube = x(5).mul(&x(5)).mul(&x(5));
    Ok(det.add(&cube.scale(b)))
}

/// Rank-one parametrization of the singular locus of the determinantal
/// member: solves M(x) = v v^T for v = (u, v, w).
pub fn veronese_parametrization() -> Vec<Polynomial> {
    let mono = |e: [u8; 3], num: i64, den: i64| {
        Polynomial::from_terms(
            3,
            [(
                Monomial::new(e.to_vec()),
                BigRational::new(num.into(), den.into()),
            )],
        )
    };
    vec![
        mono([2, 0, 0], 1, 1),                              // x0 = u^2
        mono([1, 1, 0], 1, 1),                              // x1 = uv
        mono([1, 0, 1], 1, 3).add(&mono([0, 2, 0], 2, 3)),  // x2 = (uw + 2v^2)/3
        mono([0, 1, 1], 1, 1),                              // x3 = vw
        mono([0, 0, 2], 1, 1),                              // x4 = w^2
        mono([1, 0, 1], 1, 3).add(&mono([0, 2, 0], -1, 3)), // x5 = (uw - v^2)/3
    ]
}

/// Checks the symbolic identity: the rank-one parametrization annihilates
/// the determinantal member and all six of its partials.
pub fn verify_veronese_singularity() -> bool {
    let g10 = chi_form(&BigRational::one(), &BigRational::zero()).unwrap();
    polynomial_vanishes_on_veronese(&g10) && (0..NVARS).all(|i| {
        polynomial_vanishes_on_veronese(&g10.partial(i))
    })
}

/// Substitute the Veronese parametrization into a form on P^5.
pub fn polynomial_vanishes_on_veronese(f: &Polynomial) -> bool {
    f.substitute(&veronese_parametrization(), 3).is_zero()
}
