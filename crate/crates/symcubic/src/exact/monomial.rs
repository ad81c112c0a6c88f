//! Monomials and graded monomial bases.

use serde::{Deserialize, Serialize};

/// Exponent tuple of a monomial. The number of variables is the tuple length
/// and the total degree is the sum of the entries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial(pub Vec<u8>);

impl Monomial {
    pub fn new(exps: Vec<u8>) -> Self {
        Monomial(exps)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Weight ⟨m, α⟩ mod n of the exponent tuple α against a weight vector m.
    pub fn weight(&self, weights: &[i64], n: u64) -> i64 {
        let s: i64 = self
            .0
            .iter()
            .zip(weights)
            .map(|(&e, &m)| e as i64 * m)
            .sum();
        s.rem_euclid(n as i64)
    }

    /// Product of two monomials in the same variable set.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }

    /// Decrement the exponent of variable `i`; `None` when it is already zero.
    pub fn step_down(&self, i: usize) -> Option<Monomial> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(Monomial(e))
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i)?;
            } else {
                write!(f, "x{}^{}", i, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials in `nvars` variables of total degree `d`, in graded
/// lexicographic order (within the fixed degree this is descending
/// lexicographic on exponent tuples, so x0^d comes first). Every graded
/// index used elsewhere in the crate refers to this order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    assert!(nvars >= 1, "need at least one variable");
    let mut out = Vec::new();
    let mut current = vec![0u8; nvars];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u8>, var: usize, remaining: u32) {
    if var + 1 == current.len() {
        current[var] = remaining as u8;
        out.push(Monomial(current.clone()));
        current[var] = 0;
        return;
    }
    // Descending exponent on the earliest variable gives descending lex.
    for e in (0..=remaining).rev() {
        current[var] = e as u8;
        fill(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}

/// Number of monomials of degree `d` in `nvars` variables, C(d+nvars-1, nvars-1).
pub fn graded_dimension(nvars: usize, d: u32) -> usize {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 1..nvars as u128 {
        num *= d as u128 + i;
        den *= i;
    }
    (num / den) as usize
}
