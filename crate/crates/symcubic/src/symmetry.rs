//! Symmetry types: diagonal cyclic actions on six coordinates together with
//! a character, their canonical forms, eigenspaces of cubic forms, and
//! centralizer dimensions.
//!
//! A generator rho acts by x_i -> omega^{m_i} x_i for a primitive N-th root
//! omega, and acts on forms by g(F) = F o g^{-1}. A form F lies in the
//! lambda-eigenspace with exponent w exactly when all its monomials x^alpha
//! satisfy <m, alpha> = -w (mod N). Scalar rescalings of the generator shift
//! the data by (m, w) -> (m + c*1, w - 3c), so the pair is projective data;
//! canonical forms minimize over shifts, generator powers and coordinate
//! permutations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{monomials_of_degree, Monomial};

/// Number of coordinates: cubic fourfolds live in P^5.
pub const NVARS: usize = 6;

/// A diagonal cyclic symmetry type: order, weight vector and character
/// exponent. Constructed values are always reduced mod the order and define
/// a faithful projective action.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymmetryType {
    order: u64,
    weights: [i64; NVARS],
    lambda_exp: i64,
}

/// JSON descriptor. A missing `lambda_exp` means the caller wants to
/// enumerate all residues.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymmetryDescriptor {
    pub order: u64,
    pub weights: Vec<i64>,
    pub lambda_exp: Option<i64>,
}

impl SymmetryType {
    pub fn new(order: u64, weights: [i64; NVARS], lambda_exp: i64) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidSymmetry("order must be positive".into()));
        }
        let n = order as i64;
        let w: Vec<i64> = weights.iter().map(|m| m.rem_euclid(n)).collect();
        if order > 1 {
            let mut g = order;
            for i in 1..NVARS {
                g = gcd(g, (w[i] - w[0]).rem_euclid(n) as u64);
            }
            if g != 1 {
                return Err(Error::InvalidSymmetry(format!(
                    "weights {:?} generate a projective action of order {} < {}; \
                     reduce the order accordingly",
                    weights,
                    order / g,
                    order
                )));
            }
        }
        Ok(SymmetryType {
            order,
            weights: w.try_into().unwrap(),
            lambda_exp: lambda_exp.rem_euclid(n),
        })
    }

    /// The trivial type (no symmetry imposed).
    pub fn trivial() -> Self {
        SymmetryType {
            order: 1,
            weights: [0; NVARS],
            lambda_exp: 0,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn weights(&self) -> &[i64; NVARS] {
        &self.weights
    }

    pub fn lambda_exp(&self) -> i64 {
        self.lambda_exp
    }

    /// Weight of a monomial under this action, reduced to 0..order.
    pub fn monomial_weight(&self, m: &Monomial) -> i64 {
        m.weight(&self.weights, self.order)
    }

    /// The residue that eigen-monomials must hit: -w mod N.
    pub fn eigen_residue(&self) -> i64 {
        (-self.lambda_exp).rem_euclid(self.order as i64)
    }

    /// Sum of the weights mod N, an ingredient of the cohomology characters.
    pub fn weight_sum(&self) -> i64 {
        self.weights
            .iter()
            .sum::<i64>()
            .rem_euclid(self.order as i64)
    }

    /// Lexicographically minimal equivalent representative over generator
    /// powers (m -> k*m, w -> k*w), global scalar shifts (m -> m + c*1,
    /// w -> w - 3c) and coordinate permutations (weights sorted).
    pub fn canonicalize(&self) -> SymmetryType {
        let n = self.order as i64;
        let mut best: Option<([i64; NVARS], i64)> = None;
        for k in 1..=self.order as i64 {
            if gcd(k as u64, self.order) != 1 {
                continue;
            }
            for c in 0..n {
                let mut m: Vec<i64> = self
                    .weights
                    .iter()
                    .map(|&v| (k * v + c).rem_euclid(n))
                    .collect();
                m.sort_unstable();
                let w = (k * self.lambda_exp - 3 * c).rem_euclid(n);
                let cand = (m.try_into().unwrap(), w);
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        let (weights, lambda_exp) = best.unwrap();
        SymmetryType {
            order: self.order,
            weights,
            lambda_exp,
        }
    }

    pub fn is_equivalent(&self, other: &SymmetryType) -> bool {
        self.order == other.order && self.canonicalize() == other.canonicalize()
    }

    /// Multiplicities of the distinct weight values, descending.
    pub fn weight_block_sizes(&self) -> Vec<usize> {
        let mut counts = std::collections::BTreeMap::new();
        for &m in &self.weights {
            *counts.entry(m).or_insert(0usize) += 1;
        }
        let mut sizes: Vec<usize> = counts.into_values().collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// Stable fingerprint for deterministic per-type seed derivation.
    pub fn fingerprint(&self) -> u64 {
        let mut h = 0xcbf29ce484222325u64;
        let mut mix = |v: u64| {
            h ^= v;
            h = h.wrapping_mul(0x100000001b3);
        };
        mix(self.order);
        for &w in &self.weights {
            mix(w as u64);
        }
        mix(self.lambda_exp as u64);
        h
    }

    pub fn descriptor(&self) -> SymmetryDescriptor {
        SymmetryDescriptor {
            order: self.order,
            weights: self.weights.to_vec(),
            lambda_exp: Some(self.lambda_exp),
        }
    }

    pub fn from_descriptor(d: &SymmetryDescriptor) -> Result<Vec<SymmetryType>> {
        let weights: [i64; NVARS] = d
            .weights
            .clone()
            .try_into()
            .map_err(|_| Error::InvalidInput(format!("need {} weights", NVARS)))?;
        match d.lambda_exp {
            Some(w) => Ok(vec![SymmetryType::new(d.order, weights, w)?]),
            None => (0..d.order as i64)
                .map(|w| SymmetryType::new(d.order, weights, w))
                .collect(),
        }
    }
}

impl std::fmt::Display for SymmetryType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(N={}, m=({}), w={})",
            self.order,
            self.weights
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
            self.lambda_exp
        )
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Ordered monomial basis of the degree-`d` character eigenspace.
#[derive(Debug, Clone)]
pub struct EigenspaceBasis {
    pub sym: SymmetryType,
    pub degree: u32,
    pub monomials: Vec<Monomial>,
}

impl EigenspaceBasis {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }
}

/// Monomials x^alpha of degree `d` with <m, alpha> = -w (mod N), in the
/// global graded order.
pub fn eigenspace_basis(sym: &SymmetryType, d: u32) -> EigenspaceBasis {
    let residue = sym.eigen_residue();
    let monomials = monomials_of_degree(NVARS, d)
        .into_iter()
        .filter(|m| sym.monomial_weight(m) == residue)
        .collect();
    EigenspaceBasis {
        sym: sym.clone(),
        degree: d,
        monomials,
    }
}

/// Dimension of the block-diagonal centralizer inside the trace-zero
/// matrices: sum of squared weight multiplicities minus one.
pub fn centralizer_dimension(sym: &SymmetryType) -> usize {
    sym.weight_block_sizes().iter().map(|b| b * b).sum::<usize>() - 1
}

/// Fast necessary condition for a generic eigenform to be smooth: every
/// variable must appear as x_i^3 or x_i^2 x_j in the degree-3 eigenspace,
/// otherwise all partials vanish along a coordinate locus.
pub fn quasismooth_screen(sym: &SymmetryType) -> bool {
    let n = sym.order as i64;
    let residue = sym.eigen_residue();
    for i in 0..NVARS {
        let cube = (3 * sym.weights[i]).rem_euclid(n) == residue;
        let square = (0..NVARS)
            .any(|j| j != i && (2 * sym.weights[i] + sym.weights[j]).rem_euclid(n) == residue);
        if !cube && !square {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::graded_dimension;

    fn sym(order: u64, weights: [i64; NVARS], w: i64) -> SymmetryType {
        SymmetryType::new(order, weights, w).unwrap()
    }

    #[test]
    fn eigenspace_dimensions_from_direct_count() {
        // order 2, weights (0,...,0,1), w = 0: even exponent on x5
        let t21 = sym(2, [0, 0, 0, 0, 0, 1], 0);
        assert_eq!(eigenspace_basis(&t21, 3).dim(), 40);
        // order 3 analogue: x5-exponent in {0, 3}
        let t31 = sym(3, [0, 0, 0, 0, 0, 1], 0);
        assert_eq!(eigenspace_basis(&t31, 3).dim(), 36);
        // trivial group: everything
        assert_eq!(eigenspace_basis(&SymmetryType::trivial(), 3).dim(), 56);
    }

    #[test]
    fn eigenspaces_partition_the_graded_piece() {
        for (order, weights) in [
            (2u64, [0i64, 0, 0, 0, 1, 1]),
            (3, [0, 0, 0, 1, 1, 2]),
            (5, [0, 0, 1, 2, 3, 4]),
            (7, [1, 2, 3, 4, 5, 6]),
            (11, [0, 1, 3, 4, 5, 9]),
        ] {
            let total: usize = (0..order as i64)
                .map(|w| eigenspace_basis(&sym(order, weights, w), 3).dim())
                .sum();
            assert_eq!(total, graded_dimension(NVARS, 3));
        }
    }

    #[test]
    fn canonicalize_shift_example() {
        let a = sym(3, [1, 1, 1, 1, 1, 2], 0);
        let b = sym(3, [0, 0, 0, 0, 0, 1], 0);
        assert_eq!(a.canonicalize(), b.canonicalize());
        assert_eq!(a.canonicalize().weights(), &[0, 0, 0, 0, 0, 1]);
        assert_eq!(a.canonicalize().lambda_exp(), 0);
    }

    #[test]
    fn canonicalize_power_example() {
        // order 5: applying k=2 permutes the weight multiset back to itself
        let a = sym(5, [0, 0, 1, 2, 3, 4], 0);
        let doubled = sym(5, [0, 0, 2, 4, 6, 8], 0);
        assert_eq!(a.canonicalize(), doubled.canonicalize());
    }

    #[test]
    fn canonicalize_is_idempotent() {
        for (order, weights, w) in [
            (2u64, [0i64, 0, 0, 1, 1, 1], 1),
            (3, [0, 0, 1, 1, 2, 2], 2),
            (7, [1, 2, 3, 4, 5, 6], 0),
            (11, [0, 1, 3, 4, 5, 9], 0),
        ] {
            let c = sym(order, weights, w).canonicalize();
            assert_eq!(c, c.canonicalize());
        }
    }

    #[test]
    fn permuted_weights_are_equivalent() {
        let a = sym(3, [0, 0, 0, 0, 1, 2], 0);
        let b = sym(3, [2, 0, 1, 0, 0, 0], 0);
        assert!(a.is_equivalent(&b));
    }

    #[test]
    fn invariants_are_stable_under_equivalence_moves() {
        // shift, power and permutation leave the eigenspace dimension and
        // the centralizer dimension unchanged
        let reps = [
            sym(5, [0, 0, 1, 2, 3, 4], 0),
            sym(5, [1, 1, 2, 3, 4, 0], 2), // shift by 1: w -> w - 3
            sym(5, [0, 0, 2, 4, 1, 3], 0), // power k = 2
            sym(5, [4, 3, 2, 1, 0, 0], 0), // permutation
        ];
        for r in &reps {
            assert!(reps[0].is_equivalent(r));
            assert_eq!(
                eigenspace_basis(r, 3).dim(),
                eigenspace_basis(&reps[0], 3).dim()
            );
            assert_eq!(centralizer_dimension(r), centralizer_dimension(&reps[0]));
        }
    }

    #[test]
    fn centralizer_dimensions() {
        assert_eq!(centralizer_dimension(&sym(2, [0, 0, 0, 0, 0, 1], 0)), 25);
        assert_eq!(centralizer_dimension(&sym(2, [0, 0, 0, 0, 1, 1], 0)), 19);
        assert_eq!(centralizer_dimension(&sym(11, [0, 1, 3, 4, 5, 9], 0)), 5);
        assert_eq!(centralizer_dimension(&SymmetryType::trivial()), 35);
    }

    #[test]
    fn screen_examples() {
        assert!(quasismooth_screen(&sym(2, [0, 0, 0, 0, 0, 1], 0)));
        // eigenspace is {x5^2 x_i}: no variable has a cube or near-cube
        assert!(!quasismooth_screen(&sym(3, [0, 0, 0, 0, 0, 1], 1)));
        assert!(quasismooth_screen(&SymmetryType::trivial()));
    }

    #[test]
    fn rejects_unfaithful_weights() {
        assert!(SymmetryType::new(4, [0, 0, 0, 0, 2, 2], 0).is_err());
        assert!(SymmetryType::new(2, [0, 0, 0, 0, 0, 0], 0).is_err());
        assert!(SymmetryType::new(1, [0, 0, 0, 0, 0, 0], 0).is_ok());
    }

    #[test]
    fn descriptor_none_enumerates_residues() {
        let d = SymmetryDescriptor {
            order: 3,
            weights: vec![0, 0, 0, 0, 0, 1],
            lambda_exp: None,
        };
        let all = SymmetryType::from_descriptor(&d).unwrap();
        assert_eq!(all.len(), 3);
    }
}
