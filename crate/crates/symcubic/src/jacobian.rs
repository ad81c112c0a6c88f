//! Jacobian-ring computations for cubic forms in six variables: smoothness
//! certificates, graded Hilbert functions with character blocks, and the
//! Hodge eigenspace data of primitive middle cohomology via residues.
//!
//! For a cubic fourfold X = Z(F), the Jacobian ring R = C[x]/(dF) is
//! Artinian with socle degree 6 exactly when X is smooth, and the residue
//! map identifies the primitive pieces H^{4-q,q} with R_{3q-3}. A class
//! coming from a monomial of weight u in R_{3q-3} is acted on with
//! character exponent u + sum(m) + (q+1)w, which is how the per-character
//! Hodge numbers and the exponent of the character zeta on H^{3,1} arise.
//!
//! Rank soundness: a full-rank multiplication matrix mod q stays full rank
//! over Q, so "smooth" verdicts are certificates. The block dimensions of
//! R_3 and R_6 reported for smooth members are also exact: each mod-q block
//! dimension is an upper bound for the rational one, and the theorem-forced
//! totals (20 for R_3, 1 for R_6) pin every summand once the totals match.
//! When they do not match, the prime was unlucky and another one is used.

use std::collections::{BTreeMap, HashMap};

use num::{BigRational, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::matp::{inv_mod, mul_mod};
use crate::exact::{
    certified_rank, graded_dimension, monomials_of_degree, prime_pool, FpMat, Monomial,
    Polynomial, SparseIntMat,
};
use crate::symmetry::{eigenspace_basis, EigenspaceBasis, SymmetryType, NVARS};

/// Degree of the forms under study and the socle degree of their smooth
/// Jacobian rings.
pub const DEGREE: u32 = 3;
pub const SOCLE: u32 = 6;

/// Configuration for the modular rank engine.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RankConfig {
    /// Primary prime for modular ranks.
    pub modulus: u64,
    /// Optional independent recheck prime.
    pub second_prime: Option<u64>,
    /// Certify ranks exactly (multi-modular with verified cokernels).
    pub exact: bool,
}

impl Default for RankConfig {
    fn default() -> Self {
        RankConfig {
            modulus: (1 << 31) - 1,
            second_prime: None,
            exact: false,
        }
    }
}

/// Verdict of the smoothness certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Smooth,
    Singular,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SmoothnessCertificate {
    pub verdict: Verdict,
    pub primes_used: Vec<u64>,
    /// dim R_7, followed by dim R_8 when R_7 is nonzero. For a smooth form
    /// this is [0]; the first entry being zero is the certificate.
    pub hilbert_tail: Vec<usize>,
}

impl SmoothnessCertificate {
    pub fn is_smooth(&self) -> bool {
        self.verdict == Verdict::Smooth
    }
}

/// Graded Hilbert data of the Jacobian ring, with per-character blocks.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JacobianProfile {
    /// dim R_0 .. dim R_7.
    pub hilbert: [usize; 8],
    /// For each degree 0..=7, dimensions of the character blocks keyed by
    /// monomial-weight residue. Trivial symmetry puts everything at 0.
    pub blocks: Vec<BTreeMap<i64, usize>>,
}

/// Per-character Hodge numbers of primitive H^4 and the character of
/// H^{3,1}. Keys are character exponents in 0..order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HodgeEigenData {
    pub order: u64,
    pub zeta_exp: i64,
    pub h31: BTreeMap<i64, usize>,
    pub h22: BTreeMap<i64, usize>,
    pub h13: BTreeMap<i64, usize>,
    /// The square of the hyperplane class carries the trivial character and
    /// a positive sign but is not primitive; it is reported through this
    /// flag and never counted in the h22 blocks.
    pub eta_in_blocks: bool,
}

impl HodgeEigenData {
    pub fn zeta_is_real(&self) -> bool {
        let n = self.order as i64;
        self.zeta_exp == 0 || 2 * self.zeta_exp == n
    }

    pub fn sum_h22(&self) -> usize {
        self.h22.values().sum()
    }

    pub fn triple(&self, t: i64) -> (usize, usize, usize) {
        (
            self.h31.get(&t).copied().unwrap_or(0),
            self.h22.get(&t).copied().unwrap_or(0),
            self.h13.get(&t).copied().unwrap_or(0),
        )
    }

    /// Human-readable value of zeta: "1", "-1", or a root-of-unity power.
    pub fn zeta_display(&self) -> String {
        let n = self.order as i64;
        if self.zeta_exp == 0 {
            "1".to_string()
        } else if 2 * self.zeta_exp == n {
            "-1".to_string()
        } else if self.zeta_exp == 1 {
            format!("zeta_{}", self.order)
        } else {
            format!("zeta_{}^{}", self.order, self.zeta_exp)
        }
    }
}

/// Reduce an exact rational mod p; `None` when the denominator vanishes,
/// which marks p as unusable for this matrix.
fn rat_mod(r: &BigRational, p: u64) -> Option<u64> {
    use num::{BigInt, Integer};
    let pb = BigInt::from(p);
    let den = r.denom().mod_floor(&pb);
    if den.is_zero() {
        return None;
    }
    let num = r.numer().mod_floor(&pb);
    let num: u64 = num.try_into().ok()?;
    let den: u64 = den.try_into().ok()?;
    Some(mul_mod(num, inv_mod(den, p), p))
}

/// One character block of the multiplication map Sym^{k-2} x dF -> Sym^k.
struct Block {
    weight: i64,
    rows: Vec<usize>,
    cols: Vec<(usize, usize)>, // (variable, index into Sym^{k-2})
}

/// Splits the degree-k multiplication map into character blocks. With the
/// trivial symmetry there is a single block of weight 0.
fn build_blocks(sym: &SymmetryType, k: u32) -> (Vec<Monomial>, Vec<Monomial>, Vec<Block>) {
    let n = sym.order() as i64;
    let targets = monomials_of_degree(NVARS, k);
    let sources = if k >= 2 {
        monomials_of_degree(NVARS, k - 2)
    } else {
        Vec::new()
    };
    let w = sym.lambda_exp();
    let mut by_weight: BTreeMap<i64, Block> = BTreeMap::new();
    for (idx, m) in targets.iter().enumerate() {
        let t = sym.monomial_weight(m);
        by_weight
            .entry(t)
            .or_insert_with(|| Block {
                weight: t,
                rows: Vec::new(),
                cols: Vec::new(),
            })
            .rows
            .push(idx);
    }
    for (bidx, beta) in sources.iter().enumerate() {
        for i in 0..NVARS {
            // weight of x^beta * dF/dx_i
            let t = (sym.monomial_weight(beta) - w - sym.weights()[i]).rem_euclid(n);
            if let Some(block) = by_weight.get_mut(&t) {
                block.cols.push((i, bidx));
            }
        }
    }
    let blocks = by_weight.into_values().collect();
    (targets, sources, blocks)
}

/// Ranks of the degree-k multiplication map per character block.
/// Returns (block weight, number of target monomials, rank).
fn block_ranks(
    f: &Polynomial,
    sym: &SymmetryType,
    k: u32,
    p: u64,
    exact: bool,
) -> Result<Vec<(i64, usize, usize)>> {
    let (targets, sources, blocks) = build_blocks(sym, k);
    let partials: Vec<Polynomial> = (0..NVARS).map(|i| f.partial(i)).collect();
    let index: HashMap<&Monomial, usize> = targets.iter().zip(0..).collect();

    let mut out = Vec::with_capacity(blocks.len());
    for block in &blocks {
        let mut local = vec![usize::MAX; targets.len()];
        for (li, &gi) in block.rows.iter().enumerate() {
            local[gi] = li;
        }
        let nrows = block.rows.len();
        let ncols = block.cols.len();
        let rank = if nrows == 0 || ncols == 0 {
            0
        } else if exact {
            let mut cols: Vec<Vec<(usize, BigRational)>> = Vec::with_capacity(ncols);
            for &(var, bidx) in &block.cols {
                let beta = &sources[bidx];
                let mut col = Vec::new();
                for (gamma, c) in partials[var].terms() {
                    let target = beta.mul(gamma);
                    let gi = index[&target];
                    debug_assert_ne!(local[gi], usize::MAX, "column left its block");
                    col.push((local[gi], c.clone()));
                }
                cols.push(col);
            }
            let sparse = SparseIntMat::from_rational_columns(nrows, cols);
            certified_rank(&sparse, 12)?.rank
        } else {
            let mut m = FpMat::zero(p, nrows, ncols);
            for (cj, &(var, bidx)) in block.cols.iter().enumerate() {
                let beta = &sources[bidx];
                for (gamma, c) in partials[var].terms() {
                    let target = beta.mul(gamma);
                    let gi = index[&target];
                    let v = rat_mod(c, p).ok_or(Error::InvalidInput(format!(
                        "modulus {p} divides a coefficient denominator"
                    )))?;
                    m.add_at(local[gi], cj, v);
                }
            }
            m.rank()
        };
        out.push((block.weight, nrows, rank));
    }
    Ok(out)
}

fn validate_member(f: &Polynomial, sym: Option<&SymmetryType>) -> Result<()> {
    f.expect_form(NVARS, DEGREE)?;
    if let Some(s) = sym {
        let residue = s.eigen_residue();
        for (m, _) in f.terms() {
            if s.monomial_weight(m) != residue {
                return Err(Error::NotInEigenspace);
            }
        }
    }
    Ok(())
}

/// Smoothness certificate for a cubic form. Full rank of the socle-degree
/// multiplication map mod a prime certifies smoothness; a modular deficiency
/// alone is inconclusive unless exact certification is requested.
pub fn smoothness_certificate(
    f: &Polynomial,
    sym: Option<&SymmetryType>,
    cfg: &RankConfig,
) -> Result<SmoothnessCertificate> {
    validate_member(f, sym)?;
    let trivial = SymmetryType::trivial();
    let s = sym.unwrap_or(&trivial);
    let full = graded_dimension(NVARS, SOCLE + 1);

    let total_rank =
        |p: u64, exact: bool| -> Result<usize> {
            Ok(block_ranks(f, s, SOCLE + 1, p, exact)?
                .iter()
                .map(|&(_, _, r)| r)
                .sum())
        };

    let mut primes_used = vec![cfg.modulus];
    let mut rank = total_rank(cfg.modulus, false)?;
    if rank < full {
        if let Some(p2) = cfg.second_prime {
            primes_used.push(p2);
            rank = rank.max(total_rank(p2, false)?);
        }
    }
    if rank == full {
        return Ok(SmoothnessCertificate {
            verdict: Verdict::Smooth,
            primes_used,
            hilbert_tail: vec![0],
        });
    }
    if !cfg.exact {
        return Ok(SmoothnessCertificate {
            verdict: Verdict::Inconclusive,
            primes_used,
            hilbert_tail: vec![full - rank],
        });
    }
    // Certified exact rank decides.
    let exact_rank = total_rank(cfg.modulus, true)?;
    if exact_rank == full {
        return Ok(SmoothnessCertificate {
            verdict: Verdict::Smooth,
            primes_used,
            hilbert_tail: vec![0],
        });
    }
    let mut tail = vec![full - exact_rank];
    let r8_rank: usize = block_ranks(f, s, SOCLE + 2, cfg.modulus, true)?
        .iter()
        .map(|&(_, _, r)| r)
        .sum();
    tail.push(graded_dimension(NVARS, SOCLE + 2) - r8_rank);
    Ok(SmoothnessCertificate {
        verdict: Verdict::Singular,
        primes_used,
        hilbert_tail: tail,
    })
}

/// Graded Hilbert function dim R_0..R_7 with character blocks.
pub fn hilbert_function(
    f: &Polynomial,
    sym: Option<&SymmetryType>,
    cfg: &RankConfig,
) -> Result<JacobianProfile> {
    validate_member(f, sym)?;
    let trivial = SymmetryType::trivial();
    let s = sym.unwrap_or(&trivial);
    let mut hilbert = [0usize; 8];
    let mut blocks = Vec::with_capacity(8);
    for k in 0..=7u32 {
        let mut per_weight = BTreeMap::new();
        if k < 2 {
            for m in monomials_of_degree(NVARS, k) {
                *per_weight.entry(s.monomial_weight(&m)).or_insert(0) += 1;
            }
        } else {
            for (t, nrows, rank) in block_ranks(f, s, k, cfg.modulus, cfg.exact)? {
                let d = nrows - rank;
                if d > 0 {
                    per_weight.insert(t, d);
                }
            }
        }
        hilbert[k as usize] = per_weight.values().sum();
        blocks.push(per_weight);
    }
    Ok(JacobianProfile { hilbert, blocks })
}

/// The Hilbert vector forced for every smooth cubic fourfold.
pub const SMOOTH_HILBERT: [usize; 8] = [1, 6, 15, 20, 15, 6, 1, 0];

/// Character-decomposed Hodge numbers of primitive H^4 via residues.
/// Requires a smooth member of the given eigenspace.
pub fn hodge_eigen(
    f: &Polynomial,
    sym: &SymmetryType,
    cfg: &RankConfig,
) -> Result<HodgeEigenData> {
    let cert = smoothness_certificate(f, Some(sym), cfg)?;
    if !cert.is_smooth() {
        return Err(Error::SingularInput);
    }
    hodge_eigen_certified(f, sym, cfg)
}

/// Internal variant that trusts the caller to have certified smoothness.
pub(crate) fn hodge_eigen_certified(
    f: &Polynomial,
    sym: &SymmetryType,
    cfg: &RankConfig,
) -> Result<HodgeEigenData> {
    let n = sym.order() as i64;
    let sigma = sym.weight_sum();
    let w = sym.lambda_exp();
    let zeta_exp = (sigma + 2 * w).rem_euclid(n);

    // Residue classes of R_{3q-3} at monomial weight u land in H^{4-q,q}
    // with character exponent u + sigma + (q+1)w.
    let pool = prime_pool(6);
    let mut primes = vec![cfg.modulus];
    primes.extend(pool.into_iter().filter(|&p| p != cfg.modulus).take(3));

    for (attempt, &p) in primes.iter().enumerate() {
        let local = RankConfig {
            modulus: p,
            second_prime: None,
            exact: cfg.exact,
        };
        let data = hodge_blocks(f, sym, &local, zeta_exp, sigma, w, n)?;
        match data {
            Some(h) => return Ok(h),
            // Totals off: the prime undercounted a rank; use the next one.
            None if attempt + 1 < primes.len() => continue,
            None => break,
        }
    }
    Err(Error::CertificationFailed { primes_tried: 4 })
}

fn hodge_blocks(
    f: &Polynomial,
    sym: &SymmetryType,
    cfg: &RankConfig,
    zeta_exp: i64,
    sigma: i64,
    w: i64,
    n: i64,
) -> Result<Option<HodgeEigenData>> {
    // q = 1: R_0 is one-dimensional at weight 0.
    let mut h31 = BTreeMap::new();
    h31.insert(zeta_exp, 1usize);

    // q = 2: R_3 blocks.
    let mut h22 = BTreeMap::new();
    let mut total22 = 0usize;
    for (u, nrows, rank) in block_ranks(f, sym, 3, cfg.modulus, cfg.exact)? {
        let d = nrows - rank;
        if d > 0 {
            let t = (u + sigma + 3 * w).rem_euclid(n);
            *h22.entry(t).or_insert(0) += d;
            total22 += d;
        }
    }
    if total22 != 20 {
        return Ok(None);
    }

    // q = 3: R_6 is the one-dimensional socle.
    let mut h13 = BTreeMap::new();
    let mut total13 = 0usize;
    for (u, nrows, rank) in block_ranks(f, sym, 6, cfg.modulus, cfg.exact)? {
        let d = nrows - rank;
        if d > 0 {
            let t = (u + sigma + 4 * w).rem_euclid(n);
            *h13.entry(t).or_insert(0) += d;
            total13 += d;
        }
    }
    if total13 != 1 {
        return Ok(None);
    }

    // The socle class mirrors H^{3,1} at the opposite character.
    let h13_exp = *h13.keys().next().unwrap();
    debug_assert_eq!(h13_exp, (-zeta_exp).rem_euclid(n));

    Ok(Some(HodgeEigenData {
        order: sym.order(),
        zeta_exp,
        h31,
        h22,
        h13,
        eta_in_blocks: false,
    }))
}

/// Hodge-side dimension count and the signature of the Hermitian form on
/// the zeta eigenspace: n' is the h^{2,2} block at the zeta exponent, and
/// the negative part is H^{3,1} (+ H^{1,3} when zeta is real).
pub fn nprime(hodge: &HodgeEigenData) -> (usize, (usize, usize)) {
    let np = hodge.h22.get(&hodge.zeta_exp).copied().unwrap_or(0);
    if hodge.zeta_is_real() {
        (np, (np, 2))
    } else {
        (np, (np, 1))
    }
}

/// Uniform random integer coefficients in [-bound, bound] on the eigenspace
/// basis; seeded and reproducible.
pub fn sample_eigenform(basis: &EigenspaceBasis, rng: &mut ChaCha20Rng, bound: i64) -> Polynomial {
    Polynomial::from_terms(
        NVARS,
        basis.monomials.iter().map(|m| {
            let c = rng.random_range(-bound..=bound);
            (m.clone(), BigRational::from_integer(c.into()))
        }),
    )
}

/// Sampling policy for generic members.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SampleConfig {
    pub bound: i64,
    pub retry_cap: u32,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            bound: 20,
            retry_cap: 8,
        }
    }
}

/// Draw random members of the eigenspace until one is certified smooth.
pub fn sample_smooth_member(
    sym: &SymmetryType,
    rank_cfg: &RankConfig,
    sample_cfg: &SampleConfig,
    seed: u64,
) -> Result<(Polynomial, SmoothnessCertificate)> {
    let basis = eigenspace_basis(sym, DEGREE);
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    for _ in 0..sample_cfg.retry_cap {
        let f = sample_eigenform(&basis, &mut rng, sample_cfg.bound);
        if f.is_zero() {
            continue;
        }
        let cert = smoothness_certificate(&f, Some(sym), rank_cfg)?;
        if cert.is_smooth() {
            return Ok((f, cert));
        }
    }
    Err(Error::NoSmoothMember {
        attempts: sample_cfg.retry_cap,
    })
}

/// The Fermat cubic, smooth member of several eigenspaces.
pub fn fermat_cubic() -> Polynomial {
    let mut f = Polynomial::zero(NVARS);
    for i in 0..NVARS {
        let mut e = [0u8; NVARS];
        e[i] = 3;
        f = f.add(&Polynomial::term_i64(NVARS, &e, 1));
    }
    f
}
