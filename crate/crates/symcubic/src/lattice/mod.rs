//! Integral lattices with finite-order isometries: eigenlattices and their
//! signatures, cyclotomic kernels with the isotropy check, height-bounded
//! isotropic vectors, and the boundary-subspace formulas attached to
//! isotropic lines and planes of a hyperplane arrangement.

pub mod cyclotomic;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{symmetric_signature, QMat, Subspace};
use cyclotomic::CycElem;

/// An integral lattice given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralLattice {
    gram: Vec<Vec<i64>>,
}

impl IntegralLattice {
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("Gram matrix must be square".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(IntegralLattice { gram })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &Vec<Vec<i64>> {
        &self.gram
    }

    pub fn gram_qmat(&self) -> QMat {
        QMat::from_i64(&self.gram)
    }

    /// Pairing of two integer vectors.
    pub fn pair(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut acc: i128 = 0;
        for i in 0..n {
            for j in 0..n {
                acc += a[i] as i128 * self.gram[i][j] as i128 * b[j] as i128;
            }
        }
        i128::try_into(acc).expect("pairing overflow")
    }

    pub fn signature(&self) -> Result<(usize, usize, usize)> {
        symmetric_signature(&self.gram_qmat())
    }

    /// The hyperbolic plane U.
    pub fn hyperbolic_plane() -> Self {
        IntegralLattice::new(vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    /// The root lattice A2.
    pub fn a2() -> Self {
        IntegralLattice::new(vec![vec![2, -1], vec![-1, 2]]).unwrap()
    }

    pub fn direct_sum(&self, other: &IntegralLattice) -> Self {
        let n = self.rank();
        let m = other.rank();
        let mut gram = vec![vec![0i64; n + m]; n + m];
        for i in 0..n {
            gram[i][..n].copy_from_slice(&self.gram[i]);
        }
        for i in 0..m {
            gram[n + i][n..].copy_from_slice(&other.gram[i]);
        }
        IntegralLattice { gram }
    }
}

/// A finite-order isometry of an integral lattice.
#[derive(Debug, Clone)]
pub struct Isometry {
    matrix: Vec<Vec<i64>>,
    order: u64,
}

impl Isometry {
    pub fn matrix(&self) -> &Vec<Vec<i64>> {
        &self.matrix
    }

    pub fn order(&self) -> u64 {
        self.order
    }
}

fn mat_mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn is_identity(a: &[Vec<i64>]) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &v)| v == i64::from(i == j)))
}

pub const DEFAULT_ORDER_CAP: u64 = 1000;

/// Check g^T G g = G and compute the multiplicative order.
pub fn verify_isometry(
    lattice: &IntegralLattice,
    g: &[Vec<i64>],
    cap: u64,
) -> Result<(bool, u64)> {
    let n = lattice.rank();
    if g.len() != n || g.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "isometry must be {n}x{n}"
        )));
    }
    // g^T G g == G
    let gt: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| g[j][i]).collect())
        .collect();
    let prod = mat_mul_i64(&mat_mul_i64(&gt, &lattice.gram), g);
    if prod != lattice.gram {
        return Ok((false, 0));
    }
    let mut power = g.to_vec();
    for k in 1..=cap {
        if is_identity(&power) {
            return Ok((true, k));
        }
        power = mat_mul_i64(&power, g);
    }
    Err(Error::OrderCapExceeded { cap })
}

impl Isometry {
    pub fn new(lattice: &IntegralLattice, matrix: Vec<Vec<i64>>, cap: u64) -> Result<Self> {
        let (ok, order) = verify_isometry(lattice, &matrix, cap)?;
        if !ok {
            return Err(Error::NotIsometry);
        }
        Ok(Isometry { matrix, order })
    }
}

/// Basis rows of the saturated integer kernel {x : K x = 0}, computed by
/// unimodular column reduction, presented in row Hermite normal form.
fn integer_kernel(k: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let m = k.len();
    let n = if m > 0 { k[0].len() } else { 0 };
    let mut a: Vec<Vec<BigInt>> = k.to_vec();
    // u columns track the unimodular transformation: col j of the original
    // identity evolves with col j of a.
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let col_get = |a: &Vec<Vec<BigInt>>, r: usize, c: usize| a[r][c].clone();
    let mut col_start = 0usize;
    for r in 0..m {
        loop {
            let nz: Vec<usize> = (col_start..n)
                .filter(|&c| !col_get(&a, r, c).is_zero())
                .collect();
            if nz.len() <= 1 {
                if let Some(&c) = nz.first() {
                    // move pivot column into place
                    for row in a.iter_mut() {
                        row.swap(col_start, c);
                    }
                    for row in u.iter_mut() {
                        row.swap(col_start, c);
                    }
                    col_start += 1;
                }
                break;
            }
            // Combine the two smallest columns by a Euclid step.
            let mut sorted = nz.clone();
            sorted.sort_by_key(|&c| a[r][c].abs());
            let (c1, c2) = (sorted[0], sorted[1]);
            let q = &a[r][c2] / &a[r][c1]; // truncated division
            for row in a.iter_mut() {
                let v = &row[c2] - &q * &row[c1];
                row[c2] = v;
            }
            for row in u.iter_mut() {
                let v = &row[c2] - &q * &row[c1];
                row[c2] = v;
            }
        }
    }
    let basis: Vec<Vec<BigInt>> = (col_start..n)
        .map(|c| (0..n).map(|i| u[i][c].clone()).collect())
        .collect();
    row_hnf(basis)
}

/// Row Hermite normal form (positive pivots, reduced above), a canonical
/// basis of the integer row span.
fn row_hnf(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return rows;
    }
    let n = rows[0].len();
    let mut pivot_row = 0usize;
    for col in 0..n {
        if pivot_row == rows.len() {
            break;
        }
        loop {
            let nz: Vec<usize> = (pivot_row..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .collect();
            if nz.is_empty() {
                break;
            }
            if nz.len() == 1 {
                rows.swap(pivot_row, nz[0]);
                break;
            }
            let mut sorted = nz;
            sorted.sort_by_key(|&r| rows[r][col].abs());
            let (r1, r2) = (sorted[0], sorted[1]);
            let q = &rows[r2][col] / &rows[r1][col];
            for j in 0..n {
                let v = &rows[r2][j] - &q * &rows[r1][j];
                rows[r2][j] = v;
            }
            if rows[r2][col].is_zero() {
                continue;
            }
        }
        if pivot_row < rows.len() && !rows[pivot_row][col].is_zero() {
            if rows[pivot_row][col].is_negative() {
                for v in rows[pivot_row].iter_mut() {
                    *v = -v.clone();
                }
            }
            let pivot = rows[pivot_row][col].clone();
            for r in 0..pivot_row {
                let q = rows[r][col].div_floor(&pivot);
                if !q.is_zero() {
                    for j in 0..n {
                        let v = &rows[r][j] - &q * &rows[pivot_row][j];
                        rows[r][j] = v;
                    }
                }
            }
            pivot_row += 1;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// A primitive sublattice with its restricted Gram matrix and signature.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Sublattice {
    /// Basis rows in the ambient coordinates.
    pub basis: Vec<Vec<String>>,
    pub rank: usize,
    pub gram: Vec<Vec<String>>,
    pub signature: (usize, usize, usize),
}

fn bigint_rows_to_strings(rows: &[Vec<BigInt>]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect())
        .collect()
}

fn restricted_gram(lattice: &IntegralLattice, basis: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let k = basis.len();
    let n = lattice.rank();
    let mut out = vec![vec![BigInt::zero(); k]; k];
    for a in 0..k {
        for b in 0..k {
            let mut acc = BigInt::zero();
            for i in 0..n {
                for j in 0..n {
                    if !basis[a][i].is_zero() && !basis[b][j].is_zero() {
                        acc += &basis[a][i] * BigInt::from(lattice.gram[i][j]) * &basis[b][j];
                    }
                }
            }
            out[a][b] = acc;
        }
    }
    out
}

fn bigint_gram_signature(gram: &[Vec<BigInt>]) -> Result<(usize, usize, usize)> {
    let q = QMat::from_rows(
        gram.iter()
            .map(|r| {
                r.iter()
                    .map(|v| BigRational::from_integer(v.clone()))
                    .collect()
            })
            .collect(),
    );
    symmetric_signature(&q)
}

fn sublattice_from_basis(lattice: &IntegralLattice, basis: Vec<Vec<BigInt>>) -> Result<Sublattice> {
    let gram = restricted_gram(lattice, &basis);
    let signature = if basis.is_empty() {
        (0, 0, 0)
    } else {
        bigint_gram_signature(&gram)?
    };
    Ok(Sublattice {
        rank: basis.len(),
        basis: bigint_rows_to_strings(&basis),
        gram: bigint_rows_to_strings(&gram),
        signature,
    })
}

/// The primitive sublattice fixed (sign = +1) or anti-fixed (sign = -1)
/// by an isometry, with restricted Gram matrix and exact signature.
pub fn eigenlattice(
    lattice: &IntegralLattice,
    g: &Isometry,
    sign: i64,
) -> Result<Sublattice> {
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidInput("sign must be +1 or -1".into()));
    }
    let n = lattice.rank();
    let k: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut v = BigInt::from(g.matrix[i][j]);
                    if i == j {
                        v -= BigInt::from(sign);
                    }
                    v
                })
                .collect()
        })
        .collect();
    sublattice_from_basis(lattice, integer_kernel(&k))
}

/// Result of the cyclotomic kernel computation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CyclotomicEigenlattice {
    pub sublattice: Sublattice,
    /// Whether the complex eigenspaces for primitive p-th roots are
    /// isotropic for the bilinear form, verified by exact cyclotomic
    /// arithmetic.
    pub eigenspaces_isotropic: bool,
}

/// Integral kernel of the p-th cyclotomic polynomial evaluated at g, and
/// the isotropy check on the zeta_p-eigenspace over Q(zeta_p). When p does
/// not divide the order of g the cyclotomic polynomial acts invertibly and
/// the kernel is zero.
pub fn cyclotomic_eigenlattice(
    lattice: &IntegralLattice,
    g: &Isometry,
    p: u64,
) -> Result<CyclotomicEigenlattice> {
    if !crate::exact::is_prime_u64(p) || p == 2 {
        return Err(Error::InvalidInput(format!(
            "cyclotomic eigenlattice needs an odd prime, got {p}"
        )));
    }
    let n = lattice.rank();
    // Phi_p(g) = I + g + ... + g^{p-1}
    let mut acc = vec![vec![BigInt::zero(); n]; n];
    let mut power: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for _ in 0..p {
        for i in 0..n {
            for j in 0..n {
                acc[i][j] += BigInt::from(power[i][j]);
            }
        }
        power = mat_mul_i64(&power, &g.matrix);
    }
    let basis = integer_kernel(&acc);
    let sublattice = sublattice_from_basis(lattice, basis)?;
    let eigenspaces_isotropic = eigenspace_isotropy(lattice, g, p as usize)?;
    Ok(CyclotomicEigenlattice {
        sublattice,
        eigenspaces_isotropic,
    })
}

/// Solve (g - zeta I) v = 0 over Q(zeta_p) and check that the bilinear form
/// vanishes identically on the solution space.
fn eigenspace_isotropy(lattice: &IntegralLattice, g: &Isometry, p: usize) -> Result<bool> {
    let n = lattice.rank();
    // Gaussian elimination over the cyclotomic field.
    let zeta = CycElem::zeta_power(p, 1);
    let mut m: Vec<Vec<CycElem>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = CycElem::from_rational(
                        p,
                        BigRational::from_integer(g.matrix[i][j].into()),
                    );
                    if i == j {
                        e = e.sub(&zeta);
                    }
                    e
                })
                .collect()
        })
        .collect();
    // forward elimination with pivot normalization
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        if row == n {
            break;
        }
        let Some(pr) = (row..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pr);
        let inv = m[row][col].inv().expect("pivot invertible");
        for j in col..n {
            m[row][j] = m[row][j].mul(&inv);
        }
        for r in 0..n {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..n {
                    let t = m[r][j].sub(&f.mul(&m[row][j]));
                    m[r][j] = t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    // kernel basis over the field
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Vec<Vec<CycElem>> = Vec::new();
    for &fc in &free {
        let mut v = vec![CycElem::zero(p); n];
        v[fc] = CycElem::one(p);
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = m[ri][fc].neg();
        }
        basis.push(v);
    }
    // bilinear pairing must vanish on all pairs
    for a in &basis {
        for b in &basis {
            let mut acc = CycElem::zero(p);
            for i in 0..n {
                for j in 0..n {
                    if !a[i].is_zero() && !b[j].is_zero() {
                        let gij = CycElem::from_rational(
                            p,
                            BigRational::from_integer(lattice.gram[i][j].into()),
                        );
                        acc = acc.add(&a[i].mul(&gij).mul(&b[j]));
                    }
                }
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All primitive isotropic vectors with coordinates in [-H, H], up to sign,
/// in deterministic lexicographic order.
pub fn isotropic_vectors(lattice: &IntegralLattice, height: i64) -> Result<Vec<Vec<i64>>> {
    if height < 1 {
        return Err(Error::InvalidInput("height bound must be >= 1".into()));
    }
    let n = lattice.rank();
    let mut out = Vec::new();
    let mut v = vec![-height; n];
    loop {
        if v.iter().any(|&x| x != 0) {
            let first_nonzero = v.iter().find(|&&x| x != 0).copied().unwrap();
            let g = v.iter().fold(0i64, |acc, &x| gcd_i64(acc, x.abs()));
            if first_nonzero > 0 && g == 1 && lattice.pair(&v, &v) == 0 {
                out.push(v.clone());
            }
        }
        // odometer increment
        let mut i = n;
        loop {
            if i == 0 {
                out.sort_unstable();
                return Ok(out);
            }
            i -= 1;
            if v[i] < height {
                v[i] += 1;
                for x in v.iter_mut().skip(i + 1) {
                    *x = -height;
                }
                break;
            }
        }
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd_i64(b, a % b)
    }
}

fn to_rational_row(v: &[i64]) -> Vec<BigRational> {
    v.iter()
        .map(|&x| BigRational::from_integer(x.into()))
        .collect()
}

/// Functional rows h^T G for a set of vectors.
fn pairing_rows(lattice: &IntegralLattice, vectors: &[Vec<i64>]) -> QMat {
    let g = lattice.gram_qmat();
    let b = QMat::from_i64(vectors);
    b.mul(&g)
}

/// Boundary subspace of an isotropic line: intersection of the arrangement
/// hyperplanes containing the line with its orthogonal complement.
/// Hyperplanes not containing the line are ignored.
pub fn boundary_subspace_j(
    lattice: &IntegralLattice,
    line: &[i64],
    arrangement: &[Vec<i64>],
) -> Result<Subspace> {
    if lattice.pair(line, line) != 0 {
        return Err(Error::NotIsotropic("line".into()));
    }
    let mut rows: Vec<Vec<i64>> = vec![line.to_vec()];
    for h in arrangement {
        // H contains the line iff the line pairs to zero with h
        if lattice.pair(h, line) == 0 {
            rows.push(h.clone());
        }
    }
    Ok(Subspace::kernel_of(&pairing_rows(lattice, &rows)))
}

/// Boundary subspace of an isotropic plane: intersection of the containing
/// hyperplanes with the plane's orthogonal complement.
pub fn boundary_subspace_vsigma(
    lattice: &IntegralLattice,
    plane: &[Vec<i64>; 2],
    arrangement: &[Vec<i64>],
) -> Result<Subspace> {
    for a in plane {
        for b in plane {
            if lattice.pair(a, b) != 0 {
                return Err(Error::NotIsotropic("plane".into()));
            }
        }
    }
    let mut rows: Vec<Vec<i64>> = plane.to_vec();
    for h in arrangement {
        if plane.iter().all(|v| lattice.pair(h, v) == 0) {
            rows.push(h.clone());
        }
    }
    Ok(Subspace::kernel_of(&pairing_rows(lattice, &rows)))
}

/// A CM-isotropic line e + sqrt(-D) f spans a rational isotropic plane
/// exactly when all three pairings of e and f vanish.
pub fn cm_line_to_plane(
    lattice: &IntegralLattice,
    e: &[i64],
    f: &[i64],
    d: u64,
) -> Result<Option<Subspace>> {
    if d == 0 {
        return Err(Error::InvalidInput("discriminant must be positive".into()));
    }
    let span = Subspace::from_spanning(QMat::from_rows(vec![
        to_rational_row(e),
        to_rational_row(f),
    ]));
    if span.dim() != 2 {
        return Err(Error::DependentVectors);
    }
    let isotropic =
        lattice.pair(e, e) == 0 && lattice.pair(f, f) == 0 && lattice.pair(e, f) == 0;
    Ok(isotropic.then_some(span))
}

/// JSON form of a lattice problem instance.
#[derive(Debug, Serialize, Deserialize)]
pub struct LatticeJson {
    pub gram: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isometry: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arrangement: Option<Vec<Vec<i64>>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap2() -> Vec<Vec<i64>> {
        vec![vec![0, 1], vec![1, 0]]
    }

    #[test]
    fn isometry_checks() {
        let u = IntegralLattice::hyperbolic_plane();
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(verify_isometry(&u, &id, 10).unwrap(), (true, 1));
        assert_eq!(verify_isometry(&u, &swap2(), 10).unwrap(), (true, 2));
        let neg = vec![vec![-1, 0], vec![0, -1]];
        assert_eq!(verify_isometry(&u, &neg, 10).unwrap(), (true, 2));
        let not = vec![vec![1, 1], vec![0, 1]];
        assert!(!verify_isometry(&u, &not, 10).unwrap().0);
    }

    #[test]
    fn eigenlattices_of_the_swap() {
        let u = IntegralLattice::hyperbolic_plane();
        let g = Isometry::new(&u, swap2(), 10).unwrap();
        let plus = eigenlattice(&u, &g, 1).unwrap();
        assert_eq!(plus.rank, 1);
        assert_eq!(plus.gram, vec![vec!["2".to_string()]]);
        assert_eq!(plus.signature, (1, 0, 0));
        let minus = eigenlattice(&u, &g, -1).unwrap();
        assert_eq!(minus.rank, 1);
        assert_eq!(minus.gram, vec![vec!["-2".to_string()]]);
        assert_eq!(minus.signature, (0, 1, 0));
    }

    #[test]
    fn block_swap_on_two_hyperbolic_planes() {
        let u = IntegralLattice::hyperbolic_plane();
        let l = u.direct_sum(&u);
        let g = vec![
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
        ];
        let iso = Isometry::new(&l, g, 10).unwrap();
        let plus = eigenlattice(&l, &iso, 1).unwrap();
        assert_eq!(plus.rank, 2);
        assert_eq!(plus.signature, (1, 1, 0));
        // Gram [[0,2],[2,0]] in the canonical kernel basis
        assert_eq!(
            plus.gram,
            vec![
                vec!["0".to_string(), "2".to_string()],
                vec!["2".to_string(), "0".to_string()]
            ]
        );
    }

    #[test]
    fn order_two_eigenlattices_are_orthogonal_and_additive() {
        // several fixtures: U, U+U, U+A2, A2+[-2]
        let u = IntegralLattice::hyperbolic_plane();
        let a2 = IntegralLattice::a2();
        let m2 = IntegralLattice::new(vec![vec![-2]]).unwrap();
        let fixtures: Vec<(IntegralLattice, Vec<Vec<i64>>)> = vec![
            (u.clone(), swap2()),
            (u.direct_sum(&u), vec![
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1],
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
            ]),
            (u.direct_sum(&a2), vec![
                vec![0, 1, 0, 0],
                vec![1, 0, 0, 0],
                vec![0, 0, -1, 0],
                vec![0, 0, 0, -1],
            ]),
            (a2.direct_sum(&m2), vec![
                vec![0, -1, 0],
                vec![-1, 0, 0],
                vec![0, 0, -1],
            ]),
        ];
        for (l, g) in fixtures {
            let iso = Isometry::new(&l, g, 20).unwrap();
            assert_eq!(iso.order(), 2);
            let plus = eigenlattice(&l, &iso, 1).unwrap();
            let minus = eigenlattice(&l, &iso, -1).unwrap();
            assert_eq!(plus.rank + minus.rank, l.rank());
            let sig = l.signature().unwrap();
            assert_eq!(plus.signature.0 + minus.signature.0, sig.0);
            assert_eq!(plus.signature.1 + minus.signature.1, sig.1);
            // orthogonality of the two eigenlattices
            let parse = |rows: &Vec<Vec<String>>| -> Vec<Vec<i64>> {
                rows.iter()
                    .map(|r| r.iter().map(|s| s.parse().unwrap()).collect())
                    .collect()
            };
            for a in parse(&plus.basis) {
                for b in parse(&minus.basis) {
                    assert_eq!(l.pair(&a, &b), 0);
                }
            }
        }
    }

    #[test]
    fn cyclotomic_kernel_on_a2() {
        let a2 = IntegralLattice::a2();
        // rotation of order 3: e1 -> e2 -> -e1-e2
        let rot = vec![vec![0, -1], vec![1, -1]];
        let iso = Isometry::new(&a2, rot, 10).unwrap();
        assert_eq!(iso.order(), 3);
        let ce = cyclotomic_eigenlattice(&a2, &iso, 3).unwrap();
        assert_eq!(ce.sublattice.rank, 2);
        assert!(ce.eigenspaces_isotropic);
    }

    #[test]
    fn cyclotomic_kernel_of_identity_is_zero() {
        let a2 = IntegralLattice::a2();
        let id = vec![vec![1, 0], vec![0, 1]];
        let iso = Isometry::new(&a2, id, 10).unwrap();
        let ce = cyclotomic_eigenlattice(&a2, &iso, 3).unwrap();
        assert_eq!(ce.sublattice.rank, 0);
    }

    #[test]
    fn isotropy_on_a_bigger_fixture() {
        // U + A2 with the rotation acting on the A2 block
        let l = IntegralLattice::hyperbolic_plane().direct_sum(&IntegralLattice::a2());
        let g = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 0, -1],
            vec![0, 0, 1, -1],
        ];
        let iso = Isometry::new(&l, g, 10).unwrap();
        assert_eq!(iso.order(), 3);
        let ce = cyclotomic_eigenlattice(&l, &iso, 3).unwrap();
        assert_eq!(ce.sublattice.rank, 2);
        assert!(ce.eigenspaces_isotropic);
    }

    #[test]
    fn isotropic_vector_examples() {
        let u = IntegralLattice::hyperbolic_plane();
        assert_eq!(
            isotropic_vectors(&u, 3).unwrap(),
            vec![vec![0, 1], vec![1, 0]]
        );
        let pos = IntegralLattice::new(vec![vec![2, 0], vec![0, 2]]).unwrap();
        assert!(isotropic_vectors(&pos, 5).unwrap().is_empty());
        let l = u.direct_sum(&IntegralLattice::new(vec![vec![-2]]).unwrap());
        let found = isotropic_vectors(&l, 2).unwrap();
        for v in [vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 1]] {
            assert!(found.contains(&v), "missing {v:?}");
        }
    }

    #[test]
    fn boundary_line_subspace() {
        let u2 = IntegralLattice::hyperbolic_plane()
            .direct_sum(&IntegralLattice::hyperbolic_plane());
        let line = vec![1, 0, 0, 0];
        // empty arrangement: the full orthogonal complement (3-dim)
        let j0 = boundary_subspace_j(&u2, &line, &[]).unwrap();
        assert_eq!(j0.dim(), 3);
        // containing hyperplane cuts it down
        let h_in = vec![0, 0, 1, 0]; // pairs to 0 with the line
        let j1 = boundary_subspace_j(&u2, &line, std::slice::from_ref(&h_in)).unwrap();
        assert_eq!(j1.dim(), 2);
        // non-containing hyperplane is ignored
        let h_out = vec![0, 1, 0, 0];
        let j2 = boundary_subspace_j(&u2, &line, &[h_out]).unwrap();
        assert_eq!(j2.dim(), 3);
        // containments: line inside j(I) inside line-perp
        let line_q = Subspace::from_spanning(QMat::from_i64(std::slice::from_ref(&line)));
        assert!(j0.contains_subspace(&line_q));
        assert!(j1.contains_subspace(&line_q));
        let perp = boundary_subspace_j(&u2, &line, &[]).unwrap();
        assert!(perp.contains_subspace(&j1));
        // monotone non-increasing in the arrangement
        assert!(j1.dim() <= j0.dim());
        // a non-isotropic input is rejected
        let bad = vec![1, 1, 0, 0];
        assert!(boundary_subspace_j(&u2, &bad, &[]).is_err());
    }

    #[test]
    fn boundary_plane_subspace() {
        // U + U + [-2]: the plane spanned by the two isotropic e-vectors
        let l = IntegralLattice::hyperbolic_plane()
            .direct_sum(&IntegralLattice::hyperbolic_plane())
            .direct_sum(&IntegralLattice::new(vec![vec![-2]]).unwrap());
        let plane = [vec![1, 0, 0, 0, 0], vec![0, 0, 1, 0, 0]];
        let v0 = boundary_subspace_vsigma(&l, &plane, &[]).unwrap();
        assert_eq!(v0.dim(), 3); // J-perp
        let h1 = vec![0, 0, 0, 0, 1]; // contains the plane
        let v1 = boundary_subspace_vsigma(&l, &plane, std::slice::from_ref(&h1)).unwrap();
        assert_eq!(v1.dim(), 2);
        let h2 = vec![1, 0, -1, 0, 2]; // also contains the plane
        let v2 = boundary_subspace_vsigma(&l, &plane, &[h1, h2]).unwrap();
        assert_eq!(v2.dim(), 2); // codimension-2 cut of the 3-dim J-perp... or less
        let plane_q = Subspace::from_spanning(QMat::from_i64(&plane));
        assert!(v0.contains_subspace(&plane_q));
        // V_sigma always sits inside J-perp
        assert!(v0.contains_subspace(&v1));
        assert!(v0.contains_subspace(&v2));
        let bad = [vec![1, 1, 0, 0, 0], vec![0, 0, 1, 0, 0]];
        assert!(boundary_subspace_vsigma(&l, &bad, &[]).is_err());
    }

    #[test]
    fn cm_plane_criterion() {
        let l = IntegralLattice::hyperbolic_plane()
            .direct_sum(&IntegralLattice::hyperbolic_plane());
        let e = vec![1, 0, 0, 0];
        let f = vec![0, 0, 1, 0];
        for d in [1u64, 3, 7] {
            let plane = cm_line_to_plane(&l, &e, &f, d).unwrap();
            assert!(plane.is_some());
            assert_eq!(plane.unwrap().dim(), 2);
        }
        // e not isotropic
        let bad_e = vec![1, 1, 0, 0];
        assert!(cm_line_to_plane(&l, &bad_e, &f, 3).unwrap().is_none());
        // nonzero cross pairing
        let g = vec![0, 1, 0, 0];
        assert!(cm_line_to_plane(&l, &e, &g, 3).unwrap().is_none());
        // dependent input
        assert!(matches!(
            cm_line_to_plane(&l, &e, &e, 3),
            Err(Error::DependentVectors)
        ));
    }
}
