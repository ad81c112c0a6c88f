//! Dense exact linear algebra over the rationals: reduced row echelon form,
//! rank, kernels, subspace operations and the inertia of symmetric forms.
//!
//! All routines are deterministic. Echelon bases are canonical, so re-running
//! an operation on its own output is the identity.

use num::{BigInt, BigRational, Signed, Zero};

use crate::error::{Error, Result};

/// Dense rational matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::from_integer(1.into());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        QMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        QMat::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| BigRational::from_integer(BigInt::from(v)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> QMat {
        let mut t = QMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = QMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn stack(top: &QMat, bottom: &QMat) -> QMat {
        assert_eq!(top.cols, bottom.cols);
        let mut data = top.data.clone();
        data.extend_from_slice(&bottom.data);
        QMat {
            rows: top.rows + bottom.rows,
            cols: top.cols,
            data,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = {
                let pv = self[(r, c)].clone();
                pv.recip()
            };
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let v = &self[(i, j)] - &f * &self[(r, j)];
                        self[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Canonical basis (RREF rows) of the right kernel {x : Mx = 0}.
    pub fn kernel(&self) -> QMat {
        let mut m = self.clone();
        let pivots = m.rref();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = QMat::zero(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            basis[(k, fc)] = BigRational::from_integer(1.into());
            for (ri, &pc) in pivots.iter().enumerate().take(rank) {
                let v = -m[(ri, fc)].clone();
                basis[(k, pc)] = v;
            }
        }
        // Re-echelonize so the kernel basis itself is canonical RREF.
        basis.rref();
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = BigRational;
    fn index(&self, (r, c): (usize, usize)) -> &BigRational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigRational {
        &mut self.data[r * self.cols + c]
    }
}

/// A rational subspace represented by a canonical RREF basis (rows).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: QMat,
    ambient: usize,
}

impl Subspace {
    /// Span of the rows, canonicalized; zero rows are discarded.
    pub fn from_spanning(rows: QMat) -> Subspace {
        let ambient = rows.cols();
        let mut m = rows;
        let pivots = m.rref();
        let rank = pivots.len();
        let mut basis = QMat::zero(rank, ambient);
        for i in 0..rank {
            for j in 0..ambient {
                basis[(i, j)] = m[(i, j)].clone();
            }
        }
        Subspace { basis, ambient }
    }

    pub fn full(n: usize) -> Subspace {
        Subspace {
            basis: QMat::identity(n),
            ambient: n,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &QMat {
        &self.basis
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let m = Subspace::from_spanning(QMat::stack(
            &self.basis,
            &QMat::from_rows(vec![v.to_vec()]),
        ));
        m.dim() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    /// Kernel of a matrix as a subspace of its column space.
    pub fn kernel_of(m: &QMat) -> Subspace {
        Subspace {
            basis: m.kernel(),
            ambient: m.cols(),
        }
    }

    /// Intersection of two subspaces of a common ambient space.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces live in dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        // x in both spans: x = a^T A = b^T B. Solve [A^T | -B^T] z = 0.
        let a_t = self.basis.transpose();
        let mut joint = QMat::zero(self.ambient, self.dim() + other.dim());
        for i in 0..self.ambient {
            for j in 0..self.dim() {
                joint[(i, j)] = a_t[(i, j)].clone();
            }
            for j in 0..other.dim() {
                joint[(i, self.dim() + j)] = -other.basis[(j, i)].clone();
            }
        }
        let null = joint.kernel();
        let mut vectors = QMat::zero(null.rows(), self.ambient);
        for k in 0..null.rows() {
            for j in 0..self.ambient {
                let mut acc = BigRational::zero();
                for i in 0..self.dim() {
                    acc += &null[(k, i)] * &self.basis[(i, j)];
                }
                vectors[(k, j)] = acc;
            }
        }
        Ok(Subspace::from_spanning(vectors))
    }

    /// Orthogonal complement with respect to a symmetric Gram matrix
    /// (identity when no form is given): {x : B G x = 0}.
    pub fn orthogonal_complement(&self, form: Option<&QMat>) -> Result<Subspace> {
        let bg = match form {
            Some(g) => {
                if g.rows() != self.ambient || g.cols() != self.ambient {
                    return Err(Error::DimensionMismatch(format!(
                        "Gram matrix is {}x{}, ambient dimension is {}",
                        g.rows(),
                        g.cols(),
                        self.ambient
                    )));
                }
                self.basis.mul(g)
            }
            None => self.basis.clone(),
        };
        Ok(Subspace::kernel_of(&bg))
    }
}

/// Inertia (pos, neg, zero) of a symmetric rational matrix, by exact
/// congruence diagonalization.
pub fn symmetric_signature(g: &QMat) -> Result<(usize, usize, usize)> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = g.rows();
    let mut m = g.clone();
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    let mut handled = vec![false; n];
    for _ in 0..n {
        // Pick the next untreated index with nonzero diagonal, creating one
        // by a congruence move when only off-diagonal entries remain.
        let live: Vec<usize> = (0..n).filter(|&i| !handled[i]).collect();
        if live.is_empty() {
            break;
        }
        let pivot = live.iter().copied().find(|&i| !m[(i, i)].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => {
                let mut found = None;
                'outer: for &i in &live {
                    for &j in &live {
                        if i < j && !m[(i, j)].is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match found {
                    None => {
                        zero += live.len();
                        break;
                    }
                    Some((i, j)) => {
                        // Congruence: add row/col j to row/col i, making
                        // m[i][i] = 2*m[i][j] != 0.
                        for k in 0..n {
                            let v = &m[(i, k)] + &m[(j, k)];
                            m[(i, k)] = v;
                        }
                        for k in 0..n {
                            let v = &m[(k, i)] + &m[(k, j)];
                            m[(k, i)] = v;
                        }
                        i
                    }
                }
            }
        };
        let d = m[(pivot, pivot)].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        // Clear the pivot row and column by congruence.
        for k in 0..n {
            if k == pivot || handled[k] {
                continue;
            }
            if m[(k, pivot)].is_zero() {
                continue;
            }
            let f = &m[(k, pivot)] / &d;
            for l in 0..n {
                let v = &m[(k, l)] - &f * &m[(pivot, l)];
                m[(k, l)] = v;
            }
            for l in 0..n {
                let v = &m[(l, k)] - &f * &m[(l, pivot)];
                m[(l, k)] = v;
            }
        }
        handled[pivot] = true;
    }
    debug_assert_eq!(pos + neg + zero, n);
    Ok((pos, neg, zero))
}
