use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;

use crate::scalar::{re, Scalar, C};

/// Dense complex matrix with row-major storage.
///
/// The crate only needs small shapes (vectors and 2×2 / 4×4 operators), so
/// the implementation favors clarity and determinism over speed. Shape
/// mismatches in arithmetic are programming errors and panic; all validation
/// of user-facing inputs happens in the typed constructors elsewhere.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<C<T>>,
}

impl<T: Scalar> CMatrix<T> {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix shape must be positive");
        CMatrix { rows, cols, data: vec![C::new(T::zero(), T::zero()); rows * cols] }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = re(T::one());
        }
        m
    }

    /// Builds a matrix from nested row slices; panics on ragged input.
    pub fn from_rows(rows: &[&[C<T>]]) -> Self {
        assert!(!rows.is_empty() && !rows[0].is_empty(), "matrix shape must be positive");
        let cols = rows[0].len();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        CMatrix { rows: rows.len(), cols, data }
    }

    /// 2×2 matrix from entries in row-major order.
    pub fn two_by_two(m00: C<T>, m01: C<T>, m10: C<T>, m11: C<T>) -> Self {
        CMatrix { rows: 2, cols: 2, data: vec![m00, m01, m10, m11] }
    }

    /// Column vector from a slice of entries.
    pub fn column(entries: &[C<T>]) -> Self {
        assert!(!entries.is_empty(), "matrix shape must be positive");
        CMatrix { rows: entries.len(), cols: 1, data: entries.to_vec() }
    }

    /// Builds entries from a function of the index pair.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C<T>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    /// Matrix trace; requires a square matrix.
    pub fn trace(&self) -> C<T> {
        assert!(self.is_square(), "trace of non-square matrix");
        (0..self.rows).map(|i| self[(i, i)]).fold(C::new(T::zero(), T::zero()), |a, b| a + b)
    }

    /// Determinant of a 2×2 matrix.
    pub fn det2(&self) -> C<T> {
        assert!(self.rows == 2 && self.cols == 2, "det2 needs a 2x2 matrix");
        self[(0, 0)] * self[(1, 1)] - self[(0, 1)] * self[(1, 0)]
    }

    /// Frobenius norm.
    pub fn frobenius(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    /// Largest entry modulus of `self − other`.
    pub fn max_diff(&self, other: &Self) -> T {
        assert_eq!(self.shape(), other.shape(), "shape mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max)
    }

    /// Largest entry modulus of `M − M†`; zero means exactly Hermitian.
    pub fn hermiticity_residual(&self) -> T {
        assert!(self.is_square(), "hermiticity of non-square matrix");
        let mut worst = T::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Scales every entry by a complex factor.
    pub fn scaled(&self, k: C<T>) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] * k)
    }

    /// Scales every entry by a real factor.
    pub fn scaled_re(&self, k: T) -> Self {
        self.scaled(re(k))
    }

    fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Extracts column `j` as a column vector.
    pub fn col(&self, j: usize) -> Self {
        Self::from_fn(self.rows, 1, |i, _| self[(i, j)])
    }

    /// Replaces column `j` with the entries of the column vector `v`.
    pub fn set_col(&mut self, j: usize, v: &Self) {
        assert!(v.cols == 1 && v.rows == self.rows, "column shape mismatch");
        for i in 0..self.rows {
            self[(i, j)] = v[(i, 0)];
        }
    }

    /// Assembles `[[tl, tr], [bl, br]]` from four equally-sized square blocks.
    pub fn from_blocks(tl: &Self, tr: &Self, bl: &Self, br: &Self) -> Self {
        let n = tl.rows;
        for b in [tl, tr, bl, br] {
            assert!(b.rows == n && b.cols == n, "blocks must be square and equal-sized");
        }
        Self::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
            (true, true) => tl[(i, j)],
            (true, false) => tr[(i, j - n)],
            (false, true) => bl[(i - n, j)],
            (false, false) => br[(i - n, j - n)],
        })
    }

    /// Extracts the `size`×`size` block whose top-left corner is `(bi·size, bj·size)`.
    pub fn block(&self, bi: usize, bj: usize, size: usize) -> Self {
        assert!(bi * size + size <= self.rows && bj * size + size <= self.cols, "block out of range");
        Self::from_fn(size, size, |i, j| self[(bi * size + i, bj * size + j)])
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self[(i / other.rows, j / other.cols)] * other[(i % other.rows, j % other.cols)]
        })
    }

    /// Stacks two column vectors into one (direct sum of states).
    pub fn vcat(top: &Self, bottom: &Self) -> Self {
        assert!(top.cols == 1 && bottom.cols == 1, "vcat expects column vectors");
        let mut data = top.data.clone();
        data.extend_from_slice(&bottom.data);
        CMatrix { rows: top.rows + bottom.rows, cols: 1, data }
    }
}

/// Inner product `⟨x|y⟩ = Σ conj(x_i)·y_i` of two column vectors.
pub fn inner<T: Scalar>(x: &CMatrix<T>, y: &CMatrix<T>) -> C<T> {
    assert!(x.cols == 1 && y.cols == 1 && x.rows == y.rows, "inner expects equal-length columns");
    let mut acc = C::new(T::zero(), T::zero());
    for i in 0..x.rows {
        acc = acc + x[(i, 0)].conj() * y[(i, 0)];
    }
    acc
}

/// Euclidean norm of a column vector.
pub fn vec_norm<T: Scalar>(x: &CMatrix<T>) -> T {
    inner(x, x).re.sqrt()
}

impl<T: Scalar> Index<(usize, usize)> for CMatrix<T> {
    type Output = C<T>;
    fn index(&self, (i, j): (usize, usize)) -> &C<T> {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<T: Scalar> IndexMut<(usize, usize)> for CMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C<T> {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Add for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn add(self, rhs: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in add");
        CMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + rhs[(i, j)])
    }
}

impl<T: Scalar> Sub for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn sub(self, rhs: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in sub");
        CMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }
}

impl<T: Scalar> Neg for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn neg(self) -> CMatrix<T> {
        CMatrix::from_fn(self.rows, self.cols, |i, j| -self[(i, j)])
    }
}

impl<T: Scalar> Mul for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn mul(self, rhs: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                for j in 0..rhs.cols {
                    out[(i, j)] = out[(i, j)] + a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

/// Pauli matrices and the 2×2 identity, used throughout the model modules.
pub mod pauli {
    use super::*;

    pub fn sigma_x<T: Scalar>() -> CMatrix<T> {
        let o = C::new(T::zero(), T::zero());
        let l = re(T::one());
        CMatrix::two_by_two(o, l, l, o)
    }

    pub fn sigma_y<T: Scalar>() -> CMatrix<T> {
        let o = C::new(T::zero(), T::zero());
        let i = C::new(T::zero(), T::one());
        CMatrix::two_by_two(o, -i, i, o)
    }

    pub fn sigma_z<T: Scalar>() -> CMatrix<T> {
        let o = C::new(T::zero(), T::zero());
        let l = re(T::one());
        CMatrix::two_by_two(l, o, o, -l)
    }

    pub fn id2<T: Scalar>() -> CMatrix<T> {
        CMatrix::identity(2)
    }
}

#[cfg(test)]
mod tests {
    use super::pauli::*;
    use super::*;

    fn c(r: f64, i: f64) -> Complex<f64> {
        Complex::new(r, i)
    }

    #[test]
    fn identity_multiplication_is_neutral() {
        let m = CMatrix::two_by_two(c(1.0, 2.0), c(3.0, -1.0), c(0.5, 0.0), c(-2.0, 4.0));
        let id = CMatrix::identity(2);
        assert_eq!(&m * &id, m);
        assert_eq!(&id * &m, m);
    }

    #[test]
    fn adjoint_reverses_products() {
        let a = CMatrix::two_by_two(c(1.0, 2.0), c(3.0, -1.0), c(0.5, 0.2), c(-2.0, 4.0));
        let b = CMatrix::two_by_two(c(0.0, 1.0), c(2.0, 2.0), c(1.0, -3.0), c(4.0, 0.0));
        let lhs = (&a * &b).adjoint();
        let rhs = &b.adjoint() * &a.adjoint();
        assert!(lhs.max_diff(&rhs) < 1e-14);
    }

    #[test]
    fn pauli_algebra() {
        let x = sigma_x::<f64>();
        let y = sigma_y::<f64>();
        let z = sigma_z::<f64>();
        // σ_x σ_y = i σ_z
        let xy = &x * &y;
        let iz = z.scaled(c(0.0, 1.0));
        assert!(xy.max_diff(&iz) < 1e-15);
        assert_eq!(x.trace(), c(0.0, 0.0));
        assert_eq!(x.det2(), c(-1.0, 0.0));
    }

    #[test]
    fn hermiticity_residual_detects_asymmetry() {
        let mut m = sigma_x::<f64>();
        assert_eq!(m.hermiticity_residual(), 0.0);
        m[(0, 1)] = c(0.0, 1e-3);
        assert!(m.hermiticity_residual() > 1e-3);
    }

    #[test]
    fn kron_matches_block_structure() {
        let h = CMatrix::two_by_two(c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0));
        let lifted = CMatrix::identity(2).kron(&h);
        let z = CMatrix::zeros(2, 2);
        let blocks = CMatrix::from_blocks(&h, &z, &z, &h);
        assert_eq!(lifted, blocks);
    }

    #[test]
    fn inner_product_and_norm() {
        let v = CMatrix::column(&[c(0.6, 0.0), c(0.0, 0.8)]);
        assert!((vec_norm(&v) - 1.0).abs() < 1e-15);
        let w = CMatrix::column(&[c(0.0, 0.8), c(0.6, 0.0)]);
        let ip = inner(&v, &w);
        // ⟨v|w⟩ = conj(0.6)·0.8i + conj(0.8i)·0.6 = 0.48i − 0.48i = 0
        assert!((ip - c(0.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn block_roundtrip() {
        let a = sigma_x::<f64>();
        let b = sigma_y::<f64>();
        let d = sigma_z::<f64>();
        let m = CMatrix::from_blocks(&a, &b, &b.adjoint(), &d);
        assert_eq!(m.block(0, 0, 2), a);
        assert_eq!(m.block(0, 1, 2), b);
        assert_eq!(m.block(1, 0, 2), b.adjoint());
        assert_eq!(m.block(1, 1, 2), d);
    }
}
