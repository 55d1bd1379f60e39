use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::{inner, vec_norm, CMatrix};
use crate::scalar::{im, re, Scalar, C};
use crate::tol::Tolerances;

/// Maximum cyclic Jacobi sweeps before declaring non-convergence.
const MAX_SWEEPS: usize = 60;

/// Column entries below this modulus are skipped when anchoring the phase
/// convention; a unit-norm column always has an entry well above it.
const PHASE_ANCHOR: f64 = 1e-8;

/// Eigenvalue/eigenvector pairs of a Hermitian matrix.
///
/// Eigenvalues are sorted ascending. Eigenvector columns are orthonormal and
/// phase-fixed: the first component with modulus above a small anchor
/// threshold is real and positive, which makes the decomposition a pure
/// function of the input, bit for bit.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenDecomposition<T> {
    pub eigenvalues: Vec<T>,
    pub eigenvectors: CMatrix<T>,
}

impl<T: Scalar> EigenDecomposition<T> {
    /// Largest eigenpair residual `‖M v_k − λ_k v_k‖` over all columns.
    pub fn pair_residual(&self, m: &CMatrix<T>) -> T {
        let mut worst = T::zero();
        for (k, &lk) in self.eigenvalues.iter().enumerate() {
            let v = self.eigenvectors.col(k);
            let r = &(m * &v) - &v.scaled(re(lk));
            worst = worst.max(vec_norm(&r));
        }
        worst
    }

    /// Largest entry of `V†V − I`.
    pub fn orthonormality_residual(&self) -> T {
        let v = &self.eigenvectors;
        let gram = &v.adjoint() * v;
        gram.max_diff(&CMatrix::identity(v.cols()))
    }

    /// Reconstructs `V·diag(λ)·V†`.
    pub fn reconstruct(&self) -> CMatrix<T> {
        self.synthesize(|l| re(l))
    }

    /// Builds `V·diag(f(λ))·V†` for a scalar function of the eigenvalues.
    pub fn synthesize(&self, f: impl Fn(T) -> C<T>) -> CMatrix<T> {
        let v = &self.eigenvectors;
        let n = v.rows();
        let mut scaled = v.clone();
        for (k, &lk) in self.eigenvalues.iter().enumerate() {
            let fk = f(lk);
            for i in 0..n {
                scaled[(i, k)] = v[(i, k)] * fk;
            }
        }
        &scaled * &v.adjoint()
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Sizes 1 and 2 use closed forms; larger sizes run cyclic Jacobi sweeps
/// with full unitary accumulation. Input Hermiticity is validated against
/// `tol.hermiticity` and degenerate blocks (eigenvalue gap below
/// `tol.degenerate_gap`) are re-orthonormalized by Gram-Schmidt in index
/// order before the phase convention is applied.
pub fn herm_eig<T: Scalar>(m: &CMatrix<T>, tol: &Tolerances<T>) -> Result<EigenDecomposition<T>> {
    assert!(m.is_square(), "herm_eig expects a square matrix");
    let residual = m.hermiticity_residual();
    if residual > tol.hermiticity {
        return Err(Error::NotHermitian { residual: residual.as_f64() });
    }
    let n = m.rows();
    let (values, vectors) = match n {
        1 => (vec![m[(0, 0)].re], CMatrix::identity(1)),
        2 => eig2_hermitian(m),
        _ => jacobi(m, tol)?,
    };
    let (mut values, mut vectors) = sort_ascending(values, vectors);
    orthonormalize_degenerate(&mut values, &mut vectors, tol);
    fix_phases(&mut vectors);
    Ok(EigenDecomposition { eigenvalues: values, eigenvectors: vectors })
}

/// Closed-form eigenpairs of a Hermitian 2×2 matrix.
fn eig2_hermitian<T: Scalar>(m: &CMatrix<T>) -> (Vec<T>, CMatrix<T>) {
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    let b = m[(0, 1)];
    let mean = (a + d) / T::of(2.0);
    let half_gap = (a - d) / T::of(2.0);
    let r = b.norm();
    let disc = half_gap.hypot(r);
    let lo = mean - disc;
    let hi = mean + disc;

    let mut vectors = CMatrix::identity(2);
    if disc > T::zero() {
        for (k, lambda) in [lo, hi].into_iter().enumerate() {
            let cand_a = CMatrix::column(&[b, re(lambda - a)]);
            let cand_b = CMatrix::column(&[re(lambda - d), b.conj()]);
            let (na, nb) = (vec_norm(&cand_a), vec_norm(&cand_b));
            let (v, n) = if na >= nb { (cand_a, na) } else { (cand_b, nb) };
            if n > T::zero() {
                vectors.set_col(k, &v.scaled_re(T::one() / n));
            }
        }
    }
    (vec![lo, hi], vectors)
}

/// Cyclic Jacobi sweeps for a complex Hermitian matrix of any small size.
fn jacobi<T: Scalar>(m: &CMatrix<T>, tol: &Tolerances<T>) -> Result<(Vec<T>, CMatrix<T>)> {
    let n = m.rows();
    let scale = T::one().max(m.frobenius());
    let threshold = tol.jacobi_off * scale;
    let skip = scale * T::epsilon();
    let mut a = m.clone();
    let mut v = CMatrix::identity(n);

    for _sweep in 0..MAX_SWEEPS {
        if off_frobenius(&a) <= threshold {
            let values = (0..n).map(|i| a[(i, i)].re).collect();
            return Ok((values, v));
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r <= skip {
                    continue;
                }
                let phase = apq / re(r);
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let tau = (app - aqq) / (T::of(2.0) * r);
                let t = if tau >= T::zero() {
                    T::one() / (tau + (T::one() + tau * tau).sqrt())
                } else {
                    -T::one() / (-tau + (T::one() + tau * tau).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;

                let mut u = CMatrix::identity(n);
                u[(p, p)] = re(c);
                u[(p, q)] = -phase * re(s);
                u[(q, p)] = phase.conj() * re(s);
                u[(q, q)] = re(c);

                a = &(&u.adjoint() * &a) * &u;
                v = &v * &u;
            }
        }
    }
    let off = off_frobenius(&a);
    if off <= threshold {
        let values = (0..n).map(|i| a[(i, i)].re).collect();
        return Ok((values, v));
    }
    Err(Error::NoConvergence { sweeps: MAX_SWEEPS, off: off.as_f64() })
}

fn off_frobenius<T: Scalar>(a: &CMatrix<T>) -> T {
    let mut acc = T::zero();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn sort_ascending<T: Scalar>(values: Vec<T>, vectors: CMatrix<T>) -> (Vec<T>, CMatrix<T>) {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).expect("real eigenvalues"));
    let sorted_values = order.iter().map(|&i| values[i]).collect();
    let mut sorted_vectors = CMatrix::zeros(vectors.rows(), n);
    for (k, &i) in order.iter().enumerate() {
        sorted_vectors.set_col(k, &vectors.col(i));
    }
    (sorted_values, sorted_vectors)
}

/// Gram-Schmidt pass, in index order, over blocks of near-equal eigenvalues.
fn orthonormalize_degenerate<T: Scalar>(
    values: &mut [T],
    vectors: &mut CMatrix<T>,
    tol: &Tolerances<T>,
) {
    let n = values.len();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && values[end] - values[end - 1] < tol.degenerate_gap {
            end += 1;
        }
        if end - start > 1 {
            for k in start..end {
                let mut v = vectors.col(k);
                for prev in start..k {
                    let p = vectors.col(prev);
                    let overlap = inner(&p, &v);
                    v = &v - &p.scaled(overlap);
                }
                let norm = vec_norm(&v);
                if norm > T::zero() {
                    vectors.set_col(k, &v.scaled_re(T::one() / norm));
                }
            }
        }
        start = end;
    }
}

/// Rotates each column so its first non-negligible component is real positive.
fn fix_phases<T: Scalar>(vectors: &mut CMatrix<T>) {
    let anchor = T::of(PHASE_ANCHOR);
    for k in 0..vectors.cols() {
        let mut col = vectors.col(k);
        for i in 0..col.rows() {
            let z = col[(i, 0)];
            let mag = z.norm();
            if mag > anchor {
                col = col.scaled(z.conj() / re(mag));
                col[(i, 0)] = re(col[(i, 0)].re);
                vectors.set_col(k, &col);
                break;
            }
        }
    }
}

/// Characteristic-polynomial roots of a general 2×2 matrix, sorted by real
/// part then imaginary part.
pub fn general_eig2<T: Scalar>(m: &CMatrix<T>) -> (C<T>, C<T>) {
    assert!(m.rows() == 2 && m.cols() == 2, "general_eig2 needs a 2x2 matrix");
    let tr = m.trace();
    let det = m.det2();
    let disc = (tr * tr - det.scale(T::of(4.0))).sqrt();
    // Pick the root farther from cancellation, recover the other from the
    // trace or the determinant.
    let q = if (tr.conj() * disc).re >= T::zero() {
        (tr + disc).unscale(T::of(2.0))
    } else {
        (tr - disc).unscale(T::of(2.0))
    };
    let other = if q.norm() > T::epsilon() { det / q } else { tr - q };
    order_pair(q, other)
}

fn order_pair<T: Scalar>(a: C<T>, b: C<T>) -> (C<T>, C<T>) {
    if (a.re, a.im) <= (b.re, b.im) {
        (a, b)
    } else {
        (b, a)
    }
}

/// Eigendecomposition `M = S·diag(values)·S⁻¹` of a general 2×2 matrix.
#[derive(Clone, Debug)]
pub struct Diag2<T> {
    pub values: [C<T>; 2],
    pub s: CMatrix<T>,
    pub s_inv: CMatrix<T>,
    /// Condition estimate of the eigenvector matrix (σ_max/σ_min).
    pub cond: T,
}

/// Diagonalizes a general 2×2 matrix, rejecting defective inputs.
pub fn diagonalize2<T: Scalar>(m: &CMatrix<T>, tol: &Tolerances<T>) -> Result<Diag2<T>> {
    assert!(m.rows() == 2 && m.cols() == 2, "diagonalize2 needs a 2x2 matrix");
    let (l1, l2) = general_eig2(m);
    let scale = T::one().max(m.max_abs());
    let mut s = CMatrix::identity(2);
    for (k, lambda) in [l1, l2].into_iter().enumerate() {
        let cand_a = CMatrix::column(&[m[(0, 1)], lambda - m[(0, 0)]]);
        let cand_b = CMatrix::column(&[lambda - m[(1, 1)], m[(1, 0)]]);
        let (na, nb) = (vec_norm(&cand_a), vec_norm(&cand_b));
        let (v, n) = if na >= nb { (cand_a, na) } else { (cand_b, nb) };
        if n > scale * T::of(1e3) * T::epsilon() {
            s.set_col(k, &v.scaled_re(T::one() / n));
        }
        // Otherwise the row space vanishes at this eigenvalue (M ≈ λI) and
        // the identity column already spans the eigenspace.
    }
    let gram = &s.adjoint() * &s;
    let (mu_lo, mu_hi) = {
        let (vals, _) = eig2_hermitian(&gram);
        (vals[0], vals[1])
    };
    let cond = if mu_lo > T::zero() {
        (mu_hi / mu_lo).sqrt()
    } else {
        T::infinity()
    };
    if !(cond <= tol.cond_limit) {
        return Err(Error::NotDiagonalizable { cond: cond.as_f64() });
    }
    let s_inv = inverse2(&s, tol)?;
    Ok(Diag2 { values: [l1, l2], s, s_inv, cond })
}

/// Unitary `e^{−i t M}` of a Hermitian matrix via spectral synthesis.
pub fn mat_exp_herm<T: Scalar>(m: &CMatrix<T>, t: T, tol: &Tolerances<T>) -> Result<CMatrix<T>> {
    let d = herm_eig(m, tol)?;
    Ok(d.synthesize(|l| im(-(t * l)).exp()))
}

/// Evolution operator `e^{−i t M}` of a general diagonalizable 2×2 matrix.
pub fn mat_exp_general2<T: Scalar>(m: &CMatrix<T>, t: T, tol: &Tolerances<T>) -> Result<CMatrix<T>> {
    let d = diagonalize2(m, tol)?;
    let mut phases = CMatrix::zeros(2, 2);
    for k in 0..2 {
        phases[(k, k)] = (d.values[k] * im(-t)).exp();
    }
    Ok(&(&d.s * &phases) * &d.s_inv)
}

/// Hermitian positive-definite square root via spectral synthesis.
pub fn sqrt_pd<T: Scalar>(m: &CMatrix<T>, tol: &Tolerances<T>) -> Result<CMatrix<T>> {
    if m.rows() > 16 {
        return Err(Error::UnsupportedDimension { n: m.rows(), op: "sqrt_pd" });
    }
    let d = herm_eig(m, tol)?;
    let min_eig = d.eigenvalues[0];
    if min_eig <= tol.positive_definite {
        return Err(Error::NotPositiveDefinite { min_eig: min_eig.as_f64() });
    }
    let r = d.synthesize(|l| re(l.sqrt()));
    // The synthesis is Hermitian up to rounding; fold the residue away so
    // downstream Hermiticity checks see an exact fixed point.
    Ok(hermitize(&r))
}

/// Averages away the anti-Hermitian rounding residue of an analytically
/// Hermitian matrix, making the result Hermitian bit for bit.
pub fn hermitize<T: Scalar>(m: &CMatrix<T>) -> CMatrix<T> {
    let half = T::of(0.5);
    CMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        if i == j {
            re(m[(i, j)].re)
        } else if i < j {
            (m[(i, j)] + m[(j, i)].conj()).scale(half)
        } else {
            (m[(i, j)].conj() + m[(j, i)]).scale(half).conj()
        }
    })
}

/// Closed-form inverse of a 2×2 matrix.
pub fn inverse2<T: Scalar>(m: &CMatrix<T>, tol: &Tolerances<T>) -> Result<CMatrix<T>> {
    assert!(m.rows() == 2 && m.cols() == 2, "inverse2 needs a 2x2 matrix");
    let det = m.det2();
    if det.norm() <= tol.singular_det {
        return Err(Error::SingularMatrix { det: det.norm().as_f64() });
    }
    let inv = CMatrix::two_by_two(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)]);
    Ok(inv.scaled(det.inv()))
}

/// Inverse of a Hermitian invertible matrix via spectral synthesis,
/// usable at any supported size (the 2×2 fast path is `inverse2`).
pub fn inverse_hermitian<T: Scalar>(m: &CMatrix<T>, tol: &Tolerances<T>) -> Result<CMatrix<T>> {
    let d = herm_eig(m, tol)?;
    let mut det = T::one();
    for &l in &d.eigenvalues {
        det *= l;
    }
    if d.eigenvalues.iter().any(|l| l.abs() <= tol.singular_det) {
        return Err(Error::SingularMatrix { det: det.as_f64() });
    }
    Ok(d.synthesize(|l| re(T::one() / l)))
}
