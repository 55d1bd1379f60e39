use thiserror::Error;

/// Errors surfaced by construction, validation, and consistency checks.
///
/// Diagnostics are widened to `f64` so the error type stays independent of
/// the scalar parameter. `InternalInconsistency` is reserved for dual-path
/// disagreements (two independent computations of the same quantity); all
/// other variants are input-validation failures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max entry deviation {residual:.3e})")]
    NotHermitian { residual: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off:.3e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("matrix is numerically singular (|det| = {det:.3e})")]
    SingularMatrix { det: f64 },

    #[error("matrix is not positive definite (min eigenvalue {min_eig:.3e})")]
    NotPositiveDefinite { min_eig: f64 },

    #[error("parameters sit at an exceptional point (|cos alpha| = {cos_alpha:.3e})")]
    ExceptionalPoint { cos_alpha: f64 },

    #[error("symmetry is broken: eigenvalue imaginary parts up to {max_imag:.3e}")]
    BrokenSymmetry { max_imag: f64 },

    #[error("matrix is not diagonalizable (eigenvector condition estimate {cond:.3e})")]
    NotDiagonalizable { cond: f64 },

    #[error("local state is not normalized (|u|^2 + |v|^2 = {norm})")]
    NotNormalized { norm: f64 },

    #[error("metric does not intertwine the Hamiltonian (residual {residual:.3e})")]
    MetricMismatch { residual: f64 },

    #[error("probability pair {name} is invalid: ({p:.6}, {q:.6})")]
    InvalidProbability { name: &'static str, p: f64, q: f64 },

    #[error("basis columns are not orthonormal (residual {residual:.3e})")]
    NonOrthonormalBasis { residual: f64 },

    #[error("perturbation is off the constraint manifold: {detail}")]
    ConstraintViolated { detail: String },

    #[error("dimension {n} is not supported by {op}")]
    UnsupportedDimension { n: usize, op: &'static str },

    #[error("internal consistency check failed in {context} (disagreement {residual:.3e})")]
    InternalInconsistency { context: &'static str, residual: f64 },
}

impl Error {
    /// True for failures of internal consistency (dual-path disagreement)
    /// as opposed to input validation.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InternalInconsistency { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn messages_name_the_failing_invariant() {
        let e = Error::ExceptionalPoint { cos_alpha: 5e-10 };
        assert!(e.to_string().contains("exceptional point"));
        let e = Error::NotHermitian { residual: 1e-3 };
        assert!(e.to_string().contains("Hermitian"));
    }

    #[test]
    fn internal_flag_separates_exit_classes() {
        assert!(Error::InternalInconsistency { context: "x", residual: 1.0 }.is_internal());
        assert!(!Error::SingularMatrix { det: 0.0 }.is_internal());
    }
}
