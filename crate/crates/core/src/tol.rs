use crate::scalar::Scalar;

/// Central record of every numerical tolerance used by the crate.
///
/// All validation and consistency thresholds live here so a single scale
/// factor (for example from the `DILATION_LAB_TOLERANCE_SCALE` environment
/// variable, applied by the CLI) can loosen or tighten the whole pipeline
/// coherently. Defaults are the reference values for `f64` runs.
#[derive(Clone, Debug, PartialEq)]
pub struct Tolerances<T> {
    /// Max-norm deviation `‖M − M†‖_max` accepted as Hermitian.
    pub hermiticity: T,
    /// Per-column eigenpair residual `‖M v − λ v‖` after decomposition.
    pub eig_residual: T,
    /// Orthonormality residual of eigenvector or basis columns.
    pub orthonormality: T,
    /// Eigenvalue gap below which a block counts as degenerate and is
    /// re-orthonormalized in index order.
    pub degenerate_gap: T,
    /// Jacobi sweep convergence: off-diagonal Frobenius norm relative to
    /// `max(1, ‖A‖_F)` of the input.
    pub jacobi_off: T,
    /// `|det|` floor below which a 2×2 matrix counts as singular.
    pub singular_det: T,
    /// Minimum eigenvalue accepted for a positive-definite square root.
    pub positive_definite: T,
    /// `|cos α|` floor excluding the exceptional point.
    pub exceptional: T,
    /// `|s|` floor below which the spectrum is flagged as degenerate
    /// (warning-level, not an error).
    pub degenerate_s: T,
    /// Local-state normalization residual `| |u|²+|v|² − 1 |`.
    pub state_norm: T,
    /// Intertwining residual of the metric condition, relative to
    /// `max(1, ‖H‖_F)`.
    pub intertwining: T,
    /// Intertwining residual beyond which a (H, τ) pair is rejected when
    /// building a dilation, and the bound guaranteed by the general metric
    /// constructor.
    pub metric_mismatch: T,
    /// Imaginary part accepted on eigenvalues that must be real.
    pub eig_imag: T,
    /// Condition-number ceiling for eigenvector matrices; beyond it the
    /// input counts as non-diagonalizable.
    pub cond_limit: T,
    /// Residual of the defining block identities of a dilation.
    pub block_identity: T,
    /// Disagreement between the trace path and the closed-form path of a
    /// picture value that raises an internal-inconsistency error.
    pub dual_path: T,
    /// Imaginary residual accepted on analytically real quantities
    /// (correlators, spectral square roots, coefficient identities).
    pub imag_residual: T,
    /// Probability pair sum residual `|p₊ + p₋ − 1|`.
    pub probability: T,
    /// Residual accepted when checking a perturbation against the
    /// same-eigenvalue constraint manifold.
    pub constraint: T,
    /// Classification threshold on energy shift and bound gap, applied
    /// scaled by `max(1, |E₀|, |s|)`.
    pub classify: T,
    /// Post-selection residual limit for time evolution.
    pub evolve: T,
    /// Slack added to deviation bounds in `|deviation| ≤ bound + slack`.
    pub bound_slack: T,
}

impl<T: Scalar> Default for Tolerances<T> {
    fn default() -> Self {
        Tolerances {
            hermiticity: T::of(1e-10),
            eig_residual: T::of(1e-10),
            orthonormality: T::of(1e-12),
            degenerate_gap: T::of(1e-10),
            jacobi_off: T::of(1e-13),
            singular_det: T::of(1e-12),
            positive_definite: T::of(1e-12),
            exceptional: T::of(1e-9),
            degenerate_s: T::of(1e-12),
            state_norm: T::of(1e-12),
            intertwining: T::of(1e-10),
            metric_mismatch: T::of(1e-8),
            eig_imag: T::of(1e-8),
            cond_limit: T::of(1e8),
            block_identity: T::of(1e-9),
            dual_path: T::of(1e-8),
            imag_residual: T::of(1e-10),
            probability: T::of(1e-10),
            constraint: T::of(1e-9),
            classify: T::of(1e-9),
            evolve: T::of(1e-8),
            bound_slack: T::of(1e-9),
        }
    }
}

impl<T: Scalar> Tolerances<T> {
    /// Returns a copy with every threshold multiplied by `factor`.
    ///
    /// `factor > 1` loosens all checks uniformly, `factor < 1` tightens
    /// them. Panics if `factor` is not strictly positive.
    pub fn scaled(&self, factor: T) -> Self {
        assert!(
            factor > T::zero() && factor.is_finite(),
            "tolerance scale must be finite and positive"
        );
        Tolerances {
            hermiticity: self.hermiticity * factor,
            eig_residual: self.eig_residual * factor,
            orthonormality: self.orthonormality * factor,
            degenerate_gap: self.degenerate_gap * factor,
            jacobi_off: self.jacobi_off * factor,
            singular_det: self.singular_det * factor,
            positive_definite: self.positive_definite * factor,
            exceptional: self.exceptional * factor,
            degenerate_s: self.degenerate_s * factor,
            state_norm: self.state_norm * factor,
            intertwining: self.intertwining * factor,
            metric_mismatch: self.metric_mismatch * factor,
            eig_imag: self.eig_imag * factor,
            cond_limit: self.cond_limit * factor,
            block_identity: self.block_identity * factor,
            dual_path: self.dual_path * factor,
            imag_residual: self.imag_residual * factor,
            probability: self.probability * factor,
            constraint: self.constraint * factor,
            classify: self.classify * factor,
            evolve: self.evolve * factor,
            bound_slack: self.bound_slack * factor,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_reference_values() {
        let tol = Tolerances::<f64>::default();
        assert_eq!(tol.hermiticity, 1e-10);
        assert_eq!(tol.jacobi_off, 1e-13);
        assert_eq!(tol.exceptional, 1e-9);
        assert_eq!(tol.dual_path, 1e-8);
    }

    #[test]
    fn scaling_is_uniform() {
        let tol = Tolerances::<f64>::default().scaled(10.0);
        assert_eq!(tol.hermiticity, 1e-9);
        assert_eq!(tol.cond_limit, 1e9);
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn rejects_nonpositive_scale() {
        let _ = Tolerances::<f64>::default().scaled(0.0);
    }
}
