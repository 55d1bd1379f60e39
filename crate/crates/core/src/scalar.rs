use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, NumAssign};

/// Real scalar underlying every matrix, spectral, and picture computation.
///
/// The crate is generic over this trait so the whole pipeline runs at `f32`
/// or `f64`; the blanket impl covers both. Tolerance defaults are stated as
/// `f64` literals and cast through [`Scalar::of`], so `f64` is the reference
/// precision (see the aliases at the crate root).
pub trait Scalar:
    Float + FloatConst + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Casts an `f64` literal into the scalar type.
    ///
    /// Panics if the value is not representable, which cannot happen for the
    /// finite literals used internally.
    fn of(x: f64) -> Self {
        Self::from(x).expect("finite f64 literal must be representable")
    }

    /// Widens to `f64` for error diagnostics and reporting.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where
    T: Float + FloatConst + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
}

/// Complex number over the crate scalar.
pub type C<T> = Complex<T>;

/// Shorthand for a purely real complex value.
pub fn re<T: Scalar>(x: T) -> C<T> {
    Complex::new(x, T::zero())
}

/// Shorthand for a purely imaginary complex value.
pub fn im<T: Scalar>(x: T) -> C<T> {
    Complex::new(T::zero(), x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn casts_round_trip() {
        assert_eq!(f64::of(0.25), 0.25);
        assert_eq!(f32::of(0.25), 0.25_f32);
        assert_eq!(0.25_f64.as_f64(), 0.25);
    }

    #[test]
    fn re_im_place_components() {
        let z = re(2.0) + im(3.0);
        assert_eq!(z, Complex::new(2.0, 3.0));
    }
}
