//! Scalar abstraction: all numerical kernels are generic over a floating
//! point type implementing [`Real`]. Concrete aliases for `f64` live at the
//! crate root.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating point scalar usable by every kernel in this crate (f32, f64).
pub trait Real:
    Float + FloatConst + NumAssign + FromPrimitive + Sum + Debug + Display + LowerExp + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float
        + FloatConst
        + NumAssign
        + FromPrimitive
        + Sum
        + Debug
        + Display
        + LowerExp
        + Send
        + Sync
        + 'static
{
}

/// Shorthand for the complex scalar over `T`.
pub type C<T> = Complex<T>;

/// Converts an `f64` literal into `T`. Panics only if `T` cannot represent
/// finite doubles, which no supported scalar does.
#[inline]
pub fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("scalar conversion")
}

/// `x + 0i`.
#[inline]
pub fn cr<T: Real>(x: T) -> C<T> {
    Complex::new(x, T::zero())
}

/// `0 + x i`.
#[inline]
pub fn ci<T: Real>(x: T) -> C<T> {
    Complex::new(T::zero(), x)
}

/// Pairwise (cascade) summation. Deterministic and far more accurate than a
/// running sum on long node lists; used by every quadrature loop so that
/// results are identical run to run regardless of evaluation strategy.
pub fn pairwise_sum<T: Real>(xs: &[T]) -> T {
    match xs.len() {
        0 => T::zero(),
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
        }
    }
}

/// Pairwise summation for complex values.
pub fn pairwise_sum_c<T: Real>(xs: &[C<T>]) -> C<T> {
    match xs.len() {
        0 => Complex::new(T::zero(), T::zero()),
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise_sum_c(&xs[..mid]) + pairwise_sum_c(&xs[mid..])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_matches_naive_on_smooth_data() {
        let xs: Vec<f64> = (0..1000).map(|k| (k as f64 * 0.1).sin()).collect();
        let naive: f64 = xs.iter().sum();
        assert!((pairwise_sum(&xs) - naive).abs() < 1e-9);
    }

    #[test]
    fn generic_over_f32() {
        let xs: Vec<f32> = vec![1.0, 2.0, 3.0, 4.0];
        assert_eq!(pairwise_sum(&xs), 10.0);
        let y: f32 = real(0.5);
        assert_eq!(y, 0.5);
    }
}
