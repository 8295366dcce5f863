//! Scalar abstraction: all numerics are generic over a floating-point type.

use num_complex::Complex;

/// Floating-point scalar the whole crate is generic over (`f32` or `f64`).
///
/// Natural units (hbar = c = 1) are the internal representation, so every
/// quantity is a bare scalar of this type.
pub trait Real:
    num_traits::Float
    + num_traits::FloatConst
    + num_traits::FromPrimitive
    + num_traits::NumAssign
    + std::fmt::Debug
    + std::fmt::Display
    + std::fmt::LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Shorthand for lossless-enough conversion from `f64` literals.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal not representable in scalar type")
    }

    /// 2*pi, the full turn used by the cylinder condition.
    fn two_pi() -> Self {
        Self::PI() + Self::PI()
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex value over the crate scalar.
pub type C<T> = Complex<T>;

/// Unit imaginary.
pub fn i<T: Real>() -> C<T> {
    Complex::new(T::zero(), T::one())
}

/// Real scalar lifted into the complex plane.
pub fn re<T: Real>(v: T) -> C<T> {
    Complex::new(v, T::zero())
}
