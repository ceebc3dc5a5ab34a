//! Floating-point abstraction so the pipeline runs at f32 or f64.

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use rand::Rng;
use rand_distr::{Distribution, Gamma, StandardNormal, Uniform};

/// Scalar type the imaging core is generic over.
///
/// Implemented for `f32` and `f64`. Bundles the numeric traits the math needs
/// with the distribution draws the samplers need, so downstream code carries a
/// single bound.
pub trait Scalar:
    Float + FloatConst + NumAssign + FromPrimitive + rustfft::FftNum + std::fmt::Display
{
    /// One draw from N(0, 1).
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// One draw from Gamma(shape, scale) in shape–scale form.
    ///
    /// Parameters must already be validated (strictly positive and finite);
    /// the draw itself cannot fail.
    fn gamma_shape_scale<R: Rng + ?Sized>(rng: &mut R, shape: Self, scale: Self) -> Self;

    /// One draw from U[0, 1).
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

impl Scalar for f32 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    fn gamma_shape_scale<R: Rng + ?Sized>(rng: &mut R, shape: Self, scale: Self) -> Self {
        Gamma::new(shape, scale)
            .expect("gamma parameters validated by caller")
            .sample(rng)
    }

    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Uniform::new(0.0f32, 1.0)
            .expect("constant bounds")
            .sample(rng)
    }
}

impl Scalar for f64 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    fn gamma_shape_scale<R: Rng + ?Sized>(rng: &mut R, shape: Self, scale: Self) -> Self {
        Gamma::new(shape, scale)
            .expect("gamma parameters validated by caller")
            .sample(rng)
    }

    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Uniform::new(0.0f64, 1.0)
            .expect("constant bounds")
            .sample(rng)
    }
}

/// Convert an f64 constant into the working scalar type.
pub(crate) fn real<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("constant representable in scalar type")
}
