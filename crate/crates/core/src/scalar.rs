//! Scalar traits. Geometry is generic over [`Real`] (`f32`, `f64`); exact
//! polynomial arithmetic is generic over a [`Coefficient`] ring (`i64`,
//! `BigInt`).

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, Num, Signed};

pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    fn of(x: f64) -> Self;

    fn to_f64_lossy(self) -> f64;
}

impl Real for f32 {
    fn of(x: f64) -> Self {
        x as f32
    }

    fn to_f64_lossy(self) -> f64 {
        self as f64
    }
}

impl Real for f64 {
    fn of(x: f64) -> Self {
        x
    }

    fn to_f64_lossy(self) -> f64 {
        self
    }
}

/// An integral domain with exact division where the quotient exists.
pub trait Coefficient: Num + Signed + FromPrimitive + Clone + Debug + Display + Send + Sync {}

impl<T> Coefficient for T where T: Num + Signed + FromPrimitive + Clone + Debug + Display + Send + Sync {}
