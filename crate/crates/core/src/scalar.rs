//! Coefficient rings for weights and forms.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::exactalg::{Field, Poly};
use crate::{Error, Rat, Result};

/// A commutative ring containing the rationals.
///
/// Weights, forms and coroot pairings are written once against this trait
/// and instantiated with [`Rat`] (exact), [`Poly<Rat>`](crate::PolyT)
/// (deformed along `t`) or floats.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rat(r: &Rat) -> Self;

    fn scale(&self, r: &Rat) -> Self {
        self.clone() * Self::from_rat(r)
    }
}

impl Scalar for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
}

impl Scalar for f64 {
    fn from_rat(r: &Rat) -> Self {
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    fn from_rat(r: &Rat) -> Self {
        f64::from_rat(r) as f32
    }
}

impl<F: Field + Scalar> Scalar for Poly<F> {
    fn from_rat(r: &Rat) -> Self {
        Poly::constant(F::from_rat(r))
    }

    fn scale(&self, r: &Rat) -> Self {
        self.scale_by(&F::from_rat(r))
    }
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

/// Integer value of `r`, if it is one and fits in an `i64`.
pub fn to_i64(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let r = Rat::from_str(s).map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))?;
    Ok(r)
}

/// Renders `p/q` in lowest terms, or `p` for integers.
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}
