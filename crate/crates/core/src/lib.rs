//! Exact computations around the restricted Jantzen filtration of Verma
//! modules over untwisted affine Kac-Moody algebras at the critical level.
//!
//! The crate is split along the computational layers:
//!
//! * [`exactalg`] polynomials in `t`, fraction-free determinants, kernels and
//!   saturation over the local ring at `(t)`.
//! * [`rootdata`] finite root systems from Cartan data, affine weights and
//!   roots, and the normalized invariant form.
//! * [`weylcalc`] dot action, the ordering on weights, integral roots, the
//!   `↓` operator and truncated linkage classes.
//! * [`charbox`] Kostant partition functions and truncated characters.
//! * [`shapodet`] the Shapovalov determinant as a product of linear factors.
//! * [`oracle`] a brute-force model of the affine algebra of type `A_l`
//!   acting on deformed Verma modules, used as independent ground truth.
//! * [`jantzen`] the sum formula and the drivers that compare it with the
//!   oracle.
//!
//! Scalars are generic where the math allows it (see [`Scalar`]); the
//! aliases below fix the exact rational instantiation used throughout.

pub mod charbox;
pub mod error;
pub mod exactalg;
pub mod jantzen;
pub mod oracle;
pub mod rootdata;
pub mod scalar;
pub mod shapodet;
pub mod weylcalc;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary precision rational number.
pub type Rat = num_rational::BigRational;
/// Univariate polynomial in `t` over the rationals.
pub type PolyT = exactalg::Poly<Rat>;
/// Matrix of polynomials, read as a matrix over the local ring at `(t)`.
pub type LocalMatrix = exactalg::Matrix<PolyT>;
/// Undeformed weight with rational coordinates.
pub type Weight = rootdata::AffineWeight<Rat>;
/// Weight deformed along a line, `λ + t·dir`.
pub type DeformedWeight = rootdata::AffineWeight<PolyT>;
/// Floating point weight, for quick numerical inspection only.
pub type WeightF64 = rootdata::AffineWeight<f64>;
