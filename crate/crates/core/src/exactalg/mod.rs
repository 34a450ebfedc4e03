//! Exact scalar and linear algebra over `F[t]`.
//!
//! Everything here is generic over a coefficient [`Field`]; the rest of the
//! crate instantiates it with [`Rat`](crate::Rat). Matrices over `F[t]` are
//! read as matrices over the local ring at `(t)` when saturation or
//! elementary divisors are involved: polynomials with nonzero constant term
//! count as units.

mod local;
mod matrix;
mod poly;

pub use local::{
    complement_gram_ord, complement_gram_ord_with, det_exact, is_saturated, kernel_basis,
    local_smith_ords, ord_det, rank, reduced_echelon, saturate_at_t,
};
pub use matrix::{left_null_vector, rref, Matrix};
pub use poly::{Field, Poly, Valuation};

/// Valuation of a polynomial at `t = 0`.
pub fn ord_t<F: Field>(p: &Poly<F>) -> Valuation {
    p.ord_t()
}
