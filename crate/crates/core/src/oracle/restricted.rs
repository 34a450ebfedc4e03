//! Restricted quotients `Δ̄ = Δ / Δ⁻` of deformed Verma lattices and the
//! forms they inherit.

use std::collections::BTreeMap;

use super::verma::VermaLattice;
use crate::exactalg::{complement_gram_ord, rank, rref, saturate_at_t, Matrix, Valuation};
use crate::rootdata::{AffineRoot, Deformation};
use crate::weylcalc::{is_critical, BoxCoords, WeightBox};
use crate::{Error, LocalMatrix, PolyT, Result, Weight};

/// One weight space of `Δ̄_{ℚ[t]}(λ + tρ̄)`.
#[derive(Clone, Debug)]
pub struct RestrictedSpace {
    pub nu: BoxCoords,
    /// `dim Δ(λ)_{λ−ν}`.
    pub dim: usize,
    /// Saturated basis of `Δ⁻ ∩ Δ_{λ−ν}`.
    pub sub: LocalMatrix,
    /// Whether the translates of singular vectors already spanned a
    /// saturated lattice.
    pub span_saturated: bool,
    pub quotient_dim: usize,
    pub gram: LocalMatrix,
    /// Rank of the Gram matrix over `ℚ(t)`.
    pub gram_rank: usize,
    /// `ord_t` of the determinant of the induced form on the quotient.
    pub ord: u32,
}

#[derive(Clone, Debug)]
pub struct RestrictedLattice {
    pub lambda: Weight,
    pub bx: WeightBox,
    /// Number of independent singular vectors at `λ − nδ`, `n = 1..=dmax`.
    pub singular_counts: Vec<usize>,
    pub spaces: BTreeMap<BoxCoords, RestrictedSpace>,
}

/// Builds the quotient weight spaces in the box. Only the line `λ + tρ̄`
/// stays at the critical level, so other deformations are rejected.
pub fn restricted_lattice(lattice: &mut VermaLattice, bx: WeightBox) -> Result<RestrictedLattice> {
    if lattice.direction() != Deformation::RhoBar {
        return Err(Error::DeformationNotRestricted);
    }
    let sys = lattice.system().clone();
    let lambda = lattice.lambda().clone();
    let critical = is_critical(&sys, &lambda);
    let delta = BoxCoords::of_root(&sys, &AffineRoot::imaginary(1)).unwrap();
    let mut singular = Vec::new();
    for n in 1..=bx.dmax {
        if critical && bx.contains(&delta.times(n)) {
            let coords = lattice.singular_vectors(n);
            let vecs: Vec<_> = coords.iter().map(|c| lattice.vector(&delta.times(n), c)).collect();
            singular.push(vecs);
        } else {
            singular.push(Vec::new());
        }
    }
    let mut spaces = BTreeMap::new();
    for nu in bx.coords(sys.rank()) {
        let dim = lattice.dim(&nu);
        let mut raw: Vec<Vec<PolyT>> = Vec::new();
        for (k, vecs) in singular.iter().enumerate() {
            let n = k as u32 + 1;
            let Some(below) = nu.checked_sub(&delta.times(n)) else { continue };
            for m in lattice.basis(&below) {
                for s in vecs {
                    let img = lattice.apply_monomial(&m, s);
                    raw.push(lattice.coordinates(&nu, &img));
                }
            }
        }
        let raw = Matrix::with_cols(raw, dim);
        let sub = saturate_at_t(&raw, dim);
        let (_, piv) = rref(raw.eval_at_zero().to_rows(), dim);
        let span_saturated = piv.len() == sub.rows();
        let gram = lattice.gram_matrix(&nu);
        let gram_rank = rank(&gram);
        let ord = match complement_gram_ord(&gram, &sub)? {
            Valuation::Finite(k) => k,
            Valuation::Infinite => return Err(Error::InfiniteOrder(nu.to_string())),
        };
        spaces.insert(
            nu.clone(),
            RestrictedSpace { nu, dim, quotient_dim: dim - sub.rows(), sub, span_saturated, gram, gram_rank, ord },
        );
    }
    Ok(RestrictedLattice { lambda, bx, singular_counts: singular.iter().map(Vec::len).collect(), spaces })
}
