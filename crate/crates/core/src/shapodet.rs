//! Factorization of the Shapovalov determinant and its `ord_t` profiles
//! along the lines `λ + tρ` and `λ + tρ̄`.

use num_traits::One;
use serde::{Serialize, Serializer};

use crate::charbox::{PartitionKind, PartitionTable};
use crate::exactalg::{ord_t, Valuation};
use crate::rootdata::{AffineRoot, AffineWeight, Deformation, FiniteRootSystem};
use crate::weylcalc::{leq, BoxCoords, WeightBox};
use crate::{Error, PolyT, Rat, Result, Weight};

/// `(h_β + ρ(h_β) − n(β|β)/2)^exponent`, stored by `β` and `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DetFactor {
    pub beta: AffineRoot,
    pub n: u32,
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetFactorization {
    pub eta: BoxCoords,
    pub factors: Vec<DetFactor>,
}

impl Serialize for DetFactorization {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        self.factors.serialize(s)
    }
}

impl DetFactorization {
    /// Sum of all exponents, the `t`-degree of the product along `λ + tρ`.
    pub fn total_exponent(&self) -> u64 {
        self.factors.iter().map(|f| f.exponent).sum()
    }
}

/// Factors `(β, n)` with `mult(β)·𝒫(η − nβ) > 0`.
pub fn shapovalov_factors(sys: &FiniteRootSystem, eta: &BoxCoords) -> DetFactorization {
    let table = PartitionTable::new(sys, PartitionKind::Full, WeightBox::new(eta.c0, eta.height()));
    shapovalov_factors_with(sys, &table, eta)
}

/// As [`shapovalov_factors`] with a precomputed table covering `η`.
pub fn shapovalov_factors_with(sys: &FiniteRootSystem, table: &PartitionTable, eta: &BoxCoords) -> DetFactorization {
    let mut factors = Vec::new();
    for beta in sys.positive_affine_roots(eta.c0) {
        let Some(b) = BoxCoords::of_root(sys, &beta) else { continue };
        let mult = sys.mult(&beta) as u64;
        let mut n = 1u32;
        while let Some(rest) = eta.checked_sub(&b.times(n)) {
            let p = table.get(&rest).expect("table covers η");
            if p > 0 {
                factors.push(DetFactor { beta: beta.clone(), n, exponent: mult * p });
            }
            n += 1;
        }
    }
    DetFactorization { eta: eta.clone(), factors }
}

/// `(λ + ρ + t·dir | β) − n(β|β)/2`.
pub fn specialize(sys: &FiniteRootSystem, f: &DetFactor, lambda: &Weight, dir: Deformation) -> PolyT {
    let shifted = AffineWeight::deform(&(lambda + &sys.rho()), &sys.direction(dir));
    let beta = sys.root_weight::<PolyT>(&f.beta);
    let shift = sys.affine_root_norm(&f.beta) * Rat::from_integer(f.n.into()) / Rat::from_integer(2.into());
    sys.bilinear(&shifted, &beta) - PolyT::constant(shift)
}

/// The product of all specialized factors.
pub fn specialized_product(sys: &FiniteRootSystem, fac: &DetFactorization, lambda: &Weight, dir: Deformation) -> PolyT {
    let mut out = PolyT::one();
    for f in &fac.factors {
        let p = specialize(sys, f, lambda, dir);
        for _ in 0..f.exponent {
            out = &out * &p;
        }
    }
    out
}

/// `ord_t D_{λ+t·dir}(μ+t·dir)` from the factorization; infinite when some
/// factor with positive exponent vanishes identically.
pub fn ord_profile(sys: &FiniteRootSystem, lambda: &Weight, mu: &Weight, dir: Deformation) -> Result<Valuation> {
    let eta = leq(sys, mu, lambda).ok_or(Error::NotBelow)?;
    let fac = shapovalov_factors(sys, &eta);
    Ok(ord_from_factors(sys, &fac, lambda, dir))
}

pub fn ord_from_factors(sys: &FiniteRootSystem, fac: &DetFactorization, lambda: &Weight, dir: Deformation) -> Valuation {
    fac.factors
        .iter()
        .map(|f| match ord_t(&specialize(sys, f, lambda, dir)) {
            Valuation::Finite(k) => Valuation::Finite(k * u32::try_from(f.exponent).expect("exponent fits")),
            Valuation::Infinite => Valuation::Infinite,
        })
        .sum()
}

/// Real factors only: the part of the profile that survives along `ρ̄`.
pub fn real_ord_from_factors(
    sys: &FiniteRootSystem,
    fac: &DetFactorization,
    lambda: &Weight,
    dir: Deformation,
) -> Valuation {
    let real = DetFactorization { eta: fac.eta.clone(), factors: fac.factors.iter().filter(|f| f.beta.is_real()).cloned().collect() };
    ord_from_factors(sys, &real, lambda, dir)
}
