//! Brute-force ground truth from the enveloping algebra of `sl_{l+1}`.

pub mod algebra;
pub mod restricted;
pub mod verma;

pub use algebra::{Gen, Kind, LoopAlgebra, LoopElement};
pub use restricted::{restricted_lattice, RestrictedLattice, RestrictedSpace};
pub use verma::{Monomial, VermaLattice, VermaVector};

use crate::charbox::Character;
use crate::exactalg::{ord_det, Valuation};
use crate::rootdata::{Deformation, FiniteRootSystem};
use crate::weylcalc::{is_critical, WeightBox};
use crate::{Error, Result, Weight};

/// `Σ_{i>0} ch Δ̄(λ)ⁱ` (or `Σ ch Δ(λ)ⁱ` when `restricted` is false) from
/// `ord_t` of Gram determinants: along `λ + tρ̄` on the restricted quotient,
/// along `λ + tρ` on the full Verma module.
pub fn oracle_jantzen_sum(sys: &FiniteRootSystem, lambda: &Weight, bx: WeightBox, restricted: bool) -> Result<Character> {
    if restricted {
        if !is_critical(sys, lambda) {
            return Err(Error::NotCritical { crit: crate::scalar::fmt_rat(&sys.critical_level()) });
        }
        let mut v = VermaLattice::new(sys, lambda, Deformation::RhoBar)?;
        let r = restricted_lattice(&mut v, bx)?;
        Ok(Character::from_fn(lambda.clone(), bx, |nu| i64::from(r.spaces[nu].ord)))
    } else {
        let mut v = VermaLattice::new(sys, lambda, Deformation::Rho)?;
        let mut err = None;
        let ch = Character::from_fn(lambda.clone(), bx, |nu| match ord_det(&v.gram_matrix(nu)) {
            Ok(Valuation::Finite(k)) => i64::from(k),
            Ok(Valuation::Infinite) => {
                err.get_or_insert(Error::InfiniteOrder(nu.to_string()));
                0
            }
            Err(e) => {
                err.get_or_insert(e);
                0
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(ch),
        }
    }
}
