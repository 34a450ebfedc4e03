//! The restricted Jantzen sum formula, the subgeneric filtration, and
//! drivers comparing both with the oracle.

use num_traits::Zero;
use serde::Serialize;

use crate::charbox::{
    alternating_down_sum, ch_restricted_verma, ch_simple_subgeneric, partition_character_at, Character,
    PartitionKind, PartitionTable,
};
use crate::exactalg::{det_exact, Valuation};
use crate::oracle::{oracle_jantzen_sum, VermaLattice};
use crate::rootdata::{Deformation, FiniteRootSystem};
use crate::scalar::fmt_rat;
use crate::shapodet::{ord_from_factors, shapovalov_factors_with, specialized_product};
use crate::weylcalc::{
    down, integral_roots, is_critical, linkage_orbit, rho_pairing, weight_at, BoxCoords, Classification, WeightBox,
};
use crate::{Error, Result, Weight};

fn require_critical(sys: &FiniteRootSystem, lambda: &Weight) -> Result<()> {
    if is_critical(sys, lambda) {
        Ok(())
    } else {
        Err(Error::NotCritical { crit: fmt_rat(&sys.critical_level()) })
    }
}

/// `Σ_{α∈R(λ)⁺} Σ_{i>0} (ch Δ̄(α↓^{2i−1}λ) − ch Δ̄(α↓^{2i}λ))` on the box.
pub fn sum_formula_rhs(sys: &FiniteRootSystem, lambda: &Weight, bx: WeightBox) -> Result<Character> {
    require_critical(sys, lambda)?;
    let table = PartitionTable::new(sys, PartitionKind::RealOnly, bx);
    let mut total = Character::zero(lambda.clone(), bx);
    for alpha in integral_roots(sys, lambda).positive {
        if rho_pairing(sys, lambda, &alpha).is_zero() {
            continue;
        }
        let chain = alternating_down_sum(sys, &table, &alpha, lambda, 1, lambda, bx)?;
        total = total.add(&chain)?;
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumFormulaRow {
    pub mu: Weight,
    #[serde(skip)]
    pub nu: BoxCoords,
    /// Oracle value, absent when the series has no oracle.
    pub lhs: Option<i64>,
    pub rhs: i64,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumFormulaReport {
    pub lambda: Weight,
    #[serde(rename = "box")]
    pub bx: WeightBox,
    pub rows: Vec<SumFormulaRow>,
    pub verified: bool,
    pub verdict: bool,
}

/// Compares the oracle's `Σ_{i>0} ch Δ̄(λ)ⁱ` with [`sum_formula_rhs`] at every
/// weight of the box.
pub fn verify_sum_formula(sys: &FiniteRootSystem, lambda: &Weight, bx: WeightBox) -> Result<SumFormulaReport> {
    let rhs = sum_formula_rhs(sys, lambda, bx)?;
    let lhs = match oracle_jantzen_sum(sys, lambda, bx, true) {
        Ok(ch) => Some(ch),
        Err(Error::UnsupportedSeries(_)) => None,
        Err(e) => return Err(e),
    };
    let rows: Vec<SumFormulaRow> = bx
        .coords(sys.rank())
        .into_iter()
        .map(|nu| {
            let r = rhs.coefficient(&nu).expect("in box");
            let l = lhs.as_ref().map(|ch| ch.coefficient(&nu).expect("in box"));
            SumFormulaRow { mu: weight_at(sys, lambda, &nu), nu, lhs: l, rhs: r, matches: l == Some(r) }
        })
        .collect();
    let verified = lhs.is_some();
    let verdict = verified && rows.iter().all(|r| r.matches);
    Ok(SumFormulaReport { lambda: lambda.clone(), bx, rows, verified, verdict })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FiltrationKind {
    Generic,
    Subgeneric,
}

/// Characters of the layers `Δ̄(λ)ⁱ / Δ̄(λ)ⁱ⁺¹`, all with base `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationDescriptor {
    pub kind: FiltrationKind,
    pub layers: Vec<Character>,
}

impl FiltrationDescriptor {
    /// Layer `i`, zero beyond the last stored layer.
    pub fn layer(&self, i: usize) -> Character {
        self.layers.get(i).cloned().unwrap_or_else(|| {
            let first = &self.layers[0];
            Character::zero(first.base().clone(), first.bx())
        })
    }
}

/// The filtration `Δ̄(λ) ⊃ L(α↓λ) ⊃ 0` for subgeneric `λ`; a single layer
/// for generic `λ`, where `Δ̄(λ)` is simple.
pub fn subgeneric_filtration(sys: &FiniteRootSystem, lambda: &Weight, bx: WeightBox) -> Result<FiltrationDescriptor> {
    require_critical(sys, lambda)?;
    match integral_roots(sys, lambda).classification {
        Classification::Generic => Ok(FiltrationDescriptor {
            kind: FiltrationKind::Generic,
            layers: vec![ch_restricted_verma(sys, lambda, bx)?],
        }),
        Classification::Subgeneric(alpha) => {
            let low = down(sys, &alpha, lambda)?;
            let bottom = ch_simple_subgeneric(sys, &low, bx)?.rebased(sys, lambda, bx)?;
            let top = ch_restricted_verma(sys, lambda, bx)?.sub(&bottom)?;
            let rhs = sum_formula_rhs(sys, lambda, bx)?;
            if rhs != bottom {
                return Err(Error::Inconsistent("first layer differs from the sum formula".into()));
            }
            Ok(FiltrationDescriptor { kind: FiltrationKind::Subgeneric, layers: vec![top, bottom] })
        }
        Classification::General => Err(Error::NotSubgeneric),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ShapovalovStatus {
    /// Oracle determinant is a nonzero constant multiple of the product.
    Constant(String),
    /// Both vanish identically; allowed only for imaginary factors along `ρ̄`
    /// at the critical level.
    BothZero,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapovalovRow {
    pub eta: BoxCoords,
    pub oracle: String,
    pub formula: String,
    pub status: ShapovalovStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapovalovReport {
    pub lambda: Weight,
    pub direction: Deformation,
    pub rows: Vec<ShapovalovRow>,
    pub verdict: bool,
}

/// Oracle Gram determinants along `λ + t·dir` against the specialized
/// product formula, for every `η` in the box.
pub fn verify_shapovalov(
    sys: &FiniteRootSystem,
    lambda: &Weight,
    bx: WeightBox,
    dir: Deformation,
) -> Result<ShapovalovReport> {
    let mut lattice = VermaLattice::new(sys, lambda, dir)?;
    let table = PartitionTable::new(sys, PartitionKind::Full, bx);
    let degenerate_allowed = dir == Deformation::RhoBar && is_critical(sys, lambda);
    let mut rows = Vec::new();
    for eta in bx.coords(sys.rank()) {
        let fac = shapovalov_factors_with(sys, &table, &eta);
        let formula = specialized_product(sys, &fac, lambda, dir);
        let oracle = det_exact(&lattice.gram_matrix(&eta))?;
        let status = match (oracle.is_zero(), formula.is_zero()) {
            (true, true) => {
                let imaginary_zero = fac
                    .factors
                    .iter()
                    .any(|f| !f.beta.is_real() && crate::shapodet::specialize(sys, f, lambda, dir).is_zero());
                if degenerate_allowed && imaginary_zero {
                    ShapovalovStatus::BothZero
                } else {
                    ShapovalovStatus::Mismatch
                }
            }
            (false, false) => {
                let (q, r) = oracle.div_rem(&formula);
                if r.is_zero() && q.degree() == Some(0) {
                    ShapovalovStatus::Constant(fmt_rat(&q.constant_term()))
                } else {
                    ShapovalovStatus::Mismatch
                }
            }
            _ => ShapovalovStatus::Mismatch,
        };
        rows.push(ShapovalovRow { eta, oracle: oracle.to_string(), formula: formula.to_string(), status });
    }
    let verdict = rows.iter().all(|r| r.status != ShapovalovStatus::Mismatch);
    Ok(ShapovalovReport { lambda: lambda.clone(), direction: dir, rows, verdict })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkageTerm {
    pub mu: Weight,
    #[serde(skip)]
    pub nu: BoxCoords,
    pub multiplicity: i64,
    pub in_orbit: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkageReport {
    pub lambda: Weight,
    #[serde(rename = "box")]
    pub bx: WeightBox,
    /// `Σ_{i>0} ch Δ̄(λ)ⁱ = Σ c_μ ch Δ̄(μ)` inside the box.
    pub verma_terms: Vec<LinkageTerm>,
    /// `Σ_{i>0} ch Δ̄(λ)ⁱ = Σ m_μ ch L(μ)`, when every peeled weight is
    /// generic or subgeneric.
    pub simple_terms: Option<Vec<LinkageTerm>>,
    /// Whether every weight of the character itself lies in the orbit.
    pub support_in_orbit: bool,
    pub violations: Vec<Weight>,
    pub verdict: bool,
}

/// Peels characters off the highest remaining weight until nothing is
/// left; `basic(μ)` must have coefficient 1 at `μ`.
fn peel(
    sys: &FiniteRootSystem,
    ch: &Character,
    mut basic: impl FnMut(&Weight) -> Result<Character>,
) -> Result<Vec<(BoxCoords, i64)>> {
    let lambda = ch.base().clone();
    let mut rest = ch.clone();
    let mut out = Vec::new();
    loop {
        let next = rest.entries().next().map(|(n, c)| (n.clone(), c));
        let Some((nu, c)) = next else { break };
        let mu = weight_at(sys, &lambda, &nu);
        let b = basic(&mu)?.rebased(sys, &lambda, ch.bx())?;
        if b.coefficient(&nu)? != 1 {
            return Err(Error::Inconsistent(format!("character at {mu} is not unitriangular")));
        }
        let scaled = Character::from_fn(lambda.clone(), ch.bx(), |x| c * b.coefficient(x).unwrap_or(0));
        rest = rest.sub(&scaled)?;
        out.push((nu, c));
    }
    Ok(out)
}

/// Checks that every composition factor of `Σ_{i>0} Δ̄(λ)ⁱ` visible in the
/// box has highest weight in `Ŵ(λ)·λ` below `λ`.
pub fn linkage_check(sys: &FiniteRootSystem, lambda: &Weight, bx: WeightBox) -> Result<LinkageReport> {
    let orbit = linkage_orbit(sys, lambda, &bx)?;
    let rhs = sum_formula_rhs(sys, lambda, bx)?;
    let table = PartitionTable::new(sys, PartitionKind::RealOnly, bx);
    let term = |(nu, m): (BoxCoords, i64)| LinkageTerm {
        mu: weight_at(sys, lambda, &nu),
        in_orbit: orbit.contains_coords(&nu),
        nu,
        multiplicity: m,
    };
    let verma_terms: Vec<LinkageTerm> = peel(sys, &rhs, |mu| partition_character_at(sys, &table, mu, mu, bx))?
        .into_iter()
        .map(term)
        .collect();
    let simple_terms = match peel(sys, &rhs, |mu| ch_simple_subgeneric(sys, mu, bx)) {
        Ok(v) => Some(v.into_iter().map(term).collect::<Vec<_>>()),
        Err(Error::General) => None,
        Err(e) => return Err(e),
    };
    let support_in_orbit = rhs.entries().all(|(nu, _)| orbit.contains_coords(nu));
    let mut violations: Vec<Weight> = verma_terms.iter().filter(|t| !t.in_orbit).map(|t| t.mu.clone()).collect();
    if let Some(simple) = &simple_terms {
        violations.extend(simple.iter().filter(|t| !t.in_orbit || t.multiplicity < 0).map(|t| t.mu.clone()));
    }
    let verdict = violations.is_empty();
    Ok(LinkageReport { lambda: lambda.clone(), bx, verma_terms, simple_terms, support_in_orbit, violations, verdict })
}

/// `ord_t` of the restricted Gram determinant at `μ = α↓λ` next to the
/// Shapovalov profile along `ρ`, and the real-factor profile along `ρ̄`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrdComparison {
    pub mu: Weight,
    pub restricted_oracle: u32,
    pub rho_profile: Valuation,
    pub rho_bar_real_profile: Valuation,
}

pub fn compare_ords_at_down(sys: &FiniteRootSystem, lambda: &Weight, bx: WeightBox) -> Result<OrdComparison> {
    let Classification::Subgeneric(alpha) = integral_roots(sys, lambda).classification else {
        return Err(Error::NotSubgeneric);
    };
    let mu = down(sys, &alpha, lambda)?;
    let nu = crate::weylcalc::leq(sys, &mu, lambda).ok_or(Error::NotBelow)?;
    if !bx.contains(&nu) {
        return Err(Error::OutOfBox);
    }
    let oracle = oracle_jantzen_sum(sys, lambda, bx, true)?;
    let table = PartitionTable::new(sys, PartitionKind::Full, bx);
    let fac = shapovalov_factors_with(sys, &table, &nu);
    Ok(OrdComparison {
        mu,
        restricted_oracle: u32::try_from(oracle.coefficient(&nu)?).expect("nonnegative"),
        rho_profile: ord_from_factors(sys, &fac, lambda, Deformation::Rho),
        rho_bar_real_profile: crate::shapodet::real_ord_from_factors(sys, &fac, lambda, Deformation::RhoBar),
    })
}

/// The oracle's `ord_t` next to the real-factor profile along `ρ̄` at every
/// weight of the box; reported, not asserted.
pub fn real_factor_comparison(
    sys: &FiniteRootSystem,
    lambda: &Weight,
    bx: WeightBox,
) -> Result<Vec<(BoxCoords, i64, Valuation)>> {
    let oracle = oracle_jantzen_sum(sys, lambda, bx, true)?;
    let table = PartitionTable::new(sys, PartitionKind::Full, bx);
    Ok(bx
        .coords(sys.rank())
        .into_iter()
        .map(|nu| {
            let fac = shapovalov_factors_with(sys, &table, &nu);
            let real = crate::shapodet::real_ord_from_factors(sys, &fac, lambda, Deformation::RhoBar);
            let lhs = oracle.coefficient(&nu).expect("in box");
            (nu, lhs, real)
        })
        .collect())
}
