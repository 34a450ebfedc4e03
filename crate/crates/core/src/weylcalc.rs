//! Dot action of the affine Weyl group, the ordering `≤`, integral roots,
//! the `↓`-operator and box-truncated lower sets and orbits.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::rootdata::{AffineRoot, AffineWeight, FiniteRootSystem, Root};
use crate::scalar::{int, to_i64};
use crate::{Error, Rat, Result, Scalar, Weight};

/// Coefficients of `ν = c0·(−θ+δ) + Σ cfin_i·α_i` over the affine simple
/// roots. Ordered lexicographically, `c0` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BoxCoords {
    pub c0: u32,
    pub cfin: Vec<u32>,
}

impl BoxCoords {
    pub fn new(c0: u32, cfin: Vec<u32>) -> Self {
        BoxCoords { c0, cfin }
    }

    pub fn zero(rank: usize) -> Self {
        BoxCoords { c0: 0, cfin: vec![0; rank] }
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.cfin.iter().all(|&c| c == 0)
    }

    /// Sum of the finite coefficients.
    pub fn height(&self) -> u32 {
        self.cfin.iter().sum()
    }

    pub fn checked_sub(&self, other: &BoxCoords) -> Option<BoxCoords> {
        Some(BoxCoords {
            c0: self.c0.checked_sub(other.c0)?,
            cfin: self.cfin.iter().zip(&other.cfin).map(|(a, b)| a.checked_sub(*b)).collect::<Option<_>>()?,
        })
    }

    pub fn add(&self, other: &BoxCoords) -> BoxCoords {
        BoxCoords { c0: self.c0 + other.c0, cfin: self.cfin.iter().zip(&other.cfin).map(|(a, b)| a + b).collect() }
    }

    pub fn times(&self, k: u32) -> BoxCoords {
        BoxCoords { c0: self.c0 * k, cfin: self.cfin.iter().map(|c| c * k).collect() }
    }

    /// `ν` as an element of `ĥ*` (level 0).
    pub fn to_weight(&self, sys: &FiniteRootSystem) -> Weight {
        let theta = sys.theta();
        let simple: Root =
            self.cfin.iter().zip(theta).map(|(&c, &t)| i64::from(c) - i64::from(self.c0) * t).collect();
        AffineWeight { finite: sys.root_to_fund(&simple), level: Rat::zero(), ddeg: int(i64::from(self.c0)) }
    }

    /// Coordinates of a positive affine root.
    pub fn of_root(sys: &FiniteRootSystem, beta: &AffineRoot) -> Option<BoxCoords> {
        let n = beta.delta_degree();
        let finite: Root = match beta {
            AffineRoot::Real { finite, .. } => finite.clone(),
            AffineRoot::Imaginary { .. } => vec![0; sys.rank()],
        };
        let c0 = u32::try_from(n).ok()?;
        let cfin = finite
            .iter()
            .zip(sys.theta())
            .map(|(&a, &t)| u32::try_from(a + n * t).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(BoxCoords { c0, cfin })
    }
}

impl fmt::Display for BoxCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fin: Vec<String> = self.cfin.iter().map(u32::to_string).collect();
        write!(f, "({}; {})", self.c0, fin.join(","))
    }
}

/// Truncation window `c0 ≤ dmax`, `Σ cfin ≤ hmax` below a base weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeightBox {
    pub dmax: u32,
    pub hmax: u32,
}

impl WeightBox {
    pub fn new(dmax: u32, hmax: u32) -> Self {
        WeightBox { dmax, hmax }
    }

    pub fn contains(&self, c: &BoxCoords) -> bool {
        c.c0 <= self.dmax && c.height() <= self.hmax
    }

    pub fn intersect(&self, other: &WeightBox) -> WeightBox {
        WeightBox { dmax: self.dmax.min(other.dmax), hmax: self.hmax.min(other.hmax) }
    }

    /// Every coordinate vector in the box, in `BoxCoords` order.
    pub fn coords(&self, rank: usize) -> Vec<BoxCoords> {
        fn fill(prefix: &mut Vec<u32>, left: u32, rank: usize, c0: u32, out: &mut Vec<BoxCoords>) {
            if prefix.len() == rank {
                out.push(BoxCoords { c0, cfin: prefix.clone() });
                return;
            }
            for c in 0..=left {
                prefix.push(c);
                fill(prefix, left - c, rank, c0, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        for c0 in 0..=self.dmax {
            fill(&mut Vec::new(), self.hmax, rank, c0, &mut out);
        }
        out.sort();
        out
    }
}

impl fmt::Display for WeightBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D={} H={}", self.dmax, self.hmax)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    Generic,
    Subgeneric(Root),
    General,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralData {
    /// `R(λ)`, in the order of `FiniteRootSystem::roots`.
    pub finite_integral: Vec<Root>,
    pub positive: Vec<Root>,
    pub classification: Classification,
}

/// Weights `base − ν` for a finite set of `ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSet {
    pub base: Weight,
    pub members: BTreeSet<BoxCoords>,
}

impl WeightSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains_coords(&self, c: &BoxCoords) -> bool {
        self.members.contains(c)
    }

    pub fn contains(&self, sys: &FiniteRootSystem, mu: &Weight) -> bool {
        leq(sys, mu, &self.base).is_some_and(|c| self.members.contains(&c))
    }

    pub fn weights(&self, sys: &FiniteRootSystem) -> Vec<Weight> {
        self.members.iter().map(|c| weight_at(sys, &self.base, c)).collect()
    }
}

/// Linear reflection `x − ⟨x, β∨⟩β`.
pub fn reflect<S: Scalar>(sys: &FiniteRootSystem, beta: &AffineRoot, x: &AffineWeight<S>) -> Result<AffineWeight<S>> {
    let k = sys.coroot_pairing(x, beta)?;
    Ok(x - &sys.root_weight::<S>(beta).scaled(&k))
}

/// `w·λ = w(λ+ρ) − ρ` for `w = s_β`.
pub fn dot_reflect<S: Scalar>(
    sys: &FiniteRootSystem,
    beta: &AffineRoot,
    lambda: &AffineWeight<S>,
) -> Result<AffineWeight<S>> {
    let shifted = lambda + &sys.rho().lift::<S>();
    let k = sys.coroot_pairing(&shifted, beta)?;
    Ok(lambda - &sys.root_weight::<S>(beta).scaled(&k))
}

/// Decomposes `ν` over the affine simple roots when all coefficients are
/// natural numbers.
pub fn decompose(sys: &FiniteRootSystem, nu: &Weight) -> Option<BoxCoords> {
    if !nu.level.is_zero() {
        return None;
    }
    let c0 = to_i64(&nu.ddeg)?;
    let simple = sys.fund_to_simple(&nu.finite);
    let c0u = u32::try_from(c0).ok()?;
    let cfin = simple
        .iter()
        .zip(sys.theta())
        .map(|(s, &t)| to_i64(&(s + int(c0 * t))).and_then(|v| u32::try_from(v).ok()))
        .collect::<Option<Vec<_>>>()?;
    Some(BoxCoords { c0: c0u, cfin })
}

/// `μ ≤ λ`, returning the coordinates of `λ − μ` when it holds.
pub fn leq(sys: &FiniteRootSystem, mu: &Weight, lambda: &Weight) -> Option<BoxCoords> {
    decompose(sys, &(lambda - mu))
}

/// `base − ν`.
pub fn weight_at(sys: &FiniteRootSystem, base: &Weight, c: &BoxCoords) -> Weight {
    base - &c.to_weight(sys)
}

pub fn level_of(lambda: &Weight) -> Rat {
    lambda.level.clone()
}

pub fn is_critical(sys: &FiniteRootSystem, lambda: &Weight) -> bool {
    lambda.level == sys.critical_level()
}

fn require_critical(sys: &FiniteRootSystem, lambda: &Weight) -> Result<()> {
    if is_critical(sys, lambda) {
        Ok(())
    } else {
        Err(Error::NotCritical { crit: crate::scalar::fmt_rat(&sys.critical_level()) })
    }
}

/// `⟨λ+ρ, α∨⟩` for a finite root `α`.
pub fn rho_pairing(sys: &FiniteRootSystem, lambda: &Weight, alpha: &[i64]) -> Rat {
    let shifted = lambda + &sys.rho();
    sys.coroot_pairing(&shifted, &AffineRoot::real(alpha.to_vec(), 0)).expect("real root")
}

pub fn integral_roots(sys: &FiniteRootSystem, lambda: &Weight) -> IntegralData {
    let finite_integral: Vec<Root> =
        sys.roots().iter().filter(|r| rho_pairing(sys, lambda, r).is_integer()).cloned().collect();
    let positive: Vec<Root> = finite_integral.iter().filter(|r| r.iter().all(|&c| c >= 0)).cloned().collect();
    let moving: Vec<&Root> = positive.iter().filter(|r| !rho_pairing(sys, lambda, r).is_zero()).collect();
    let classification = match moving.as_slice() {
        [] => Classification::Generic,
        [alpha] if positive.len() == 1 => Classification::Subgeneric((*alpha).clone()),
        _ => Classification::General,
    };
    IntegralData { finite_integral, positive, classification }
}

/// `α↓λ`: whichever of `s_α·λ`, `s_{−α+δ}·λ` lies below `λ`.
pub fn down(sys: &FiniteRootSystem, alpha: &[i64], lambda: &Weight) -> Result<Weight> {
    require_critical(sys, lambda)?;
    if !alpha.iter().all(|&c| c >= 0) || !sys.is_root(alpha) {
        return Err(Error::Dimension(format!("{alpha:?} is not a positive root")));
    }
    let n = rho_pairing(sys, lambda, alpha);
    if !n.is_integer() {
        return Err(Error::NotIntegral(format!("⟨λ+ρ, α∨⟩ = {}", crate::scalar::fmt_rat(&n))));
    }
    let a = sys.finite_root_weight(alpha);
    let delta = Weight::delta(sys.rank());
    let result = if n.is_positive() {
        lambda - &a.scaled(&n)
    } else if n.is_negative() {
        &(lambda - &a.scaled(&n)) + &delta.scaled(&n)
    } else {
        return Ok(lambda.clone());
    };

    let s_alpha = dot_reflect(sys, &AffineRoot::real(alpha.to_vec(), 0), lambda)?;
    let neg: Root = alpha.iter().map(|c| -c).collect();
    let s_affine = dot_reflect(sys, &AffineRoot::real(neg, 1), lambda)?;
    let below: Vec<&Weight> = [&s_alpha, &s_affine].into_iter().filter(|w| leq(sys, w, lambda).is_some()).collect();
    if below != [&result] {
        return Err(Error::DownMismatch(format!("closed form {result} disagrees with candidates {s_alpha}, {s_affine}")));
    }
    Ok(result)
}

/// `α↓ᵏλ`.
pub fn down_k(sys: &FiniteRootSystem, alpha: &[i64], lambda: &Weight, k: usize) -> Result<Weight> {
    let mut w = lambda.clone();
    for _ in 0..k {
        w = down(sys, alpha, &w)?;
    }
    Ok(w)
}

/// The chain `λ, α↓λ, α↓²λ, …` while it stays in the box below `λ`.
pub fn down_chain(sys: &FiniteRootSystem, alpha: &[i64], lambda: &Weight, bx: &WeightBox) -> Result<Vec<Weight>> {
    let mut out = vec![lambda.clone()];
    loop {
        let next = down(sys, alpha, out.last().unwrap())?;
        if &next == out.last().unwrap() {
            return Ok(out);
        }
        match leq(sys, &next, lambda) {
            Some(c) if bx.contains(&c) => out.push(next),
            _ => return Ok(out),
        }
    }
}

/// Weights reachable from `λ` by the Kac–Kazhdan steps `μ ↦ μ − nβ`
/// (`β ∈ R̂⁺`, `2(μ+ρ|β) = n(β|β)`), truncated to the box.
pub fn kk_lower_set(sys: &FiniteRootSystem, lambda: &Weight, bx: &WeightBox) -> WeightSet {
    let rho = sys.rho();
    let roots: Vec<(AffineRoot, BoxCoords)> = sys
        .positive_affine_roots(bx.dmax)
        .into_iter()
        .filter_map(|b| BoxCoords::of_root(sys, &b).map(|c| (b, c)))
        .filter(|(_, c)| bx.contains(c))
        .collect();
    let mut members = BTreeSet::from([BoxCoords::zero(sys.rank())]);
    let mut queue = VecDeque::from([BoxCoords::zero(sys.rank())]);
    while let Some(nu) = queue.pop_front() {
        let mu = weight_at(sys, lambda, &nu);
        let shifted = &mu + &rho;
        for (beta, bc) in &roots {
            let steps: Vec<u32> = if beta.is_real() {
                let k = sys.coroot_pairing(&shifted, beta).expect("real root");
                match to_i64(&k).and_then(|k| u32::try_from(k).ok()) {
                    Some(k) if k > 0 => vec![k],
                    _ => continue,
                }
            } else if sys.bilinear(&shifted, &sys.root_weight::<Rat>(beta)).is_zero() {
                (1..=bx.dmax).collect()
            } else {
                continue;
            };
            for k in steps {
                let next = nu.add(&bc.times(k));
                if bx.contains(&next) && members.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    WeightSet { base: lambda.clone(), members }
}

/// `Ŵ(λ)·λ` restricted to weights `≤ λ` in the box, generated by the
/// reflections `s_{α+mδ}` with `α ∈ R(λ)`.
pub fn linkage_orbit(sys: &FiniteRootSystem, lambda: &Weight, bx: &WeightBox) -> Result<WeightSet> {
    require_critical(sys, lambda)?;
    let data = integral_roots(sys, lambda);
    let m_max = i64::from(bx.dmax);
    let mut members = BTreeSet::from([BoxCoords::zero(sys.rank())]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        for alpha in &data.positive {
            for m in -m_max..=m_max {
                let next = dot_reflect(sys, &AffineRoot::real(alpha.clone(), m), &mu)?;
                if let Some(c) = leq(sys, &next, lambda) {
                    if bx.contains(&c) && members.insert(c) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Ok(WeightSet { base: lambda.clone(), members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use proptest::prelude::*;

    fn sys(s: &str) -> FiniteRootSystem {
        FiniteRootSystem::from_series(s).unwrap()
    }

    fn crit(s: &FiniteRootSystem, fin: Vec<Rat>) -> Weight {
        AffineWeight::new(fin, s.critical_level(), Rat::zero())
    }

    fn w(s: &FiniteRootSystem, base: &Weight, c0: i64, fin: &[i64]) -> Weight {
        // base − (Σ fin_i α_i + c0 δ)
        let mut nu = s.finite_root_weight(fin);
        nu.ddeg = int(c0);
        base - &nu
    }

    #[test]
    fn dot_reflect_examples() {
        let a1 = sys("A1");
        let lam = crit(&a1, vec![int(0)]);
        let alpha = AffineRoot::real(vec![1], 0);
        assert_eq!(dot_reflect(&a1, &alpha, &lam).unwrap(), w(&a1, &lam, 0, &[1]));
        let aff = AffineRoot::real(vec![-1], 1);
        // pairing −1, so the result is λ + (−α+δ)
        assert_eq!(a1.coroot_pairing(&(&lam + &a1.rho()), &aff).unwrap(), int(-1));
        assert_eq!(dot_reflect(&a1, &aff, &lam).unwrap(), w(&a1, &lam, -1, &[1]));
        // fixed point
        let fixed = crit(&a1, vec![int(-1)]);
        assert_eq!(dot_reflect(&a1, &alpha, &fixed).unwrap(), fixed);
        assert_eq!(dot_reflect(&a1, &AffineRoot::imaginary(1), &lam), Err(Error::ImaginaryRoot));
    }

    #[test]
    fn leq_examples() {
        let a2 = sys("A2");
        let lam = crit(&a2, vec![rat(1, 3), int(2)]);
        let c = leq(&a2, &w(&a2, &lam, 1, &[0, 0]), &lam).unwrap();
        assert_eq!(c, BoxCoords::new(1, vec![1, 1]));
        assert!(leq(&a2, &w(&a2, &lam, 0, &[1, 0]), &lam).is_some());
        assert!(leq(&a2, &w(&a2, &lam, 0, &[-1, 0]), &lam).is_none());
        assert_eq!(leq(&a2, &lam, &lam), Some(BoxCoords::zero(2)));
        let mut other_level = lam.clone();
        other_level.level = int(0);
        assert!(leq(&a2, &other_level, &lam).is_none());
    }

    #[test]
    fn criticality() {
        let a1 = sys("A1");
        assert!(is_critical(&a1, &AffineWeight::from_ints(&[0], -2, 0)));
        assert!(!is_critical(&a1, &AffineWeight::from_ints(&[0], 0, 0)));
        let a2 = sys("A2");
        let lam = AffineWeight::from_ints(&[5, -1], -3, 7);
        assert!(is_critical(&a2, &lam));
        assert_eq!(level_of(&lam), int(-3));
        assert!(a2.bilinear(&(&lam + &a2.rho()), &Weight::delta(2)).is_zero());
    }

    #[test]
    fn integral_root_examples() {
        let a1 = sys("A1");
        let d = integral_roots(&a1, &crit(&a1, vec![int(0)]));
        assert_eq!(d.finite_integral.len(), 2);
        assert_eq!(d.classification, Classification::Subgeneric(vec![1]));
        let d = integral_roots(&a1, &crit(&a1, vec![rat(1, 2)]));
        assert!(d.finite_integral.is_empty());
        assert_eq!(d.classification, Classification::Generic);

        let a2 = sys("A2");
        // ⟨λ+ρ,α1∨⟩ = 2, ⟨λ+ρ,α2∨⟩ = 1/3
        let lam = crit(&a2, vec![int(1), rat(-2, 3)]);
        let d = integral_roots(&a2, &lam);
        for r in a2.roots() {
            let integral = rho_pairing(&a2, &lam, r).is_integer();
            assert_eq!(integral, d.finite_integral.contains(r));
        }
        assert_eq!(d.classification, Classification::Subgeneric(vec![1, 0]));
        // all pairings integral: General
        let d = integral_roots(&a2, &crit(&a2, vec![int(0), int(0)]));
        assert_eq!(d.classification, Classification::General);
        // integral root with zero pairing only: Generic
        let d = integral_roots(&a1, &crit(&a1, vec![int(-1)]));
        assert_eq!(d.classification, Classification::Generic);
    }

    #[test]
    fn down_chain_n1() {
        let a1 = sys("A1");
        let lam = crit(&a1, vec![int(0)]);
        let expect = [w(&a1, &lam, 0, &[1]), w(&a1, &lam, 1, &[0]), w(&a1, &lam, 1, &[1]), w(&a1, &lam, 2, &[0])];
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(&down_k(&a1, &[1], &lam, k + 1).unwrap(), e, "k = {}", k + 1);
        }
    }

    #[test]
    fn down_chain_n2() {
        let a1 = sys("A1");
        let lam = crit(&a1, vec![int(1)]);
        let expect = [w(&a1, &lam, 0, &[2]), w(&a1, &lam, 2, &[0]), w(&a1, &lam, 2, &[2]), w(&a1, &lam, 4, &[0])];
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(&down_k(&a1, &[1], &lam, k + 1).unwrap(), e);
        }
    }

    #[test]
    fn down_errors_and_fixed_points() {
        let a1 = sys("A1");
        assert!(matches!(down(&a1, &[1], &AffineWeight::from_ints(&[0], 0, 0)), Err(Error::NotCritical { .. })));
        assert!(matches!(down(&a1, &[1], &crit(&a1, vec![rat(1, 2)])), Err(Error::NotIntegral(_))));
        let fixed = crit(&a1, vec![int(-1)]);
        assert_eq!(down(&a1, &[1], &fixed).unwrap(), fixed);
    }

    #[test]
    fn kk_lower_set_examples() {
        let a1 = sys("A1");
        let bx = WeightBox::new(2, 4);
        let generic = crit(&a1, vec![rat(1, 2)]);
        let set = kk_lower_set(&a1, &generic, &bx);
        let expect: BTreeSet<BoxCoords> = (0..=2).map(|n| BoxCoords::new(n, vec![n])).collect();
        assert_eq!(set.members, expect);

        let lam = crit(&a1, vec![int(0)]);
        let set = kk_lower_set(&a1, &lam, &WeightBox::new(1, 2));
        assert!(set.contains(&a1, &w(&a1, &lam, 0, &[1])));
        assert!(set.contains(&a1, &w(&a1, &lam, 1, &[0])));

        let noncrit = AffineWeight::from_ints(&[0], 0, 0);
        let set = kk_lower_set(&a1, &noncrit, &bx);
        for c in &set.members {
            assert!(!(c.c0 > 0 && c.cfin == vec![c.c0]), "pure δ step {c}");
        }
    }

    #[test]
    fn linkage_orbit_examples() {
        let a1 = sys("A1");
        let lam = crit(&a1, vec![int(0)]);
        let orbit = linkage_orbit(&a1, &lam, &WeightBox::new(1, 2)).unwrap();
        assert!(orbit.contains(&a1, &w(&a1, &lam, 0, &[1])));
        assert!(orbit.contains(&a1, &w(&a1, &lam, 1, &[0])));
        for mu in orbit.weights(&a1) {
            assert!(leq(&a1, &mu, &lam).is_some());
        }
        // λ+α−δ is below λ but its finite part is not in the finite orbit
        assert!(!orbit.contains(&a1, &w(&a1, &lam, 1, &[-1])));

        let generic = crit(&a1, vec![rat(1, 2)]);
        let orbit = linkage_orbit(&a1, &generic, &WeightBox::new(2, 4)).unwrap();
        assert_eq!(orbit.len(), 1);
    }

    #[test]
    fn a2_subgeneric_orbit_is_down_chain() {
        let a2 = sys("A2");
        let lam = crit(&a2, vec![int(1), rat(-2, 3)]);
        let bx = WeightBox::new(1, 3);
        let orbit = linkage_orbit(&a2, &lam, &bx).unwrap();
        let chain: BTreeSet<BoxCoords> =
            down_chain(&a2, &[1, 0], &lam, &bx).unwrap().iter().map(|m| leq(&a2, m, &lam).unwrap()).collect();
        assert_eq!(orbit.members, chain);
    }

    #[test]
    fn orbit_stable_under_down() {
        let a1 = sys("A1");
        for n in [1, 2] {
            let lam = crit(&a1, vec![int(n - 1)]);
            let big = WeightBox::new(4, 8);
            let orbit = linkage_orbit(&a1, &lam, &big).unwrap();
            let low = down(&a1, &[1], &lam).unwrap();
            let shift = leq(&a1, &low, &lam).unwrap();
            let sub = linkage_orbit(&a1, &low, &WeightBox::new(2, 4)).unwrap();
            for c in &sub.members {
                assert!(orbit.contains_coords(&c.add(&shift)));
            }
            // and conversely within the common window
            for c in &orbit.members {
                if let Some(rel) = c.checked_sub(&shift) {
                    if WeightBox::new(2, 4).contains(&rel) {
                        assert!(sub.contains_coords(&rel));
                    }
                }
            }
        }
    }

    #[test]
    fn critical_affine_roots_integral() {
        let a2 = sys("A2");
        let lam = crit(&a2, vec![int(1), rat(-2, 3)]);
        let shifted = &lam + &a2.rho();
        for alpha in integral_roots(&a2, &lam).finite_integral {
            for n in -3..=3 {
                let k = a2.coroot_pairing(&shifted, &AffineRoot::real(alpha.clone(), n)).unwrap();
                assert!(k.is_integer());
            }
        }
    }

    #[test]
    fn box_coords_roundtrip() {
        let a2 = sys("A2");
        let bx = WeightBox::new(1, 3);
        let all = bx.coords(2);
        assert_eq!(all.len(), 20);
        for c in &all {
            assert_eq!(decompose(&a2, &c.to_weight(&a2)).as_ref(), Some(c));
        }
        let delta = BoxCoords::of_root(&a2, &AffineRoot::imaginary(1)).unwrap();
        assert_eq!(delta, BoxCoords::new(1, vec![1, 1]));
        assert_eq!(delta.to_weight(&a2), Weight::delta(2));
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-6i64..=6, 1i64..=3).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn form_is_weyl_invariant(
            x in proptest::collection::vec(small_rat(), 5),
            y in proptest::collection::vec(small_rat(), 5),
            which in 0usize..3,
            n in -3i64..=3,
        ) {
            let a2 = sys("A2");
            let xw = AffineWeight::new(x[..2].to_vec(), x[2].clone(), x[3].clone());
            let yw = AffineWeight::new(y[..2].to_vec(), y[2].clone(), y[3].clone());
            let beta = AffineRoot::real(a2.positive_roots()[which].clone(), n);
            let rx = reflect(&a2, &beta, &xw).unwrap();
            let ry = reflect(&a2, &beta, &yw).unwrap();
            prop_assert_eq!(a2.bilinear(&rx, &ry), a2.bilinear(&xw, &yw));
            prop_assert_eq!(a2.bilinear(&xw, &Weight::delta(2)), xw.level.clone());
        }

        #[test]
        fn down_is_below_and_a_candidate(a in -4i64..=4, b in -4i64..=4, which in 0usize..3) {
            let a2 = sys("A2");
            let lam = crit(&a2, vec![int(a), int(b)]);
            let alpha = a2.positive_roots()[which].clone();
            let res = down(&a2, &alpha, &lam).unwrap();
            prop_assert!(leq(&a2, &res, &lam).is_some());
            prop_assert_eq!(res == lam, rho_pairing(&a2, &lam, &alpha).is_zero());
        }
    }
}
